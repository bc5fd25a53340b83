//! The semigroup algebra `kB` with dense coefficient vectors.

use crate::field::Field;
use crate::linalg::Echelon;
use crate::lrb::Lrb;

/// A coefficient vector indexed by the elements of `B`.
pub type Vector<E> = Vec<E>;

/// `kB` over a field, borrowing the LRB.
#[derive(Clone, Debug)]
pub struct SemigroupAlgebra<'a, F: Field> {
    lrb: &'a Lrb,
    field: F,
}

impl<'a, F: Field> SemigroupAlgebra<'a, F> {
    pub fn new(lrb: &'a Lrb, field: F) -> Self {
        SemigroupAlgebra { lrb, field }
    }

    pub fn lrb(&self) -> &'a Lrb {
        self.lrb
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.lrb.size()
    }

    pub fn zero(&self) -> Vector<F::E> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis(&self, b: usize) -> Vector<F::E> {
        let mut v = self.zero();
        v[b] = self.field.one();
        v
    }

    pub fn from_sparse(&self, terms: &[(usize, F::E)]) -> Vector<F::E> {
        let mut v = self.zero();
        for (b, c) in terms {
            v[*b] = self.field.add(&v[*b], c);
        }
        v
    }

    /// Indicator sum `Σ_{b∈S} b`.
    pub fn sum_of(&self, elements: &[usize]) -> Vector<F::E> {
        let one = self.field.one();
        let mut v = self.zero();
        for &b in elements {
            v[b] = self.field.add(&v[b], &one);
        }
        v
    }

    pub fn nonzeros<'v>(&self, v: &'v [F::E]) -> Vec<(usize, &'v F::E)> {
        v.iter().enumerate().filter(|(_, c)| !self.field.is_zero(c)).collect()
    }

    pub fn is_zero(&self, v: &[F::E]) -> bool {
        v.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, u: &[F::E], v: &[F::E]) -> Vector<F::E> {
        u.iter().zip(v).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, u: &[F::E], v: &[F::E]) -> Vector<F::E> {
        u.iter().zip(v).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn scale(&self, c: &F::E, v: &[F::E]) -> Vector<F::E> {
        v.iter().map(|a| self.field.mul(c, a)).collect()
    }

    /// `acc += c·v`.
    pub fn axpy(&self, acc: &mut [F::E], c: &F::E, v: &[F::E]) {
        for (a, x) in acc.iter_mut().zip(v) {
            if !self.field.is_zero(x) {
                self.field.add_mul_assign(a, c, x);
            }
        }
    }

    pub fn mul(&self, u: &[F::E], v: &[F::E]) -> Vector<F::E> {
        let f = &self.field;
        let nv = self.nonzeros(v);
        let mut out = self.zero();
        for (a, x) in self.nonzeros(u) {
            for &(b, y) in &nv {
                f.add_mul_assign(&mut out[self.lrb.mul(a, b)], x, y);
            }
        }
        out
    }

    /// `b·v`.
    pub fn left_mul(&self, b: usize, v: &[F::E]) -> Vector<F::E> {
        let mut out = self.zero();
        for (a, x) in self.nonzeros(v) {
            let t = self.lrb.mul(b, a);
            out[t] = self.field.add(&out[t], x);
        }
        out
    }

    /// `v·b`.
    pub fn right_mul(&self, v: &[F::E], b: usize) -> Vector<F::E> {
        let mut out = self.zero();
        for (a, x) in self.nonzeros(v) {
            let t = self.lrb.mul(a, b);
            out[t] = self.field.add(&out[t], x);
        }
        out
    }

    /// Image under a permutation of `B`: `(g·v)[g(b)] = v[b]`.
    pub fn permute(&self, perm: &[u32], v: &[F::E]) -> Vector<F::E> {
        let mut out = self.zero();
        for (b, x) in v.iter().enumerate() {
            out[perm[b] as usize] = x.clone();
        }
        out
    }

    /// Coefficients of `v` summed over each support.
    pub fn support_sums(&self, v: &[F::E]) -> Vec<F::E> {
        let mut out = vec![self.field.zero(); self.lrb.num_supports()];
        for (b, x) in self.nonzeros(v) {
            let s = self.lrb.sigma(b);
            out[s] = self.field.add(&out[s], x);
        }
        out
    }

    /// Supports of the nonzero coefficients.
    pub fn supports_of(&self, v: &[F::E]) -> Vec<usize> {
        let mut s: Vec<usize> = self.nonzeros(v).into_iter().map(|(b, _)| self.lrb.sigma(b)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn render(&self, v: &[F::E]) -> String {
        let s = self.lrb.semigroup();
        let terms: Vec<String> = self
            .nonzeros(v)
            .into_iter()
            .map(|(b, c)| format!("{}*{}", self.field.render(c), s.label(b)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Echelon basis of the span of some vectors.
    pub fn span(&self, vectors: impl IntoIterator<Item = Vector<F::E>>) -> Echelon<F> {
        let mut e = Echelon::new(self.field.clone(), self.dim());
        for v in vectors {
            e.insert(v);
        }
        e
    }
}

/// Trace of a linear map on a stable subspace with the given echelon basis.
pub fn trace_on<F: Field>(basis: &Echelon<F>, map: impl Fn(&[F::E]) -> Vec<F::E>) -> Option<F::E> {
    let f = basis.field().clone();
    let mut t = f.zero();
    for i in 0..basis.rank() {
        let img = map(&basis.row(i));
        let c = basis.coordinates(&img)?;
        t = f.add(&t, &c[i]);
    }
    Some(t)
}
