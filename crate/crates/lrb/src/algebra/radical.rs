//! The Jacobson radical `rad kB = ker σ` and its powers.

use crate::algebra::kb::SemigroupAlgebra;
use crate::error::{LrbError, Result};
use crate::field::Field;
use crate::linalg::{kernel, Echelon};

/// Generators `b − b₀` of the radical, `b₀` the least element of each fiber.
pub fn radical_generators<F: Field>(alg: &SemigroupAlgebra<F>) -> Vec<(usize, usize)> {
    let lrb = alg.lrb();
    (0..lrb.num_supports())
        .flat_map(|x| {
            let fib = lrb.fiber(x);
            fib[1..].iter().map(move |&b| (b, fib[0]))
        })
        .collect()
}

/// `rad kB`, cross-checked against the kernel of the linear map `σ: kB → kΛ`.
pub fn radical_basis<F: Field>(alg: &SemigroupAlgebra<F>) -> Result<Echelon<F>> {
    let f = alg.field();
    let lrb = alg.lrb();
    let n = lrb.size();
    let rad = alg.span(radical_generators(alg).into_iter().map(|(b, b0)| {
        let mut v = alg.zero();
        v[b] = f.one();
        v[b0] = f.neg(&f.one());
        v
    }));
    let rows: Vec<Vec<F::E>> = (0..lrb.num_supports())
        .map(|x| (0..n).map(|b| if lrb.sigma(b) == x { f.one() } else { f.zero() }).collect())
        .collect();
    let ker = kernel(f, &rows, n);
    if ker.len() != rad.rank() || !ker.iter().all(|v| rad.contains(v)) {
        return Err(LrbError::Inconsistent("radical differs from the kernel of the support map".into()));
    }
    Ok(rad)
}

/// `rad^1 ⊇ rad^2 ⊇ … ⊇ rad^k ≠ 0 = rad^{k+1}`, with `k + 1` the
/// nilpotency index.
#[derive(Clone, Debug)]
pub struct RadicalFiltration<F: Field> {
    pub powers: Vec<Echelon<F>>,
    pub nilpotency_index: usize,
}

impl<F: Field> RadicalFiltration<F> {
    /// `rad^m`, with `rad^0 = kB` returned as `None`.
    pub fn power(&self, m: usize) -> Option<&Echelon<F>> {
        if m == 0 {
            None
        } else {
            self.powers.get(m - 1)
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(|e| e.rank()).collect()
    }
}

/// Iterated exact products `rad^{m+1} = rad^m · rad`.
pub fn radical_filtration<F: Field>(alg: &SemigroupAlgebra<F>) -> Result<RadicalFiltration<F>> {
    let rad = radical_basis(alg)?;
    let gens = radical_generators(alg);
    let mut powers: Vec<Echelon<F>> = Vec::new();
    let mut cur = rad;
    while cur.rank() > 0 {
        if powers.len() > alg.dim() {
            return Err(LrbError::Inconsistent("radical is not nilpotent".into()));
        }
        let mut next = Echelon::new(alg.field().clone(), alg.dim());
        for i in 0..cur.rank() {
            let v = cur.row(i);
            for &(b, b0) in &gens {
                let p = alg.sub(&alg.right_mul(&v, b), &alg.right_mul(&v, b0));
                if !alg.is_zero(&p) {
                    next.insert(p);
                }
            }
        }
        powers.push(cur);
        cur = next;
    }
    let nilpotency_index = powers.len() + 1;
    Ok(RadicalFiltration { powers, nilpotency_index })
}

/// Basis of `rad^m(kB)`; empty once `m` reaches the nilpotency index.
pub fn radical_power_basis<F: Field>(alg: &SemigroupAlgebra<F>, m: usize) -> Result<Echelon<F>> {
    if m == 0 {
        return Ok(alg.span((0..alg.dim()).map(|b| alg.basis(b))));
    }
    let filt = radical_filtration(alg)?;
    Ok(filt.power(m).cloned().unwrap_or_else(|| Echelon::new(alg.field().clone(), alg.dim())))
}
