//! Exact linear algebra over a [`Field`]: incremental echelon bases,
//! kernels, and an integer Smith-form check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::Field;

/// A row of an echelon basis: its pivot column and its nonzero entries.
#[derive(Clone, Debug)]
struct Row<E> {
    pivot: usize,
    entries: Vec<(usize, E)>,
}

/// An incrementally built basis of a subspace of `F^ncols`.
///
/// Each new row is reduced against the earlier rows (so it vanishes at their
/// pivots) and normalised to have a 1 at its own pivot, the first nonzero
/// column. Earlier rows are never modified, so the first `k` rows always span
/// the first `k` independent vectors inserted.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Row<F::E>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    /// Reduce `v` in place against every row, in insertion order.
    /// Returns the coefficients used (one per row).
    pub fn reduce(&self, v: &mut [F::E]) -> Vec<F::E> {
        let f = &self.field;
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if !f.is_zero(&c) {
                for (j, x) in &row.entries {
                    f.sub_mul_assign(&mut v[*j], &c, x);
                }
            }
            coeffs.push(c);
        }
        coeffs
    }

    /// Insert `v`; returns true when it was independent of the current rows.
    pub fn insert(&mut self, mut v: Vec<F::E>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        self.push_reduced(v)
    }

    fn push_reduced(&mut self, v: Vec<F::E>) -> bool {
        let f = &self.field;
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let s = f.inv(&v[p]);
        let entries: Vec<(usize, F::E)> = v
            .into_iter()
            .enumerate()
            .skip(p)
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(j, x)| (j, f.mul(&x, &s)))
            .collect();
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(Row { pivot: p, entries });
        true
    }

    /// Insert a sparse vector.
    pub fn insert_sparse(&mut self, v: &[(usize, F::E)]) -> bool {
        let mut d = vec![self.field.zero(); self.ncols];
        for (j, x) in v {
            d[*j] = self.field.add(&d[*j], x);
        }
        self.insert(d)
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[F::E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of `v` with respect to the rows, or `None` if `v` is not
    /// in the span.
    pub fn coordinates(&self, v: &[F::E]) -> Option<Vec<F::E>> {
        let mut w = v.to_vec();
        let c = self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x)).then_some(c)
    }

    /// The `i`-th basis row as a dense vector.
    pub fn row(&self, i: usize) -> Vec<F::E> {
        let mut d = vec![self.field.zero(); self.ncols];
        for (j, x) in &self.rows[i].entries {
            d[*j] = x.clone();
        }
        d
    }

    pub fn row_sparse(&self, i: usize) -> &[(usize, F::E)] {
        &self.rows[i].entries
    }

    pub fn basis(&self) -> Vec<Vec<F::E>> {
        (0..self.rank()).map(|i| self.row(i)).collect()
    }
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(field: &F, ncols: usize, vectors: impl IntoIterator<Item = Vec<F::E>>) -> usize {
    let mut e = Echelon::new(field.clone(), ncols);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of `{v : M v = 0}` for a matrix given by rows of length `ncols`.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::E>], ncols: usize) -> Vec<Vec<F::E>> {
    let f = field;
    // full reduced row echelon form
    let mut m: Vec<Vec<F::E>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(k) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, k);
        let s = f.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(x, &s);
        }
        let pr = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !f.is_zero(&row[c]) {
                let t = row[c].clone();
                for (j, x) in pr.iter().enumerate().skip(c) {
                    if !f.is_zero(x) {
                        f.sub_mul_assign(&mut row[j], &t, x);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(&m[i][free]);
        }
        out.push(v);
    }
    out
}

/// Nonzero invariant factors of an integer matrix (Smith normal form
/// diagonal), in order of discovery, all positive.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let nr = matrix.len();
    if nr == 0 {
        return Vec::new();
    }
    let nc = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> =
        matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // pick the entry of least absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero() {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => a[i][j].abs() < a[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..nr {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&p);
                    for j in t..nc {
                        let v = &a[t][j] * &q;
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..nc {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&p);
                    for i in t..nr {
                        let v = &a[i][t] * &q;
                        a[i][j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // divisibility of the rest of the block by the pivot
                let mut fix = None;
                'scan: for i in t + 1..nr {
                    for j in t + 1..nc {
                        if !(&a[i][j] % &p).is_zero() {
                            fix = Some(i);
                            break 'scan;
                        }
                    }
                }
                match fix {
                    None => break,
                    Some(i) => {
                        for j in t..nc {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move a smaller remainder into the pivot position
            let mut best = (t, t);
            for i in t..nr {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..nc {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// True when every nonzero invariant factor equals one (torsion-free cokernel).
pub fn unimodular_factors(matrix: &[Vec<i64>]) -> bool {
    invariant_factors(matrix).iter().all(|d| d.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::rational::Q;

    fn q(v: i64) -> Q {
        Q::from_int(v)
    }

    #[test]
    fn echelon_rank_and_coordinates() {
        let mut e = Echelon::new(Rationals, 3);
        assert!(e.insert(vec![q(1), q(2), q(3)]));
        assert!(e.insert(vec![q(0), q(1), q(1)]));
        assert!(!e.insert(vec![q(2), q(5), q(7)]));
        assert_eq!(e.rank(), 2);
        let v = vec![q(3), q(7), q(10)];
        let c = e.coordinates(&v).unwrap();
        // reconstruct
        let mut w = vec![q(0); 3];
        for (i, ci) in c.iter().enumerate() {
            for (j, x) in e.row(i).iter().enumerate() {
                w[j] = &w[j] + &(ci * x);
            }
        }
        assert_eq!(w, v);
        assert!(e.coordinates(&[q(0), q(0), q(1)]).is_none());
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![vec![q(1), q(1), q(1)]];
        let k = kernel(&Rationals, &rows, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            let s = v.iter().fold(q(0), |a, b| &a + b);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn prime_field_rank_drops() {
        let f = PrimeField::new(2).unwrap();
        let r = rank(&f, 2, vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(r, 1);
        let r3 = rank(&PrimeField::new(3).unwrap(), 2, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(r3, 1);
    }

    #[test]
    fn smith_detects_torsion() {
        assert!(!unimodular_factors(&[vec![2, 0], vec![0, 1]]));
        assert!(unimodular_factors(&[vec![1, -1, 0], vec![0, 1, -1]]));
        let f = invariant_factors(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(4)]);
    }
}
