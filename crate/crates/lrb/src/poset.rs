//! Finite posets stored as up-set and down-set bit matrices.

use crate::bitset::BitSet;
use crate::error::LrbError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl FinitePoset {
    /// Build from a relation, verifying the partial-order axioms.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<FinitePoset, LrbError> {
        let p = Self::from_relation_unchecked(n, leq);
        p.validate()?;
        Ok(p)
    }

    pub fn from_matrix(m: &[Vec<bool>]) -> Result<FinitePoset, LrbError> {
        let n = m.len();
        if m.iter().any(|r| r.len() != n) {
            return Err(LrbError::Invalid("order matrix is not square".into()));
        }
        Self::from_relation(n, |i, j| m[i][j])
    }

    pub(crate) fn from_relation_unchecked(n: usize, leq: impl Fn(usize, usize) -> bool) -> FinitePoset {
        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        FinitePoset { n, up, down, labels: None }
    }

    pub fn validate(&self) -> Result<(), LrbError> {
        for i in 0..self.n {
            if !self.up[i].contains(i) {
                return Err(LrbError::Invalid(format!("order is not reflexive at {i}")));
            }
            for j in self.up[i].iter() {
                if j != i && self.up[j].contains(i) {
                    return Err(LrbError::Invalid(format!("order is not antisymmetric at ({i},{j})")));
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return Err(LrbError::Invalid(format!("order is not transitive through ({i},{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FinitePoset {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up[i].contains(j)
    }

    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.leq(i, j)).collect()).collect()
    }

    /// Cover relations `(x, y)` with `x ⋖ y`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].iter() {
                if y != x && self.up[x].intersection_count(&self.down[y]) == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.up[x]
            .iter()
            .filter(|&y| y != x && self.up[x].intersection_count(&self.down[y]) == 2)
            .collect()
    }

    pub fn lower_covers(&self, y: usize) -> Vec<usize> {
        self.down[y]
            .iter()
            .filter(|&x| x != y && self.up[x].intersection_count(&self.down[y]) == 2)
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.down[i].count() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.up[i].count() == 1).collect()
    }

    /// Elements listed so that `i < j` implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n).collect();
        v.sort_by_key(|&i| (self.down[i].count(), i));
        v
    }

    /// The induced subposet on `elements` (in the given order).
    pub fn subposet(&self, elements: &[usize]) -> FinitePoset {
        let p = FinitePoset::from_relation_unchecked(elements.len(), |a, b| self.leq(elements[a], elements[b]));
        match &self.labels {
            Some(l) => p.with_labels(elements.iter().map(|&e| l[e].clone()).collect()),
            None => p,
        }
    }

    /// Elements strictly between `x` and `y`.
    pub fn open_interval(&self, x: usize, y: usize) -> Vec<usize> {
        let mut s = self.up[x].clone();
        s.intersect_with(&self.down[y]);
        s.iter().filter(|&z| z != x && z != y).collect()
    }

    pub fn closed_interval(&self, x: usize, y: usize) -> Vec<usize> {
        let mut s = self.up[x].clone();
        s.intersect_with(&self.down[y]);
        s.to_vec()
    }

    pub fn strict_lower_set(&self, y: usize) -> Vec<usize> {
        self.down[y].iter().filter(|&x| x != y).collect()
    }

    /// Ordinal sum: every element of `self` below every element of `other`.
    pub fn join(&self, other: &FinitePoset) -> FinitePoset {
        let n = self.n;
        FinitePoset::from_relation_unchecked(n + other.n, |i, j| match (i < n, j < n) {
            (true, true) => self.leq(i, j),
            (false, false) => other.leq(i - n, j - n),
            (true, false) => true,
            (false, true) => false,
        })
    }

    /// Connected components of the Hasse diagram restricted to `subset`,
    /// as a component label per listed element.
    pub fn hasse_components(&self, subset: &[usize]) -> Vec<usize> {
        let pos: std::collections::HashMap<usize, usize> =
            subset.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut uf = UnionFind::new(subset.len());
        let mut mask = BitSet::new(self.n);
        for &e in subset {
            mask.insert(e);
        }
        for (a, &x) in subset.iter().enumerate() {
            for y in self.up[x].iter() {
                if y == x || !mask.contains(y) {
                    continue;
                }
                let mut between = self.up[x].clone();
                between.intersect_with(&self.down[y]);
                between.intersect_with(&mask);
                if between.count() == 2 {
                    uf.union(a, pos[&y]);
                }
            }
        }
        uf.labels()
    }

    pub fn component_count(&self, subset: &[usize]) -> usize {
        let l = self.hasse_components(subset);
        let mut seen: Vec<usize> = l.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Möbius values μ(x, z) for every z (zero when x ≰ z).
    pub fn mobius_row(&self, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.n];
        let order = self.linear_extension();
        for &z in &order {
            if !self.leq(x, z) {
                continue;
            }
            if z == x {
                mu[z] = 1;
                continue;
            }
            let mut s = 0i64;
            for w in self.down[z].iter() {
                if w != z && self.leq(x, w) {
                    s += mu[w];
                }
            }
            mu[z] = -s;
        }
        mu
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, LrbError> {
        if !self.leq(x, y) {
            return Err(LrbError::Invalid(format!("mobius({x},{y}) requires x <= y")));
        }
        Ok(self.mobius_row(x)[y])
    }

    /// Whether a permutation of the ground set is an order automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.leq(i, j) == self.leq(perm[i], perm[j])))
    }

    /// Length (number of elements minus one) of the longest chain, or -1 when empty.
    pub fn height(&self) -> i64 {
        let mut h = vec![0i64; self.n];
        for &z in &self.linear_extension() {
            h[z] = self.down[z].iter().filter(|&w| w != z).map(|w| h[w] + 1).max().unwrap_or(0);
        }
        h.iter().copied().max().unwrap_or(-1)
    }

    /// A rank function when every maximal chain of every lower interval from
    /// a minimal element has the same length.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let mut r: Vec<Option<usize>> = vec![None; self.n];
        for &z in &self.linear_extension() {
            let lc = self.lower_covers(z);
            if lc.is_empty() {
                r[z] = Some(0);
                continue;
            }
            let vals: Vec<usize> = lc.iter().map(|&w| r[w].unwrap() + 1).collect();
            if vals.iter().any(|&v| v != vals[0]) {
                return None;
            }
            r[z] = Some(vals[0]);
        }
        Some(r.into_iter().map(|x| x.unwrap()).collect())
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Component label per element: the index of the first element in it.
    pub fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|i| self.find(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(n: usize) -> FinitePoset {
        FinitePoset::from_relation(1 << n, |a, b| a & !b == 0).unwrap()
    }

    #[test]
    fn boolean_mobius_alternates() {
        for n in 0..5 {
            let p = boolean(n);
            let expect = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(p.mobius(0, (1 << n) - 1).unwrap(), expect);
        }
    }

    #[test]
    fn rejects_non_order() {
        assert!(FinitePoset::from_relation(2, |_, _| true).is_err());
        assert!(FinitePoset::from_relation(3, |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2)).is_err());
    }

    #[test]
    fn covers_of_chain() {
        let p = FinitePoset::from_relation(3, |a, b| a <= b).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.height(), 2);
        assert_eq!(p.rank_function(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn antichain_components() {
        let p = FinitePoset::from_relation(3, |a, b| a == b).unwrap();
        assert_eq!(p.component_count(&[0, 1, 2]), 3);
        let j = p.join(&p);
        assert_eq!(j.component_count(&(0..6).collect::<Vec<_>>()), 1);
    }
}
