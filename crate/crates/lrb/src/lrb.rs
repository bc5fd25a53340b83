//! Left regular bands: support semilattice, semigroup order, contractions and
//! structural predicates.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{LrbError, Result};
use crate::poset::FinitePoset;
use crate::semigroup::Semigroup;

/// The support semilattice Λ(B) of principal left ideals.
#[derive(Clone, Debug)]
pub struct SupportLattice {
    pub order: FinitePoset,
    pub meet: Vec<Vec<usize>>,
    pub rank: Option<Vec<usize>>,
    pub min: usize,
    pub max: Option<usize>,
    /// The ideal `Bb` for each support.
    pub ideals: Vec<BitSet>,
}

impl SupportLattice {
    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.order.lt(x, y)
    }
}

/// An LRB together with its derived structure.
#[derive(Debug)]
pub struct Lrb {
    s: Semigroup,
    sigma: Vec<usize>,
    lattice: SupportLattice,
    fibers: Vec<Vec<usize>>,
    order: OnceLock<FinitePoset>,
}

/// Structural summary used by reports.
#[derive(Clone, Debug, Serialize)]
pub struct StructureSummary {
    pub elements: usize,
    pub supports: usize,
    pub monoid: bool,
    pub connected: bool,
    pub hereditary_tree: bool,
    pub support_order: &'static str,
}

impl Lrb {
    pub fn new(s: Semigroup) -> Result<Lrb> {
        let check = s.check_lrb_axioms();
        if let Some((x, y)) = check.witness {
            return Err(LrbError::NotLrb(if x == y {
                format!("{x}*{x} != {x}")
            } else {
                format!("{x}*{y}*{x} != {x}*{y}")
            }));
        }
        let n = s.size();
        // principal left ideals Bb = { x*b }
        let mut ideal_of: Vec<BitSet> = Vec::with_capacity(n);
        for b in 0..n {
            let mut set = BitSet::new(n);
            for x in 0..n {
                set.insert(s.mul(x, b));
            }
            ideal_of.push(set);
        }
        let mut distinct: Vec<BitSet> = ideal_of.clone();
        distinct.sort();
        distinct.dedup();
        distinct.sort_by(|a, b| {
            (a.count(), a.first(), a.to_vec()).cmp(&(b.count(), b.first(), b.to_vec()))
        });
        let index: HashMap<&BitSet, usize> = distinct.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let sigma: Vec<usize> = ideal_of.iter().map(|b| index[b]).collect();
        let m = distinct.len();
        let order = FinitePoset::from_relation_unchecked(m, |x, y| distinct[x].is_subset(&distinct[y]));
        let mut fibers = vec![Vec::new(); m];
        for (b, &x) in sigma.iter().enumerate() {
            fibers[x].push(b);
        }
        let meet: Vec<Vec<usize>> = (0..m)
            .map(|x| (0..m).map(|y| sigma[s.mul(fibers[x][0], fibers[y][0])]).collect())
            .collect();
        let rank = order.rank_function();
        let mins = order.minimal_elements();
        let maxs = order.maximal_elements();
        if mins.len() != 1 {
            return Err(LrbError::Inconsistent("support semilattice has no minimum".into()));
        }
        let lattice = SupportLattice {
            order,
            meet,
            rank,
            min: mins[0],
            max: (maxs.len() == 1).then(|| maxs[0]),
            ideals: distinct,
        };
        let lrb = Lrb { s, sigma, lattice, fibers, order: OnceLock::new() };
        lrb.verify_support_map()?;
        Ok(lrb)
    }

    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Lrb> {
        Lrb::new(Semigroup::new(table, None, None)?)
    }

    /// σ(xy) = σ(x) ∧ σ(y), meet is the greatest lower bound, and
    /// σ(x) ≤ σ(y) ⇔ xy = x.
    fn verify_support_map(&self) -> Result<()> {
        let l = &self.lattice;
        let m = l.size();
        for x in 0..m {
            for y in 0..m {
                let z = l.meet[x][y];
                if !l.leq(z, x) || !l.leq(z, y) {
                    return Err(LrbError::Inconsistent(format!("meet({x},{y}) is not a lower bound")));
                }
                for w in 0..m {
                    if l.leq(w, x) && l.leq(w, y) && !l.leq(w, z) {
                        return Err(LrbError::Inconsistent(format!("meet({x},{y}) is not greatest")));
                    }
                }
            }
        }
        let n = self.s.size();
        for a in 0..n {
            for b in 0..n {
                let ab = self.s.mul(a, b);
                if self.sigma[ab] != l.meet[self.sigma[a]][self.sigma[b]] {
                    return Err(LrbError::Inconsistent(format!("sigma({a}*{b}) is not the meet")));
                }
                if l.leq(self.sigma[a], self.sigma[b]) != (ab == a) {
                    return Err(LrbError::Inconsistent(format!("support comparison fails at ({a},{b})")));
                }
            }
        }
        Ok(())
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.s
    }

    pub fn size(&self) -> usize {
        self.s.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.s.mul(a, b)
    }

    #[inline]
    pub fn sigma(&self, b: usize) -> usize {
        self.sigma[b]
    }

    pub fn sigma_map(&self) -> &[usize] {
        &self.sigma
    }

    pub fn lattice(&self) -> &SupportLattice {
        &self.lattice
    }

    pub fn num_supports(&self) -> usize {
        self.lattice.size()
    }

    /// Elements with support exactly `x`, in index order.
    pub fn fiber(&self, x: usize) -> &[usize] {
        &self.fibers[x]
    }

    /// The semigroup order: `x ≤ y` iff `yx = x`.
    pub fn order(&self) -> &FinitePoset {
        self.order.get_or_init(|| {
            let p = FinitePoset::from_relation_unchecked(self.size(), |x, y| self.mul(y, x) == x);
            debug_assert!(p.validate().is_ok());
            p
        })
    }

    pub fn semigroup_order(&self) -> Result<FinitePoset> {
        let p = self.order().clone();
        p.validate()?;
        Ok(p)
    }

    /// Elements of the contraction `B_{≥X}`.
    pub fn contraction_elements(&self, x: usize) -> Vec<usize> {
        (0..self.size()).filter(|&b| self.lattice.leq(x, self.sigma[b])).collect()
    }

    /// The contraction as a semigroup together with its embedding.
    pub fn contraction(&self, x: usize) -> Result<(Semigroup, Vec<usize>)> {
        let els = self.contraction_elements(x);
        Ok((self.s.subsemigroup(&els)?, els))
    }

    /// Every contraction has a connected Hasse diagram.
    pub fn is_connected(&self) -> bool {
        let order = self.order();
        (0..self.num_supports()).all(|x| order.component_count(&self.contraction_elements(x)) == 1)
    }

    /// The Hasse diagram of the semigroup order is a tree with a top root.
    pub fn is_hereditary_tree(&self) -> bool {
        let order = self.order();
        if order.maximal_elements().len() != 1 {
            return false;
        }
        (0..self.size()).all(|b| order.upper_covers(b).len() <= 1)
    }

    /// `B^{<y}`, optionally intersected with `B_{≥X}`.
    pub fn strict_lower(&self, y: usize, above: Option<usize>) -> Vec<usize> {
        let order = self.order();
        order
            .strict_lower_set(y)
            .into_iter()
            .filter(|&b| above.is_none_or(|x| self.lattice.leq(x, self.sigma[b])))
            .collect()
    }

    /// Labels of supports: the label of the minimal-index element of each fiber.
    pub fn support_label(&self, x: usize) -> String {
        format!("X{}", x)
    }

    pub fn summary(&self) -> StructureSummary {
        StructureSummary {
            elements: self.size(),
            supports: self.num_supports(),
            monoid: self.s.find_identity().is_some(),
            connected: self.is_connected(),
            hereditary_tree: self.is_hereditary_tree(),
            support_order: "ideal cardinality, then minimal member index, then member list",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meet_chain(n: usize) -> Lrb {
        Lrb::from_table((0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect()).unwrap()
    }

    #[test]
    fn semilattice_is_its_own_support() {
        let l = meet_chain(3);
        assert_eq!(l.num_supports(), 3);
        for b in 0..3 {
            assert_eq!(l.sigma(b), b);
        }
        assert!(l.is_connected());
        assert!(l.is_hereditary_tree());
        assert_eq!(l.lattice().rank, Some(vec![0, 1, 2]));
    }

    #[test]
    fn left_zero_is_disconnected() {
        let l = Lrb::from_table(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(l.num_supports(), 1);
        assert!(!l.is_connected());
    }

    #[test]
    fn one_element() {
        let l = Lrb::from_table(vec![vec![0]]).unwrap();
        assert!(l.is_connected());
        assert!(l.is_hereditary_tree());
        let (c, e) = l.contraction(0).unwrap();
        assert_eq!(c.size(), 1);
        assert_eq!(e, vec![0]);
    }
}
