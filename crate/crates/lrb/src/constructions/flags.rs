//! The flag LRB `S(ℒ)` of a geometric lattice: prefixes of complete flags
//! under join-and-deduplicate multiplication.

use std::collections::HashMap;

use crate::constructions::lattice::GeometricLattice;
use crate::error::{LrbError, Result};
use crate::semigroup::Semigroup;

#[derive(Clone, Debug)]
pub struct FlagLrb {
    lattice: GeometricLattice,
    flags: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    semigroup: Semigroup,
}

impl FlagLrb {
    pub fn new(lattice: GeometricLattice) -> Result<FlagLrb> {
        let mut flags: Vec<Vec<usize>> = vec![Vec::new()];
        let mut level: Vec<Vec<usize>> = vec![Vec::new()];
        loop {
            let mut next = Vec::new();
            for f in &level {
                let last = f.last().copied().unwrap_or(lattice.bottom());
                for y in lattice.upper_covers(last) {
                    let mut g = f.clone();
                    g.push(y);
                    next.push(g);
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            flags.extend(next.iter().cloned());
            level = next;
        }
        if flags.len() > 50_000 {
            return Err(LrbError::Invalid(format!("flag semigroup would have {} elements", flags.len())));
        }
        let index: HashMap<Vec<usize>, usize> = flags.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        let n = flags.len();
        let mut mul = Vec::with_capacity(n * n);
        for x in &flags {
            for y in &flags {
                let p = flag_product(&lattice, x, y);
                mul.push(index[&p] as u32);
            }
        }
        let labels = flags
            .iter()
            .map(|f| format!("({})", f.iter().map(|&x| lattice.label(x)).collect::<Vec<_>>().join(",")))
            .collect();
        let semigroup = Semigroup::from_flat(n, mul, Some(0), Some(labels))?;
        Ok(FlagLrb { lattice, flags, index, semigroup })
    }

    pub fn lattice(&self) -> &GeometricLattice {
        &self.lattice
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn into_semigroup(self) -> Semigroup {
        self.semigroup
    }

    pub fn size(&self) -> usize {
        self.flags.len()
    }

    pub fn flag(&self, b: usize) -> &[usize] {
        &self.flags[b]
    }

    pub fn index_of(&self, flag: &[usize]) -> Option<usize> {
        self.index.get(flag).copied()
    }

    /// The last flat of a flag (the bottom for the empty flag).
    pub fn top_flat(&self, b: usize) -> usize {
        self.flags[b].last().copied().unwrap_or(self.lattice.bottom())
    }

    pub fn complete_flags(&self) -> Vec<usize> {
        let r = self.lattice.lattice_rank();
        (0..self.size()).filter(|&b| self.flags[b].len() == r).collect()
    }

    /// The one-step flags `(a)` for each atom `a`, in atom order.
    pub fn atom_flags(&self) -> Vec<usize> {
        self.lattice.atoms().iter().map(|&a| self.index[&vec![a]]).collect()
    }

    /// A flag ending at `x` (the lexicographically first one).
    pub fn representative_flag(&self, x: usize) -> usize {
        (0..self.size()).find(|&b| self.top_flat(b) == x).expect("every flat ends some flag")
    }

    /// Permutation of flags induced by a lattice automorphism.
    pub fn induced_permutation(&self, lattice_perm: &[usize]) -> Result<Vec<usize>> {
        if !self.lattice.is_automorphism(lattice_perm) {
            return Err(LrbError::Invalid("not a lattice automorphism".into()));
        }
        Ok(self
            .flags
            .iter()
            .map(|f| {
                let g: Vec<usize> = f.iter().map(|&x| lattice_perm[x]).collect();
                self.index[&g]
            })
            .collect())
    }
}

/// `(X_1..X_k)(Y_1..Y_l) = (X_1..X_k, X_k∨Y_1, .., X_k∨Y_l)` with repeats removed.
pub fn flag_product(l: &GeometricLattice, x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut out = x.to_vec();
    let mut last = x.last().copied().unwrap_or(l.bottom());
    for &yi in y {
        let z = l.join(last, yi);
        if z != last {
            out.push(z);
            last = z;
        }
    }
    out
}
