//! Groups acting on an LRB by semigroup automorphisms.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{LrbError, Result};
use crate::group::classfn::ClassFunction;
use crate::group::perm::{PermGroup, DEFAULT_GROUP_CAP};
use crate::lrb::Lrb;
use crate::poset::FinitePoset;
use crate::semigroup::Semigroup;

/// Group input: `{"generators": [[perm], ...]}` acting on element indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub generators: Vec<Vec<usize>>,
}

impl GroupData {
    pub fn from_json(s: &str) -> Result<GroupData> {
        serde_json::from_str(s).map_err(|e| LrbError::Parse(e.to_string()))
    }
}

/// First generator and pair violating `g(bb') = g(b)g(b')`.
pub fn verify_automorphisms(s: &Semigroup, generators: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    for (gi, g) in generators.iter().enumerate() {
        for a in 0..s.size() {
            for b in 0..s.size() {
                if g[s.mul(a, b)] != s.mul(g[a], g[b]) {
                    return Some((gi, a, b));
                }
            }
        }
    }
    None
}

/// Close generators (checked to be automorphisms) into a group.
pub fn close_group(s: &Semigroup, generators: &[Vec<usize>]) -> Result<PermGroup> {
    close_group_capped(s, generators, DEFAULT_GROUP_CAP)
}

pub fn close_group_capped(s: &Semigroup, generators: &[Vec<usize>], cap: usize) -> Result<PermGroup> {
    let n = s.size();
    for (i, g) in generators.iter().enumerate() {
        if g.len() != n {
            return Err(LrbError::Invalid(format!("generator {i} has length {} (expected {n})", g.len())));
        }
    }
    let g = PermGroup::generate(n, generators, cap)?;
    if let Some((index, a, b)) = verify_automorphisms(s, generators) {
        return Err(LrbError::NotAutomorphism { index, a, b });
    }
    Ok(g)
}

/// A group acting on `B` together with the induced action on supports.
#[derive(Debug)]
pub struct GroupAction {
    group: Arc<PermGroup>,
    support_perm: Vec<Vec<usize>>,
    stabilizers: Vec<OnceLock<Arc<PermGroup>>>,
    pair_stabilizers: Mutex<HashMap<Vec<usize>, Arc<PermGroup>>>,
}

impl GroupAction {
    pub fn new(lrb: &Lrb, group: Arc<PermGroup>) -> Result<GroupAction> {
        if group.degree() != lrb.size() {
            return Err(LrbError::Invalid(format!("group acts on {} points, LRB has {}", group.degree(), lrb.size())));
        }
        let gens: Vec<Vec<usize>> =
            group.generators().iter().map(|&g| group.element(g).iter().map(|&x| x as usize).collect()).collect();
        if let Some((index, a, b)) = verify_automorphisms(lrb.semigroup(), &gens) {
            return Err(LrbError::NotAutomorphism { index, a, b });
        }
        let m = lrb.num_supports();
        let support_perm: Vec<Vec<usize>> = (0..group.order())
            .map(|g| (0..m).map(|x| lrb.sigma(group.act(g, lrb.fiber(x)[0]))).collect())
            .collect();
        for (g, sp) in support_perm.iter().enumerate() {
            for b in 0..lrb.size() {
                if lrb.sigma(group.act(g, b)) != sp[lrb.sigma(b)] {
                    return Err(LrbError::Inconsistent("the action does not descend to supports".into()));
                }
            }
        }
        Ok(GroupAction {
            group,
            support_perm,
            stabilizers: (0..m).map(|_| OnceLock::new()).collect(),
            pair_stabilizers: Mutex::new(HashMap::new()),
        })
    }

    /// The trivial group acting on an LRB.
    pub fn trivial(lrb: &Lrb) -> GroupAction {
        GroupAction::new(lrb, Arc::new(PermGroup::trivial(lrb.size()))).expect("identity is an automorphism")
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn num_supports(&self) -> usize {
        self.support_perm[0].len()
    }

    /// `g(b)`.
    pub fn act(&self, g: usize, b: usize) -> usize {
        self.group.act(g, b)
    }

    /// `g(X)`.
    pub fn act_support(&self, g: usize, x: usize) -> usize {
        self.support_perm[g][x]
    }

    pub fn support_perm(&self, g: usize) -> &[usize] {
        &self.support_perm[g]
    }

    pub fn element_orbits(&self) -> Vec<Vec<usize>> {
        self.group.orbits()
    }

    /// Orbits on supports, each sorted, listed by least member.
    pub fn support_orbits(&self) -> Vec<Vec<usize>> {
        let m = self.num_supports();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for x in 0..m {
            if seen[x] {
                continue;
            }
            let mut orb: Vec<usize> = self.support_perm.iter().map(|p| p[x]).collect();
            orb.sort_unstable();
            orb.dedup();
            for &y in &orb {
                seen[y] = true;
            }
            out.push(orb);
        }
        out
    }

    /// Index of the support orbit containing each support.
    pub fn support_orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.num_supports()];
        for (i, o) in self.support_orbits().iter().enumerate() {
            for &x in o {
                idx[x] = i;
            }
        }
        idx
    }

    /// `G_X`.
    pub fn stabilizer(&self, x: usize) -> Arc<PermGroup> {
        self.stabilizers[x]
            .get_or_init(|| {
                let els: Vec<Vec<u32>> = (0..self.order())
                    .filter(|&g| self.support_perm[g][x] == x)
                    .map(|g| self.group.element(g).to_vec())
                    .collect();
                Arc::new(PermGroup::from_elements(self.group.degree(), els).expect("stabilizers are subgroups"))
            })
            .clone()
    }

    /// Common stabilizer of several supports.
    pub fn stabilizer_of(&self, xs: &[usize]) -> Arc<PermGroup> {
        let mut key = xs.to_vec();
        key.sort_unstable();
        key.dedup();
        if key.len() == 1 {
            return self.stabilizer(key[0]);
        }
        if let Some(h) = self.pair_stabilizers.lock().unwrap().get(&key) {
            return h.clone();
        }
        let els: Vec<Vec<u32>> = (0..self.order())
            .filter(|&g| key.iter().all(|&x| self.support_perm[g][x] == x))
            .map(|g| self.group.element(g).to_vec())
            .collect();
        let h = Arc::new(PermGroup::from_elements(self.group.degree(), els).expect("stabilizers are subgroups"));
        self.pair_stabilizers.lock().unwrap().insert(key, h.clone());
        h
    }

    /// `G_b`, the stabilizer of an element.
    pub fn element_stabilizer(&self, b: usize) -> Arc<PermGroup> {
        Arc::new(self.group.pointwise_stabilizer(&[b]))
    }

    /// Index in `self.group()` of an element of a subgroup.
    pub fn index_in_group(&self, h: &PermGroup, k: usize) -> usize {
        self.group.index_of(h.element(k)).expect("subgroup element")
    }

    /// Support orbits ordered by `[X] ≤ [Y]` iff `X ≤ gY` for some `g`.
    pub fn orbit_poset(&self, lrb: &Lrb) -> Result<FinitePoset> {
        let orbits = self.support_orbits();
        let lat = lrb.lattice();
        FinitePoset::from_relation(orbits.len(), |a, b| {
            let x = orbits[a][0];
            orbits[b].iter().any(|&y| lat.leq(x, y))
        })
    }

    /// Permutation character of the group on a stable set of elements.
    pub fn element_permutation_character(&self, points: &[usize]) -> Result<ClassFunction> {
        ClassFunction::permutation_character(&self.group, points)
    }

    /// Permutation character of the group on the support lattice.
    pub fn support_permutation_character(&self) -> ClassFunction {
        let sp = &self.support_perm;
        ClassFunction::from_int_fn(&self.group, |g| sp[g].iter().enumerate().filter(|(x, y)| x == *y).count() as i64)
    }
}
