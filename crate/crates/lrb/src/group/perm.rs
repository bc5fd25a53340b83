//! Finite permutation groups listed element by element.

use std::collections::HashMap;

use crate::error::{LrbError, Result};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A permutation group with its full element list and conjugacy classes.
/// Element 0 is the identity. Composition `a∘b` applies `b` first.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    generators: Vec<usize>,
}

fn to_u32(p: &[usize]) -> Vec<u32> {
    p.iter().map(|&x| x as u32).collect()
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

#[inline]
pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn invert(a: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

impl PermGroup {
    /// Close a set of generators (each a permutation of `0..degree`).
    pub fn generate(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<PermGroup> {
        for (i, g) in generators.iter().enumerate() {
            if !is_permutation(g, degree) {
                return Err(LrbError::Invalid(format!("generator {i} is not a permutation of {degree} points")));
            }
        }
        let id: Vec<u32> = (0..degree as u32).collect();
        let gens: Vec<Vec<u32>> = generators.iter().map(|g| to_u32(g)).filter(|g| *g != id).collect();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let h = compose(g, &elements[i]);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(LrbError::GroupTooLarge(cap));
                    }
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            i += 1;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(Self::finish(degree, elements, index, generators))
    }

    /// A group from an explicit element list (closure is verified).
    pub fn from_elements(degree: usize, elements: Vec<Vec<u32>>) -> Result<PermGroup> {
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut els = vec![id.clone()];
        els.extend(elements.into_iter().filter(|e| *e != id));
        let mut index = HashMap::new();
        let mut uniq = Vec::new();
        for e in els {
            if e.len() != degree {
                return Err(LrbError::Invalid("element has the wrong degree".into()));
            }
            if !index.contains_key(&e) {
                index.insert(e.clone(), uniq.len());
                uniq.push(e);
            }
        }
        // a short generating set: add elements outside the span so far
        let mut generators: Vec<usize> = Vec::new();
        let mut inside = vec![false; uniq.len()];
        inside[0] = true;
        let mut members = vec![0usize];
        for cand in 1..uniq.len() {
            if inside[cand] {
                continue;
            }
            generators.push(cand);
            let mut k = 0;
            members = vec![0];
            inside.iter_mut().for_each(|x| *x = false);
            inside[0] = true;
            while k < members.len() {
                for &g in &generators {
                    let Some(&j) = index.get(&compose(&uniq[g], &uniq[members[k]])) else {
                        return Err(LrbError::Invalid("element list is not closed under composition".into()));
                    };
                    if !inside[j] {
                        inside[j] = true;
                        members.push(j);
                    }
                }
                k += 1;
            }
        }
        if members.len() != uniq.len() {
            return Err(LrbError::Invalid("element list is not closed under composition".into()));
        }
        Ok(Self::finish(degree, uniq, index, generators))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::generate(degree, &[], 1).expect("trivial group")
    }

    fn finish(degree: usize, elements: Vec<Vec<u32>>, index: HashMap<Vec<u32>, usize>, generators: Vec<usize>) -> PermGroup {
        let inverse: Vec<usize> = elements.iter().map(|e| index[&invert(e)]).collect();
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        let gens = generators.clone();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![start];
            class_of[start] = c;
            let mut k = 0;
            while k < members.len() {
                let x = &elements[members[k]];
                for &s in &gens {
                    let y = compose(&compose(&elements[s], x), &elements[inverse[s]]);
                    let j = index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        PermGroup { degree, elements, index, inverse, classes, class_of, generators }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &[u32] {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Image of point `x` under element `g`.
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.elements[g][x] as usize
    }

    pub fn index_of(&self, perm: &[u32]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a], &self.elements[b])]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn element_order(&self, g: usize) -> usize {
        let p = &self.elements[g];
        let mut seen = vec![false; self.degree];
        let mut l = 1usize;
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x] as usize;
                len += 1;
            }
            l = num_integer::lcm(l, len);
        }
        l
    }

    pub fn exponent(&self) -> usize {
        self.classes.iter().fold(1, |acc, c| num_integer::lcm(acc, self.element_order(c[0])))
    }

    /// Elements satisfying a predicate, as a subgroup (the predicate must
    /// define a subgroup, which is checked).
    pub fn subgroup_where(&self, pred: impl Fn(&[u32]) -> bool) -> Result<PermGroup> {
        let els: Vec<Vec<u32>> = self.elements.iter().filter(|e| pred(e)).cloned().collect();
        PermGroup::from_elements(self.degree, els)
    }

    /// Setwise stabilizer of a set of points.
    pub fn setwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let mut mask = vec![false; self.degree];
        for &p in points {
            mask[p] = true;
        }
        self.subgroup_where(|e| points.iter().all(|&p| mask[e[p] as usize])).expect("stabilizers are subgroups")
    }

    /// Pointwise stabilizer of a set of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        self.subgroup_where(|e| points.iter().all(|&p| e[p] as usize == p)).expect("stabilizers are subgroups")
    }

    /// Orbits on `0..degree`, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            let mut orb: Vec<usize> = self.elements.iter().map(|e| e[s] as usize).collect();
            orb.sort_unstable();
            orb.dedup();
            for &x in &orb {
                seen[x] = true;
            }
            out.push(orb);
        }
        out
    }

    /// Whether every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.elements.iter().all(|e| self.index.contains_key(e))
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    /// Image of a permutation group in its action on a stable subset of points.
    pub fn restricted_action(&self, g: usize, points: &[usize], pos: &HashMap<usize, usize>) -> Vec<u32> {
        points.iter().map(|&p| pos[&(self.elements[g][p] as usize)] as u32).collect()
    }
}
