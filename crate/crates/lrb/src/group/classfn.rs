//! Class functions (characters and virtual characters) of permutation groups.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{LrbError, Result};
use crate::group::cyclotomic::Cyclo;
use crate::group::perm::{compose, PermGroup};
use crate::rational::Q;

#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<Cyclo>,
}

#[derive(Serialize)]
struct ClassFunctionJson<'a> {
    group_order: usize,
    class_sizes: Vec<usize>,
    values: &'a [Cyclo],
}

fn same_group(a: &Arc<PermGroup>, b: &Arc<PermGroup>) -> bool {
    Arc::ptr_eq(a, b) || a.elements() == b.elements()
}

impl ClassFunction {
    /// Values listed by conjugacy class of `group`.
    pub fn new(group: Arc<PermGroup>, values: Vec<Cyclo>) -> Result<ClassFunction> {
        if values.len() != group.num_classes() {
            return Err(LrbError::Invalid(format!("{} values for {} classes", values.len(), group.num_classes())));
        }
        Ok(ClassFunction { group, values })
    }

    /// Evaluate `f` at each class representative.
    pub fn from_fn(group: &Arc<PermGroup>, mut f: impl FnMut(usize) -> Cyclo) -> ClassFunction {
        let values = (0..group.num_classes()).map(|c| f(group.class_rep(c))).collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn from_int_fn(group: &Arc<PermGroup>, mut f: impl FnMut(usize) -> i64) -> ClassFunction {
        Self::from_fn(group, |g| Cyclo::int(f(g)))
    }

    pub fn from_rational_fn(group: &Arc<PermGroup>, mut f: impl FnMut(usize) -> Q) -> ClassFunction {
        Self::from_fn(group, |g| Cyclo::rational(f(g)))
    }

    pub fn constant(group: &Arc<PermGroup>, v: i64) -> ClassFunction {
        Self::from_int_fn(group, |_| v)
    }

    pub fn trivial(group: &Arc<PermGroup>) -> ClassFunction {
        Self::constant(group, 1)
    }

    pub fn zero(group: &Arc<PermGroup>) -> ClassFunction {
        Self::constant(group, 0)
    }

    pub fn regular(group: &Arc<PermGroup>) -> ClassFunction {
        let n = group.order() as i64;
        Self::from_int_fn(group, |g| if g == 0 { n } else { 0 })
    }

    /// Fixed points of each element on a stable subset of the permuted points.
    pub fn permutation_character(group: &Arc<PermGroup>, points: &[usize]) -> Result<ClassFunction> {
        let mut mask = vec![false; group.degree()];
        for &p in points {
            mask[p] = true;
        }
        for &g in group.generators() {
            if points.iter().any(|&p| !mask[group.act(g, p)]) {
                return Err(LrbError::Precondition("subset is not stable under the group".into()));
            }
        }
        Ok(Self::from_int_fn(group, |g| points.iter().filter(|&&p| group.act(g, p) == p).count() as i64))
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &Cyclo {
        &self.values[self.group.class_of(g)]
    }

    pub fn degree(&self) -> Cyclo {
        self.values[self.group.class_of(0)].clone()
    }

    /// Integer values, when every value is a rational integer.
    pub fn integer_values(&self) -> Option<Vec<i64>> {
        self.values.iter().map(|v| v.as_integer()).collect()
    }

    fn check(&self, o: &ClassFunction) -> Result<()> {
        if same_group(&self.group, &o.group) {
            Ok(())
        } else {
            Err(LrbError::Invalid("class functions live on different groups".into()))
        }
    }

    fn zip(&self, o: &ClassFunction, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Result<ClassFunction> {
        self.check(o)?;
        Ok(ClassFunction { group: self.group.clone(), values: self.values.iter().zip(&o.values).map(|(a, b)| f(a, b)).collect() })
    }

    pub fn add(&self, o: &ClassFunction) -> Result<ClassFunction> {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &ClassFunction) -> Result<ClassFunction> {
        self.zip(o, |a, b| a.sub(b))
    }

    /// Pointwise product (tensor product of representations).
    pub fn tensor(&self, o: &ClassFunction) -> Result<ClassFunction> {
        self.zip(o, |a, b| a.mul(b))
    }

    pub fn scale(&self, k: i64) -> ClassFunction {
        let q = Q::from_int(k);
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v.scale(&q)).collect() }
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v.conj()).collect() }
    }

    /// The contragredient: `g ↦ χ(g⁻¹)`.
    pub fn contragredient(&self) -> ClassFunction {
        let g = &self.group;
        Self::from_fn(g, |x| self.value(g.inverse(x)).clone())
    }

    /// `(1/|H|) Σ_h φ(h) conj(ψ(h))`.
    pub fn inner(&self, o: &ClassFunction) -> Result<Cyclo> {
        self.check(o)?;
        let mut acc = Cyclo::zero();
        for (c, members) in self.group.classes().iter().enumerate() {
            let term = self.values[c].mul(&o.values[c].conj());
            acc = acc.add(&term.scale(&Q::from_int(members.len() as i64)));
        }
        Ok(acc.scale(&Q::new(1, self.group.order() as i64)))
    }

    /// Inner product that must be a rational integer.
    pub fn multiplicity(&self, o: &ClassFunction) -> Result<i64> {
        let v = self.inner(o)?;
        v.as_integer().ok_or_else(|| LrbError::Inconsistent(format!("inner product {v} is not an integer")))
    }

    /// Restriction to a subgroup (elements matched as permutations).
    pub fn restrict(&self, sub: &Arc<PermGroup>) -> Result<ClassFunction> {
        let mut values = Vec::with_capacity(sub.num_classes());
        for c in 0..sub.num_classes() {
            let g = self
                .group
                .index_of(sub.element(sub.class_rep(c)))
                .ok_or_else(|| LrbError::Invalid("not a subgroup".into()))?;
            values.push(self.value(g).clone());
        }
        Ok(ClassFunction { group: sub.clone(), values })
    }

    /// Induction to an overgroup: `(1/|H|) Σ_{x∈G} φ°(x g x⁻¹)`.
    pub fn induce(&self, to: &Arc<PermGroup>) -> Result<ClassFunction> {
        let h = &self.group;
        if !to.contains_group(h) {
            return Err(LrbError::Invalid("induction target does not contain the subgroup".into()));
        }
        if same_group(h, to) {
            return Ok(ClassFunction { group: to.clone(), values: self.values.clone() });
        }
        let mut cache: HashMap<usize, Cyclo> = HashMap::new();
        let mut values = Vec::with_capacity(to.num_classes());
        let inv_h = Q::new(1, h.order() as i64);
        for c in 0..to.num_classes() {
            let g = to.element(to.class_rep(c));
            let mut counts: HashMap<usize, i64> = HashMap::new();
            for x in 0..to.order() {
                let conj = compose(&compose(to.element(x), g), to.element(to.inverse(x)));
                if let Some(k) = h.index_of(&conj) {
                    *counts.entry(h.class_of(k)).or_insert(0) += 1;
                }
            }
            let mut acc = Cyclo::zero();
            let mut keys: Vec<_> = counts.into_iter().collect();
            keys.sort_unstable();
            for (hc, n) in keys {
                let v = cache.entry(hc).or_insert_with(|| self.values[hc].clone());
                acc = acc.add(&v.scale(&Q::from_int(n)));
            }
            values.push(acc.scale(&inv_h));
        }
        Ok(ClassFunction { group: to.clone(), values })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = ClassFunctionJson {
            group_order: self.group.order(),
            class_sizes: self.group.classes().iter().map(|c| c.len()).collect(),
            values: &self.values,
        };
        serde_json::to_value(j).expect("serialisable")
    }

    /// Compact rendering of the values.
    pub fn render(&self) -> String {
        format!("[{}]", self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, o: &ClassFunction) -> bool {
        same_group(&self.group, &o.group) && self.values == o.values
    }
}

/// Signed integer combination of class functions on one group.
#[derive(Clone, Debug, Default)]
pub struct VirtualCharacter {
    pub terms: Vec<(i64, ClassFunction)>,
}

impl VirtualCharacter {
    pub fn new() -> VirtualCharacter {
        VirtualCharacter { terms: Vec::new() }
    }

    pub fn push(&mut self, coeff: i64, chi: ClassFunction) {
        self.terms.push((coeff, chi));
    }

    pub fn evaluate(&self, group: &Arc<PermGroup>) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(group);
        for (k, chi) in &self.terms {
            acc = acc.add(&chi.scale(*k))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::DEFAULT_GROUP_CAP;

    fn s3() -> Arc<PermGroup> {
        Arc::new(PermGroup::generate(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_GROUP_CAP).unwrap())
    }

    #[test]
    fn regular_inner_products() {
        let g = s3();
        let reg = ClassFunction::regular(&g);
        assert_eq!(ClassFunction::trivial(&g).multiplicity(&reg).unwrap(), 1);
        assert_eq!(reg.multiplicity(&reg).unwrap(), 6);
    }

    #[test]
    fn induce_from_point_stabilizer() {
        let g = s3();
        let h = Arc::new(g.pointwise_stabilizer(&[2]));
        let ind = ClassFunction::trivial(&h).induce(&g).unwrap();
        let perm = ClassFunction::permutation_character(&g, &[0, 1, 2]).unwrap();
        assert_eq!(ind, perm);
        assert_eq!(ind.integer_values().unwrap()[0], 3);
    }

    #[test]
    fn frobenius_reciprocity() {
        let g = s3();
        let h = Arc::new(g.setwise_stabilizer(&[0, 1]));
        let sign_h = ClassFunction::from_int_fn(&h, |x| if h.element(x)[0] == 0 { 1 } else { -1 });
        let perm = ClassFunction::permutation_character(&g, &[0, 1, 2]).unwrap();
        let lhs = sign_h.induce(&g).unwrap().multiplicity(&perm).unwrap();
        let rhs = sign_h.multiplicity(&perm.restrict(&h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unstable_subset_rejected() {
        let g = s3();
        assert!(ClassFunction::permutation_character(&g, &[0]).is_err());
    }
}
