//! Complete families of primitive orthogonal idempotents of `kB`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::kb::{SemigroupAlgebra, Vector};
use crate::error::{LrbError, Result};
use crate::field::Field;
use crate::group::action::GroupAction;
use crate::linalg::Echelon;

/// Which element of each fiber seeds the recursion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedPolicy {
    #[default]
    Min,
    Max,
}

impl std::str::FromStr for SeedPolicy {
    type Err = LrbError;
    fn from_str(s: &str) -> Result<SeedPolicy> {
        match s {
            "min" => Ok(SeedPolicy::Min),
            "max" => Ok(SeedPolicy::Max),
            _ => Err(LrbError::Parse(format!("unknown seed policy `{s}`"))),
        }
    }
}

/// Idempotents `E_X` indexed by support, with their seeds `ℓ_X`.
#[derive(Clone, Debug)]
pub struct Cfpoi<E> {
    pub idempotents: Vec<Vector<E>>,
    pub seeds: Vec<Vector<E>>,
    /// `g(E_X) = E_{g(X)}` for every `g` of the action used.
    pub invariant: bool,
    /// `Σ_X E_X`, the identity of `kB`.
    pub unit: Vector<E>,
}

impl<E: Clone> Cfpoi<E> {
    pub fn get(&self, x: usize) -> &Vector<E> {
        &self.idempotents[x]
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }
}

/// Orbit-averaged seeds propagated along each support orbit.
pub fn choose_seeds<F: Field>(
    alg: &SemigroupAlgebra<F>,
    action: &GroupAction,
    policy: SeedPolicy,
) -> Result<Vec<Vector<F::E>>> {
    let f = alg.field();
    let order = action.order();
    if !f.is_unit_int(order as u64) {
        return Err(LrbError::CharacteristicDividesOrder(f.characteristic(), order));
    }
    let lrb = alg.lrb();
    let m = lrb.num_supports();
    let mut seeds: Vec<Option<Vector<F::E>>> = vec![None; m];
    for orbit in action.support_orbits() {
        let x0 = orbit[0];
        let fiber = lrb.fiber(x0);
        let b0 = match policy {
            SeedPolicy::Min => fiber[0],
            SeedPolicy::Max => *fiber.last().unwrap(),
        };
        let stab = action.stabilizer(x0);
        let mut pts: Vec<usize> = (0..stab.order()).map(|h| stab.act(h, b0)).collect();
        pts.sort_unstable();
        pts.dedup();
        let c = f.inv(&f.from_i64(pts.len() as i64));
        let mut l0 = alg.zero();
        for &p in &pts {
            l0[p] = c.clone();
        }
        for g in 0..order {
            let x = action.act_support(g, x0);
            let img = alg.permute(action.group().element(g), &l0);
            match &seeds[x] {
                Some(prev) if *prev != img => {
                    return Err(LrbError::Inconsistent(format!("seed for support {x} depends on the group element")));
                }
                Some(_) => {}
                None => seeds[x] = Some(img),
            }
        }
    }
    Ok(seeds.into_iter().map(|s| s.expect("every support lies in an orbit")).collect())
}

/// Seeds for the trivial group under a policy.
pub fn trivial_seeds<F: Field>(alg: &SemigroupAlgebra<F>, policy: SeedPolicy) -> Vec<Vector<F::E>> {
    let lrb = alg.lrb();
    (0..lrb.num_supports())
        .map(|x| {
            let fib = lrb.fiber(x);
            alg.basis(match policy {
                SeedPolicy::Min => fib[0],
                SeedPolicy::Max => *fib.last().unwrap(),
            })
        })
        .collect()
}

/// `E_X := ℓ_X − Σ_{Y<X} ℓ_X E_Y` along the support order, then verified.
pub fn build_cfpoi<F: Field>(
    alg: &SemigroupAlgebra<F>,
    seeds: Vec<Vector<F::E>>,
    action: Option<&GroupAction>,
) -> Result<Cfpoi<F::E>> {
    let lrb = alg.lrb();
    let f = alg.field();
    if !lrb.is_connected() {
        return Err(LrbError::NotConnected);
    }
    let m = lrb.num_supports();
    let lat = lrb.lattice();
    if seeds.len() != m {
        return Err(LrbError::Invalid(format!("{} seeds for {m} supports", seeds.len())));
    }
    for (x, l) in seeds.iter().enumerate() {
        let mut sum = f.zero();
        for (b, c) in alg.nonzeros(l) {
            if lrb.sigma(b) != x {
                return Err(LrbError::Invalid(format!("seed for support {x} uses an element of another support")));
            }
            sum = f.add(&sum, c);
        }
        if !f.is_one(&sum) {
            return Err(LrbError::Invalid(format!("seed for support {x} has coefficient sum {}", f.render(&sum))));
        }
    }
    // supports are indexed by ideal size, which is a linear extension
    for x in 0..m {
        for y in 0..x {
            if lat.leq(x, y) {
                return Err(LrbError::Inconsistent("support indices are not a linear extension".into()));
            }
        }
    }
    let mut idem: Vec<Vector<F::E>> = Vec::with_capacity(m);
    for x in 0..m {
        let mut below = alg.zero();
        for (y, e) in idem.iter().enumerate() {
            if lat.lt(y, x) {
                below = alg.add(&below, e);
            }
        }
        let e = alg.sub(&seeds[x], &alg.mul(&seeds[x], &below));
        idem.push(e);
    }
    let unit = idem.iter().fold(alg.zero(), |acc, e| alg.add(&acc, e));
    let mut c = Cfpoi { idempotents: idem, seeds, invariant: false, unit };
    verify_cfpoi(alg, &c)?;
    c.invariant = match action {
        Some(a) => is_invariant(alg, &c, a),
        None => true,
    };
    Ok(c)
}

/// Full check: idempotent, orthogonal, sum to the identity, support-`X`
/// coefficients of `E_X` summing to 1, and `E_X ∈ span{b : σ(b) ≤ X}`.
pub fn verify_cfpoi<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>) -> Result<()> {
    let lrb = alg.lrb();
    let f = alg.field();
    let m = c.len();
    let lat = lrb.lattice();
    for (x, e) in c.idempotents.iter().enumerate() {
        let t = &alg.support_sums(e)[x];
        if !f.is_one(t) {
            return Err(LrbError::Inconsistent(format!("support-{x} coefficients of E_{x} sum to {}", f.render(t))));
        }
        if alg.supports_of(e).iter().any(|&s| !lat.leq(s, x)) {
            return Err(LrbError::Inconsistent(format!("E_{x} uses elements of support not below {x}")));
        }
    }
    let bad = (0..m).into_par_iter().find_map_any(|x| {
        for y in 0..m {
            let p = alg.mul(&c.idempotents[x], &c.idempotents[y]);
            let ok = if x == y { p == c.idempotents[x] } else { alg.is_zero(&p) };
            if !ok {
                return Some((x, y));
            }
        }
        None
    });
    if let Some((x, y)) = bad {
        return Err(LrbError::Inconsistent(format!("E_{x} E_{y} fails orthogonal idempotence")));
    }
    let bad = (0..lrb.size()).into_par_iter().find_any(|&b| {
        let e = alg.basis(b);
        alg.mul(&c.unit, &e) != e || alg.mul(&e, &c.unit) != e
    });
    if let Some(b) = bad {
        return Err(LrbError::Inconsistent(format!("sum of idempotents does not fix element {b}")));
    }
    Ok(())
}

/// `g(E_X) = E_{g(X)}` on generators (hence on the whole group).
pub fn is_invariant<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>, action: &GroupAction) -> bool {
    let g = action.group();
    g.generators().iter().all(|&s| {
        (0..c.len()).all(|x| alg.permute(g.element(s), &c.idempotents[x]) == c.idempotents[action.act_support(s, x)])
    })
}

/// Outcome of the five support properties of the idempotents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SaliolaReport {
    pub annihilation: bool,
    pub lower_span: bool,
    pub peirce_vanishing: bool,
    pub coefficient_sum: bool,
    pub triangularity: bool,
    pub violations: Vec<String>,
}

impl SaliolaReport {
    pub fn all_pass(&self) -> bool {
        self.annihilation && self.lower_span && self.peirce_vanishing && self.coefficient_sum && self.triangularity
    }
}

/// (i) `bE_X = 0` for `σ(b) ≱ X`; (ii) `E_X ∈ span{σ(b) ≤ X}`;
/// (iii) `E_Y·kB·E_X = 0` for `Y ≱ X`; (iv) support-`X` coefficients of
/// `E_X` sum to 1; (v) `bE_X = b + Σ c_{b'} b'` over `b' < b` when `σ(b) = X`.
pub fn saliola_properties_check<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>) -> SaliolaReport {
    let lrb = alg.lrb();
    let f = alg.field();
    let lat = lrb.lattice();
    let order = lrb.order();
    let m = c.len();
    let n = lrb.size();
    let mut r = SaliolaReport {
        annihilation: true,
        lower_span: true,
        peirce_vanishing: true,
        coefficient_sum: true,
        triangularity: true,
        violations: Vec::new(),
    };
    struct PerSupport<E> {
        annihilation: Vec<usize>,
        triangularity: Vec<usize>,
        fiber_products: Vec<Vector<E>>,
    }
    let per: Vec<PerSupport<F::E>> = (0..m)
        .into_par_iter()
        .map(|x| {
            let mut out = PerSupport { annihilation: Vec::new(), triangularity: Vec::new(), fiber_products: Vec::new() };
            for b in 0..n {
                let p = alg.left_mul(b, &c.idempotents[x]);
                let s = lrb.sigma(b);
                if !lat.leq(x, s) {
                    if !alg.is_zero(&p) {
                        out.annihilation.push(b);
                    }
                } else if s == x {
                    let ok = p.iter().enumerate().all(|(b2, coef)| {
                        if b2 == b {
                            f.is_one(coef)
                        } else {
                            f.is_zero(coef) || order.lt(b2, b)
                        }
                    });
                    if !ok {
                        out.triangularity.push(b);
                    }
                    out.fiber_products.push(p);
                }
            }
            out
        })
        .collect();
    for (x, ps) in per.iter().enumerate() {
        for b in &ps.annihilation {
            r.annihilation = false;
            r.violations.push(format!("(i) b={b} X={x}"));
        }
        for b in &ps.triangularity {
            r.triangularity = false;
            r.violations.push(format!("(v) b={b} X={x}"));
        }
        let e = &c.idempotents[x];
        if alg.supports_of(e).iter().any(|&s| !lat.leq(s, x)) {
            r.lower_span = false;
            r.violations.push(format!("(ii) X={x}"));
        }
        let sum = alg.nonzeros(e).into_iter().filter(|(b, _)| lrb.sigma(*b) == x).fold(f.zero(), |a, (_, v)| f.add(&a, v));
        if !f.is_one(&sum) {
            r.coefficient_sum = false;
            r.violations.push(format!("(iv) X={x}"));
        }
    }
    // (iii): kB·E_X is spanned by the b·E_X with σ(b) = X
    let bad: Vec<(usize, usize)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|x| {
            let basis = alg.span(per[x].fiber_products.iter().cloned()).basis();
            (0..m)
                .filter(|&y| !lat.leq(x, y))
                .filter(|&y| basis.iter().any(|v| !alg.is_zero(&alg.mul(&c.idempotents[y], v))))
                .map(|y| (y, x))
                .collect::<Vec<_>>()
        })
        .collect();
    for (y, x) in bad {
        r.peirce_vanishing = false;
        r.violations.push(format!("(iii) Y={y} X={x}"));
    }
    r
}

/// `{bE_{σ(b)}}` is a basis of `kB`: unitriangular by (v), and (for small
/// algebras) confirmed by an explicit rank.
pub fn basis_property<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>, rank_limit: usize) -> bool {
    let lrb = alg.lrb();
    let f = alg.field();
    let order = lrb.order();
    let vecs: Vec<Vector<F::E>> = (0..lrb.size()).map(|b| alg.left_mul(b, &c.idempotents[lrb.sigma(b)])).collect();
    let triangular = vecs.iter().enumerate().all(|(b, v)| {
        v.iter().enumerate().all(|(b2, x)| if b2 == b { f.is_one(x) } else { f.is_zero(x) || order.lt(b2, b) })
    });
    if !triangular {
        return false;
    }
    if lrb.size() <= rank_limit {
        let mut e = Echelon::new(f.clone(), lrb.size());
        for v in vecs {
            e.insert(v);
        }
        return e.rank() == lrb.size();
    }
    true
}

/// Invariant idempotents `E_[X] = Σ_{X'∈[X]} E_{X'}`, one per support orbit.
pub fn invariant_idempotents<F: Field>(
    alg: &SemigroupAlgebra<F>,
    c: &Cfpoi<F::E>,
    action: &GroupAction,
) -> Result<Vec<Vector<F::E>>> {
    if !c.invariant || !is_invariant(alg, c, action) {
        return Err(LrbError::Precondition("cfpoi is not invariant under the group".into()));
    }
    let f = alg.field();
    let orbits = action.support_orbits();
    let sums: Vec<Vector<F::E>> =
        orbits.iter().map(|o| o.iter().fold(alg.zero(), |acc, &x| alg.add(&acc, &c.idempotents[x]))).collect();
    for (i, (o, e)) in orbits.iter().zip(&sums).enumerate() {
        let th = alg.support_sums(e);
        let lat = alg.lrb().lattice();
        let below = |y: usize| o.iter().any(|&x| lat.leq(y, x));
        for (y, t) in th.iter().enumerate() {
            let ok = if o.contains(&y) { f.is_one(t) } else { below(y) || f.is_zero(t) };
            if !ok {
                return Err(LrbError::Inconsistent(format!("E_[{i}] has the wrong leading coefficients")));
            }
        }
        for &s in action.group().generators() {
            if alg.permute(action.group().element(s), e) != *e {
                return Err(LrbError::Inconsistent(format!("E_[{i}] is not invariant")));
            }
        }
        for (j, e2) in sums.iter().enumerate() {
            let p = alg.mul(e, e2);
            let ok = if i == j { p == *e } else { alg.is_zero(&p) };
            if !ok {
                return Err(LrbError::Inconsistent(format!("E_[{i}] E_[{j}] fails orthogonal idempotence")));
            }
        }
    }
    let total = sums.iter().fold(alg.zero(), |acc, e| alg.add(&acc, e));
    if total != c.unit {
        return Err(LrbError::Inconsistent("invariant idempotents do not sum to 1".into()));
    }
    Ok(sums)
}

/// Orbit sums `Σ_{b∈O} b` spanning `(kB)^G`, in orbit order.
pub fn orbit_sums<F: Field>(alg: &SemigroupAlgebra<F>, action: &GroupAction) -> Vec<Vector<F::E>> {
    action.element_orbits().iter().map(|o| alg.sum_of(o)).collect()
}

/// `dim E_[X]·(kB)^G·E_[X]`, which is 1 exactly when `E_[X]` is primitive in `(kB)^G`.
pub fn local_ring_dimension<F: Field>(alg: &SemigroupAlgebra<F>, e: &[F::E], action: &GroupAction) -> usize {
    let vs = orbit_sums(alg, action).into_iter().map(|o| alg.mul(&alg.mul(e, &o), e));
    alg.span(vs).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::lrb::Lrb;
    use crate::rational::Q;

    #[test]
    fn two_chain() {
        let l = Lrb::from_table(vec![vec![0, 0], vec![0, 1]]).unwrap();
        let a = SemigroupAlgebra::new(&l, Rationals);
        let c = build_cfpoi(&a, trivial_seeds(&a, SeedPolicy::Min), None).unwrap();
        assert_eq!(c.idempotents[0], vec![Q::one(), Q::zero()]);
        assert_eq!(c.idempotents[1], vec![Q::from_int(-1), Q::one()]);
        assert!(saliola_properties_check(&a, &c).all_pass());
        assert!(basis_property(&a, &c, 100));
    }

    #[test]
    fn single_element() {
        let l = Lrb::from_table(vec![vec![0]]).unwrap();
        let a = SemigroupAlgebra::new(&l, Rationals);
        let c = build_cfpoi(&a, trivial_seeds(&a, SeedPolicy::Min), None).unwrap();
        assert_eq!(c.idempotents[0], vec![Q::one()]);
    }
}
