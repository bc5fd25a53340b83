//! Peirce components `E_Y·kB·E_X`, their characters, and Cartan invariants.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::cfpoi::{orbit_sums, Cfpoi};
use crate::algebra::kb::{trace_on, SemigroupAlgebra, Vector};
use crate::error::{LrbError, Result};
use crate::field::{Field, Rationals};
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::group::perm::PermGroup;
use crate::linalg::Echelon;
use crate::rational::Q;

/// `span{left·b·right : b ∈ B}` restricted to the `b` that can contribute.
pub fn sandwich_space<F: Field>(
    alg: &SemigroupAlgebra<F>,
    left: &[F::E],
    right: &[F::E],
    elements: impl IntoIterator<Item = usize>,
) -> Echelon<F> {
    let mut e = Echelon::new(alg.field().clone(), alg.dim());
    for b in elements {
        let br = alg.left_mul(b, right);
        if alg.is_zero(&br) {
            continue;
        }
        let v = alg.mul(left, &br);
        if !alg.is_zero(&v) {
            e.insert(v);
        }
    }
    e
}

/// `E_Y·kB·E_X`, spanned by `E_Y·b·E_X` over `σ(b) ≥ X`.
pub fn peirce_space<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>, y: usize, x: usize) -> Echelon<F> {
    let lrb = alg.lrb();
    let lat = lrb.lattice();
    if x == lat.min {
        // kB·E_min is spanned by the minimal elements themselves
        return sandwich_space(alg, &c.idempotents[y], &c.idempotents[x], lrb.fiber(x).to_vec());
    }
    sandwich_space(alg, &c.idempotents[y], &c.idempotents[x], (0..lrb.size()).filter(|&b| lat.leq(x, lrb.sigma(b))))
}

/// A Peirce component with its basis and, optionally, its character.
#[derive(Clone, Debug)]
pub struct PeirceComponent<E> {
    pub y: usize,
    pub x: usize,
    pub dimension: usize,
    pub basis: Vec<Vector<E>>,
    pub character: Option<ClassFunction>,
}

pub fn peirce_component<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>, y: usize, x: usize) -> PeirceComponent<F::E> {
    let sp = peirce_space(alg, c, y, x);
    PeirceComponent { y, x, dimension: sp.rank(), basis: sp.basis(), character: None }
}

/// Character of a subgroup of `Aut(B)` on a stable subspace of `kB`.
pub fn character_on_subspace(
    alg: &SemigroupAlgebra<Rationals>,
    space: &Echelon<Rationals>,
    group: &Arc<PermGroup>,
) -> Result<ClassFunction> {
    let mut values = Vec::with_capacity(group.num_classes());
    for cl in 0..group.num_classes() {
        let perm = group.element(group.class_rep(cl));
        let t = trace_on(space, |v| alg.permute(perm, v))
            .ok_or_else(|| LrbError::Inconsistent("subspace is not stable under the group".into()))?;
        values.push(integer(&t)?);
    }
    Ok(ClassFunction::from_int_fn(group, {
        let group = group.clone();
        move |g| values[group.class_of(g)]
    }))
}

fn integer(q: &Q) -> Result<i64> {
    q.to_i64().filter(|_| q.is_integer()).ok_or_else(|| LrbError::Inconsistent(format!("trace {q} is not an integer")))
}

/// `E_Y·kB·E_X` with its `G_X∩G_Y`-character (needs an invariant cfpoi).
pub fn peirce_component_with_character(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    y: usize,
    x: usize,
) -> Result<PeirceComponent<Q>> {
    if !c.invariant {
        return Err(LrbError::Precondition("characters need an invariant cfpoi".into()));
    }
    let sp = peirce_space(alg, c, y, x);
    let h = action.stabilizer_of(&[x, y]);
    let character = character_on_subspace(alg, &sp, &h)?;
    Ok(PeirceComponent { y, x, dimension: sp.rank(), basis: sp.basis(), character: Some(character) })
}

/// Representatives of the `G`-orbits of comparable pairs `X' ≤ Y'` with
/// `X' ∈ [X]`, `Y' ∈ [Y]`, as `(X', Y')`.
pub fn comparable_pair_orbits(action: &GroupAction, lrb: &crate::lrb::Lrb, ox: &[usize], oy: &[usize]) -> Vec<(usize, usize)> {
    let lat = lrb.lattice();
    let mut reps = Vec::new();
    for &x in ox {
        for &y in oy {
            if !lat.leq(x, y) {
                continue;
            }
            let canon = (0..action.order()).map(|g| (action.act_support(g, x), action.act_support(g, y))).min().unwrap();
            if canon == (x, y) {
                reps.push((x, y));
            }
        }
    }
    reps
}

/// Both computations of the `G`-character of `E_[Y]·kB·E_[X]`.
#[derive(Clone, Debug)]
pub struct InvariantPeirce {
    pub orbit_y: usize,
    pub orbit_x: usize,
    pub dimension: usize,
    pub direct: ClassFunction,
    pub structural: ClassFunction,
}

/// Direct trace on `E_[Y]·kB·E_[X]`, and `⊕ Ind_{G_{X'}∩G_{Y'}}^G E_{Y'}·kB·E_{X'}`
/// over orbits of comparable pairs; the two must agree.
pub fn invariant_peirce_component(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    inv: &[Vector<Q>],
    orbit_y: usize,
    orbit_x: usize,
) -> Result<InvariantPeirce> {
    let lrb = alg.lrb();
    let orbits = action.support_orbits();
    let g = action.group();
    let sp = if orbits[orbit_x] == [lrb.lattice().min] {
        sandwich_space(alg, &inv[orbit_y], &inv[orbit_x], lrb.fiber(lrb.lattice().min).to_vec())
    } else {
        sandwich_space(alg, &inv[orbit_y], &inv[orbit_x], 0..lrb.size())
    };
    let direct = character_on_subspace(alg, &sp, g)?;
    let mut structural = ClassFunction::zero(g);
    for (x, y) in comparable_pair_orbits(action, lrb, &orbits[orbit_x], &orbits[orbit_y]) {
        let pc = peirce_component_with_character(alg, c, action, y, x)?;
        structural = structural.add(&pc.character.unwrap().induce(g)?)?;
    }
    if direct != structural {
        return Err(LrbError::Inconsistent(format!(
            "invariant Peirce component ([{orbit_y}],[{orbit_x}]): direct {} vs structural {}",
            direct.render(),
            structural.render()
        )));
    }
    Ok(InvariantPeirce { orbit_y, orbit_x, dimension: sp.rank(), direct, structural })
}

/// Cartan matrix rows `M_[Y]`, columns `P_[X]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

/// `dim E_[Y]·(kB)^G·E_[X]` on the orbit-sum basis; any characteristic.
pub fn invariant_cartan_dims<F: Field>(alg: &SemigroupAlgebra<F>, inv: &[Vector<F::E>], action: &GroupAction) -> Vec<Vec<i64>> {
    let sums = orbit_sums(alg, action);
    let k = inv.len();
    (0..k)
        .into_par_iter()
        .map(|y| {
            (0..k)
                .map(|x| {
                    let vs = sums.iter().map(|o| alg.mul(&alg.mul(&inv[y], o), &inv[x]));
                    alg.span(vs).rank() as i64
                })
                .collect()
        })
        .collect()
}

/// `[P_{[X]} : M_{[Y]}] = ⟨1, E_[Y]·kB·E_[X]⟩_G`, cross-checked against the
/// direct dimension on `(kB)^G` and against the structural decomposition.
pub fn cartan_invariants(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    inv: &[Vector<Q>],
) -> Result<CartanMatrix> {
    let k = inv.len();
    let g = action.group();
    let trivial = ClassFunction::trivial(g);
    let rows: Vec<Result<Vec<i64>>> = (0..k)
        .into_par_iter()
        .map(|y| {
            (0..k)
                .map(|x| {
                    let ip = invariant_peirce_component(alg, c, action, inv, y, x)?;
                    ip.direct.multiplicity(&trivial)
                })
                .collect()
        })
        .collect();
    let entries: Vec<Vec<i64>> = rows.into_iter().collect::<Result<_>>()?;
    let dims = invariant_cartan_dims(alg, inv, action);
    if dims != entries {
        return Err(LrbError::Inconsistent(format!("Cartan via characters {entries:?} vs direct {dims:?}")));
    }
    let orbit_poset = action.orbit_poset(alg.lrb())?;
    for (y, row) in entries.iter().enumerate() {
        for (x, &v) in row.iter().enumerate() {
            if v < 0 || (v != 0 && !orbit_poset.leq(x, y)) {
                return Err(LrbError::Inconsistent(format!("Cartan entry ({y},{x}) = {v}")));
            }
        }
    }
    let labels = action.support_orbits().iter().map(|o| alg.lrb().support_label(o[0])).collect();
    Ok(CartanMatrix { labels, entries })
}

/// `dim E_Y·kB·E_X` for every pair of supports (rows `Y`, columns `X`).
pub fn peirce_dimensions<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>) -> Vec<Vec<usize>> {
    let lat = alg.lrb().lattice();
    let m = c.len();
    (0..m)
        .into_par_iter()
        .map(|y| (0..m).map(|x| if lat.leq(x, y) { peirce_space(alg, c, y, x).rank() } else { 0 }).collect())
        .collect()
}
