//! Derangement numbers of geometric lattices and derangement representations.

use serde::Serialize;

use crate::algebra::cfpoi::{build_cfpoi, trivial_seeds, SeedPolicy};
use crate::algebra::kb::SemigroupAlgebra;
use crate::algebra::peirce::{peirce_component_with_character, peirce_space};
use crate::analysis::invariant_cfpoi;
use crate::constructions::flags::FlagLrb;
use crate::constructions::lattice::GeometricLattice;
use crate::error::{LrbError, Result};
use crate::field::Rationals;
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::lrb::Lrb;

/// `d_{[X,1̂]}` for every flat, from `Σ_{Z ≥ X} d_{[Z,1̂]} = #F([X,1̂])`.
pub fn derangement_recursive(l: &GeometricLattice) -> Vec<i64> {
    let flags = l.complete_flag_counts();
    let mut order: Vec<usize> = (0..l.size()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.rank(x)));
    let mut d = vec![0i64; l.size()];
    for x in order {
        let above: i64 = (0..l.size()).filter(|&z| z != x && l.leq(x, z)).map(|z| d[z]).sum();
        d[x] = flags[x] as i64 - above;
    }
    d
}

/// `Σ_X μ(0̂, X)·#F([X, 1̂])`.
pub fn derangement_mobius(l: &GeometricLattice) -> Result<i64> {
    let flags = l.complete_flag_counts();
    let p = l.poset();
    let mut total = 0i64;
    for x in 0..l.size() {
        total += p.mobius(l.bottom(), x)? * flags[x] as i64;
    }
    Ok(total)
}

/// `Σ` over chains `0̂ = X_0 < … < X_m = 1̂` of `Π (a(X_i, X_{i+1}) − 1)`.
pub fn derangement_positive(l: &GeometricLattice) -> i64 {
    let mut order: Vec<usize> = (0..l.size()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.rank(x)));
    let top = l.top();
    let mut p = vec![0i64; l.size()];
    for x in order {
        p[x] = if x == top {
            1
        } else {
            (0..l.size())
                .filter(|&z| z != x && l.leq(x, z))
                .map(|z| (l.interval_atom_count(x, z) as i64 - 1) * p[z])
                .sum()
        };
    }
    p[l.bottom()]
}

/// `|S(ℒ)|`: saturated chains starting at `0̂`.
pub fn flag_count(l: &GeometricLattice) -> u64 {
    let mut order: Vec<usize> = (0..l.size()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.rank(x)));
    let mut n = vec![0u64; l.size()];
    for x in order {
        n[x] = 1 + l.upper_covers(x).into_iter().map(|z| n[z]).sum::<u64>();
    }
    n[l.bottom()]
}

#[derive(Clone, Debug, Serialize)]
pub struct DerangementReport {
    pub recursive: i64,
    pub mobius: i64,
    pub positive: i64,
    /// `dim E_top·kS(ℒ)·E_bottom`, when computed.
    pub peirce: Option<i64>,
    pub agree: bool,
}

/// All formulas, plus the Peirce dimension when `S(ℒ)` has at most
/// `peirce_limit` elements.
pub fn derangement_number(l: &GeometricLattice, peirce_limit: usize) -> Result<DerangementReport> {
    let recursive = derangement_recursive(l)[l.bottom()];
    let mobius = derangement_mobius(l)?;
    let positive = derangement_positive(l);
    let mut peirce = None;
    if flag_count(l) <= peirce_limit as u64 {
        let lrb = Lrb::new(FlagLrb::new(l.clone())?.into_semigroup())?;
        peirce = Some(derangement_dimension(&lrb)?);
    }
    let agree = recursive == mobius && mobius == positive && peirce.is_none_or(|p| p == positive);
    if !agree {
        return Err(LrbError::Inconsistent(format!(
            "derangement formulas disagree: {recursive}, {mobius}, {positive}, {peirce:?}"
        )));
    }
    Ok(DerangementReport { recursive, mobius, positive, peirce, agree })
}

fn der_supports(lrb: &Lrb) -> Result<(usize, usize)> {
    let top = lrb.lattice().max.ok_or_else(|| LrbError::Precondition("LRB has no identity support".into()))?;
    Ok((top, lrb.lattice().min))
}

/// `dim E_top·kB·E_bottom` with the trivial-group cfpoi.
pub fn derangement_dimension(lrb: &Lrb) -> Result<i64> {
    let alg = SemigroupAlgebra::new(lrb, Rationals);
    let c = build_cfpoi(&alg, trivial_seeds(&alg, SeedPolicy::Min), None)?;
    let (top, bottom) = der_supports(lrb)?;
    Ok(peirce_space(&alg, &c, top, bottom).rank() as i64)
}

/// The `G`-character of `E_top·kB·E_bottom`.
pub fn derangement_character(lrb: &Lrb, action: &GroupAction) -> Result<ClassFunction> {
    let alg = SemigroupAlgebra::new(lrb, Rationals);
    let c = invariant_cfpoi(&alg, action, SeedPolicy::Min)?;
    let (top, bottom) = der_supports(lrb)?;
    Ok(peirce_component_with_character(&alg, &c, action, top, bottom)?.character.unwrap())
}
