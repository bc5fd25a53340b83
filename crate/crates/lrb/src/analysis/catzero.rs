//! Cartan invariants of CAT(0) cube LRBs as counts of orbits of comparable pairs.

use serde::Serialize;

use crate::algebra::cfpoi::Cfpoi;
use crate::algebra::kb::{SemigroupAlgebra, Vector};
use crate::algebra::peirce::{cartan_invariants, comparable_pair_orbits, peirce_component_with_character, CartanMatrix};
use crate::analysis::theorem_c::theorem_c_check;
use crate::analysis::verdict::{all_pass, Verdict};
use crate::error::Result;
use crate::field::Rationals;
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::lrb::Lrb;
use crate::rational::Q;

#[derive(Clone, Debug, Serialize)]
pub struct CatZeroReport {
    pub strongly_simplicial: bool,
    /// Cubes fixed by all of `G` but not fixed pointwise.
    pub violations: Vec<String>,
    /// Every `E_{Y'}·kB·E_{X'}` is the trivial `G_{X'}∩G_{Y'}`-character.
    pub pair_components_trivial: Option<bool>,
    pub orbit_counts: Vec<Vec<i64>>,
    pub cartan: CartanMatrix,
    pub counts_match_cartan: bool,
    /// Per-pair CW checks, used when strong simpliciality fails.
    pub fallback: Option<Vec<Verdict>>,
    pub pass: bool,
}

/// `G`-fixed cubes some of whose vertices (minimal elements below them) move.
pub fn strong_simpliciality_violations(lrb: &Lrb, action: &GroupAction) -> Vec<usize> {
    let ord = lrb.order();
    let vertices = lrb.fiber(lrb.lattice().min);
    let n = action.order();
    (0..lrb.size())
        .filter(|&b| (0..n).all(|g| action.act(g, b) == b))
        .filter(|&b| vertices.iter().any(|&v| ord.leq(v, b) && (0..n).any(|g| action.act(g, v) != v)))
        .collect()
}

pub fn catzero_report(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    inv: &[Vector<Q>],
    instance: &str,
) -> Result<CatZeroReport> {
    let lrb = alg.lrb();
    let bad = strong_simpliciality_violations(lrb, action);
    let violations: Vec<String> = bad.iter().map(|&b| lrb.semigroup().label(b)).collect();
    let orbits = action.support_orbits();
    let k = orbits.len();
    let mut orbit_counts = vec![vec![0i64; k]; k];
    let mut reps = Vec::new();
    for (oy, row) in orbit_counts.iter_mut().enumerate() {
        for (ox, entry) in row.iter_mut().enumerate() {
            let pairs = comparable_pair_orbits(action, lrb, &orbits[ox], &orbits[oy]);
            *entry = pairs.len() as i64;
            reps.extend(pairs);
        }
    }
    let cartan = cartan_invariants(alg, c, action, inv)?;
    let counts_match_cartan = cartan.entries == orbit_counts;
    if !bad.is_empty() {
        let vs = theorem_c_check(alg, c, action, instance)?;
        let pass = all_pass(&vs);
        return Ok(CatZeroReport {
            strongly_simplicial: false,
            violations,
            pair_components_trivial: None,
            orbit_counts,
            cartan,
            counts_match_cartan,
            fallback: Some(vs),
            pass,
        });
    }
    let mut trivial = true;
    for (x, y) in reps {
        let chi = peirce_component_with_character(alg, c, action, y, x)?.character.unwrap();
        if chi != ClassFunction::trivial(chi.group()) {
            trivial = false;
        }
    }
    Ok(CatZeroReport {
        strongly_simplicial: true,
        violations,
        pair_components_trivial: Some(trivial),
        orbit_counts,
        cartan,
        counts_match_cartan,
        fallback: None,
        pass: trivial && counts_match_cartan,
    })
}
