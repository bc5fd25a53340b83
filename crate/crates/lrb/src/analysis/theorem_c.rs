//! `E_Y·kB·E_X ≅ deg(X) ⊗ H̃^{k−2}((X, Y)) ⊗ deg(Y)` for CW LRBs.

use rayon::prelude::*;

use crate::algebra::cfpoi::Cfpoi;
use crate::algebra::kb::SemigroupAlgebra;
use crate::algebra::peirce::peirce_component_with_character;
use crate::analysis::chains::support_image;
use crate::analysis::verdict::Verdict;
use crate::error::{LrbError, Result};
use crate::field::Rationals;
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::rational::Q;
use crate::topology::complex::interval_homology;
use crate::topology::cw::is_cw_lrb;
use crate::topology::star::degree_character;

/// The right-hand side for one pair, on `G_X ∩ G_Y`.
pub fn topological_side(lrb: &crate::lrb::Lrb, action: &GroupAction, degrees: &[ClassFunction], x: usize, y: usize) -> Result<ClassFunction> {
    let lat = lrb.lattice();
    let ranks = lat.rank.as_ref().ok_or_else(|| LrbError::Precondition("support lattice is not graded".into()))?;
    let h = action.stabilizer_of(&[x, y]);
    let hom = interval_homology(&lat.order, x, y, &h, |g, z| support_image(lrb, h.element(g), z))?;
    let k = ranks[y] as i64 - ranks[x] as i64;
    let coh = hom.cohomology_character(k - 2, &h);
    degrees[x].restrict(&h)?.tensor(&coh)?.tensor(&degrees[y].restrict(&h)?)
}

/// `deg(X)` on `G_X` for every support.
pub fn all_degrees(lrb: &crate::lrb::Lrb, action: &GroupAction) -> Result<Vec<ClassFunction>> {
    (0..lrb.num_supports()).into_par_iter().map(|x| degree_character(lrb, x, &action.stabilizer(x))).collect()
}

/// One verdict per comparable pair `X ≤ Y`.
pub fn theorem_c_check(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    instance: &str,
) -> Result<Vec<Verdict>> {
    let lrb = alg.lrb();
    let cw = is_cw_lrb(lrb);
    if !cw.is_cw {
        return Err(LrbError::Precondition(format!("not a CW LRB (lower set of {:?})", cw.witness)));
    }
    let lat = lrb.lattice();
    let degrees = all_degrees(lrb, action)?;
    let m = lrb.num_supports();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&(x, y)| lat.leq(x, y)).collect();
    pairs
        .into_par_iter()
        .map(|(x, y)| {
            let lhs = peirce_component_with_character(alg, c, action, y, x)?.character.unwrap();
            let rhs = topological_side(lrb, action, &degrees, x, y)?;
            let claim = format!("CW Peirce character ({}, {})", lrb.support_label(y), lrb.support_label(x));
            Ok(Verdict::compare(claim, instance, &lhs, &rhs))
        })
        .collect()
}
