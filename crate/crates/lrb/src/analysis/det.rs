//! Rank-2 arrangements: the determinant twists against the degree twists.

use crate::algebra::cfpoi::Cfpoi;
use crate::algebra::kb::SemigroupAlgebra;
use crate::algebra::peirce::peirce_component_with_character;
use crate::analysis::chains::support_image;
use crate::analysis::theorem_c::all_degrees;
use crate::analysis::verdict::Verdict;
use crate::constructions::arrangement::Rank2Arrangement;
use crate::error::{LrbError, Result};
use crate::field::Rationals;
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::rational::Q;
use crate::topology::complex::interval_homology;

/// `det` on the span of support `x`, as a `G_X`-character.
fn det_character(arr: &Rank2Arrangement, lrb: &crate::lrb::Lrb, action: &GroupAction, x: usize) -> ClassFunction {
    let h = action.stabilizer(x);
    let face = lrb.fiber(x)[0];
    ClassFunction::from_int_fn(&h, |k| {
        let p: Vec<usize> = h.element(k).iter().map(|&v| v as usize).collect();
        arr.det_on_span(face, &p)
    })
}

/// Per support: `deg(X) = det(X) ⊗ det(V)`; per pair: the Peirce character
/// against `det(X) ⊗ H̃^{k−2}((X, Y)) ⊗ det(Y)`.
pub fn arrangement_det_vs_deg_check(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    arr: Option<&Rank2Arrangement>,
    instance: &str,
) -> Result<Vec<Verdict>> {
    let arr = arr.ok_or_else(|| LrbError::Precondition("no determinant data for this instance".into()))?;
    let lrb = alg.lrb();
    let lat = lrb.lattice();
    let ranks = lat.rank.as_ref().ok_or_else(|| LrbError::Precondition("support lattice is not graded".into()))?;
    let degrees = all_degrees(lrb, action)?;
    let m = lrb.num_supports();
    let dets: Vec<ClassFunction> = (0..m).map(|x| det_character(arr, lrb, action, x)).collect();
    let mut out = Vec::new();
    for x in 0..m {
        let h = action.stabilizer(x);
        let det_v = ClassFunction::from_int_fn(&h, |k| {
            let p: Vec<usize> = h.element(k).iter().map(|&v| v as usize).collect();
            if arr.is_rotation(&p) {
                1
            } else {
                -1
            }
        });
        let rhs = dets[x].tensor(&det_v)?;
        out.push(Verdict::compare(format!("degree of {} is det ⊗ det(V)", lrb.support_label(x)), instance, &degrees[x], &rhs));
    }
    for x in 0..m {
        for y in 0..m {
            if !lat.leq(x, y) {
                continue;
            }
            let h = action.stabilizer_of(&[x, y]);
            let lhs = peirce_component_with_character(alg, c, action, y, x)?.character.unwrap();
            let hom = interval_homology(&lat.order, x, y, &h, |g, z| support_image(lrb, h.element(g), z))?;
            let k = ranks[y] as i64 - ranks[x] as i64;
            let rhs = dets[x].restrict(&h)?.tensor(&hom.cohomology_character(k - 2, &h))?.tensor(&dets[y].restrict(&h)?)?;
            let claim = format!("det-twisted Peirce character ({}, {})", lrb.support_label(y), lrb.support_label(x));
            out.push(Verdict::compare(claim, instance, &lhs, &rhs));
        }
    }
    Ok(out)
}
