//! CW and Cohen-Macaulay checks by homology spheres.

use serde::Serialize;

use crate::field::Rationals;
use crate::lrb::Lrb;
use crate::topology::complex::OrderComplex;

/// Outcome of the CW test. The test is a proxy: every `(S_{≥X})^{<y}` must
/// have the rational homology of a sphere of dimension (longest chain − 1),
/// and integer boundary maps in the top two degrees must have unit
/// invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwReport {
    pub is_cw: bool,
    /// A failing `(X, y)`.
    pub witness: Option<(usize, usize)>,
    pub lower_sets_checked: usize,
}

fn is_homology_sphere(cx: &OrderComplex) -> bool {
    let top = cx.top_degree();
    let h = cx.reduced_homology(&Rationals);
    let rational = h.iter().enumerate().all(|(i, &v)| v == usize::from(i as i64 - 1 == top));
    rational && cx.torsion_free_at(&[top, top - 1])
}

pub fn is_cw_lrb(lrb: &Lrb) -> CwReport {
    let mut jobs: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for x in 0..lrb.num_supports() {
        for y in lrb.contraction_elements(x) {
            jobs.push((x, y, lrb.strict_lower(y, Some(x))));
        }
    }
    jobs.sort_by_key(|(x, y, l)| (l.len(), *x, *y));
    let mut seen = std::collections::HashSet::new();
    let mut checked = 0;
    for (x, y, lower) in jobs {
        if !seen.insert(lower.clone()) {
            continue;
        }
        checked += 1;
        let cx = OrderComplex::of_poset(lrb.order(), &lower);
        if !is_homology_sphere(&cx) {
            return CwReport { is_cw: false, witness: Some((x, y)), lower_sets_checked: checked };
        }
    }
    CwReport { is_cw: true, witness: None, lower_sets_checked: checked }
}

/// Open intervals of `Λ(B)` whose rational homology is not concentrated in
/// the top degree.
pub fn non_cohen_macaulay_intervals(lrb: &Lrb) -> Vec<(usize, usize)> {
    let lat = lrb.lattice();
    let mut bad = Vec::new();
    for x in 0..lrb.num_supports() {
        for y in 0..lrb.num_supports() {
            if !lat.lt(x, y) {
                continue;
            }
            let cx = OrderComplex::of_poset(&lat.order, &lat.order.open_interval(x, y));
            let top = cx.top_degree();
            let h = cx.reduced_homology(&Rationals);
            if h.iter().enumerate().any(|(i, &v)| v > 0 && i as i64 - 1 != top) {
                bad.push((x, y));
            }
        }
    }
    bad
}
