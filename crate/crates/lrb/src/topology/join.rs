//! Homology of ordinal sums (joins of order complexes).

use serde::Serialize;

use crate::field::Rationals;
use crate::poset::FinitePoset;
use crate::topology::complex::OrderComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinReport {
    /// `dim H̃_q(P∗Q)` for `q = −1..`.
    pub join: Vec<usize>,
    /// `Σ_{i+j=q−1} dim H̃_i(P)·dim H̃_j(Q)`.
    pub predicted: Vec<usize>,
    pub pass: bool,
}

fn homology(p: &FinitePoset) -> Vec<usize> {
    let all: Vec<usize> = (0..p.size()).collect();
    OrderComplex::of_poset(p, &all).reduced_homology(&Rationals)
}

pub fn join_homology_check(p: &FinitePoset, q: &FinitePoset) -> JoinReport {
    let hp = homology(p);
    let hq = homology(q);
    let join = homology(&p.join(q));
    let len = join.len().max(hp.len() + hq.len());
    let mut predicted = vec![0usize; len];
    // slot s ↔ degree s − 1; degrees i + j = q − 1 give slot (i+1)+(j+1)
    for (a, &u) in hp.iter().enumerate() {
        for (b, &v) in hq.iter().enumerate() {
            if a + b < len {
                predicted[a + b] += u * v;
            }
        }
    }
    let mut join_padded = join.clone();
    join_padded.resize(len, 0);
    let pass = join_padded == predicted;
    JoinReport { join, predicted, pass }
}
