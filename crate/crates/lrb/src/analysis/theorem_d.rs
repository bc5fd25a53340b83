//! Peirce characters of hereditary LRBs as sums over chains of induced
//! products of `H̃_0` characters, checked layer by layer in the radical
//! filtration.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::cfpoi::Cfpoi;
use crate::algebra::kb::SemigroupAlgebra;
use crate::algebra::peirce::{character_on_subspace, peirce_space};
use crate::algebra::radical::{radical_filtration, RadicalFiltration};
use crate::analysis::chains::{orbit_representatives, strict_chains, support_image};
use crate::analysis::verdict::Verdict;
use crate::error::{LrbError, Result};
use crate::field::Rationals;
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::group::perm::PermGroup;
use crate::linalg::Echelon;
use crate::lrb::Lrb;
use crate::rational::Q;
use crate::topology::star::h0_tilde_character;

/// `Ind_K^H ⊠_i H̃_0(B̃^{<b_{X_i}}_{≥X_{i−1}})` for one chain, `K` its stabilizer.
pub fn chain_term(lrb: &Lrb, action: &GroupAction, chain: &[usize], h: &Arc<PermGroup>) -> Result<ClassFunction> {
    let k = action.stabilizer_of(chain);
    let mut chi = ClassFunction::trivial(&k);
    for w in chain.windows(2) {
        let b = lrb.fiber(w[1])[0];
        chi = chi.tensor(&h0_tilde_character(lrb, w[0], b, &k)?)?;
    }
    chi.induce(h)
}

/// Sum of the chain terms of each length `m` over `H`-orbits of chains `X → Y`.
pub fn chain_side(lrb: &Lrb, action: &GroupAction, x: usize, y: usize) -> Result<Vec<ClassFunction>> {
    let lat = lrb.lattice();
    let h = action.stabilizer_of(&[x, y]);
    let chains = strict_chains(&lat.order, x, y);
    let reps = orbit_representatives(chains, h.order(), |g, z| support_image(lrb, h.element(g), z));
    let longest = reps.iter().map(|c| c.len() - 1).max().unwrap_or(0);
    let mut by_len = vec![ClassFunction::zero(&h); longest + 1];
    for ch in reps {
        let t = chain_term(lrb, action, &ch, &h)?;
        let m = ch.len() - 1;
        by_len[m] = by_len[m].add(&t)?;
    }
    Ok(by_len)
}

/// `E_Y·rad^m·E_X`.
fn sandwich_power(alg: &SemigroupAlgebra<Rationals>, c: &Cfpoi<Q>, filt: &RadicalFiltration<Rationals>, y: usize, x: usize, m: usize) -> Echelon<Rationals> {
    match filt.power(m) {
        None if m == 0 => peirce_space(alg, c, y, x),
        None => Echelon::new(Rationals, alg.dim()),
        Some(rad) => {
            let mut e = Echelon::new(Rationals, alg.dim());
            for i in 0..rad.rank() {
                let v = alg.mul(&alg.mul(&c.idempotents[y], &rad.row(i)), &c.idempotents[x]);
                if !alg.is_zero(&v) {
                    e.insert(v);
                }
            }
            e
        }
    }
}

/// Per pair: the total character, then each radical layer
/// `E_Y·rad^m·E_X / E_Y·rad^{m+1}·E_X` against the chains of length `m`.
pub fn theorem_d_check(
    alg: &SemigroupAlgebra<Rationals>,
    c: &Cfpoi<Q>,
    action: &GroupAction,
    instance: &str,
) -> Result<Vec<Verdict>> {
    let lrb = alg.lrb();
    if !lrb.is_hereditary_tree() {
        return Err(LrbError::Precondition("LRB is not hereditary".into()));
    }
    if !c.invariant {
        return Err(LrbError::Precondition("characters need an invariant cfpoi".into()));
    }
    let filt = radical_filtration(alg)?;
    let lat = lrb.lattice();
    let m = lrb.num_supports();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&(x, y)| lat.leq(x, y)).collect();
    let per_pair: Vec<Result<Vec<Verdict>>> = pairs
        .into_par_iter()
        .map(|(x, y)| {
            let h = action.stabilizer_of(&[x, y]);
            let rhs = chain_side(lrb, action, x, y)?;
            let layers = filt.powers.len() + 1;
            let mut chars = Vec::with_capacity(layers + 1);
            for k in 0..=layers {
                chars.push(character_on_subspace(alg, &sandwich_power(alg, c, &filt, y, x, k), &h)?);
            }
            let label = format!("({}, {})", lrb.support_label(y), lrb.support_label(x));
            let total_rhs = rhs.iter().try_fold(ClassFunction::zero(&h), |acc, t| acc.add(t))?;
            let mut out = vec![Verdict::compare(format!("hereditary Peirce character {label}"), instance, &chars[0], &total_rhs)];
            for k in 0..layers.max(rhs.len()) {
                let lhs = if k < layers { chars[k].sub(&chars[k + 1])? } else { ClassFunction::zero(&h) };
                let r = rhs.get(k).cloned().unwrap_or_else(|| ClassFunction::zero(&h));
                out.push(Verdict::compare(format!("radical layer {k} of {label}"), instance, &lhs, &r));
            }
            Ok(out)
        })
        .collect();
    Ok(per_pair.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}
