//! Strict chains in a poset and their orbits under a group.

use crate::lrb::Lrb;
use crate::poset::FinitePoset;

/// All chains `x = x_0 < x_1 < … < x_m = y`; `[x]` when `x == y`.
pub fn strict_chains(p: &FinitePoset, x: usize, y: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if !p.leq(x, y) {
        return out;
    }
    let mut cur = vec![x];
    extend(p, y, &mut cur, &mut out);
    out
}

fn extend(p: &FinitePoset, y: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *cur.last().unwrap();
    if last == y {
        out.push(cur.clone());
        return;
    }
    for z in 0..p.size() {
        if p.lt(last, z) && p.leq(z, y) {
            cur.push(z);
            extend(p, y, cur, out);
            cur.pop();
        }
    }
}

/// Canonical-minimum representatives of the orbits of `chains` under
/// `act(g, point)` for `g < order`.
pub fn orbit_representatives(chains: Vec<Vec<usize>>, order: usize, act: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    chains
        .into_iter()
        .filter(|ch| (0..order).all(|g| ch.iter().map(|&z| act(g, z)).collect::<Vec<_>>() >= *ch))
        .collect()
}

/// The support permutation induced by a permutation of `B`.
pub fn support_image(lrb: &Lrb, perm: &[u32], x: usize) -> usize {
    lrb.sigma(perm[lrb.fiber(x)[0]] as usize)
}
