//! The posets `B̃^{<y}_{≥X}` with the twisted action `g∗x = y·g(x)`, degree
//! characters, and `H̃_0` characters from connected components.

use std::sync::Arc;

use crate::error::{LrbError, Result};
use crate::group::classfn::ClassFunction;
use crate::group::perm::PermGroup;
use crate::lrb::Lrb;
use crate::topology::complex::{equivariant_homology, EquivariantHomology, OrderComplex};

/// `{x < y : σ(x) ≥ X}` in the semigroup order, with `H ≤ G_{σ(y)}` acting by `∗`.
#[derive(Clone, Debug)]
pub struct StarPoset {
    pub y: usize,
    pub lower: Option<usize>,
    pub elements: Vec<usize>,
    pub group: Arc<PermGroup>,
}

impl StarPoset {
    pub fn star(&self, lrb: &Lrb, g: usize, x: usize) -> usize {
        lrb.mul(self.y, self.group.act(g, x))
    }

    pub fn complex(&self, lrb: &Lrb) -> OrderComplex {
        OrderComplex::of_poset(lrb.order(), &self.elements)
    }
}

/// Build `B̃^{<y}` (or `B̃^{<y}_{≥X}`), checking that `∗` is an action of `H`
/// by order automorphisms.
pub fn star_action_poset(lrb: &Lrb, y: usize, lower: Option<usize>, h: &Arc<PermGroup>) -> Result<StarPoset> {
    let sy = lrb.sigma(y);
    let lat = lrb.lattice();
    for &g in h.generators() {
        if lrb.sigma(h.act(g, y)) != sy {
            return Err(LrbError::Precondition("the group does not stabilize the support of y".into()));
        }
    }
    let ord = lrb.order();
    let elements: Vec<usize> = (0..lrb.size())
        .filter(|&x| x != y && ord.leq(x, y) && lower.is_none_or(|xs| lat.leq(xs, lrb.sigma(x))))
        .collect();
    let sp = StarPoset { y, lower, elements, group: h.clone() };
    let inset: std::collections::HashSet<usize> = sp.elements.iter().copied().collect();
    for &g in h.generators() {
        let img: Vec<usize> = sp.elements.iter().map(|&x| sp.star(lrb, g, x)).collect();
        if img.iter().any(|z| !inset.contains(z)) {
            return Err(LrbError::Inconsistent("the twisted action leaves the lower set".into()));
        }
        for (i, &a) in sp.elements.iter().enumerate() {
            for (j, &b) in sp.elements.iter().enumerate() {
                if ord.leq(a, b) != ord.leq(img[i], img[j]) {
                    return Err(LrbError::Inconsistent("the twisted action is not by order automorphisms".into()));
                }
            }
        }
        // g∗(k∗x) = (gk)∗x
        for k in 0..h.order() {
            let gk = h.mul(g, k);
            if sp.elements.iter().any(|&x| sp.star(lrb, g, sp.star(lrb, k, x)) != sp.star(lrb, gk, x)) {
                return Err(LrbError::Inconsistent("the twisted action is not a group action".into()));
            }
        }
    }
    Ok(sp)
}

/// Homology of `B̃^{<y}_{≥X}` with the twisted action.
pub fn star_homology(lrb: &Lrb, sp: &StarPoset) -> Result<EquivariantHomology> {
    equivariant_homology(&sp.complex(lrb), &sp.group, |g, x| sp.star(lrb, g, x))
}

/// The `±1` character of `G_Y` on the top homology of `B̃^{<y}`, for a CW LRB.
pub fn degree_character_at(lrb: &Lrb, y: usize, h: &Arc<PermGroup>) -> Result<ClassFunction> {
    let sp = star_action_poset(lrb, y, None, h)?;
    let hom = star_homology(lrb, &sp)?;
    let support = hom.support();
    if support.len() != 1 || hom.dim(support[0]) != 1 {
        return Err(LrbError::Precondition(format!("lower set of {y} is not a homology sphere (not CW)")));
    }
    let chi = hom.character(support[0], h);
    let vals: Vec<i64> = (0..h.order())
        .map(|g| chi.value(g).as_integer())
        .collect::<Option<_>>()
        .ok_or_else(|| LrbError::Inconsistent("degree is not an integer".into()))?;
    if vals.iter().any(|&v| v != 1 && v != -1) {
        return Err(LrbError::Inconsistent("degree character is not ±1".into()));
    }
    for &g in h.generators() {
        for k in 0..h.order() {
            if vals[h.mul(g, k)] != vals[g] * vals[k] {
                return Err(LrbError::Inconsistent("degree character is not multiplicative".into()));
            }
        }
    }
    Ok(chi)
}

/// `deg(Y)` on `h ≤ G_Y`, computed at the least element of the fiber and
/// recomputed at a second element when there is one.
pub fn degree_character(lrb: &Lrb, support: usize, h: &Arc<PermGroup>) -> Result<ClassFunction> {
    let fib = lrb.fiber(support);
    let chi = degree_character_at(lrb, fib[0], h)?;
    if let Some(&y2) = fib.get(1) {
        if degree_character_at(lrb, y2, h)? != chi {
            return Err(LrbError::Inconsistent(format!("degree of support {support} depends on the chosen element")));
        }
    }
    Ok(chi)
}

/// `H̃_0(B̃^{<y}_{≥X})` as the permutation character on components minus
/// the trivial character, cross-checked against the homology complex.
pub fn h0_tilde_character(lrb: &Lrb, lower: usize, y: usize, h: &Arc<PermGroup>) -> Result<ClassFunction> {
    let lat = lrb.lattice();
    if !lat.lt(lower, lrb.sigma(y)) {
        return Err(LrbError::Precondition("h0 character needs X < sigma(y)".into()));
    }
    let sp = star_action_poset(lrb, y, Some(lower), h)?;
    let ord = lrb.order();
    let raw = ord.hasse_components(&sp.elements);
    let mut roots = raw.clone();
    roots.sort_unstable();
    roots.dedup();
    let comp: Vec<usize> = raw.iter().map(|r| roots.binary_search(r).unwrap()).collect();
    let ncomp = roots.len();
    let pos: std::collections::HashMap<usize, usize> = sp.elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    for c in 0..ncomp {
        let has_x = sp.elements.iter().enumerate().any(|(i, &x)| comp[i] == c && lrb.sigma(x) == lower);
        if !has_x {
            return Err(LrbError::Inconsistent("a component has no element of the lower support".into()));
        }
    }
    let reps: Vec<usize> = (0..ncomp).map(|c| sp.elements[comp.iter().position(|&k| k == c).unwrap()]).collect();
    let perm_char = ClassFunction::from_int_fn(h, |g| {
        reps.iter().enumerate().filter(|&(c, &x)| comp[pos[&sp.star(lrb, g, x)]] == c).count() as i64
    });
    let chi = perm_char.sub(&ClassFunction::trivial(h))?;
    if ncomp == 0 {
        return Err(LrbError::Inconsistent("empty lower set below an element of larger support".into()));
    }
    let hom = star_homology(lrb, &sp)?;
    if hom.character(0, h) != chi {
        return Err(LrbError::Inconsistent("component character differs from H_0 of the complex".into()));
    }
    Ok(chi)
}
