//! The random-to-top operator: left multiplication by the sum of the atoms
//! on the span of the complete flags.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::analysis::derangement::{derangement_character, derangement_recursive};
use crate::analysis::theorem_e::FlagView;
use crate::error::{LrbError, Result};
use crate::field::Rationals;
use crate::group::classfn::ClassFunction;
use crate::instances::Instance;
use crate::linalg::{kernel, Echelon};
use crate::rational::Q;

#[derive(Clone, Debug, Serialize)]
pub struct Eigenspace {
    pub eigenvalue: i64,
    /// Flat orbit representatives with this eigenvalue.
    pub flats: Vec<String>,
    pub multiplicity: usize,
    /// `Σ [G:G_X]·d_{[X,1̂]}`.
    pub expected_multiplicity: i64,
    pub character: serde_json::Value,
    pub character_matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub flags: usize,
    pub eigenspaces: Vec<Eigenspace>,
    pub diagonalizable: bool,
    pub kernel_is_derangement: bool,
    pub pass: bool,
}

/// Integer matrix of `x·` on complete flags (columns are inputs).
pub fn operator_matrix(inst: &Instance) -> Result<(Vec<usize>, Vec<Vec<i64>>)> {
    let f = inst.flags().ok_or_else(|| LrbError::Precondition("random-to-top needs a flag LRB".into()))?;
    let flags = f.complete_flags();
    let pos: HashMap<usize, usize> = flags.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let n = flags.len();
    let mut t = vec![vec![0i64; n]; n];
    for (j, &c) in flags.iter().enumerate() {
        for a in f.atom_flags() {
            let i = *pos.get(&inst.lrb.mul(a, c)).ok_or_else(|| LrbError::Inconsistent("atom times flag is not complete".into()))?;
            t[i][j] += 1;
        }
    }
    Ok((flags, t))
}

pub fn random_to_top(inst: &Instance) -> Result<SpectrumReport> {
    let v = FlagView::new(inst)?;
    let l = v.flags.lattice();
    let g = inst.group();
    let (flags, t) = operator_matrix(inst)?;
    let n = flags.len();
    let pos: HashMap<usize, usize> = flags.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let d = derangement_recursive(l);
    let lambda = |x: usize| l.atoms().iter().filter(|&&a| l.leq(a, x)).count() as i64;

    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for x in v.flat_orbit_reps() {
        groups.entry(lambda(x)).or_default().push(x);
    }
    let mut eigenspaces = Vec::new();
    let mut total = 0usize;
    let mut kernel_is_derangement = true;
    for (&lam, xs) in &groups {
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| Q::from_int(t[i][j] - if i == j { lam } else { 0 })).collect())
            .collect();
        let mut space = Echelon::new(Rationals, n);
        for z in kernel(&Rationals, &rows, n) {
            space.insert(z);
        }
        let mut values = Vec::with_capacity(g.num_classes());
        for cl in 0..g.num_classes() {
            let p = g.element(g.class_rep(cl));
            let tr = crate::algebra::kb::trace_on(&space, |w| {
                let mut out = vec![Q::zero(); n];
                for (j, c) in w.iter().enumerate() {
                    if !c.is_zero() {
                        out[pos[&(p[flags[j]] as usize)]] = c.clone();
                    }
                }
                out
            })
            .ok_or_else(|| LrbError::Inconsistent("eigenspace is not group-stable".into()))?;
            values.push(tr.to_i64().filter(|_| tr.is_integer()).ok_or_else(|| LrbError::Inconsistent("non-integer trace".into()))?);
        }
        let chi = ClassFunction::from_int_fn(g, |k| values[g.class_of(k)]);
        let mut expected = ClassFunction::zero(g);
        let mut expected_multiplicity = 0i64;
        for &x in xs {
            let gx = v.flat_stabilizer(x);
            expected = expected.add(&v.upper_derangement(x, &gx)?.induce(g)?)?;
            expected_multiplicity += (g.order() / gx.order()) as i64 * d[x];
        }
        if lam == 0 {
            kernel_is_derangement = chi == derangement_character(&inst.lrb, &inst.action)?;
        }
        total += space.rank();
        eigenspaces.push(Eigenspace {
            eigenvalue: lam,
            flats: xs.iter().map(|&x| l.label(x)).collect(),
            multiplicity: space.rank(),
            expected_multiplicity,
            character: chi.to_json(),
            character_matches: chi == expected,
        });
    }
    let diagonalizable = total == n;
    let pass = diagonalizable
        && kernel_is_derangement
        && eigenspaces.iter().all(|e| e.character_matches && e.multiplicity as i64 == e.expected_multiplicity);
    Ok(SpectrumReport { flags: n, eigenspaces, diagonalizable, kernel_is_derangement, pass })
}
