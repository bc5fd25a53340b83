//! Invariant-algebra structure: semisimplicity, generation by an orbit sum,
//! isotypic dimensions of `kB·E_[X]`, and corner isomorphisms.

use serde::Serialize;

use crate::algebra::cfpoi::Cfpoi;
use crate::algebra::kb::{SemigroupAlgebra, Vector};
use crate::algebra::peirce::{character_on_subspace, sandwich_space};
use crate::error::{LrbError, Result};
use crate::field::{Field, Rationals};
use crate::group::action::GroupAction;
use crate::group::classfn::ClassFunction;
use crate::group::table::CharacterTable;
use crate::linalg::{kernel, rank, Echelon};
use crate::rational::Q;

/// Structure constants of `(kB)^G` on orbit sums: `o_i o_j = Σ_k c[i][j][k] o_k`.
pub fn orbit_structure_constants(alg: &SemigroupAlgebra<impl Field>, action: &GroupAction) -> Vec<Vec<Vec<i64>>> {
    let lrb = alg.lrb();
    let orbits = action.element_orbits();
    let mut orbit_of = vec![0usize; lrb.size()];
    for (i, o) in orbits.iter().enumerate() {
        for &b in o {
            orbit_of[b] = i;
        }
    }
    let k = orbits.len();
    let mut c = vec![vec![vec![0i64; k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut counts = vec![0i64; lrb.size()];
            for &a in &orbits[i] {
                for &b in &orbits[j] {
                    counts[lrb.mul(a, b)] += 1;
                }
            }
            for l in 0..k {
                c[i][j][l] = counts[orbits[l][0]];
            }
            debug_assert!((0..lrb.size()).all(|b| counts[b] == counts[orbits[orbit_of[b]][0]]));
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAReport {
    pub element_orbits: usize,
    pub support_orbits: usize,
    pub counts_equal: bool,
    pub commutative: bool,
    /// Nondegenerate trace form (characteristic zero only).
    pub semisimple_trace_form: Option<bool>,
    /// `(rad kB)^G = 0`.
    pub semisimple_radical: bool,
    pub consistent: bool,
}

/// The three equivalent conditions, each computed on its own.
pub fn theorem_a_report<F: Field>(alg: &SemigroupAlgebra<F>, action: &GroupAction) -> Result<TheoremAReport> {
    let f = alg.field();
    if !f.is_unit_int(action.order() as u64) {
        return Err(LrbError::CharacteristicDividesOrder(f.characteristic(), action.order()));
    }
    let eo = action.element_orbits();
    let so = action.support_orbits();
    let c = orbit_structure_constants(alg, action);
    let k = eo.len();
    let commutative = (0..k).all(|i| (0..k).all(|j| c[i][j] == c[j][i]));
    let semisimple_trace_form = (f.characteristic() == 0).then(|| {
        let form = (0..k).map(|i| {
            (0..k)
                .map(|j| {
                    let mut t = 0i64;
                    for a in 0..k {
                        for b in 0..k {
                            t += c[i][a][b] * c[j][b][a];
                        }
                    }
                    Q::from_int(t)
                })
                .collect::<Vec<Q>>()
        });
        rank(&Rationals, k, form) == k
    });
    // (rad kB)^G: invariant combinations killed by the support map
    let lrb = alg.lrb();
    let images = eo.iter().map(|o| {
        let mut v = vec![f.zero(); lrb.num_supports()];
        for &b in o {
            v[lrb.sigma(b)] = f.add(&v[lrb.sigma(b)], &f.one());
        }
        v
    });
    let semisimple_radical = rank(f, lrb.num_supports(), images) == k;
    let counts_equal = eo.len() == so.len();
    let consistent = counts_equal == commutative
        && counts_equal == semisimple_radical
        && semisimple_trace_form.is_none_or(|s| s == counts_equal);
    Ok(TheoremAReport {
        element_orbits: eo.len(),
        support_orbits: so.len(),
        counts_equal,
        commutative,
        semisimple_trace_form,
        semisimple_radical,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    /// `λ_[X]` per support orbit.
    pub eigenvalues: Vec<i64>,
    pub generates_by_criterion: bool,
    pub generates_by_closure: bool,
    /// Dimension of the subalgebra generated by the orbit sum.
    pub closure_dimension: usize,
    pub invariant_dimension: usize,
    /// `∏ (x − λ)` over distinct eigenvalues, constant term first.
    pub minimal_polynomial: Vec<i64>,
    /// Minimal polynomial found from the powers, constant term first.
    pub closure_polynomial: Vec<String>,
    pub polynomials_agree: bool,
}

fn expand_roots(roots: &[i64]) -> Vec<i64> {
    let mut p = vec![1i64];
    for &r in roots {
        let mut q = vec![0i64; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            q[i + 1] += c;
            q[i] -= r * c;
        }
        p = q;
    }
    p
}

/// Whether `x = Σ_{b∈O} b` generates `(kB)^G`.
pub fn orbit_sum_generator_test<F: Field>(
    alg: &SemigroupAlgebra<F>,
    c: &Cfpoi<F::E>,
    action: &GroupAction,
    orbit: &[usize],
) -> Result<GeneratorReport> {
    let f = alg.field();
    let lrb = alg.lrb();
    let lat = lrb.lattice();
    for &s in action.group().generators() {
        if orbit.iter().any(|&b| !orbit.contains(&action.act(s, b))) {
            return Err(LrbError::Precondition("the chosen set is not G-stable".into()));
        }
    }
    let so = action.support_orbits();
    let eigenvalues: Vec<i64> =
        so.iter().map(|o| orbit.iter().filter(|&&b| lat.leq(o[0], lrb.sigma(b))).count() as i64).collect();
    let mut distinct: Vec<i64> = Vec::new();
    for &l in &eigenvalues {
        if !distinct.iter().any(|&d| f.from_i64(d) == f.from_i64(l)) {
            distinct.push(l);
        }
    }
    distinct.sort_unstable();
    let invariant_dimension = action.element_orbits().len();
    let generates_by_criterion = invariant_dimension == so.len() && distinct.len() == so.len();
    let x = alg.sum_of(orbit);
    let mut powers: Vec<Vector<F::E>> = vec![c.unit.clone()];
    let mut ech = Echelon::new(f.clone(), alg.dim());
    ech.insert(c.unit.clone());
    loop {
        let next = alg.mul(powers.last().unwrap(), &x);
        let independent = ech.insert(next.clone());
        powers.push(next);
        if !independent {
            break;
        }
    }
    let d = powers.len() - 1;
    // the one relation among 1, x, ..., x^d
    let rows: Vec<Vec<F::E>> = (0..alg.dim()).map(|b| powers.iter().map(|p| p[b].clone()).collect()).collect();
    let ker = kernel(f, &rows, d + 1);
    if ker.len() != 1 {
        return Err(LrbError::Inconsistent("powers of the orbit sum have no unique relation".into()));
    }
    let lead = ker[0][d].clone();
    let rel: Vec<F::E> = ker[0].iter().map(|v| f.div(v, &lead)).collect();
    let minimal_polynomial = expand_roots(&distinct);
    let polynomials_agree = rel.len() == minimal_polynomial.len()
        && rel.iter().zip(&minimal_polynomial).all(|(a, &b)| *a == f.from_i64(b));
    Ok(GeneratorReport {
        eigenvalues,
        generates_by_criterion,
        generates_by_closure: d == invariant_dimension,
        closure_dimension: d,
        invariant_dimension,
        minimal_polynomial,
        closure_polynomial: rel.iter().map(|v| f.render(v)).collect(),
        polynomials_agree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypicDims {
    pub names: Vec<String>,
    /// `dims[χ][[X]] = χ(1)·⟨χ, Ψ_[X]⟩`.
    pub dims: Vec<Vec<i64>>,
    pub total: i64,
}

/// Isotypic dimensions of the projectives `kB·E_[X]`, with `Ψ_[X]` checked
/// against the trace on `kB·E_[X]`.
pub fn isotypic_module_dims(
    alg: &SemigroupAlgebra<Rationals>,
    unit: &[Q],
    inv: &[Vector<Q>],
    action: &GroupAction,
    table: &CharacterTable,
) -> Result<IsotypicDims> {
    let lrb = alg.lrb();
    let g = action.group();
    let so = action.support_orbits();
    let mut psis = Vec::new();
    for (i, o) in so.iter().enumerate() {
        let pts: Vec<usize> = (0..lrb.size()).filter(|&b| o.contains(&lrb.sigma(b))).collect();
        let psi = ClassFunction::permutation_character(g, &pts)?;
        let sp = sandwich_space(alg, unit, &inv[i], 0..lrb.size());
        let direct = character_on_subspace(alg, &sp, g)?;
        if direct != psi {
            return Err(LrbError::Inconsistent(format!("kB·E_[{i}] is not the permutation module")));
        }
        psis.push(psi);
    }
    let mut dims = Vec::new();
    let mut total = 0;
    for chi in &table.irreducibles {
        let d = chi.degree().as_integer().ok_or_else(|| LrbError::BadCharacterTable("non-integer degree".into()))?;
        let row: Vec<i64> = psis.iter().map(|p| p.multiplicity(chi).map(|m| m * d)).collect::<Result<_>>()?;
        total += row.iter().sum::<i64>();
        dims.push(row);
    }
    if total != lrb.size() as i64 {
        return Err(LrbError::Inconsistent(format!("isotypic dimensions sum to {total}, not |B|")));
    }
    Ok(IsotypicDims { names: table.names.clone(), dims, total })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionReport {
    pub element: usize,
    pub support: usize,
    pub corner_dimension: usize,
    pub lower_set_size: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// `F_X·kB·F_X ≅ k[xB]` for `F_X = Σ_{Y≤X} E_Y`, `σ(x) = X`, via
/// `F_X b ↤ xb` and `v ↦ xv`.
pub fn deletion_check<F: Field>(alg: &SemigroupAlgebra<F>, c: &Cfpoi<F::E>, x: usize) -> DeletionReport {
    let lrb = alg.lrb();
    let lat = lrb.lattice();
    let sx = lrb.sigma(x);
    let fx = (0..c.len()).filter(|&y| lat.leq(y, sx)).fold(alg.zero(), |acc, y| alg.add(&acc, &c.idempotents[y]));
    let mut failures = Vec::new();
    if alg.mul(&fx, &fx) != fx {
        failures.push("F_X is not idempotent".to_string());
    }
    let lower: Vec<usize> = (0..lrb.size()).filter(|&b| lrb.mul(x, b) == b).collect();
    let corner = alg.span((0..lrb.size()).map(|b| alg.mul(&fx, &alg.left_mul(b, &fx))));
    if corner.rank() != lower.len() {
        failures.push(format!("dim F_X kB F_X = {} but |xB| = {}", corner.rank(), lower.len()));
    }
    let psi = |b: usize| alg.right_mul(&fx, b);
    for &b in &lower {
        let p = psi(b);
        if alg.mul(&p, &fx) != p {
            failures.push(format!("F_X·{b} is not in the corner"));
        }
        if alg.left_mul(x, &p) != alg.basis(b) {
            failures.push(format!("x·F_X·{b} != {b}"));
        }
        for &b2 in &lower {
            if alg.mul(&p, &psi(b2)) != psi(lrb.mul(b, b2)) {
                failures.push(format!("psi is not multiplicative at ({b},{b2})"));
                break;
            }
        }
    }
    for v in corner.basis() {
        let back = alg.mul(&fx, &alg.left_mul(x, &v));
        if back != v {
            failures.push("F_X·x·v != v on the corner".to_string());
            break;
        }
    }
    DeletionReport {
        element: x,
        support: sx,
        corner_dimension: corner.rank(),
        lower_set_size: lower.len(),
        pass: failures.is_empty(),
        failures,
    }
}
