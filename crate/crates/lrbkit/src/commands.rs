use rayon::prelude::*;
use serde_json::{json, Value};

use lrb::algebra::cfpoi::{basis_property, build_cfpoi, choose_seeds, invariant_idempotents, Cfpoi};
use lrb::algebra::peirce::invariant_cartan_dims;
use lrb::algebra::structure::{deletion_check, orbit_sum_generator_test, theorem_a_report};
use lrb::algebra::{cartan_invariants, peirce_dimensions, saliola_properties_check, SeedPolicy, SemigroupAlgebra};
use lrb::analysis::*;
use lrb::instances::{corpus, load, BuiltinSpec, Geometry, Instance};
use lrb::topology::is_cw_lrb;
use lrb::{Field, LrbError, PrimeField, Rationals};

use crate::report::{CliError, Report};
use crate::{Common, FieldSpec};

type Res<T> = Result<T, CliError>;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn matrix_lines(labels: &[String], rows: &[Vec<i64>]) -> Vec<String> {
    let w = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(3);
    let mut out = vec![format!("{:w$} | {}", "", labels.iter().map(|l| format!("{l:>w$}")).collect::<Vec<_>>().join(" "))];
    for (l, r) in labels.iter().zip(rows) {
        out.push(format!("{l:w$} | {}", r.iter().map(|v| format!("{v:>w$}")).collect::<Vec<_>>().join(" ")));
    }
    out
}

fn cfpoi<F: Field>(alg: &SemigroupAlgebra<F>, i: &Instance, policy: SeedPolicy) -> Res<Cfpoi<F::E>> {
    Ok(build_cfpoi(alg, choose_seeds(alg, &i.action, policy)?, Some(&i.action))?)
}

fn needs_q(field: FieldSpec) -> Res<()> {
    match field {
        FieldSpec::Q => Ok(()),
        FieldSpec::Fp(_) => Err(CliError::Lrb(LrbError::NeedsCharacteristicZero)),
    }
}

fn prime(p: u64) -> PrimeField {
    PrimeField::new(p).expect("checked prime")
}

pub fn run(name: &str, spec: &str, common: &Common) -> Res<Report> {
    let i = load(spec)?;
    run_on(name, &i, spec, common)
}

fn run_on(name: &str, i: &Instance, spec: &str, common: &Common) -> Res<Report> {
    let field = common.field;
    let mut r = Report::new(name, &i.key, &field.to_string());
    match name {
        "info" => info(&mut r, i, field)?,
        "idempotents" => match field {
            FieldSpec::Q => idempotents(&mut r, i, Rationals, common.seed_policy)?,
            FieldSpec::Fp(p) => idempotents(&mut r, i, prime(p), common.seed_policy)?,
        },
        "peirce" => match field {
            FieldSpec::Q => peirce(&mut r, i, Rationals, common.seed_policy)?,
            FieldSpec::Fp(p) => peirce(&mut r, i, prime(p), common.seed_policy)?,
        },
        "cartan" => cartan(&mut r, i, field, common.seed_policy)?,
        "theorem-a" => match field {
            FieldSpec::Q => theorem_a(&mut r, i, Rationals)?,
            FieldSpec::Fp(p) => theorem_a(&mut r, i, prime(p))?,
        },
        "theorem-c" | "theorem-d" | "det" => {
            needs_q(field)?;
            let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
            let c = cfpoi(&alg, i, common.seed_policy)?;
            let vs = match name {
                "theorem-c" => theorem_c_check(&alg, &c, &i.action, &i.key)?,
                "theorem-d" => theorem_d_check(&alg, &c, &i.action, &i.key)?,
                _ => {
                    let arr = match &i.geometry {
                        Geometry::Arrangement(a) => Some(a.as_ref()),
                        _ => None,
                    };
                    arrangement_det_vs_deg_check(&alg, &c, &i.action, arr, &i.key)?
                }
            };
            r.verdicts(&vs);
        }
        "theorem-e" => {
            needs_q(field)?;
            let mut vs = theorem_e_checks(i)?;
            if let Some(n) = full_symmetric_boolean(spec) {
                vs.extend(symmetric_group_checks(n)?);
            }
            r.verdicts(&vs);
        }
        "catzero" => catzero(&mut r, i, field, common.seed_policy)?,
        "derangement" => derangement(&mut r, i, field)?,
        "rtt" => {
            needs_q(field)?;
            let s = random_to_top(i)?;
            r.line(format!("complete flags: {}; diagonalizable: {}", s.flags, yes(s.diagonalizable)));
            for e in &s.eigenspaces {
                r.line(format!(
                    "eigenvalue {:>3}  multiplicity {:>4}  expected {:>4}  character {}",
                    e.eigenvalue,
                    e.multiplicity,
                    e.expected_multiplicity,
                    if e.character_matches { "matches" } else { "DIFFERS" }
                ));
            }
            r.line(format!("kernel is the derangement representation: {}", yes(s.kernel_is_derangement)));
            if !s.pass {
                r.fail("random-to-top spectrum", serde_json::to_value(&s).unwrap());
            }
            r.result = serde_json::to_value(&s).unwrap();
        }
        other => return Err(CliError::Usage(format!("unknown command `{other}`"))),
    }
    Ok(r)
}

/// `n` when the instance is `builtin:free-lrb` with its full symmetric group.
fn full_symmetric_boolean(spec: &str) -> Option<usize> {
    let b = BuiltinSpec::parse(spec).ok().filter(|_| spec.starts_with("builtin:"))?;
    let symmetric = b.params.get("group").is_none_or(|g| g == "symmetric");
    let n: usize = b.params.get("n")?.parse().ok()?;
    (b.name == "free-lrb" && symmetric && n <= 6).then_some(n)
}

fn info(r: &mut Report, i: &Instance, field: FieldSpec) -> Res<()> {
    let s = i.lrb.summary();
    let cw = is_cw_lrb(&i.lrb);
    let eo = i.action.element_orbits().len();
    let so = i.action.support_orbits().len();
    let ta = match field {
        FieldSpec::Q => theorem_a_report(&SemigroupAlgebra::new(&i.lrb, Rationals), &i.action),
        FieldSpec::Fp(p) => theorem_a_report(&SemigroupAlgebra::new(&i.lrb, prime(p)), &i.action),
    };
    let semisimple = ta.as_ref().ok().map(|t| t.semisimple_radical);
    r.line(format!("|B| = {}", s.elements));
    r.line(format!("|Λ(B)| = {}", s.supports));
    r.line(format!("monoid: {}", yes(s.monoid)));
    r.line(format!("connected: {}", yes(s.connected)));
    r.line(format!("CW: {}", yes(cw.is_cw)));
    r.line(format!("hereditary (rooted tree order): {}", yes(s.hereditary_tree)));
    r.line(format!("|G| = {}", i.action.order()));
    r.line(format!("element orbits |B/G| = {eo}"));
    r.line(format!("support orbits |Λ(B)/G| = {so}"));
    r.line(format!(
        "semisimple (kB)^G: {}",
        match semisimple {
            Some(b) => yes(b).to_string(),
            None => "undefined (characteristic divides |G|)".to_string(),
        }
    ));
    r.result = json!({
        "summary": s,
        "cw": cw.is_cw,
        "group_order": i.action.order(),
        "element_orbits": eo,
        "support_orbits": so,
        "semisimple": semisimple,
    });
    Ok(())
}

fn idempotents<F: Field>(r: &mut Report, i: &Instance, f: F, policy: SeedPolicy) -> Res<()> {
    let alg = SemigroupAlgebra::new(&i.lrb, f);
    let c = cfpoi(&alg, i, policy)?;
    let mut list = Vec::new();
    for x in 0..c.len() {
        let e = alg.render(&c.idempotents[x]);
        r.line(format!("E_{} = {e}", i.lrb.support_label(x)));
        list.push(json!({"support": i.lrb.support_label(x), "idempotent": e, "terms": alg.nonzeros(&c.idempotents[x]).len()}));
    }
    r.line(format!("invariant under G: {}", yes(c.invariant)));
    r.result = json!({"idempotents": list, "invariant": c.invariant, "seed_policy": policy});
    Ok(())
}

fn peirce<F: Field>(r: &mut Report, i: &Instance, f: F, policy: SeedPolicy) -> Res<()> {
    let alg = SemigroupAlgebra::new(&i.lrb, f);
    let c = cfpoi(&alg, i, policy)?;
    let dims: Vec<Vec<i64>> = peirce_dimensions(&alg, &c).into_iter().map(|r| r.into_iter().map(|d| d as i64).collect()).collect();
    let labels: Vec<String> = (0..c.len()).map(|x| i.lrb.support_label(x)).collect();
    r.line("dim E_Y·kB·E_X (rows Y, columns X)");
    r.text.extend(matrix_lines(&labels, &dims));
    r.result = json!({"labels": labels, "dimensions": dims});
    Ok(())
}

fn cartan(r: &mut Report, i: &Instance, field: FieldSpec, policy: SeedPolicy) -> Res<()> {
    let (labels, entries) = match field {
        FieldSpec::Q => {
            let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
            let c = cfpoi(&alg, i, policy)?;
            let inv = invariant_idempotents(&alg, &c, &i.action)?;
            let m = cartan_invariants(&alg, &c, &i.action, &inv)?;
            (m.labels, m.entries)
        }
        FieldSpec::Fp(p) => {
            let alg = SemigroupAlgebra::new(&i.lrb, prime(p));
            let c = cfpoi(&alg, i, policy)?;
            let inv = invariant_idempotents(&alg, &c, &i.action)?;
            let labels = i.action.support_orbits().iter().map(|o| i.lrb.support_label(o[0])).collect();
            (labels, invariant_cartan_dims(&alg, &inv, &i.action))
        }
    };
    r.line("Cartan invariants (rows M_[Y], columns P_[X])");
    r.text.extend(matrix_lines(&labels, &entries));
    r.result = json!({"labels": labels, "entries": entries});
    Ok(())
}

fn theorem_a<F: Field>(r: &mut Report, i: &Instance, f: F) -> Res<()> {
    let t = theorem_a_report(&SemigroupAlgebra::new(&i.lrb, f), &i.action)?;
    r.line(format!("|B/G| = {}, |Λ(B)/G| = {}, counts equal: {}", t.element_orbits, t.support_orbits, yes(t.counts_equal)));
    r.line(format!("commutative: {}", yes(t.commutative)));
    if let Some(tf) = t.semisimple_trace_form {
        r.line(format!("nondegenerate trace form: {}", yes(tf)));
    }
    r.line(format!("(rad kB)^G = 0: {}", yes(t.semisimple_radical)));
    r.line(format!("{} the three conditions agree", if t.consistent { "PASS" } else { "FAIL" }));
    if !t.consistent {
        r.fail("semisimplicity, orbit counts and commutativity agree", serde_json::to_value(&t).unwrap());
    }
    r.result = serde_json::to_value(&t).unwrap();
    Ok(())
}

fn catzero(r: &mut Report, i: &Instance, field: FieldSpec, policy: SeedPolicy) -> Res<()> {
    needs_q(field)?;
    if !matches!(i.geometry, Geometry::Cubes(_)) {
        return Err(LrbError::Precondition("catzero needs an instance built from cube data".into()).into());
    }
    let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&alg, i, policy)?;
    let inv = invariant_idempotents(&alg, &c, &i.action)?;
    let rep = catzero_report(&alg, &c, &i.action, &inv, &i.key)?;
    r.line(format!("strongly simplicial: {}", yes(rep.strongly_simplicial)));
    r.line("orbits of comparable pairs (rows [Y], columns [X])");
    r.text.extend(matrix_lines(&rep.cartan.labels, &rep.orbit_counts));
    r.line(format!("matches Cartan invariants: {}", yes(rep.counts_match_cartan)));
    if let Some(t) = rep.pair_components_trivial {
        r.line(format!("pair components trivial: {}", yes(t)));
    }
    if !rep.pass {
        r.fail("Cartan invariants are orbit counts of comparable pairs", serde_json::to_value(&rep).unwrap());
    }
    r.result = serde_json::to_value(&rep).unwrap();
    Ok(())
}

fn derangement(r: &mut Report, i: &Instance, field: FieldSpec) -> Res<()> {
    let f = i.flags().ok_or_else(|| LrbError::Precondition("derangement needs a geometric-lattice instance".into()))?;
    let d = derangement_number(f.lattice(), 2000)?;
    r.line(format!("recursive {}, Möbius {}, chain formula {}, Peirce {:?}", d.recursive, d.mobius, d.positive, d.peirce));
    let mut result = json!({"number": d});
    if field == FieldSpec::Q {
        let chi = derangement_character(&i.lrb, &i.action)?;
        r.line(format!("character {}", chi.render()));
        if let Some(t) = &i.table {
            let m = t.decompose(&chi)?;
            let parts: Vec<String> =
                t.names.iter().zip(&m).filter(|(_, &k)| k != 0).map(|(n, k)| format!("{k}·{n}")).collect();
            r.line(format!("decomposition {}", parts.join(" + ")));
            result["decomposition"] = json!(t.names.iter().zip(&m).map(|(n, k)| json!([n, k])).collect::<Vec<_>>());
        }
        result["character"] = chi.to_json();
    }
    r.result = result;
    Ok(())
}

/// Structural checks run on every instance.
fn structural(i: &Instance, common: &Common) -> Res<Report> {
    let mut r = Report::new("structure", &i.key, &common.field.to_string());
    match common.field {
        FieldSpec::Q => structural_in(&mut r, i, Rationals)?,
        FieldSpec::Fp(p) => structural_in(&mut r, i, prime(p))?,
    }
    Ok(r)
}

fn structural_in<F: Field>(r: &mut Report, i: &Instance, f: F) -> Res<()> {
    let alg = SemigroupAlgebra::new(&i.lrb, f);
    let mut checks: Vec<(String, bool)> = Vec::new();
    let c_min = cfpoi(&alg, i, SeedPolicy::Min)?;
    let c_max = cfpoi(&alg, i, SeedPolicy::Max)?;
    let sal = saliola_properties_check(&alg, &c_min);
    checks.push(("cfpoi properties (annihilation, lower span, Peirce vanishing, coefficient sum, triangularity)".into(), sal.all_pass()));
    checks.push(("cfpoi is G-invariant".into(), c_min.invariant));
    checks.push(("{bE_σ(b)} is a basis".into(), basis_property(&alg, &c_min, 200)));
    checks.push(("Peirce dimensions do not depend on the seeds".into(), peirce_dimensions(&alg, &c_min) == peirce_dimensions(&alg, &c_max)));
    let del = (0..i.lrb.size()).step_by((i.lrb.size() / 8).max(1)).all(|x| deletion_check(&alg, &c_min, x).pass);
    checks.push(("corner algebras F_X·kB·F_X are contraction algebras".into(), del));
    if let Some(orbit) = &i.generator_orbit {
        if let Ok(g) = orbit_sum_generator_test(&alg, &c_min, &i.action, orbit) {
            checks.push(("generator criterion agrees with closure".into(), g.generates_by_criterion == g.generates_by_closure && g.polynomials_agree));
        }
    }
    for (name, ok) in &checks {
        r.line(format!("{} {name}", if *ok { "PASS" } else { "FAIL" }));
        if !ok {
            r.fail(name, Value::Null);
        }
    }
    r.result = json!(checks.iter().map(|(n, ok)| json!({"check": n, "pass": ok})).collect::<Vec<_>>());
    Ok(())
}

/// The suites that apply to an instance.
fn applicable(i: &Instance, field: FieldSpec) -> Vec<&'static str> {
    let mut v = vec!["info", "theorem-a", "peirce", "cartan"];
    if field == FieldSpec::Q {
        if is_cw_lrb(&i.lrb).is_cw {
            v.push("theorem-c");
        }
        if i.lrb.is_hereditary_tree() {
            v.push("theorem-d");
        }
        match i.geometry {
            Geometry::Flags(_) => v.extend(["theorem-e", "derangement", "rtt"]),
            Geometry::Cubes(_) => v.push("catzero"),
            Geometry::Arrangement(_) => v.push("det"),
            Geometry::None => {}
        }
    }
    v
}

pub fn verify_all(common: &Common) -> Res<Vec<Report>> {
    let specs: Vec<String> = match &common.instance {
        Some(s) => s.split_whitespace().map(String::from).collect(),
        None => corpus().into_iter().map(String::from).collect(),
    };
    let per: Vec<Res<Vec<Report>>> = specs
        .par_iter()
        .map(|spec| {
            let i = load(spec)?;
            let mut out = vec![structural(&i, common)?];
            for name in applicable(&i, common.field) {
                out.push(run_on(name, &i, spec, common)?);
            }
            Ok(out)
        })
        .collect();
    let mut reports: Vec<Report> = per.into_iter().collect::<Res<Vec<_>>>()?.into_iter().flatten().collect();
    reports.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(reports)
}

