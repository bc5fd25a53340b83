use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use lrb::algebra::cfpoi::{basis_property, build_cfpoi, choose_seeds, invariant_idempotents};
use lrb::algebra::peirce::{cartan_invariants, invariant_cartan_dims, peirce_dimensions};
use lrb::algebra::structure::{deletion_check, orbit_sum_generator_test, theorem_a_report};
use lrb::algebra::{saliola_properties_check, Cfpoi, SeedPolicy, SemigroupAlgebra};
use lrb::analysis::*;
use lrb::constructions::boolean_lattice;
use lrb::instances::{corpus, load, Instance};
use lrb::topology::interval_homology;
use lrb::{Rationals, Q};

type Outcome = Result<(), String>;

fn inst(s: &str) -> Result<Instance, String> {
    load(s).map_err(|e| format!("{s}: {e}"))
}

fn cfpoi(alg: &SemigroupAlgebra<Rationals>, i: &Instance, policy: SeedPolicy) -> Result<Cfpoi<Q>, String> {
    let seeds = choose_seeds(alg, &i.action, policy).map_err(|e| e.to_string())?;
    build_cfpoi(alg, seeds, Some(&i.action)).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdicts_pass(vs: &[Verdict], what: &str) -> Outcome {
    let bad = failures(vs);
    ensure(bad.is_empty(), || format!("{what}: {} of {} fail, first {:?}", bad.len(), vs.len(), bad[0].claim))
}

/// Fixed-point-free permutations of `n` points by enumeration.
fn brute_derangements(n: usize) -> i64 {
    fn go(i: usize, n: usize, used: &mut Vec<bool>) -> i64 {
        if i == n {
            return 1;
        }
        let mut t = 0;
        for j in 0..n {
            if j != i && !used[j] {
                used[j] = true;
                t += go(i + 1, n, used);
                used[j] = false;
            }
        }
        t
    }
    go(0, n, &mut vec![false; n])
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn cartan_figures() -> Outcome {
    for n in 4..=6 {
        for group in ["dihedral", "cyclic"] {
            let i = inst(&format!("builtin:cubulated-ngon?n={n}&group={group}"))?;
            let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
            let c = cfpoi(&alg, &i, SeedPolicy::Min)?;
            let inv = invariant_idempotents(&alg, &c, &i.action).map_err(|e| e.to_string())?;
            let m = cartan_invariants(&alg, &c, &i.action, &inv).map_err(|e| e.to_string())?;
            let corner = if group == "cyclic" { 2 } else { 1 };
            let expected = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, corner, 1]];
            ensure(m.entries == expected, || format!("n={n} {group}: {:?} ({:?})", m.entries, m.labels))?;
        }
    }
    Ok(())
}

fn semisimplicity_consistency() -> Outcome {
    let specs = corpus();
    ensure(specs.len() >= 8, || "corpus too small".into())?;
    for s in specs {
        let i = inst(s)?;
        let r = theorem_a_report(&SemigroupAlgebra::new(&i.lrb, Rationals), &i.action).map_err(|e| format!("{s}: {e}"))?;
        ensure(r.consistent, || format!("{s}: {r:?}"))?;
    }
    Ok(())
}

fn derangement_numbers() -> Outcome {
    for n in 0..=6 {
        let oracle = brute_derangements(n);
        let l = boolean_lattice(n).map_err(|e| e.to_string())?;
        let r = derangement_number(&l, 2000).map_err(|e| format!("n={n}: {e}"))?;
        let all = [r.recursive, r.mobius, r.positive, r.peirce.unwrap_or(i64::MIN)];
        ensure(all.iter().all(|&v| v == oracle), || format!("n={n}: {all:?} vs {oracle}"))?;
    }
    Ok(())
}

fn random_to_top_spectra() -> Outcome {
    let mut cases: Vec<(String, Vec<(i64, i64)>)> = (1..=5)
        .map(|n| {
            let spec = (0..=n).map(|k| (k as i64, binomial(n, k) * brute_derangements(n - k))).collect();
            (format!("builtin:free-lrb?n={n}"), spec)
        })
        .collect();
    // lines of F_2^2: d = 2 on the kernel, the three points carry nothing
    cases.push(("builtin:q-free-lrb?n=2&q=2".into(), vec![(0, 2), (1, 0), (3, 1)]));
    for (s, expected) in cases {
        let i = inst(&s)?;
        let r = random_to_top(&i).map_err(|e| format!("{s}: {e}"))?;
        let got: Vec<(i64, i64)> = r.eigenspaces.iter().map(|e| (e.eigenvalue, e.multiplicity as i64)).collect();
        ensure(got == expected, || format!("{s}: {got:?} vs {expected:?}"))?;
        let total: i64 = got.iter().map(|p| p.1).sum();
        ensure(r.diagonalizable && total == r.flags as i64, || format!("{s}: not diagonalizable"))?;
        ensure(r.kernel_is_derangement, || format!("{s}: kernel character differs"))?;
        ensure(r.pass, || format!("{s}: eigenspace characters differ"))?;
    }
    Ok(())
}

fn cw_peirce_characters() -> Outcome {
    let mut sentinels = 0;
    for s in [
        "builtin:arrangement?m=3&group=dihedral",
        "builtin:arrangement?m=4&group=dihedral",
        "builtin:cubulated-ngon?n=4&group=dihedral",
        "builtin:cubulated-ngon?n=4&group=cyclic",
        "builtin:cubulated-ngon?n=5&group=dihedral",
        "builtin:cubulated-ngon?n=5&group=cyclic",
    ] {
        let i = inst(s)?;
        let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
        let c = cfpoi(&alg, &i, SeedPolicy::Min)?;
        let vs = theorem_c_check(&alg, &c, &i.action, s).map_err(|e| format!("{s}: {e}"))?;
        let pairs = (0..i.lrb.num_supports())
            .map(|x| (0..i.lrb.num_supports()).filter(|&y| i.lrb.lattice().leq(x, y)).count())
            .sum::<usize>();
        ensure(vs.len() == pairs, || format!("{s}: {} verdicts for {pairs} pairs", vs.len()))?;
        sentinels += (0..i.lrb.num_supports())
            .filter(|&x| {
                let l = i.lrb.support_label(x);
                vs.iter().any(|v| v.claim.ends_with(&format!("({l}, {l})")))
            })
            .count();
        verdicts_pass(&vs, s)?;
    }
    ensure(sentinels > 0, || "no sentinel pairs".into())
}

fn hereditary_and_flag_identities() -> Outcome {
    let mut specs: Vec<String> = (1..=4).map(|n| format!("builtin:free-lrb?n={n}")).collect();
    specs.push("builtin:uniform-rank2?m=3".into());
    for s in &specs {
        let i = inst(s)?;
        let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
        let c = cfpoi(&alg, &i, SeedPolicy::Min)?;
        let d = theorem_d_check(&alg, &c, &i.action, s).map_err(|e| format!("{s}: {e}"))?;
        ensure(d.iter().any(|v| v.claim.starts_with("radical layer")), || format!("{s}: no radical layers"))?;
        verdicts_pass(&d, s)?;
        let e = theorem_e_checks(&i).map_err(|e| format!("{s}: {e}"))?;
        ensure(e.len() == 3, || format!("{s}: {} flag identities", e.len()))?;
        verdicts_pass(&e, s)?;
    }
    for n in 0..=4 {
        let vs = symmetric_group_checks(n).map_err(|e| format!("S_{n}: {e}"))?;
        ensure(vs.len() == 3, || format!("S_{n}: {} isomorphisms", vs.len()))?;
        verdicts_pass(&vs, &format!("S_{n}"))?;
    }
    Ok(())
}

fn structural_suite() -> Outcome {
    let mut deletions = 0;
    for s in corpus() {
        let i = inst(s)?;
        let l = &i.lrb;
        let ax = l.semigroup().check_lrb_axioms();
        ensure(ax.ok, || format!("{s}: LRB axioms fail at {:?}", ax.witness))?;
        let meet = &l.lattice().meet;
        for a in 0..l.size() {
            for b in 0..l.size() {
                let (sa, sb) = (l.sigma(a), l.sigma(b));
                ensure(l.sigma(l.mul(a, b)) == meet[sa][sb], || format!("{s}: sigma({a}{b})"))?;
            }
        }
        let alg = SemigroupAlgebra::new(l, Rationals);
        let lo = cfpoi(&alg, &i, SeedPolicy::Min)?;
        let hi = cfpoi(&alg, &i, SeedPolicy::Max)?;
        ensure(basis_property(&alg, &lo, 200), || format!("{s}: basis property"))?;
        ensure(saliola_properties_check(&alg, &lo).all_pass(), || format!("{s}: cfpoi properties (min seeds)"))?;
        ensure(saliola_properties_check(&alg, &hi).all_pass(), || format!("{s}: cfpoi properties (max seeds)"))?;
        ensure(peirce_dimensions(&alg, &lo) == peirce_dimensions(&alg, &hi), || format!("{s}: Peirce dims depend on seeds"))?;
        let il = invariant_idempotents(&alg, &lo, &i.action).map_err(|e| e.to_string())?;
        let ih = invariant_idempotents(&alg, &hi, &i.action).map_err(|e| e.to_string())?;
        ensure(
            invariant_cartan_dims(&alg, &il, &i.action) == invariant_cartan_dims(&alg, &ih, &i.action),
            || format!("{s}: invariant Peirce dims depend on seeds"),
        )?;
        if l.size() <= 70 {
            for x in 0..l.size() {
                let r = deletion_check(&alg, &lo, x);
                ensure(r.pass, || format!("{s}: corner at {x}: {:?}", r.failures))?;
            }
            deletions += 1;
        }
        // Hall and Hopf are asserted inside every interval homology computation
        let lat = l.lattice();
        for x in 0..lat.size() {
            for y in 0..lat.size() {
                if !lat.leq(x, y) {
                    continue;
                }
                let h: Arc<_> = i.action.stabilizer_of(&[x, y]);
                let act = |g: usize, z: usize| l.sigma(h.act(g, l.fiber(z)[0]));
                interval_homology(&lat.order, x, y, &h, act).map_err(|e| format!("{s}: ({x},{y}): {e}"))?;
            }
        }
    }
    ensure(deletions >= 3, || format!("corner isomorphisms checked on only {deletions} instances"))
}

fn generators() -> Outcome {
    for n in 1..=4 {
        let s = format!("builtin:free-lrb?n={n}");
        let i = inst(&s)?;
        let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
        let c = cfpoi(&alg, &i, SeedPolicy::Min)?;
        let orbit = i.generator_orbit.as_ref().ok_or("no rank-one orbit")?;
        let r = orbit_sum_generator_test(&alg, &c, &i.action, orbit).map_err(|e| format!("{s}: {e}"))?;
        // ∏_{i=0}^{n} (x − i), constant term first
        let mut poly = vec![1i64];
        for root in 0..=n as i64 {
            let mut next = vec![0i64; poly.len() + 1];
            for (k, &a) in poly.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= root * a;
            }
            poly = next;
        }
        ensure(r.generates_by_criterion && r.generates_by_closure, || format!("{s}: does not generate"))?;
        ensure(r.minimal_polynomial == poly && r.polynomials_agree, || format!("{s}: {:?} vs {poly:?}", r.minimal_polynomial))?;
    }
    let s = "builtin:cubulated-ngon?n=4&group=dihedral";
    let i = inst(s)?;
    let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&alg, &i, SeedPolicy::Min)?;
    let r = orbit_sum_generator_test(&alg, &c, &i.action, i.generator_orbit.as_ref().ok_or("no vertex orbit")?)
        .map_err(|e| format!("{s}: {e}"))?;
    ensure(!r.generates_by_closure && r.closure_dimension < r.invariant_dimension, || format!("{s}: vertex orbit sum generates"))?;
    ensure(!r.generates_by_criterion, || format!("{s}: criterion disagrees with closure"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 Cartan invariants of cubulated n-gons, n = 4, 5, 6", cartan_figures),
        ("2 semisimplicity, orbit counts and commutativity agree on the corpus", semisimplicity_consistency),
        ("3 derangement numbers of B_n, n <= 6", derangement_numbers),
        ("4 random-to-top spectra of B_n (n <= 5) and the lines of F_2^2", random_to_top_spectra),
        ("5 CW Peirce characters on arrangements and cubulated 4-, 5-gons", cw_peirce_characters),
        ("6 hereditary chain sums, flag identities and S_n isomorphisms", hereditary_and_flag_identities),
        ("7 structural suite on the corpus", structural_suite),
        ("8 orbit-sum generators", generators),
    ];
    let mut ok = true;
    for (name, f) in criteria {
        let t = Instant::now();
        match f() {
            Ok(()) => println!("PASS  {name}  ({:.2}s)", t.elapsed().as_secs_f64()),
            Err(e) => {
                ok = false;
                println!("FAIL  {name}: {e}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
