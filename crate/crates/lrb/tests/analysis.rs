use lrb::algebra::cfpoi::{invariant_idempotents, SeedPolicy};
use lrb::algebra::SemigroupAlgebra;
use lrb::analysis::*;
use lrb::constructions::{boolean_lattice, pg_lattice, uniform_rank2_lattice};
use lrb::group::ClassFunction;
use lrb::instances::{load, Geometry, Instance};
use lrb::{LrbError, Rationals};

fn inst(s: &str) -> Instance {
    load(s).unwrap()
}

/// Fixed-point-free permutations of n points, by enumeration.
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

fn run<F>(s: &str, f: F) -> Vec<Verdict>
where
    F: Fn(&SemigroupAlgebra<Rationals>, &lrb::algebra::Cfpoi<lrb::Q>, &Instance) -> lrb::Result<Vec<Verdict>>,
{
    let i = inst(s);
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    f(&a, &c, &i).unwrap()
}

#[test]
fn derangement_numbers_of_boolean_lattices() {
    let expected = [1, 0, 1, 2, 9, 44, 265];
    for n in 0..=6 {
        let r = derangement_number(&boolean_lattice(n).unwrap(), 2000).unwrap();
        assert_eq!(r.positive, brute_derangements(n), "n = {n}");
        assert_eq!(r.positive, expected[n]);
        assert!(r.agree);
        assert_eq!(r.peirce, Some(expected[n]));
    }
}

#[test]
fn derangement_numbers_of_small_lattices() {
    let r = derangement_number(&uniform_rank2_lattice(3).unwrap(), 100).unwrap();
    let skipped = derangement_number(&boolean_lattice(4).unwrap(), 10).unwrap();
    assert_eq!((skipped.peirce, skipped.positive), (None, 9));
    assert_eq!((r.recursive, r.mobius, r.positive, r.peirce), (2, 2, 2, Some(2)));
    // m atoms on a line: m complete flags minus the m rank-one intervals minus the top
    for m in 2..7 {
        let r = derangement_number(&uniform_rank2_lattice(m).unwrap(), 100).unwrap();
        assert_eq!(r.positive, m as i64 - 1);
    }
    let pg = pg_lattice(3, 2).unwrap();
    let r = derangement_number(&pg.lattice, 1000).unwrap();
    assert!(r.agree && r.peirce == Some(r.positive));
}

#[test]
fn derangement_characters() {
    let i = inst("builtin:free-lrb?n=3");
    let chi = derangement_character(&i.lrb, &i.action).unwrap();
    assert_eq!(chi.degree().as_integer(), Some(2));
    // irreducible: the transposition acts with trace 0, the 3-cycle with trace -1
    let table = i.table.as_ref().unwrap();
    assert_eq!(table.decompose(&chi).unwrap().iter().sum::<i64>(), 1);
    let atoms = i.flags().unwrap().atom_flags();
    for g in 0..chi.group().order() {
        let fixed = atoms.iter().filter(|&&a| i.action.act(g, a) == a).count();
        let want = match fixed {
            3 => 2,
            1 => 0,
            _ => -1,
        };
        assert_eq!(chi.value(g).as_integer(), Some(want));
    }
    let i = inst("builtin:free-lrb?n=3&group=trivial");
    let chi = derangement_character(&i.lrb, &i.action).unwrap();
    assert_eq!(chi, ClassFunction::constant(chi.group(), 2));
    let i = inst("builtin:free-lrb?n=4");
    assert_eq!(derangement_character(&i.lrb, &i.action).unwrap().degree().as_integer(), Some(9));
}

#[test]
fn cw_peirce_characters() {
    for s in [
        "builtin:arrangement?m=3",
        "builtin:arrangement?m=4&group=cyclic",
        "builtin:arrangement?m=3&group=trivial",
        "builtin:cubulated-ngon?n=4",
        "builtin:cubulated-ngon?n=5&group=cyclic",
    ] {
        let vs = run(s, |a, c, i| theorem_c_check(a, c, &i.action, &i.key));
        assert!(!vs.is_empty());
        assert!(all_pass(&vs), "{s}: {:?}", failures(&vs));
    }
    // chambers against the origin of three lines: a 2-dimensional character
    let i = inst("builtin:arrangement?m=3");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    let l = i.lrb.lattice();
    let pc = lrb::algebra::peirce::peirce_component_with_character(&a, &c, &i.action, l.max.unwrap(), l.min).unwrap();
    assert_eq!(pc.dimension, 2);
    assert_eq!(pc.character.unwrap().degree().as_integer(), Some(2));
}

#[test]
fn cw_check_rejects_non_cw() {
    let i = inst("builtin:free-lrb?n=2");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    assert!(matches!(theorem_c_check(&a, &c, &i.action, &i.key), Err(LrbError::Precondition(_))));
}

#[test]
fn catzero_cartan_matrices() {
    for n in 4..=6 {
        for (group, corner) in [("dihedral", 1), ("cyclic", 2)] {
            let i = inst(&format!("builtin:cubulated-ngon?n={n}&group={group}"));
            let a = SemigroupAlgebra::new(&i.lrb, Rationals);
            let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
            let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
            let r = catzero_report(&a, &c, &i.action, &inv, &i.key).unwrap();
            assert!(r.strongly_simplicial && r.pass, "n={n} {group}");
            assert_eq!(r.orbit_counts, vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, corner, 1]]);
            assert_eq!(r.cartan.entries, r.orbit_counts);
        }
    }
    // trivial group: entries are |μ| on the support lattice
    let i = inst("builtin:cubulated-ngon?n=4&group=trivial");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
    let r = catzero_report(&a, &c, &i.action, &inv, &i.key).unwrap();
    assert!(r.pass);
    let l = i.lrb.lattice();
    let orbits = i.action.support_orbits();
    for (oy, row) in r.cartan.entries.iter().enumerate() {
        for (ox, &v) in row.iter().enumerate() {
            let (x, y) = (orbits[ox][0], orbits[oy][0]);
            let mu = if l.leq(x, y) { l.order.mobius(x, y).unwrap().abs() } else { 0 };
            assert_eq!(v, mu);
        }
    }
}

#[test]
fn strong_simpliciality_detects_fixed_squares() {
    // the trivial group fixes everything pointwise
    let i = inst("builtin:cubulated-ngon?n=4&group=trivial");
    assert!(strong_simpliciality_violations(&i.lrb, &i.action).is_empty());
    // rotations fix the origin of an arrangement but move its chambers, so
    // the report falls back to the per-pair CW check
    let i = inst("builtin:arrangement?m=3&group=cyclic");
    let bad = strong_simpliciality_violations(&i.lrb, &i.action);
    assert_eq!(bad, vec![i.lrb.semigroup().identity().unwrap()]);
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
    let r = catzero_report(&a, &c, &i.action, &inv, &i.key).unwrap();
    assert!(!r.strongly_simplicial && r.pass);
    assert!(r.fallback.is_some_and(|v| all_pass(&v)));
}

#[test]
fn hereditary_peirce_characters() {
    for s in ["builtin:free-lrb?n=3", "builtin:uniform-rank2?m=3&group=trivial", "builtin:uniform-rank2?m=4", "builtin:free-lrb?n=4"] {
        let vs = run(s, |a, c, i| theorem_d_check(a, c, &i.action, &i.key));
        assert!(all_pass(&vs), "{s}: {:?}", failures(&vs).iter().map(|v| &v.claim).collect::<Vec<_>>());
    }
    let i = inst("builtin:arrangement?m=3");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    assert!(theorem_d_check(&a, &c, &i.action, &i.key).is_err());
}

#[test]
fn single_step_chain_is_one_h0_term() {
    let i = inst("builtin:free-lrb?n=3");
    let l = i.lrb.lattice();
    let (top, bottom) = (l.max.unwrap(), l.min);
    let terms = lrb::analysis::theorem_d::chain_side(&i.lrb, &i.action, bottom, top).unwrap();
    assert_eq!(terms[0], ClassFunction::zero(terms[0].group()));
    assert_eq!(terms[1].degree().as_integer(), Some(2));
    assert!(terms[2..].iter().all(|t| t.is_zero()));
}

#[test]
fn derangement_representation_identities() {
    for s in [
        "builtin:free-lrb?n=0",
        "builtin:free-lrb?n=3",
        "builtin:free-lrb?n=4",
        "builtin:uniform-rank2?m=3",
        "builtin:uniform-rank2?m=4&group=trivial",
        "builtin:q-free-lrb?n=2",
    ] {
        let vs = theorem_e_checks(&inst(s)).unwrap();
        assert_eq!(vs.len(), 3);
        assert!(all_pass(&vs), "{s}: {:?}", failures(&vs));
    }
}

#[test]
fn symmetric_group_derangement_isomorphisms() {
    for n in 0..=4 {
        let vs = symmetric_group_checks(n).unwrap();
        assert!(all_pass(&vs), "n = {n}: {:?}", failures(&vs));
    }
}

#[test]
fn random_to_top_on_boolean_lattices() {
    for n in 1..=5 {
        let r = random_to_top(&inst(&format!("builtin:free-lrb?n={n}"))).unwrap();
        assert!(r.pass && r.diagonalizable && r.kernel_is_derangement);
        let got: Vec<(i64, usize)> = r.eigenspaces.iter().map(|e| (e.eigenvalue, e.multiplicity)).collect();
        let want: Vec<(i64, usize)> =
            (0..=n).map(|k| (k as i64, (binomial(n, k) * brute_derangements(n - k)) as usize)).collect();
        assert_eq!(got, want);
    }
    let r = random_to_top(&inst("builtin:free-lrb?n=3")).unwrap();
    assert_eq!(r.eigenspaces.iter().map(|e| e.multiplicity).collect::<Vec<_>>(), vec![2, 3, 0, 1]);
    assert_eq!(r.flags, 6);
}

#[test]
fn random_to_top_q_analogue_and_trivial_lattice() {
    let r = random_to_top(&inst("builtin:q-free-lrb?n=2")).unwrap();
    assert!(r.pass);
    assert_eq!(r.eigenspaces.iter().map(|e| e.eigenvalue).collect::<Vec<_>>(), vec![0, 1, 3]);
    let r = random_to_top(&inst("builtin:free-lrb?n=0")).unwrap();
    assert!(r.pass);
    assert_eq!(r.flags, 1);
    assert_eq!(r.eigenspaces.len(), 1);
    assert_eq!((r.eigenspaces[0].eigenvalue, r.eigenspaces[0].multiplicity), (0, 1));
}

#[test]
fn determinant_twists() {
    for s in ["builtin:arrangement?m=3", "builtin:arrangement?m=4&group=cyclic", "builtin:arrangement?m=3&group=trivial"] {
        let vs = run(s, |a, c, i| {
            let arr = match &i.geometry {
                Geometry::Arrangement(a) => Some(a.as_ref()),
                _ => None,
            };
            arrangement_det_vs_deg_check(a, c, &i.action, arr, &i.key)
        });
        assert!(all_pass(&vs), "{s}: {:?}", failures(&vs));
    }
    let i = inst("builtin:cubulated-ngon?n=4");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = invariant_cfpoi(&a, &i.action, SeedPolicy::Min).unwrap();
    assert!(arrangement_det_vs_deg_check(&a, &c, &i.action, None, &i.key).is_err());
}
