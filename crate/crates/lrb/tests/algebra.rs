use lrb::algebra::cfpoi::{basis_property, build_cfpoi, choose_seeds, invariant_idempotents, local_ring_dimension, SeedPolicy};
use lrb::algebra::peirce::{cartan_invariants, invariant_cartan_dims, peirce_dimensions, peirce_space};
use lrb::algebra::radical::radical_filtration;
use lrb::algebra::structure::{deletion_check, isotypic_module_dims, orbit_sum_generator_test, theorem_a_report};
use lrb::algebra::{saliola_properties_check, Cfpoi, SemigroupAlgebra};
use lrb::group::ClassFunction;
use lrb::instances::{load, Instance};
use lrb::{PrimeField, Rationals, Q};

fn inst(s: &str) -> Instance {
    load(s).unwrap()
}

fn cfpoi(i: &Instance, policy: SeedPolicy) -> Cfpoi<Q> {
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    build_cfpoi(&a, choose_seeds(&a, &i.action, policy).unwrap(), Some(&i.action)).unwrap()
}

fn brute_radical_square_rank(a: &SemigroupAlgebra<Rationals>) -> usize {
    let l = a.lrb();
    let mut diffs = Vec::new();
    for x in 0..l.num_supports() {
        let fib = l.fiber(x);
        for &b in fib {
            for &c in fib {
                if b < c {
                    diffs.push(a.sub(&a.basis(b), &a.basis(c)));
                }
            }
        }
    }
    let mut prods = Vec::new();
    for u in &diffs {
        for w in &diffs {
            prods.push(a.mul(u, w));
        }
    }
    a.span(prods).rank()
}

#[test]
fn radical_dimensions() {
    let i = inst("builtin:free-lrb?n=2");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    assert_eq!(radical_filtration(&a).unwrap().dims(), vec![1]);
    let i = inst("builtin:free-lrb?n=3");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let f = radical_filtration(&a).unwrap();
    assert_eq!(f.dims()[0], 16 - 8);
    // rad² = 0 here: every product (x−x')(y−y') of same-support differences cancels
    assert_eq!(brute_radical_square_rank(&a), 0);
    assert_eq!(f.nilpotency_index, 2);
    let i = inst("builtin:free-lrb?n=4");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let f = radical_filtration(&a).unwrap();
    assert_eq!(f.dims()[0], 65 - 16);
    assert_eq!(f.dims()[1], brute_radical_square_rank(&a));
    assert!(f.dims()[1] > 0);
    assert_eq!(f.nilpotency_index, 3);
    let i = inst("builtin:boolean-semilattice?n=3");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let f = radical_filtration(&a).unwrap();
    assert!(f.dims().is_empty());
    assert_eq!(f.nilpotency_index, 1);
}

#[test]
fn peirce_three_lines() {
    let i = inst("builtin:arrangement?m=3&group=trivial");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let lat = i.lrb.lattice();
    let (bottom, top) = (lat.min, lat.max.unwrap());
    assert_eq!(peirce_space(&a, &c, top, bottom).rank(), 2);
    let dims = peirce_dimensions(&a, &c);
    for y in 0..c.len() {
        assert_eq!(dims[y][y], 1);
        for x in 0..c.len() {
            if !lat.leq(x, y) {
                assert_eq!(peirce_space(&a, &c, y, x).rank(), 0);
            }
        }
    }
}

#[test]
fn cartan_of_cubulated_ngons() {
    for n in 4..=6 {
        for (group, corner) in [("dihedral", 1), ("cyclic", 2)] {
            let i = inst(&format!("builtin:cubulated-ngon?n={n}&group={group}"));
            let a = SemigroupAlgebra::new(&i.lrb, Rationals);
            let c = cfpoi(&i, SeedPolicy::Min);
            let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
            assert_eq!(inv.len(), 3);
            let m = cartan_invariants(&a, &c, &i.action, &inv).unwrap();
            let expected = vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, corner, 1]];
            assert_eq!(m.entries, expected, "n={n} {group}");
        }
    }
}

#[test]
fn cartan_trivial_group_semilattice_is_identity() {
    let i = inst("builtin:boolean-semilattice?n=2");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
    let m = cartan_invariants(&a, &c, &i.action, &inv).unwrap();
    for (y, row) in m.entries.iter().enumerate() {
        for (x, &v) in row.iter().enumerate() {
            assert_eq!(v, i64::from(x == y));
        }
    }
}

#[test]
fn invariant_idempotent_counts_and_primitivity() {
    for (s, k) in [("builtin:cubulated-ngon?n=5&group=dihedral", 3), ("builtin:free-lrb?n=3", 4)] {
        let i = inst(s);
        let a = SemigroupAlgebra::new(&i.lrb, Rationals);
        let c = cfpoi(&i, SeedPolicy::Min);
        let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
        assert_eq!(inv.len(), k);
        for e in &inv {
            assert_eq!(local_ring_dimension(&a, e, &i.action), 1);
        }
    }
}

#[test]
fn theorem_a_examples() {
    let semisimple = |s: &str| {
        let i = inst(s);
        let a = SemigroupAlgebra::new(&i.lrb, Rationals);
        let r = theorem_a_report(&a, &i.action).unwrap();
        assert!(r.consistent, "{s}: {r:?}");
        r.counts_equal
    };
    assert!(semisimple("builtin:boolean-semilattice?n=3&group=symmetric"));
    assert!(semisimple("builtin:free-lrb?n=3"));
    assert!(!semisimple("builtin:cubulated-ngon?n=4&group=dihedral"));
    let i = inst("builtin:cubulated-ngon?n=4&group=dihedral");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let r = theorem_a_report(&a, &i.action).unwrap();
    assert_eq!((r.element_orbits, r.support_orbits), (6, 3));
}

#[test]
fn theorem_a_in_positive_characteristic() {
    let i = inst("builtin:free-lrb?n=3");
    let a = SemigroupAlgebra::new(&i.lrb, PrimeField::new(5).unwrap());
    let r = theorem_a_report(&a, &i.action).unwrap();
    assert!(r.consistent && r.semisimple_radical && r.semisimple_trace_form.is_none());
    let a = SemigroupAlgebra::new(&i.lrb, PrimeField::new(3).unwrap());
    assert!(theorem_a_report(&a, &i.action).is_err());
}

#[test]
fn rank_one_orbit_sum_generates() {
    let i = inst("builtin:free-lrb?n=3");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let r = orbit_sum_generator_test(&a, &c, &i.action, i.generator_orbit.as_ref().unwrap()).unwrap();
    let mut ev = r.eigenvalues.clone();
    ev.sort_unstable();
    assert_eq!(ev, vec![0, 1, 2, 3]);
    assert!(r.generates_by_criterion && r.generates_by_closure && r.polynomials_agree);
    // x(x-1)(x-2)(x-3)
    assert_eq!(r.minimal_polynomial, vec![0, -6, 11, -6, 1]);
}

#[test]
fn q_analogue_eigenvalues() {
    let i = inst("builtin:q-free-lrb?n=2&q=2");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let r = orbit_sum_generator_test(&a, &c, &i.action, i.generator_orbit.as_ref().unwrap()).unwrap();
    let mut ev = r.eigenvalues.clone();
    ev.sort_unstable();
    assert_eq!(ev, vec![0, 1, 3]);
    assert!(r.generates_by_closure && r.polynomials_agree);
}

#[test]
fn vertex_orbit_does_not_generate() {
    let i = inst("builtin:cubulated-ngon?n=4&group=dihedral");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let r = orbit_sum_generator_test(&a, &c, &i.action, i.generator_orbit.as_ref().unwrap()).unwrap();
    assert!(!r.generates_by_criterion && !r.generates_by_closure);
    assert!(r.closure_dimension < r.invariant_dimension);
}

#[test]
fn isotypic_dimensions() {
    let i = inst("builtin:free-lrb?n=3");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
    let table = i.table.as_ref().unwrap();
    let d = isotypic_module_dims(&a, &c.unit, &inv, &i.action, table).unwrap();
    assert_eq!(d.total, 16);
    let triv = table.irreducibles.iter().position(|x| *x == ClassFunction::trivial(i.group())).unwrap();
    assert_eq!(d.dims[triv].iter().sum::<i64>(), i.action.element_orbits().len() as i64);
    // the complete flags are the regular representation; sign occurs once
    let sign = table
        .irreducibles
        .iter()
        .position(|x| x.degree().as_integer() == Some(1) && *x != ClassFunction::trivial(i.group()))
        .unwrap();
    let bottom_orbit = i.action.support_orbits().iter().position(|o| o.contains(&i.lrb.lattice().min)).unwrap();
    assert_eq!(d.dims[sign][bottom_orbit], 1);

    let i = inst("builtin:free-lrb?n=3&group=trivial");
    let a = SemigroupAlgebra::new(&i.lrb, Rationals);
    let c = cfpoi(&i, SeedPolicy::Min);
    let inv = invariant_idempotents(&a, &c, &i.action).unwrap();
    let d = isotypic_module_dims(&a, &c.unit, &inv, &i.action, i.table.as_ref().unwrap()).unwrap();
    let fibers: Vec<i64> = (0..i.lrb.num_supports()).map(|x| i.lrb.fiber(x).len() as i64).collect();
    assert_eq!(d.dims[0], fibers);
}

#[test]
fn corner_isomorphisms() {
    for s in ["builtin:free-lrb?n=3", "builtin:cubulated-ngon?n=4", "builtin:arrangement?m=3"] {
        let i = inst(s);
        let a = SemigroupAlgebra::new(&i.lrb, Rationals);
        let c = cfpoi(&i, SeedPolicy::Min);
        for x in 0..i.lrb.size() {
            let r = deletion_check(&a, &c, x);
            assert!(r.pass, "{s} x={x}: {:?}", r.failures);
        }
    }
}

#[test]
fn peirce_dimensions_do_not_depend_on_seeds() {
    for s in ["builtin:free-lrb?n=3", "builtin:cubulated-ngon?n=5&group=cyclic", "builtin:arrangement?m=4"] {
        let i = inst(s);
        let a = SemigroupAlgebra::new(&i.lrb, Rationals);
        let lo = cfpoi(&i, SeedPolicy::Min);
        let hi = cfpoi(&i, SeedPolicy::Max);
        assert_eq!(peirce_dimensions(&a, &lo), peirce_dimensions(&a, &hi));
        let il = invariant_idempotents(&a, &lo, &i.action).unwrap();
        let ih = invariant_idempotents(&a, &hi, &i.action).unwrap();
        assert_eq!(invariant_cartan_dims(&a, &il, &i.action), invariant_cartan_dims(&a, &ih, &i.action));
    }
}

#[test]
fn structural_properties_on_corpus() {
    for s in lrb::instances::corpus() {
        let i = inst(s);
        let a = SemigroupAlgebra::new(&i.lrb, Rationals);
        let c = cfpoi(&i, SeedPolicy::Min);
        assert!(c.invariant, "{s}");
        assert!(saliola_properties_check(&a, &c).all_pass(), "{s}");
        assert!(basis_property(&a, &c, 200), "{s}");
    }
}
