use std::collections::BTreeSet;

use proptest::prelude::*;

use lrb::algebra::cfpoi::{basis_property, build_cfpoi, choose_seeds};
use lrb::algebra::peirce::peirce_dimensions;
use lrb::algebra::radical::radical_basis;
use lrb::algebra::{saliola_properties_check, SeedPolicy, SemigroupAlgebra};
use lrb::algebra::structure::theorem_a_report;
use lrb::analysis::{all_pass, derangement_character, derangement_number, random_to_top, theorem_d_check, theorem_e_checks};
use lrb::instances::flag_instance;
use lrb::constructions::{all_sign_vectors, boolean_lattice, lrb_from_sign_vectors, pg_lattice, uniform_rank2_lattice, Sign, SignVector};
use lrb::group::action::GroupAction;
use lrb::topology::mobius_checked;
use lrb::{Lrb, Rationals};

/// The sign vectors generated by `seeds` under the componentwise product.
fn closure(seeds: Vec<SignVector>) -> Vec<SignVector> {
    let mut set: BTreeSet<SignVector> = seeds.into_iter().collect();
    loop {
        let cur: Vec<SignVector> = set.iter().cloned().collect();
        let before = set.len();
        for a in &cur {
            for b in &cur {
                set.insert(a.mul(b));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

fn random_lrb() -> impl Strategy<Value = Lrb> {
    (1usize..=3).prop_flat_map(|k| {
        let all = all_sign_vectors(k);
        let n = all.len();
        (proptest::sample::subsequence(all, 1..=n.min(6)), any::<bool>()).prop_map(move |(mut seeds, monoid)| {
            if monoid {
                seeds.push(SignVector(vec![Sign::Zero; k]));
            }
            let vs = closure(seeds);
            Lrb::new(lrb_from_sign_vectors(k, &vs).unwrap()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn axioms_and_support_map(l in random_lrb()) {
        prop_assert!(l.semigroup().check_lrb_axioms().ok);
        let meet = &l.lattice().meet;
        for a in 0..l.size() {
            for b in 0..l.size() {
                prop_assert_eq!(l.sigma(l.mul(a, b)), meet[l.sigma(a)][l.sigma(b)]);
                // x ≤ y iff yx = x
                prop_assert_eq!(l.order().leq(a, b), l.mul(b, a) == a);
            }
        }
        let fibers: usize = (0..l.num_supports()).map(|x| l.fiber(x).len()).sum();
        prop_assert_eq!(fibers, l.size());
    }

    #[test]
    fn idempotent_families(l in random_lrb()) {
        prop_assume!(l.is_connected());
        let action = GroupAction::trivial(&l);
        let alg = SemigroupAlgebra::new(&l, Rationals);
        let lo = build_cfpoi(&alg, choose_seeds(&alg, &action, SeedPolicy::Min).unwrap(), Some(&action)).unwrap();
        let hi = build_cfpoi(&alg, choose_seeds(&alg, &action, SeedPolicy::Max).unwrap(), Some(&action)).unwrap();
        prop_assert!(saliola_properties_check(&alg, &lo).all_pass());
        prop_assert!(saliola_properties_check(&alg, &hi).all_pass());
        prop_assert!(basis_property(&alg, &lo, 200));
        let dims = peirce_dimensions(&alg, &lo);
        prop_assert_eq!(&dims, &peirce_dimensions(&alg, &hi));
        // kB = ⊕ E_Y kB E_X
        prop_assert_eq!(dims.iter().flatten().sum::<usize>(), l.size());
    }

    #[test]
    fn radical_dimension(l in random_lrb()) {
        let alg = SemigroupAlgebra::new(&l, Rationals);
        if l.is_connected() {
            prop_assert_eq!(radical_basis(&alg).unwrap().rank(), l.size() - l.num_supports());
        }
    }

    #[test]
    fn mobius_is_euler_characteristic(l in random_lrb()) {
        let lat = l.lattice();
        for x in 0..lat.size() {
            for y in 0..lat.size() {
                if lat.leq(x, y) {
                    prop_assert!(mobius_checked(&lat.order, x, y).is_ok());
                }
            }
        }
    }

    #[test]
    fn derangement_formulas_agree_on_rank_two(m in 2usize..12) {
        let l = uniform_rank2_lattice(m).unwrap();
        let r = derangement_number(&l, 200).unwrap();
        prop_assert_eq!(r.recursive, m as i64 - 1);
        prop_assert!(r.peirce.is_none_or(|p| p == r.recursive));
    }

    #[test]
    fn derangement_formulas_agree_on_boolean(n in 0usize..8) {
        let r = derangement_number(&boolean_lattice(n).unwrap(), 400).unwrap();
        prop_assert!(r.agree);
        // d_n = n·d_{n−1} + (−1)^n
        if n > 0 {
            let prev = derangement_number(&boolean_lattice(n - 1).unwrap(), 0).unwrap().recursive;
            prop_assert_eq!(r.recursive, n as i64 * prev + if n % 2 == 0 { 1 } else { -1 });
        }
    }
}

fn atom_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `B_n` under the cyclic group generated by a random permutation of the atoms.
    #[test]
    fn identities_under_random_cyclic_symmetry(perm in (2usize..=4).prop_flat_map(atom_permutation)) {
        let n = perm.len();
        let l = boolean_lattice(n).unwrap();
        let g = l.permutation_from_atom_map(&perm).unwrap();
        let i = flag_instance(format!("B{n}/<{perm:?}>"), l.clone(), vec![g]).unwrap();
        let alg = SemigroupAlgebra::new(&i.lrb, Rationals);
        prop_assert!(theorem_a_report(&alg, &i.action).unwrap().consistent);
        let chi = derangement_character(&i.lrb, &i.action).unwrap();
        prop_assert_eq!(chi.degree().as_integer(), Some(derangement_number(&l, 0).unwrap().recursive));
        prop_assert!(random_to_top(&i).unwrap().pass);
        prop_assert!(all_pass(&theorem_e_checks(&i).unwrap()));
        let c = build_cfpoi(&alg, choose_seeds(&alg, &i.action, SeedPolicy::Min).unwrap(), Some(&i.action)).unwrap();
        prop_assert!(c.invariant);
        prop_assert!(all_pass(&theorem_d_check(&alg, &c, &i.action, &i.key).unwrap()));
    }
}

#[test]
fn derangement_formulas_agree_on_subspace_lattices() {
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let r = derangement_number(&pg_lattice(n, q).unwrap().lattice, 400).unwrap();
        assert!(r.agree, "{n} {q}: {r:?}");
    }
}
