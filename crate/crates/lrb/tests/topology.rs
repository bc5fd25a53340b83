use std::sync::Arc;

use lrb::group::{ClassFunction, PermGroup};
use lrb::instances::load;
use lrb::topology::*;
use lrb::{FinitePoset, Rationals};

fn boolean(n: usize) -> FinitePoset {
    FinitePoset::from_relation(1 << n, |a, b| a & !b == 0).unwrap()
}

fn all(p: &FinitePoset) -> Vec<usize> {
    (0..p.size()).collect()
}

/// S_n permuting the points of {1..n}, acting on subsets (bitmasks).
fn symmetric_on_subsets(n: usize) -> Arc<PermGroup> {
    let swap = |m: usize| (m & !3) | ((m & 1) << 1) | ((m >> 1) & 1);
    let cycle = |m: usize| ((m << 1) | (m >> (n - 1))) & ((1 << n) - 1);
    let gens = vec![(0..1 << n).map(swap).collect(), (0..1 << n).map(cycle).collect()];
    Arc::new(PermGroup::generate(1 << n, &gens, 1000).unwrap())
}

#[test]
fn hexagon_interval() {
    let b3 = boolean(3);
    let cx = OrderComplex::of_poset(&b3, &b3.open_interval(0, 7));
    assert_eq!(cx.reduced_homology(&Rationals), vec![0, 0, 1]);
    assert!(cx.boundary_squared_vanishes());
}

#[test]
fn cone_and_empty() {
    let b2 = boolean(2);
    let cx = OrderComplex::of_poset(&b2, &all(&b2));
    assert!(cx.reduced_homology(&Rationals).iter().all(|&d| d == 0));
    let cx = OrderComplex::of_poset(&b2, &[]);
    assert_eq!(cx.reduced_homology(&Rationals), vec![1]);
    assert_eq!(cx.reduced_euler_characteristic(), -1);
}

#[test]
fn sign_character_on_boolean_interval() {
    let b3 = boolean(3);
    let g = symmetric_on_subsets(3);
    assert_eq!(g.order(), 6);
    let h = interval_homology(&b3, 0, 7, &g, |k, x| g.act(k, x)).unwrap();
    let chi = h.character(1, &g);
    // sign of the permutation of the 3 points: count fixed singletons
    let sign = ClassFunction::from_int_fn(&g, |k| {
        let fixed = (0..3).filter(|&i| g.act(k, 1 << i) == 1 << i).count();
        match fixed {
            3 => 1,
            1 => -1,
            _ => 1,
        }
    });
    assert_eq!(chi, sign);
    let triv = Arc::new(PermGroup::trivial(8));
    let h = interval_homology(&b3, 0, 7, &triv, |_, x| x).unwrap();
    assert_eq!(h.character(1, &triv), ClassFunction::constant(&triv, 1));
}

#[test]
fn polygon_boundary_rotations() {
    // vertices 0..n, edges n..2n with edge i between vertices i and i+1
    let n = 5;
    let p = FinitePoset::from_relation(2 * n, |a, b| {
        a == b || (a < n && b >= n && (b - n == a || (b - n + 1) % n == a))
    })
    .unwrap();
    let rot: Vec<usize> = (0..2 * n).map(|x| if x < n { (x + 1) % n } else { n + (x - n + 1) % n }).collect();
    let refl: Vec<usize> = (0..2 * n).map(|x| if x < n { (n - x) % n } else { n + (2 * n - 1 - (x - n)) % n }).collect();
    let g = Arc::new(PermGroup::generate(2 * n, &[rot.clone(), refl], 100).unwrap());
    assert_eq!(g.order(), 2 * n);
    let cx = OrderComplex::of_poset(&p, &all(&p));
    let h = equivariant_homology(&cx, &g, |k, x| g.act(k, x)).unwrap();
    assert_eq!(h.dims, vec![0, 0, 1]);
    let chi = h.character(1, &g);
    for k in 0..g.order() {
        // a rotation fixes no vertex unless trivial; reflections of an odd polygon fix one vertex
        let fixes_vertex = (0..n).any(|v| g.act(k, v) == v);
        let is_rotation = k == 0 || !fixes_vertex;
        assert_eq!(chi.value(k).as_integer(), Some(if is_rotation { 1 } else { -1 }));
    }
}

#[test]
fn mobius_values() {
    for n in 0..5 {
        let b = boolean(n);
        assert_eq!(mobius_checked(&b, 0, (1 << n) - 1).unwrap(), if n % 2 == 0 { 1 } else { -1 });
    }
    // 0 < a, b, c < 1
    let p = FinitePoset::from_relation(5, |x, y| x == y || x == 0 || y == 4).unwrap();
    assert_eq!(mobius_checked(&p, 0, 4).unwrap(), 2);
    assert_eq!(mobius_checked(&p, 2, 2).unwrap(), 1);
    assert!(mobius_checked(&p, 4, 0).is_err());
}

#[test]
fn sentinel_interval() {
    let g = Arc::new(PermGroup::trivial(1));
    let p = FinitePoset::from_relation(1, |_, _| true).unwrap();
    let h = interval_homology(&p, 0, 0, &g, |_, x| x).unwrap();
    assert!(h.is_sentinel());
    assert_eq!(h.dim(-2), 1);
    assert_eq!(h.euler(), 1);
    assert_eq!(h.cohomology_character(-2, &g), ClassFunction::trivial(&g));
}

#[test]
fn joins() {
    let two_points = FinitePoset::from_relation(2, |a, b| a == b).unwrap();
    let r = join_homology_check(&two_points, &two_points);
    assert!(r.pass);
    assert_eq!(r.join, vec![0, 0, 1]);
    let empty = FinitePoset::from_relation(0, |_, _| true).unwrap();
    let r = join_homology_check(&empty, &two_points);
    assert!(r.pass);
    assert_eq!(r.join, vec![0, 1]);
    let b2 = boolean(2);
    let r = join_homology_check(&b2, &b2);
    assert!(r.pass && r.join.iter().all(|&d| d == 0));
}

#[test]
fn star_posets() {
    let i = load("builtin:free-lrb?n=3&group=trivial").unwrap();
    let top = i.lrb.semigroup().identity().unwrap();
    let h = i.group().clone();
    let sp = star_action_poset(&i.lrb, top, None, &h).unwrap();
    assert_eq!(sp.elements, i.lrb.strict_lower(top, None));
    assert_eq!(sp.elements.len(), 15);
    // three components (one per atom), so a 2-dimensional character
    let bottom = i.lrb.lattice().min;
    let chi = h0_tilde_character(&i.lrb, bottom, top, &h).unwrap();
    assert_eq!(chi.degree().as_integer(), Some(2));

    let i = load("builtin:free-lrb?n=3").unwrap();
    let g = i.group().clone();
    let chi = h0_tilde_character(&i.lrb, bottom, top, &g).unwrap();
    // the components are permuted like the atoms: standard representation
    let atoms = i.flags().unwrap().atom_flags();
    let perm = ClassFunction::permutation_character(&g, &atoms).unwrap();
    assert_eq!(chi, perm.sub(&ClassFunction::trivial(&g)).unwrap());
}

#[test]
fn square_boundary_twisted_action() {
    let i = load("builtin:cubulated-ngon?n=4&group=dihedral").unwrap();
    let l = &i.lrb;
    let q0 = (0..l.size()).find(|&b| l.semigroup().label(b) == "Q0").unwrap();
    let h = i.action.stabilizer(l.sigma(q0));
    let sp = star_action_poset(l, q0, None, &h).unwrap();
    assert_eq!(sp.elements.len(), 8);
    let hom = star_homology(l, &sp).unwrap();
    assert_eq!(hom.dims, vec![0, 0, 1]);
    let deg = degree_character(l, l.sigma(q0), &h).unwrap();
    // the reflection through the square's diagonal swaps its two hyperplanes
    let swaps = (0..h.order()).filter(|&k| deg.value(k).as_integer() == Some(-1)).count();
    assert!(swaps > 0);
    assert_eq!(deg.value(0).as_integer(), Some(1));
}

#[test]
fn degree_of_minimal_support_is_trivial() {
    let i = load("builtin:arrangement?m=3").unwrap();
    let l = &i.lrb;
    let x = l.lattice().min;
    let h = i.action.stabilizer(x);
    assert_eq!(degree_character(l, x, &h).unwrap(), ClassFunction::trivial(&h));
}

#[test]
fn cw_predicate() {
    for s in ["builtin:arrangement?m=3", "builtin:arrangement?m=4", "builtin:cubulated-ngon?n=4", "builtin:chain-semilattice?n=0"] {
        let i = load(s).unwrap();
        assert!(is_cw_lrb(&i.lrb).is_cw, "{s}");
        assert!(non_cohen_macaulay_intervals(&i.lrb).is_empty(), "{s}");
    }
    for s in ["builtin:free-lrb?n=2", "builtin:chain-semilattice?n=1"] {
        let i = load(s).unwrap();
        assert!(!is_cw_lrb(&i.lrb).is_cw, "{s}");
    }
}
