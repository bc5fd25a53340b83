//! Augmented order complexes, reduced homology and its group characters.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{LrbError, Result};
use crate::field::{Field, Rationals};
use crate::group::classfn::ClassFunction;
use crate::group::perm::PermGroup;
use crate::linalg::{kernel, unimodular_factors, Echelon};
use crate::poset::FinitePoset;
use crate::rational::Q;

/// Chains of a finite poset, grouped by degree (`chains[d + 1]` holds the
/// chains with `d + 1` elements), each stored increasing.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    /// Ground elements, in an order compatible with the poset.
    pub elements: Vec<usize>,
    pub chains: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    position: HashMap<usize, usize>,
}

impl OrderComplex {
    /// Order complex of `elements` under `leq`.
    pub fn new(elements: &[usize], leq: impl Fn(usize, usize) -> bool) -> OrderComplex {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        // sort by number of elements below, which is a linear extension
        let below = |x: usize| els.iter().filter(|&&w| w != x && leq(w, x)).count();
        let mut keyed: Vec<(usize, usize)> = els.iter().map(|&x| (below(x), x)).collect();
        keyed.sort_unstable();
        let els: Vec<usize> = keyed.into_iter().map(|(_, x)| x).collect();
        let n = els.len();
        let up: Vec<Vec<usize>> =
            (0..n).map(|i| ((i + 1)..n).filter(|&j| els[i] != els[j] && leq(els[i], els[j])).collect()).collect();
        let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
        let mut frontier: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                for &j in &up[*c.last().unwrap()] {
                    let mut d = c.clone();
                    d.push(j);
                    next.push(d);
                }
            }
            chains.push(std::mem::replace(&mut frontier, next));
        }
        let to_global = |c: &Vec<usize>| c.iter().map(|&i| els[i]).collect::<Vec<usize>>();
        let chains: Vec<Vec<Vec<usize>>> = chains.iter().map(|cs| cs.iter().map(to_global).collect()).collect();
        let index = chains.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
        let position = els.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        OrderComplex { elements: els, chains, index, position }
    }

    pub fn of_poset(p: &FinitePoset, elements: &[usize]) -> OrderComplex {
        OrderComplex::new(elements, |a, b| p.leq(a, b))
    }

    /// Largest degree with chains (`-1` for the empty poset).
    pub fn top_degree(&self) -> i64 {
        self.chains.len() as i64 - 2
    }

    pub fn num_chains(&self, d: i64) -> usize {
        self.slot(d).map_or(0, |s| self.chains[s].len())
    }

    fn slot(&self, d: i64) -> Option<usize> {
        let s = d + 1;
        (s >= 0 && (s as usize) < self.chains.len()).then_some(s as usize)
    }

    /// `∂c = Σ_j (−1)^j (c without its j-th element)` as sparse integer terms.
    pub fn boundary_of(&self, d: i64, c: usize) -> Vec<(usize, i64)> {
        let s = self.slot(d).expect("degree in range");
        if s == 0 {
            return vec![];
        }
        let chain = &self.chains[s][c];
        (0..chain.len())
            .map(|j| {
                let mut f = chain.clone();
                f.remove(j);
                (self.index[s - 1][&f], if j % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    /// Integer matrix of `∂_d : C_d → C_{d−1}`, rows indexed by `C_{d−1}`.
    pub fn boundary_matrix(&self, d: i64) -> Vec<Vec<i64>> {
        let rows = self.num_chains(d - 1);
        let cols = self.num_chains(d);
        let mut m = vec![vec![0i64; cols]; rows];
        if d >= 0 {
            for c in 0..cols {
                for (r, v) in self.boundary_of(d, c) {
                    m[r][c] += v;
                }
            }
        }
        m
    }

    /// `∂_{d−1} ∘ ∂_d = 0` for every degree.
    pub fn boundary_squared_vanishes(&self) -> bool {
        (1..=self.top_degree()).all(|d| {
            (0..self.num_chains(d)).all(|c| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for (f, v) in self.boundary_of(d, c) {
                    for (g, w) in self.boundary_of(d - 1, f) {
                        *acc.entry(g).or_default() += v * w;
                    }
                }
                acc.values().all(|&x| x == 0)
            })
        })
    }

    fn boundary_rank<F: Field>(&self, field: &F, d: i64) -> usize {
        if d < 0 || self.num_chains(d) == 0 {
            return 0;
        }
        let mut e = Echelon::new(field.clone(), self.num_chains(d - 1));
        for c in 0..self.num_chains(d) {
            let terms: Vec<(usize, F::E)> = self.boundary_of(d, c).into_iter().map(|(r, v)| (r, field.from_i64(v))).collect();
            e.insert_sparse(&terms);
        }
        e.rank()
    }

    /// `dim H̃_d` for `d = −1..=top`.
    pub fn reduced_homology<F: Field>(&self, field: &F) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.top_degree() + 1).map(|d| self.boundary_rank(field, d)).collect();
        (-1..=self.top_degree())
            .map(|d| {
                let below = if d >= 0 { ranks[d as usize] } else { 0 };
                let above = ranks[(d + 1) as usize];
                self.num_chains(d) - below - above
            })
            .collect()
    }

    /// `Σ_d (−1)^d |C_d|`, starting at the empty chain.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        (-1..=self.top_degree()).map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 } * self.num_chains(d) as i64).sum()
    }

    /// Image of a chain under an order-preserving map of the ground set.
    fn image(&self, d: i64, c: usize, f: &dyn Fn(usize) -> usize) -> Option<usize> {
        let s = self.slot(d)?;
        let img: Vec<usize> = self.chains[s][c].iter().map(|&x| f(x)).collect();
        self.index[s].get(&img).copied()
    }

    /// Whether `H̃_{d}(·; ℤ)` has no torsion in the degrees fed by the given
    /// boundary maps (their nonzero invariant factors are all 1).
    pub fn torsion_free_at(&self, degrees: &[i64]) -> bool {
        degrees.iter().all(|&d| d < 0 || d > self.top_degree() || unimodular_factors(&self.boundary_matrix(d)))
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.position.get(&x).copied()
    }
}

/// Reduced homology with group characters, starting at `min_degree`
/// (`−1`, or `−2` for the one-point interval sentinel).
#[derive(Clone, Debug)]
pub struct EquivariantHomology {
    pub min_degree: i64,
    pub dims: Vec<usize>,
    pub characters: Vec<ClassFunction>,
}

impl EquivariantHomology {
    /// The interval `(p, p)`: one class in degree −2 with trivial action.
    pub fn sentinel(group: &Arc<PermGroup>) -> EquivariantHomology {
        EquivariantHomology { min_degree: -2, dims: vec![1], characters: vec![ClassFunction::trivial(group)] }
    }

    pub fn is_sentinel(&self) -> bool {
        self.min_degree == -2
    }

    pub fn dim(&self, d: i64) -> usize {
        let i = d - self.min_degree;
        if i < 0 {
            0
        } else {
            self.dims.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn character(&self, d: i64, group: &Arc<PermGroup>) -> ClassFunction {
        let i = d - self.min_degree;
        if i < 0 || i as usize >= self.characters.len() {
            ClassFunction::zero(group)
        } else {
            self.characters[i as usize].clone()
        }
    }

    /// Cohomology character in degree `d` (the contragredient).
    pub fn cohomology_character(&self, d: i64, group: &Arc<PermGroup>) -> ClassFunction {
        self.character(d, group).contragredient()
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<i64> {
        (0..self.dims.len()).filter(|&i| self.dims[i] > 0).map(|i| i as i64 + self.min_degree).collect()
    }

    /// `Σ (−1)^d dim H̃_d`.
    pub fn euler(&self) -> i64 {
        self.dims.iter().enumerate().map(|(i, &v)| if (i as i64 + self.min_degree).rem_euclid(2) == 0 { v as i64 } else { -(v as i64) }).sum()
    }
}

/// Complement of the boundaries inside the cycles of degree `d`, as an
/// echelon basis whose first `boundaries` rows span the boundaries.
struct HomologyBasis {
    echelon: Echelon<Rationals>,
    boundaries: usize,
}

fn homology_basis(cx: &OrderComplex, d: i64) -> HomologyBasis {
    let n = cx.num_chains(d);
    let mut e = Echelon::new(Rationals, n);
    for c in 0..cx.num_chains(d + 1) {
        let terms: Vec<(usize, Q)> = cx.boundary_of(d + 1, c).into_iter().map(|(r, v)| (r, Q::from_int(v))).collect();
        e.insert_sparse(&terms);
    }
    let boundaries = e.rank();
    let rows: Vec<Vec<Q>> = if d >= 0 {
        cx.boundary_matrix(d).into_iter().map(|r| r.into_iter().map(Q::from_int).collect()).collect()
    } else {
        vec![]
    };
    for z in kernel(&Rationals, &rows, n) {
        e.insert(z);
    }
    HomologyBasis { echelon: e, boundaries }
}

/// Homology characters of a group acting on the ground set by order
/// automorphisms; `act(g, x)` for group element indices `g`. The Hopf trace
/// identity is asserted at every class representative.
pub fn equivariant_homology(
    cx: &OrderComplex,
    group: &Arc<PermGroup>,
    act: impl Fn(usize, usize) -> usize,
) -> Result<EquivariantHomology> {
    for &g in group.generators() {
        for &x in &cx.elements {
            let gx = act(g, x);
            if cx.position(gx).is_none() {
                return Err(LrbError::Precondition(format!("group element does not preserve the ground set ({x} -> {gx})")));
            }
        }
        for c in 0..cx.num_chains(1) {
            if cx.image(1, c, &|x| act(g, x)).is_none() {
                return Err(LrbError::Precondition("action is not order-preserving".into()));
            }
        }
    }
    let top = cx.top_degree();
    let bases: Vec<HomologyBasis> = (-1..=top).map(|d| homology_basis(cx, d)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.echelon.rank() - b.boundaries).collect();
    let mut values: Vec<Vec<i64>> = vec![Vec::with_capacity(group.num_classes()); dims.len()];
    for cl in 0..group.num_classes() {
        let g = group.class_rep(cl);
        let f = |x: usize| act(g, x);
        let mut lefschetz = 0i64;
        let mut fixed = 0i64;
        for (i, b) in bases.iter().enumerate() {
            let d = i as i64 - 1;
            let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            let n = cx.num_chains(d);
            let mut perm = vec![0usize; n];
            for (c, p) in perm.iter_mut().enumerate() {
                *p = cx.image(d, c, &f).ok_or_else(|| LrbError::Precondition("action is not order-preserving".into()))?;
                if *p == c {
                    fixed += sign;
                }
            }
            let mut t = Q::zero();
            for k in b.boundaries..b.echelon.rank() {
                let row = b.echelon.row(k);
                let mut img = vec![Q::zero(); n];
                for (c, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        img[perm[c]] = v.clone();
                    }
                }
                let coords = b
                    .echelon
                    .coordinates(&img)
                    .ok_or_else(|| LrbError::Inconsistent("group image of a cycle is not a cycle".into()))?;
                t += &coords[k];
            }
            let t = t.to_i64().filter(|_| t.is_integer()).ok_or_else(|| LrbError::Inconsistent("non-integer homology trace".into()))?;
            lefschetz += sign * t;
            values[i].push(t);
        }
        if lefschetz != fixed {
            return Err(LrbError::Inconsistent(format!("Hopf trace fails at class {cl}: {lefschetz} vs {fixed}")));
        }
    }
    let characters = values
        .into_iter()
        .map(|vals| ClassFunction::from_int_fn(group, |g| vals[group.class_of(g)]))
        .collect();
    Ok(EquivariantHomology { min_degree: -1, dims, characters })
}

/// Homology of the open interval `(x, y)` of a poset with a group acting on
/// it; `x == y` gives the sentinel. Hall's theorem is asserted.
pub fn interval_homology(
    p: &FinitePoset,
    x: usize,
    y: usize,
    group: &Arc<PermGroup>,
    act: impl Fn(usize, usize) -> usize,
) -> Result<EquivariantHomology> {
    if !p.leq(x, y) {
        return Err(LrbError::Invalid(format!("interval ({x},{y}) needs x <= y")));
    }
    let h = if x == y {
        EquivariantHomology::sentinel(group)
    } else {
        let cx = OrderComplex::of_poset(p, &p.open_interval(x, y));
        equivariant_homology(&cx, group, act)?
    };
    let mu = p.mobius(x, y)?;
    if h.euler() != mu {
        return Err(LrbError::Inconsistent(format!("Hall fails on ({x},{y}): chi = {} but mu = {mu}", h.euler())));
    }
    Ok(h)
}

/// `μ(x, y)`, cross-checked against the reduced Euler characteristic of `(x, y)`.
pub fn mobius_checked(p: &FinitePoset, x: usize, y: usize) -> Result<i64> {
    let mu = p.mobius(x, y)?;
    let chi = if x == y { 1 } else { OrderComplex::of_poset(p, &p.open_interval(x, y)).reduced_euler_characteristic() };
    if chi != mu {
        return Err(LrbError::Inconsistent(format!("Hall fails on ({x},{y}): chi = {chi} but mu = {mu}")));
    }
    Ok(mu)
}
