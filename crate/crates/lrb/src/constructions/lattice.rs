//! Finite geometric lattices and the standard families.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::constructions::gf::GaloisField;
use crate::error::{LrbError, Result};
use crate::poset::FinitePoset;

#[derive(Clone, Debug)]
pub struct GeometricLattice {
    poset: FinitePoset,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    rank: Vec<usize>,
    atoms: Vec<usize>,
    bottom: usize,
    top: usize,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    size: usize,
    leq: Vec<Vec<bool>>,
    rank: Vec<usize>,
    atoms: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GeometricLattice {
    /// Validate a finite poset as a geometric lattice.
    pub fn from_poset(poset: FinitePoset) -> Result<GeometricLattice> {
        let n = poset.size();
        if n == 0 {
            return Err(LrbError::InvalidLattice("empty poset".into()));
        }
        let bad = |m: String| LrbError::InvalidLattice(m);
        let mins = poset.minimal_elements();
        let maxs = poset.maximal_elements();
        if mins.len() != 1 || maxs.len() != 1 {
            return Err(bad("no unique minimum and maximum".into()));
        }
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for x in 0..n {
            for y in x..n {
                let mut ub = poset.up_set(x).clone();
                ub.intersect_with(poset.up_set(y));
                let j = ub
                    .iter()
                    .find(|&z| ub.is_subset(poset.up_set(z)))
                    .ok_or_else(|| bad(format!("elements {x} and {y} have no least upper bound")))?;
                let mut lb = poset.down_set(x).clone();
                lb.intersect_with(poset.down_set(y));
                let m = lb
                    .iter()
                    .find(|&z| lb.is_subset(poset.down_set(z)))
                    .ok_or_else(|| bad(format!("elements {x} and {y} have no greatest lower bound")))?;
                join[x][y] = j;
                join[y][x] = j;
                meet[x][y] = m;
                meet[y][x] = m;
            }
        }
        let rank = poset.rank_function().ok_or_else(|| bad("lattice is not graded".into()))?;
        let bottom = mins[0];
        let atoms: Vec<usize> = (0..n).filter(|&x| rank[x] == 1).collect();
        for x in 0..n {
            let j = atoms.iter().filter(|&&a| poset.leq(a, x)).fold(bottom, |acc, &a| join[acc][a]);
            if j != x {
                return Err(bad(format!("element {x} is not a join of atoms")));
            }
            for y in 0..n {
                if rank[x] + rank[y] < rank[join[x][y]] + rank[meet[x][y]] {
                    return Err(bad(format!("semimodularity fails at ({x},{y})")));
                }
            }
        }
        Ok(GeometricLattice { poset, join, meet, rank, atoms, bottom, top: maxs[0] })
    }

    pub fn from_json(s: &str) -> Result<GeometricLattice> {
        let j: LatticeJson = serde_json::from_str(s).map_err(|e| LrbError::Parse(e.to_string()))?;
        if j.leq.len() != j.size {
            return Err(LrbError::Invalid(format!("size is {} but leq has {} rows", j.size, j.leq.len())));
        }
        let mut p = FinitePoset::from_matrix(&j.leq)?;
        if let Some(l) = j.labels {
            if l.len() != j.size {
                return Err(LrbError::Invalid("label count does not match size".into()));
            }
            p = p.with_labels(l);
        }
        let l = GeometricLattice::from_poset(p)?;
        if l.rank != j.rank {
            return Err(LrbError::InvalidLattice("declared ranks disagree with the order".into()));
        }
        let mut atoms = j.atoms.clone();
        atoms.sort_unstable();
        if atoms != l.atoms {
            return Err(LrbError::InvalidLattice("declared atoms disagree with the order".into()));
        }
        Ok(l)
    }

    pub fn to_json(&self) -> String {
        let j = LatticeJson {
            size: self.size(),
            leq: self.poset.matrix(),
            rank: self.rank.clone(),
            atoms: self.atoms.clone(),
            labels: self.poset.labels().map(|l| l.to_vec()),
        };
        serde_json::to_string(&j).expect("serialisable")
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn lattice_rank(&self) -> usize {
        self.rank[self.top]
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn label(&self, x: usize) -> String {
        self.poset.labels().map_or_else(|| x.to_string(), |l| l[x].clone())
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.poset.up_set(x).iter().filter(|&y| self.rank[y] == self.rank[x] + 1).collect()
    }

    /// Number of elements of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut v = vec![0; self.lattice_rank() + 1];
        for &r in &self.rank {
            v[r] += 1;
        }
        v
    }

    /// `a(x, z)`: the number of atoms of the interval `[x, z]`.
    pub fn interval_atom_count(&self, x: usize, z: usize) -> usize {
        self.upper_covers(x).into_iter().filter(|&w| self.leq(w, z)).count()
    }

    /// Maximal chains from `x` to the top, counted for every `x`.
    pub fn complete_flag_counts(&self) -> Vec<u64> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.rank[x]));
        let mut c = vec![0u64; self.size()];
        for x in order {
            c[x] = if x == self.top { 1 } else { self.upper_covers(x).iter().map(|&y| c[y]).sum() };
        }
        c
    }

    /// The interval `[x, y]` as a geometric lattice, with its embedding.
    pub fn interval(&self, x: usize, y: usize) -> Result<(GeometricLattice, Vec<usize>)> {
        if !self.leq(x, y) {
            return Err(LrbError::Invalid(format!("interval [{x},{y}] is empty")));
        }
        let els = self.poset.closed_interval(x, y);
        Ok((GeometricLattice::from_poset(self.poset.subposet(&els))?, els))
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.size() && self.poset.is_automorphism(perm)
    }

    /// Atom permutation generating the full symmetric group on atoms, for
    /// lattices whose elements are determined by their atom sets (checked).
    pub fn atom_permutation_generators(&self) -> Result<Vec<Vec<usize>>> {
        let k = self.atoms.len();
        let mut gens = Vec::new();
        if k >= 2 {
            let swap: Vec<usize> = (0..k).map(|i| if i < 2 { 1 - i } else { i }).collect();
            let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            gens.push(swap);
            if k > 2 {
                gens.push(cycle);
            }
        }
        gens.into_iter().map(|g| self.permutation_from_atom_map(&g)).collect()
    }

    /// Extend a permutation of the atoms (given by position in `atoms()`) to
    /// the lattice, via atom sets.
    pub fn permutation_from_atom_map(&self, atom_perm: &[usize]) -> Result<Vec<usize>> {
        let k = self.atoms.len();
        let key = |x: usize| -> BitSet {
            let mut s = BitSet::new(k);
            for (i, &a) in self.atoms.iter().enumerate() {
                if self.leq(a, x) {
                    s.insert(i);
                }
            }
            s
        };
        let keys: Vec<BitSet> = (0..self.size()).map(key).collect();
        let index: HashMap<&BitSet, usize> = keys.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut perm = Vec::with_capacity(self.size());
        for s in &keys {
            let mut t = BitSet::new(k);
            for i in s.iter() {
                t.insert(atom_perm[i]);
            }
            perm.push(
                *index
                    .get(&t)
                    .ok_or_else(|| LrbError::Invalid("atom permutation is not a lattice automorphism".into()))?,
            );
        }
        if !self.is_automorphism(&perm) {
            return Err(LrbError::Invalid("atom permutation is not a lattice automorphism".into()));
        }
        Ok(perm)
    }
}

fn from_sets(sets: Vec<BitSet>, labels: Vec<String>) -> Result<GeometricLattice> {
    let n = sets.len();
    let p = FinitePoset::from_relation(n, |a, b| sets[a].is_subset(&sets[b]))?.with_labels(labels);
    GeometricLattice::from_poset(p)
}

/// Subsets of `{1..n}` ordered by size, then by bitmask.
pub fn boolean_lattice(n: usize) -> Result<GeometricLattice> {
    if n > 12 {
        return Err(LrbError::Invalid(format!("boolean lattice of rank {n} is too large")));
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let sets = masks
        .iter()
        .map(|&m| {
            let mut s = BitSet::new(n);
            for i in 0..n {
                if m >> i & 1 == 1 {
                    s.insert(i);
                }
            }
            s
        })
        .collect::<Vec<_>>();
    let labels = sets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    from_sets(sets, labels)
}

/// Rank-2 lattice with `m` atoms.
pub fn uniform_rank2_lattice(m: usize) -> Result<GeometricLattice> {
    if m < 2 {
        return Err(LrbError::Invalid("a rank-2 geometric lattice needs at least two atoms".into()));
    }
    let n = m + 2;
    let p = FinitePoset::from_relation(n, |a, b| a == b || a == 0 || b == n - 1)?.with_labels(
        std::iter::once("0".to_string())
            .chain((1..=m).map(|i| format!("a{i}")))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    );
    GeometricLattice::from_poset(p)
}

/// Vectors of `GF(q)^n` are encoded as base-`q` integers, coordinate 0 lowest.
fn encode(v: &[usize], q: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * q + c)
}

fn decode(mut x: usize, q: usize, n: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    for c in v.iter_mut() {
        *c = x % q;
        x /= q;
    }
    v
}

/// Every reduced row echelon matrix over the field, as lists of rows,
/// grouped by rank.
fn rref_matrices(f: &GaloisField, n: usize) -> Vec<Vec<Vec<usize>>> {
    let q = f.order();
    let mut out = Vec::new();
    for k in 0..=n {
        let mut pivots: Vec<Vec<usize>> = Vec::new();
        let mut cur = Vec::new();
        fn choose(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                choose(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        choose(0, n, k, &mut cur, &mut pivots);
        for piv in pivots {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
                .collect();
            let total = q.pow(free.len() as u32);
            for code in 0..total {
                let vals = decode(code, q, free.len());
                let mut m = vec![vec![0; n]; k];
                for r in 0..k {
                    m[r][piv[r]] = 1;
                }
                for (&(r, c), &v) in free.iter().zip(&vals) {
                    m[r][c] = v;
                }
                out.push(m);
            }
        }
    }
    out
}

fn row_span(f: &GaloisField, rows: &[Vec<usize>], n: usize) -> Vec<usize> {
    let q = f.order();
    let k = rows.len();
    let mut out = Vec::with_capacity(q.pow(k as u32));
    for code in 0..q.pow(k as u32) {
        let c = decode(code, q, k);
        let mut v = vec![0; n];
        for (r, &cr) in c.iter().enumerate() {
            for j in 0..n {
                v[j] = f.add(v[j], f.mul(cr, rows[r][j]));
            }
        }
        out.push(encode(&v, q));
    }
    out
}

fn matrix_label(m: &[Vec<usize>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("<{}>", rows.join(";"))
}

/// The lattice of subspaces of `GF(q)^n` (projective geometry `PG(n-1, q)`),
/// together with the point sets of its elements.
#[derive(Clone, Debug)]
pub struct SubspaceLattice {
    pub lattice: GeometricLattice,
    pub field: GaloisField,
    pub n: usize,
    /// Vector set of each element (encoded vectors).
    pub sets: Vec<BitSet>,
}

pub fn pg_lattice(n: usize, q: usize) -> Result<SubspaceLattice> {
    let f = GaloisField::new(q)?;
    if q.checked_pow(n as u32).is_none_or(|v| v > 1 << 16) {
        return Err(LrbError::Invalid(format!("GF({q})^{n} is too large")));
    }
    let total = q.pow(n as u32);
    let mats = rref_matrices(&f, n);
    let sets: Vec<BitSet> = mats
        .iter()
        .map(|m| {
            let mut s = BitSet::new(total);
            for v in row_span(&f, m, n) {
                s.insert(v);
            }
            s
        })
        .collect();
    let labels = mats.iter().map(|m| matrix_label(m)).collect();
    let lattice = from_sets(sets.clone(), labels)?;
    Ok(SubspaceLattice { lattice, field: f, n, sets })
}

impl SubspaceLattice {
    /// The permutation of lattice elements induced by an invertible matrix
    /// acting on column vectors.
    pub fn matrix_action(&self, g: &[Vec<usize>]) -> Result<Vec<usize>> {
        let (f, n) = (&self.field, self.n);
        let q = f.order();
        let image = |v: usize| -> usize {
            let x = decode(v, q, n);
            let y: Vec<usize> = (0..n).map(|i| (0..n).fold(0, |acc, j| f.add(acc, f.mul(g[i][j], x[j])))).collect();
            encode(&y, q)
        };
        let index: HashMap<&BitSet, usize> = self.sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let total = q.pow(n as u32);
        let mut perm = Vec::with_capacity(self.sets.len());
        for s in &self.sets {
            let mut t = BitSet::new(total);
            for v in s.iter() {
                t.insert(image(v));
            }
            perm.push(*index.get(&t).ok_or_else(|| LrbError::Invalid("matrix is not invertible".into()))?);
        }
        Ok(perm)
    }

    /// Generators of `GL(n, q)`: elementary transvections and one diagonal
    /// matrix with a primitive element, as lattice permutations.
    pub fn gl_generators(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.n;
        let ident = |i: usize, j: usize| usize::from(i == j);
        let mut mats = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    mats.push((0..n).map(|i| (0..n).map(|j| if (i, j) == (a, b) { 1 } else { ident(i, j) }).collect()).collect::<Vec<Vec<usize>>>());
                }
            }
        }
        if self.field.order() > 2 && n > 0 {
            let w = self.field.primitive_element();
            mats.push((0..n).map(|i| (0..n).map(|j| if i == 0 && j == 0 { w } else { ident(i, j) }).collect()).collect());
        }
        mats.iter().map(|m| self.matrix_action(m)).collect()
    }
}

/// Affine subspaces of `GF(q)^n` with an empty bottom element, with rank =
/// affine dimension + 1.
pub fn ag_lattice(n: usize, q: usize) -> Result<GeometricLattice> {
    let pg = pg_lattice(n, q)?;
    let total = q.pow(n as u32);
    let f = &pg.field;
    let mut seen: HashMap<BitSet, ()> = HashMap::new();
    let mut sets: Vec<(usize, usize, BitSet)> = vec![(0, 0, BitSet::new(total))];
    for w in pg.sets.iter() {
        for v in 0..total {
            let dv = decode(v, q, n);
            let mut s = BitSet::new(total);
            for u in w.iter() {
                let du = decode(u, q, n);
                let sum: Vec<usize> = dv.iter().zip(&du).map(|(a, b)| f.add(*a, *b)).collect();
                s.insert(encode(&sum, q));
            }
            if seen.insert(s.clone(), ()).is_none() {
                let first = s.first().unwrap();
                sets.push((w.count(), first, s));
            }
        }
    }
    sets.sort_by_key(|a| (a.0, a.1, a.2.to_vec()));
    let labels = sets
        .iter()
        .map(|(_, _, s)| {
            if s.is_empty() {
                "empty".to_string()
            } else {
                format!("{{{}}}", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            }
        })
        .collect();
    from_sets(sets.into_iter().map(|t| t.2).collect(), labels)
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn q_binomial(n: usize, k: usize, q: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_rank_sizes() {
        assert_eq!(boolean_lattice(3).unwrap().rank_sizes(), vec![1, 3, 3, 1]);
        assert_eq!(boolean_lattice(0).unwrap().rank_sizes(), vec![1]);
    }

    #[test]
    fn pg_rank_sizes_are_q_binomials() {
        for (n, q) in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4)] {
            let l = pg_lattice(n, q).unwrap().lattice;
            let expect: Vec<usize> = (0..=n).map(|k| q_binomial(n, k, q as u64) as usize).collect();
            assert_eq!(l.rank_sizes(), expect, "pg({n},{q})");
        }
    }

    #[test]
    fn ag_rank_sizes() {
        for (n, q) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
            let l = ag_lattice(n, q).unwrap();
            let qq = q as u64;
            let expect: Vec<usize> = (0..=n + 1)
                .map(|k| if k == 0 { 1 } else { (qq.pow((n + 1 - k) as u32) * q_binomial(n, k - 1, qq)) as usize })
                .collect();
            assert_eq!(l.rank_sizes(), expect, "ag({n},{q})");
        }
    }

    #[test]
    fn non_lattice_rejected() {
        // bowtie: two minima under two maxima plus a bottom and top is fine;
        // the bowtie alone has no unique bottom
        let p = FinitePoset::from_relation(4, |a, b| a == b || (a < 2 && b >= 2)).unwrap();
        assert!(GeometricLattice::from_poset(p).is_err());
        // a chain of length 2 is not atomic
        let c = FinitePoset::from_relation(3, |a, b| a <= b).unwrap();
        assert!(matches!(GeometricLattice::from_poset(c), Err(LrbError::InvalidLattice(_))));
    }

    #[test]
    fn gl_acts_on_pg() {
        let s = pg_lattice(2, 3).unwrap();
        for g in s.gl_generators().unwrap() {
            assert!(s.lattice.is_automorphism(&g));
        }
    }

    #[test]
    fn json_round_trip() {
        let l = uniform_rank2_lattice(3).unwrap();
        let back = GeometricLattice::from_json(&l.to_json()).unwrap();
        assert_eq!(back.to_json(), l.to_json());
    }
}
