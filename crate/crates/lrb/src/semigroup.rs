//! Finite semigroups as multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{LrbError, Result};

/// A finite semigroup on `0..size`; the table is the single source of truth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    n: usize,
    mul: Vec<u32>,
    identity: Option<usize>,
    labels: Option<Vec<String>>,
}

/// Outcome of [`Semigroup::check_lrb_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LrbAxiomCheck {
    pub ok: bool,
    /// `(x, y)` with `x*x != x` (then `y == x`) or `x*y*x != x*y`.
    pub witness: Option<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct SemigroupJson {
    size: usize,
    mul: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    identity: Option<usize>,
}

impl Semigroup {
    /// Validate and build from a square table.
    pub fn new(table: Vec<Vec<usize>>, identity: Option<usize>, labels: Option<Vec<String>>) -> Result<Semigroup> {
        let n = table.len();
        if n == 0 {
            return Err(LrbError::Empty);
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(LrbError::Invalid(format!("row {i} of the table has length {} (expected {n})", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(LrbError::Invalid(format!("entry ({i},{j}) = {v} is out of range")));
                }
                mul.push(v as u32);
            }
        }
        Self::from_flat(n, mul, identity, labels)
    }

    pub(crate) fn from_flat(n: usize, mul: Vec<u32>, identity: Option<usize>, labels: Option<Vec<String>>) -> Result<Semigroup> {
        if n == 0 {
            return Err(LrbError::Empty);
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(LrbError::Invalid(format!("{} labels for {n} elements", l.len())));
            }
        }
        let s = Semigroup { n, mul, identity, labels };
        s.check_associative()?;
        if let Some(e) = identity {
            if e >= n || (0..n).any(|a| s.mul(e, a) != a || s.mul(a, e) != a) {
                return Err(LrbError::Invalid(format!("element {e} is not an identity")));
            }
        }
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    /// An identity element, whether or not one was declared.
    pub fn find_identity(&self) -> Option<usize> {
        self.identity.or_else(|| (0..self.n).find(|&e| (0..self.n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// A generating set: the indecomposable elements, completed greedily.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.n;
        let mut decomposable = vec![false; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(a, b);
                if c != a && c != b {
                    decomposable[c] = true;
                }
            }
        }
        let mut gens: Vec<usize> = (0..n).filter(|&c| !decomposable[c]).collect();
        let mut inside = vec![false; n];
        let mut members: Vec<usize> = Vec::new();
        let mut queue: Vec<usize> = Vec::new();
        let add = |x: usize, inside: &mut Vec<bool>, queue: &mut Vec<usize>| {
            if !inside[x] {
                inside[x] = true;
                queue.push(x);
            }
        };
        for &g in &gens {
            add(g, &mut inside, &mut queue);
        }
        loop {
            while let Some(u) = queue.pop() {
                members.push(u);
                for i in 0..members.len() {
                    let v = members[i];
                    add(self.mul(u, v), &mut inside, &mut queue);
                    add(self.mul(v, u), &mut inside, &mut queue);
                }
            }
            match (0..n).find(|&x| !inside[x]) {
                None => break,
                Some(x) => {
                    gens.push(x);
                    add(x, &mut inside, &mut queue);
                }
            }
        }
        gens.sort_unstable();
        gens
    }

    /// Exact associativity check by Light's test over a generating set.
    pub fn check_associative(&self) -> Result<()> {
        let gens = self.generating_set();
        for x in 0..self.n {
            for &a in &gens {
                let xa = self.mul(x, a);
                for y in 0..self.n {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(LrbError::NotAssociative(x, a, y));
                    }
                }
            }
        }
        Ok(())
    }

    /// Check `x^2 = x` and `xyx = xy`.
    pub fn check_lrb_axioms(&self) -> LrbAxiomCheck {
        for x in 0..self.n {
            if self.mul(x, x) != x {
                return LrbAxiomCheck { ok: false, witness: Some((x, x)) };
            }
        }
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.mul(x, y);
                if self.mul(xy, x) != xy {
                    return LrbAxiomCheck { ok: false, witness: Some((x, y)) };
                }
            }
        }
        LrbAxiomCheck { ok: true, witness: None }
    }

    /// Sub-table on a subset closed under multiplication.
    pub fn subsemigroup(&self, elements: &[usize]) -> Result<Semigroup> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &e) in elements.iter().enumerate() {
            pos[e] = i;
        }
        let m = elements.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in elements {
            for &b in elements {
                let c = pos[self.mul(a, b)];
                if c == usize::MAX {
                    return Err(LrbError::Invalid(format!("subset is not closed: {a}*{b} = {} is outside", self.mul(a, b))));
                }
                mul.push(c as u32);
            }
        }
        let identity = self.identity.and_then(|e| (pos[e] != usize::MAX).then_some(pos[e]));
        let labels = self.labels.as_ref().map(|l| elements.iter().map(|&e| l[e].clone()).collect());
        Semigroup::from_flat(m, mul, identity, labels)
    }

    /// The join `S * S'`: disjoint union in which every element of `S'` acts
    /// as an identity on `S` from both sides.
    pub fn lrb_join(&self, other: &Semigroup) -> Result<Semigroup> {
        let (n, m) = (self.n, other.n);
        let t = n + m;
        let mut mul = Vec::with_capacity(t * t);
        for a in 0..t {
            for b in 0..t {
                let c = match (a < n, b < n) {
                    (true, true) => self.mul(a, b),
                    (false, false) => n + other.mul(a - n, b - n),
                    (true, false) => a,
                    (false, true) => b,
                };
                mul.push(c as u32);
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some((0..n).map(|i| self.label(i)).chain((0..m).map(|i| format!("{}'", other.label(i)))).collect()),
        };
        Semigroup::from_flat(t, mul, other.identity.map(|e| e + n), labels)
    }

    pub fn to_json(&self) -> String {
        let j = SemigroupJson { size: self.n, mul: self.table(), labels: self.labels.clone(), identity: self.identity };
        serde_json::to_string(&j).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<Semigroup> {
        let j: SemigroupJson = serde_json::from_str(s).map_err(|e| LrbError::Parse(e.to_string()))?;
        if j.mul.len() != j.size {
            return Err(LrbError::Invalid(format!("size is {} but the table has {} rows", j.size, j.mul.len())));
        }
        Semigroup::new(j.mul, j.identity, j.labels)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Semigroup> {
        Self::from_json(&v.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_zero(n: usize) -> Semigroup {
        Semigroup::new((0..n).map(|a| vec![a; n]).collect(), None, None).unwrap()
    }

    #[test]
    fn left_zero_is_lrb() {
        assert!(left_zero(2).check_lrb_axioms().ok);
    }

    #[test]
    fn right_zero_is_not_lrb() {
        let s = Semigroup::new(vec![vec![0, 1], vec![0, 1]], None, None).unwrap();
        let c = s.check_lrb_axioms();
        assert!(!c.ok);
        assert_eq!(c.witness, Some((0, 1)));
    }

    #[test]
    fn non_associative_rejected() {
        // a*a = b, everything else a
        let t = vec![vec![1, 0], vec![0, 0]];
        assert!(matches!(Semigroup::new(t, None, None), Err(LrbError::NotAssociative(..))));
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(Semigroup::new(vec![], None, None), Err(LrbError::Empty));
    }

    #[test]
    fn join_of_points_is_chain() {
        let p = left_zero(1);
        let j = p.lrb_join(&p).unwrap();
        assert_eq!(j.table(), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(j.identity(), None);
        assert_eq!(j.find_identity(), Some(1));
        assert!(j.check_lrb_axioms().ok);
    }

    #[test]
    fn json_round_trip_is_stable() {
        let s = Semigroup::new(vec![vec![0, 0], vec![0, 1]], Some(1), Some(vec!["z".into(), "e".into()])).unwrap();
        let a = s.to_json();
        let b = Semigroup::from_json(&a).unwrap().to_json();
        assert_eq!(a, b);
        assert_eq!(a, r#"{"size":2,"mul":[[0,0],[0,1]],"labels":["z","e"],"identity":1}"#);
    }
}
