//! Sign vectors and the LRBs they span.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{LrbError, Result};
use crate::semigroup::Semigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    /// The product of `L = {−, 0, +}`: `xy = x` unless `x = 0`.
    #[inline]
    pub fn mul(self, other: Sign) -> Sign {
        if self == Sign::Zero {
            other
        } else {
            self
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn parse(c: &str) -> Result<Sign> {
        match c {
            "-" | "minus" => Ok(Sign::Minus),
            "0" | "zero" => Ok(Sign::Zero),
            "+" | "plus" => Ok(Sign::Plus),
            _ => Err(LrbError::Parse(format!("`{c}` is not a sign"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.symbol().to_string())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Sign, D::Error> {
        let s = String::deserialize(d)?;
        Sign::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &SignVector) -> SignVector {
        SignVector(self.0.iter().zip(&other.0).map(|(a, b)| a.mul(*b)).collect())
    }

    /// Positions where the vector vanishes.
    pub fn zero_set(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, s)| **s == Sign::Zero).map(|(i, _)| i).collect()
    }

    pub fn parse(s: &str) -> Result<SignVector> {
        s.chars().map(|c| Sign::parse(&c.to_string())).collect::<Result<Vec<_>>>().map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// All of `L^k`, in lexicographic order of `− < 0 < +`.
pub fn all_sign_vectors(k: usize) -> Vec<SignVector> {
    let mut out = vec![SignVector(Vec::new())];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * 3);
        for v in &out {
            for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
                let mut w = v.0.clone();
                w.push(s);
                next.push(SignVector(w));
            }
        }
        out = next;
    }
    out
}

/// The semigroup on a set of sign vectors under the componentwise product,
/// with the vectors as labels (in the given order).
pub fn lrb_from_sign_vectors(k: usize, vectors: &[SignVector]) -> Result<Semigroup> {
    if vectors.is_empty() {
        return Err(LrbError::Empty);
    }
    let mut index = HashMap::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != k {
            return Err(LrbError::Invalid(format!("sign vector {v} has length {} (expected {k})", v.len())));
        }
        if index.insert(v.clone(), i).is_some() {
            return Err(LrbError::Invalid(format!("sign vector {v} is repeated")));
        }
    }
    let n = vectors.len();
    let mut mul = Vec::with_capacity(n * n);
    for a in vectors {
        for b in vectors {
            let c = a.mul(b);
            match index.get(&c) {
                Some(&i) => mul.push(i as u32),
                None => return Err(LrbError::NotClosed(a.to_string(), b.to_string(), c.to_string())),
            }
        }
    }
    let identity = index.get(&SignVector(vec![Sign::Zero; k])).copied();
    Semigroup::from_flat(n, mul, identity, Some(vectors.iter().map(|v| v.to_string()).collect()))
}
