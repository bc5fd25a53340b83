//! Exact elements of cyclotomic fields `ℚ(ζ_m)`.
//!
//! A value is a polynomial in `ζ_m` of degree below `φ(m)`, reduced modulo the
//! cyclotomic polynomial `Φ_m`, which makes the representation canonical for a
//! fixed `m`. Values with different `m` are compared after lifting both to the
//! least common multiple.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{LrbError, Result};
use crate::rational::Q;

fn cyclotomic_cache() -> &'static Mutex<HashMap<usize, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1);
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    cyclotomic_cache().lock().unwrap().insert(m, num.clone());
    num
}

/// Divide by a monic integer polynomial with zero remainder.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let dq = r.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + db];
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

#[derive(Clone, Debug)]
pub struct Cyclo {
    m: usize,
    coeffs: Vec<Q>,
}

fn reduce(mut c: Vec<Q>, m: usize) -> Vec<Q> {
    let phi = cyclotomic_polynomial(m);
    let d = phi.len() - 1;
    for k in (d..c.len()).rev() {
        let lead = c[k].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, &pj) in phi.iter().enumerate() {
            if pj != 0 {
                c[k - d + j] -= &(lead.clone() * Q::from_int(pj));
            }
        }
    }
    c.truncate(d);
    c.resize(d, Q::zero());
    c
}

impl Cyclo {
    pub fn rational(q: Q) -> Cyclo {
        Cyclo { m: 1, coeffs: vec![q] }
    }

    pub fn int(v: i64) -> Cyclo {
        Cyclo::rational(Q::from_int(v))
    }

    pub fn zero() -> Cyclo {
        Cyclo::int(0)
    }

    pub fn one() -> Cyclo {
        Cyclo::int(1)
    }

    /// `ζ_m^j`.
    pub fn zeta(m: usize, j: usize) -> Cyclo {
        let mut c = vec![Q::zero(); m];
        c[j % m] = Q::one();
        Cyclo { m, coeffs: reduce(c, m) }
    }

    /// From coefficients of powers of `ζ_m` (any length; reduced).
    pub fn from_coeffs(m: usize, coeffs: Vec<Q>) -> Result<Cyclo> {
        if m == 0 {
            return Err(LrbError::Invalid("cyclotomic order must be positive".into()));
        }
        let mut c = vec![Q::zero(); m.max(coeffs.len())];
        for (j, x) in coeffs.into_iter().enumerate() {
            c[j % m] += &x;
        }
        Ok(Cyclo { m, coeffs: reduce(c, m) })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    fn lift(&self, n: usize) -> Vec<Q> {
        debug_assert_eq!(n % self.m, 0);
        let s = n / self.m;
        let mut c = vec![Q::zero(); n];
        for (j, x) in self.coeffs.iter().enumerate() {
            c[j * s] = x.clone();
        }
        c
    }

    fn common(&self, o: &Cyclo) -> (usize, Vec<Q>, Vec<Q>) {
        let n = num_integer::lcm(self.m, o.m);
        (n, self.lift(n), o.lift(n))
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        if self.m == o.m {
            let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
            return Cyclo { m: self.m, coeffs: c };
        }
        let (n, a, b) = self.common(o);
        Cyclo { m: n, coeffs: reduce(a.into_iter().zip(b).map(|(x, y)| x + y).collect(), n) }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { m: self.m, coeffs: self.coeffs.iter().map(|x| -x.clone()).collect() }
    }

    pub fn sub(&self, o: &Cyclo) -> Cyclo {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        if self.m == 1 {
            return o.scale(&self.coeffs[0]);
        }
        if o.m == 1 {
            return self.scale(&o.coeffs[0]);
        }
        let (n, a, b) = self.common(o);
        let mut c = vec![Q::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[(i + j) % n] += &(x.clone() * y.clone());
                }
            }
        }
        Cyclo { m: n, coeffs: reduce(c, n) }
    }

    pub fn scale(&self, q: &Q) -> Cyclo {
        Cyclo { m: self.m, coeffs: self.coeffs.iter().map(|x| x.clone() * q.clone()).collect() }
    }

    /// Complex conjugate: `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclo {
        if self.m == 1 {
            return self.clone();
        }
        let mut c = vec![Q::zero(); self.m];
        for (j, x) in self.coeffs.iter().enumerate() {
            c[(self.m - j) % self.m] += x;
        }
        Cyclo { m: self.m, coeffs: reduce(c, self.m) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.coeffs[1..].iter().all(|x| x.is_zero()).then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().filter(|q| q.is_integer()).and_then(|q| q.to_i64())
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Cyclo) -> bool {
        self.sub(o).is_zero()
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut terms = Vec::new();
        for (j, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            terms.push(match j {
                0 => format!("{x}"),
                _ if x.is_one() => format!("z{}^{j}", self.m),
                _ => format!("{x}*z{}^{j}", self.m),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum CycloJson {
    Rational(Q),
    Cyclotomic { m: usize, coeffs: Vec<Q> },
}

impl Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_rational() {
            Some(q) => CycloJson::Rational(q).serialize(s),
            None => CycloJson::Cyclotomic { m: self.m, coeffs: self.coeffs.clone() }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Cyclo, D::Error> {
        match CycloJson::deserialize(d)? {
            CycloJson::Rational(q) => Ok(Cyclo::rational(q)),
            CycloJson::Cyclotomic { m, coeffs } => Cyclo::from_coeffs(m, coeffs).map_err(serde::de::Error::custom),
        }
    }
}
