//! Small finite fields GF(p^e), elements encoded as base-p digit strings of
//! polynomial coefficients.

use crate::error::{LrbError, Result};
use crate::field::is_prime;

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: usize,
    e: usize,
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

/// Split `q` as `p^e` with `p` prime.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    if !is_prime(p as u64) {
        return None;
    }
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

fn digits(mut x: usize, p: usize, len: usize) -> Vec<usize> {
    let mut d = vec![0; len];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiply two polynomials of degree < e modulo the monic `modulus` (degree e, low coefficients first).
fn poly_mulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let e = modulus.len() - 1;
    let mut prod = vec![0; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for k in 0..=e {
                let idx = d - e + k;
                prod[idx] = (prod[idx] + p - (c * modulus[k]) % p) % p;
            }
        }
    }
    prod.truncate(e);
    prod
}

/// Irreducible iff no monic polynomial of degree `1..=e/2` divides it.
fn is_irreducible(f: &[usize], p: usize) -> bool {
    let e = f.len() - 1;
    for d in 1..=e / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_divides(&g, f, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(g: &[usize], f: &[usize], p: usize) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (k, &gk) in g.iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - (c * gk) % p) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&x| x == 0)
}

impl GaloisField {
    pub fn new(q: usize) -> Result<GaloisField> {
        let (p, e) = prime_power(q).ok_or_else(|| LrbError::Invalid(format!("{q} is not a prime power")))?;
        let modulus = (0..p.pow(e as u32))
            .map(|low| {
                let mut f = digits(low, p, e);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p);
                mul[a * q + b] = undigits(&poly_mulmod(&da, &db, &modulus, p), p);
            }
        }
        Ok(GaloisField { p, e, q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap())
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (2..self.q)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    k += 1;
                }
                k == self.q - 1
            })
            .unwrap_or(1)
    }
}
