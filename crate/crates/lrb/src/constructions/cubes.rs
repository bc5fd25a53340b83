//! LRBs of CAT(0)-cube complexes given by the sign vectors of their cubes.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::constructions::sign::{lrb_from_sign_vectors, Sign, SignVector};
use crate::error::{LrbError, Result};
use crate::lrb::Lrb;
use crate::semigroup::Semigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeComplexData {
    pub k: usize,
    pub cubes: Vec<SignVector>,
}

impl CubeComplexData {
    pub fn from_json(s: &str) -> Result<CubeComplexData> {
        serde_json::from_str(s).map_err(|e| LrbError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialisable")
    }
}

/// The cube LRB, with the hyperplane set `{H : sgn_H(c) = 0}` of every cube.
#[derive(Debug)]
pub struct CubeLrb {
    pub lrb: Lrb,
    pub hyperplanes: Vec<Vec<usize>>,
    /// Hyperplane set of each support.
    pub support_hyperplanes: Vec<Vec<usize>>,
}

pub fn catzero_cube_lrb(c: &CubeComplexData) -> Result<CubeLrb> {
    let s = lrb_from_sign_vectors(c.k, &c.cubes)?;
    let lrb = Lrb::new(s)?;
    let hyperplanes: Vec<Vec<usize>> = c.cubes.iter().map(|v| v.zero_set()).collect();
    let m = lrb.num_supports();
    let mut support_hyperplanes: Vec<Option<Vec<usize>>> = vec![None; m];
    for (b, h) in hyperplanes.iter().enumerate() {
        let x = lrb.sigma(b);
        match &support_hyperplanes[x] {
            None => support_hyperplanes[x] = Some(h.clone()),
            Some(prev) if prev == h => {}
            Some(_) => return Err(LrbError::Inconsistent("cubes with one support cross different hyperplanes".into())),
        }
    }
    let support_hyperplanes: Vec<Vec<usize>> = support_hyperplanes.into_iter().map(|h| h.unwrap()).collect();
    let distinct: BTreeSet<&Vec<usize>> = support_hyperplanes.iter().collect();
    if distinct.len() != m {
        return Err(LrbError::Inconsistent("two supports share a hyperplane set".into()));
    }
    let l = lrb.lattice();
    for x in 0..m {
        for y in 0..m {
            let hx: BTreeSet<_> = support_hyperplanes[x].iter().collect();
            let hy: BTreeSet<_> = support_hyperplanes[y].iter().collect();
            if l.leq(x, y) != hx.is_subset(&hy) {
                return Err(LrbError::Inconsistent("support order is not inclusion of hyperplane sets".into()));
            }
            if l.leq(x, y) {
                let size = l.order.closed_interval(x, y).len();
                if size != 1 << (hy.len() - hx.len()) {
                    return Err(LrbError::Inconsistent(format!("interval [{x},{y}] is not Boolean")));
                }
            }
        }
    }
    Ok(CubeLrb { lrb, hyperplanes, support_hyperplanes })
}

/// The cubulated `n`-gon: a centre `c`, corners `v_i`, edge midpoints `m_i`
/// (between `v_i` and `v_{i+1}`), and squares `Q_i = {c, m_{i-1}, v_i, m_i}`.
#[derive(Clone, Debug)]
pub struct CubulatedNgon {
    pub n: usize,
    pub data: CubeComplexData,
    pub labels: Vec<String>,
    /// Vertex set of each cube (vertices: 0 = c, 1..=n corners, n+1..=2n midpoints).
    pub vertex_sets: Vec<Vec<usize>>,
    pub rotation: Vec<usize>,
    pub reflection: Vec<usize>,
}

pub fn cubulated_ngon(n: usize) -> Result<CubulatedNgon> {
    if n < 4 {
        return Err(LrbError::Invalid(format!("cubulated n-gon needs n >= 4 (got {n})")));
    }
    let v = |i: usize| 1 + i % n;
    let m = |i: usize| 1 + n + i % n;
    let prev = |i: usize| (i + n - 1) % n;
    let mut cubes: Vec<(String, Vec<usize>)> = vec![("c".into(), vec![0])];
    cubes.extend((0..n).map(|i| (format!("v{i}"), vec![v(i)])));
    cubes.extend((0..n).map(|i| (format!("m{i}"), vec![m(i)])));
    cubes.extend((0..n).map(|i| (format!("c-m{i}"), vec![0, m(i)])));
    cubes.extend((0..n).map(|i| (format!("v{i}-m{i}"), vec![v(i), m(i)])));
    cubes.extend((0..n).map(|i| (format!("m{}-v{i}", prev(i)), vec![v(i), m(prev(i))])));
    cubes.extend((0..n).map(|i| (format!("Q{i}"), vec![0, v(i), m(prev(i)), m(i)])));
    for (_, vs) in cubes.iter_mut() {
        vs.sort_unstable();
    }
    // vertex side of hyperplane H_j: negative exactly on {m_j, v_j, v_{j+1}}
    let side = |x: usize, j: usize| -> Sign {
        if x == m(j) || x == v(j) || x == v(j + 1) {
            Sign::Minus
        } else {
            Sign::Plus
        }
    };
    let vectors: Vec<SignVector> = cubes
        .iter()
        .map(|(_, vs)| {
            SignVector(
                (0..n)
                    .map(|j| {
                        let s0 = side(vs[0], j);
                        if vs.iter().all(|&x| side(x, j) == s0) {
                            s0
                        } else {
                            Sign::Zero
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let index: HashMap<Vec<usize>, usize> = cubes.iter().enumerate().map(|(i, (_, vs))| (vs.clone(), i)).collect();
    let vertex_map = |f: &dyn Fn(usize) -> usize| -> Vec<usize> {
        cubes
            .iter()
            .map(|(_, vs)| {
                let mut w: Vec<usize> = vs.iter().map(|&x| f(x)).collect();
                w.sort_unstable();
                index[&w]
            })
            .collect()
    };
    let rot = |x: usize| -> usize {
        match x {
            0 => 0,
            x if x <= n => v(x),
            x => m(x - n),
        }
    };
    let refl = |x: usize| -> usize {
        match x {
            0 => 0,
            x if x <= n => v(n - (x - 1)),
            x => m(2 * n - 1 - (x - n - 1)),
        }
    };
    let rotation = vertex_map(&rot);
    let reflection = vertex_map(&refl);
    Ok(CubulatedNgon {
        n,
        data: CubeComplexData { k: n, cubes: vectors },
        labels: cubes.iter().map(|(l, _)| l.clone()).collect(),
        vertex_sets: cubes.into_iter().map(|(_, vs)| vs).collect(),
        rotation,
        reflection,
    })
}

impl CubulatedNgon {
    pub fn semigroup(&self) -> Result<Semigroup> {
        let s = lrb_from_sign_vectors(self.data.k, &self.data.cubes)?;
        Semigroup::new(s.table(), None, Some(self.labels.clone()))
    }

    /// Indices of the 0-cubes.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.vertex_sets.len()).filter(|&i| self.vertex_sets[i].len() == 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ngon_counts() {
        for n in 4..=6 {
            let c = cubulated_ngon(n).unwrap();
            assert_eq!(c.data.cubes.len(), 6 * n + 1);
            let cl = catzero_cube_lrb(&c.data).unwrap();
            assert_eq!(cl.lrb.num_supports(), 2 * n + 1);
        }
        assert!(cubulated_ngon(3).is_err());
    }

    #[test]
    fn rotation_has_order_n() {
        let c = cubulated_ngon(5).unwrap();
        let mut p: Vec<usize> = (0..c.rotation.len()).collect();
        for k in 1..=5 {
            p = p.iter().map(|&i| c.rotation[i]).collect();
            assert_eq!(p.iter().enumerate().all(|(i, &j)| i == j), k == 5);
        }
    }

    #[test]
    fn full_cube_is_l_power() {
        let d = CubeComplexData { k: 2, cubes: crate::constructions::sign::all_sign_vectors(2) };
        let c = catzero_cube_lrb(&d).unwrap();
        assert_eq!(c.lrb.size(), 9);
        assert_eq!(c.lrb.num_supports(), 4);
    }
}
