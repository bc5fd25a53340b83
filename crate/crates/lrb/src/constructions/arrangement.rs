//! Face semigroups of central line arrangements in the plane.

use serde::{Deserialize, Serialize};

use crate::constructions::sign::{lrb_from_sign_vectors, Sign, SignVector};
use crate::error::{LrbError, Result};
use crate::semigroup::Semigroup;

/// Arrangement input: `{"k", "faces": [sign-vector, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementData {
    pub k: usize,
    pub faces: Vec<SignVector>,
}

impl ArrangementData {
    pub fn from_json(s: &str) -> Result<ArrangementData> {
        serde_json::from_str(s).map_err(|e| LrbError::Parse(e.to_string()))
    }

    pub fn semigroup(&self) -> Result<Semigroup> {
        lrb_from_sign_vectors(self.k, &self.faces)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceKind {
    Origin,
    Ray(usize),
    Chamber(usize),
}

/// `m` lines through the origin at angles `kπ/m`. Rays are numbered
/// `0..2m` counterclockwise (ray `r` at angle `rπ/m`, on line `r mod m`),
/// and chamber `r` lies between rays `r` and `r+1`.
#[derive(Clone, Debug)]
pub struct Rank2Arrangement {
    pub m: usize,
    pub data: ArrangementData,
    pub kinds: Vec<FaceKind>,
    pub labels: Vec<String>,
    /// Rotation through `2π/m` (two ray steps).
    pub rotation: Vec<usize>,
    /// Reflection in line 0.
    pub reflection: Vec<usize>,
}

pub fn rank2_arrangement_faces(m: usize) -> Result<Rank2Arrangement> {
    if m == 0 {
        return Err(LrbError::Invalid("an arrangement needs at least one line".into()));
    }
    let tm = 2 * m;
    // doubled angles: ray r sits at 2r, chamber r at 2r+1, line k at 2k and 2k+2m
    let sign_at = |a2: usize, k: usize| -> Sign {
        let d = (a2 + 2 * tm - 2 * k) % (2 * tm);
        if d == 0 || d == tm {
            Sign::Zero
        } else if d < tm {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    let vec_at = |a2: usize| SignVector((0..m).map(|k| sign_at(a2, k)).collect());
    let mut kinds = Vec::new();
    let mut faces = Vec::new();
    let mut labels = Vec::new();
    if m == 1 {
        // a single line: the line itself and two half-planes
        kinds.push(FaceKind::Origin);
        faces.push(SignVector(vec![Sign::Zero]));
        labels.push("L".to_string());
    } else {
        kinds.push(FaceKind::Origin);
        faces.push(SignVector(vec![Sign::Zero; m]));
        labels.push("O".to_string());
        for r in 0..tm {
            kinds.push(FaceKind::Ray(r));
            faces.push(vec_at(2 * r));
            labels.push(format!("r{r}"));
        }
    }
    for r in 0..tm {
        if m == 1 && r > 1 {
            break;
        }
        kinds.push(FaceKind::Chamber(r));
        faces.push(vec_at(2 * r + 1));
        labels.push(format!("C{r}"));
    }
    let find = |k: FaceKind| kinds.iter().position(|&x| x == k).unwrap();
    let map = |f: &dyn Fn(FaceKind) -> FaceKind| -> Vec<usize> { kinds.iter().map(|&k| find(f(k))).collect() };
    let rotation = map(&|k| match k {
        FaceKind::Origin => FaceKind::Origin,
        FaceKind::Ray(r) => FaceKind::Ray((r + 2) % tm),
        FaceKind::Chamber(r) => FaceKind::Chamber((r + 2) % tm),
    });
    let reflection = map(&|k| match k {
        FaceKind::Origin => FaceKind::Origin,
        FaceKind::Ray(r) => FaceKind::Ray((tm - r) % tm),
        FaceKind::Chamber(r) => FaceKind::Chamber((2 * tm - r - 1) % tm),
    });
    Ok(Rank2Arrangement { m, data: ArrangementData { k: m, faces }, kinds, labels, rotation, reflection })
}

impl Rank2Arrangement {
    pub fn semigroup(&self) -> Result<Semigroup> {
        let s = self.data.semigroup()?;
        Semigroup::new(s.table(), s.identity(), Some(self.labels.clone()))
    }

    fn chamber_index(&self, r: usize) -> usize {
        self.kinds.iter().position(|&k| k == FaceKind::Chamber(r)).unwrap()
    }

    /// Whether a face permutation preserves orientation of the plane.
    pub fn is_rotation(&self, g: &[usize]) -> bool {
        let tm = 2 * self.m;
        let chamber_of = |i: usize| match self.kinds[i] {
            FaceKind::Chamber(r) => r,
            _ => unreachable!(),
        };
        let a = chamber_of(g[self.chamber_index(0)]);
        let b = chamber_of(g[self.chamber_index(1 % tm)]);
        (a + 1) % tm == b
    }

    /// `det` of the linear map `g` restricted to the span of the face `x`
    /// (requires `g` to fix that span).
    pub fn det_on_span(&self, face: usize, g: &[usize]) -> i64 {
        match self.kinds[face] {
            // the origin, or for a single line the line itself, which every
            // element of the group fixes pointwise
            FaceKind::Origin => 1,
            FaceKind::Ray(_) => {
                if g[face] == face {
                    1
                } else {
                    -1
                }
            }
            FaceKind::Chamber(_) => {
                if self.is_rotation(g) {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_counts() {
        assert_eq!(rank2_arrangement_faces(3).unwrap().data.faces.len(), 13);
        assert_eq!(rank2_arrangement_faces(2).unwrap().data.faces.len(), 9);
        assert_eq!(rank2_arrangement_faces(1).unwrap().data.faces.len(), 3);
    }

    #[test]
    fn ray_times_adjacent_chamber() {
        let a = rank2_arrangement_faces(3).unwrap();
        let s = a.semigroup().unwrap();
        let ray = a.kinds.iter().position(|&k| k == FaceKind::Ray(1)).unwrap();
        let c = a.chamber_index(1);
        assert_eq!(s.mul(ray, c), c);
        let c0 = a.chamber_index(0);
        assert_eq!(s.mul(ray, c0), c0);
    }
}
