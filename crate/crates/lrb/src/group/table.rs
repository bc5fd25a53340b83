//! Character tables for cyclic, dihedral and symmetric groups, and
//! user-supplied tables, all checked by row orthogonality.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{LrbError, Result};
use crate::group::classfn::ClassFunction;
use crate::group::cyclotomic::Cyclo;
use crate::group::perm::PermGroup;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<PermGroup>,
    pub irreducibles: Vec<ClassFunction>,
    pub names: Vec<String>,
    pub source: String,
}

#[derive(Deserialize)]
struct UserTableJson {
    /// One row per irreducible, one value per conjugacy class (class order of the built group).
    rows: Vec<Vec<Cyclo>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn murnaghan_nakayama(lambda: &[usize], mu: &[usize]) -> i64 {
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut memo = HashMap::new();
    mn_beta(beta, mu, &mut memo)
}

fn mn_beta(mut beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    beta.sort_unstable();
    if mu.is_empty() {
        return 1;
    }
    let key = (beta.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let mut total = 0i64;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let next: Vec<usize> = beta.iter().map(|&c| if c == b { b - r } else { c }).collect();
        total += sign * mn_beta(next, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

fn cycle_type(perm: &[u32], points: &[usize], pos: &HashMap<usize, usize>) -> Result<Vec<usize>> {
    let k = points.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = *pos
                .get(&(perm[points[x]] as usize))
                .ok_or_else(|| LrbError::Precondition("designated points are not stable".into()))?;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Cycle type of a group element on designated points.
pub fn cycle_type_on(group: &PermGroup, g: usize, points: &[usize]) -> Result<Vec<usize>> {
    let pos: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    cycle_type(group.element(g), points, &pos)
}

impl CharacterTable {
    /// A group acting on `points` as the full symmetric group on them.
    pub fn symmetric(group: &Arc<PermGroup>, points: &[usize]) -> Result<CharacterTable> {
        let k = points.len();
        if k > 8 {
            return Err(LrbError::Invalid(format!("symmetric tables are capped at n = 8 (got {k})")));
        }
        let fact: usize = (1..=k).product();
        if group.order() != fact {
            return Err(LrbError::Precondition(format!("group of order {} is not S_{k}", group.order())));
        }
        let pos: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let types: Vec<Vec<usize>> =
            (0..group.num_classes()).map(|c| cycle_type(group.element(group.class_rep(c)), points, &pos)).collect::<Result<_>>()?;
        let parts = partitions(k);
        let irreducibles = parts
            .iter()
            .map(|lam| ClassFunction::new(group.clone(), types.iter().map(|mu| Cyclo::int(murnaghan_nakayama(lam, mu))).collect()))
            .collect::<Result<Vec<_>>>()?;
        let names = parts.iter().map(|p| format!("S^({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
        let t = CharacterTable { group: group.clone(), irreducibles, names, source: format!("symmetric({k})") };
        t.validate()?;
        Ok(t)
    }

    fn powers(group: &PermGroup, r: usize) -> Vec<usize> {
        let mut p = vec![0usize];
        let mut x = r;
        while x != 0 {
            p.push(x);
            x = group.mul(r, x);
        }
        p
    }

    /// A cyclic group generated by element `r`.
    pub fn cyclic(group: &Arc<PermGroup>, r: usize) -> Result<CharacterTable> {
        let n = group.order();
        let pw = Self::powers(group, r);
        if pw.len() != n {
            return Err(LrbError::Precondition("element does not generate the group".into()));
        }
        let mut exp = vec![0usize; n];
        for (a, &g) in pw.iter().enumerate() {
            exp[g] = a;
        }
        let irreducibles = (0..n).map(|j| ClassFunction::from_fn(group, |g| Cyclo::zeta(n, j * exp[g]))).collect();
        let names = (0..n).map(|j| format!("chi_{j}")).collect();
        let t = CharacterTable { group: group.clone(), irreducibles, names, source: format!("cyclic({n})") };
        t.validate()?;
        Ok(t)
    }

    /// A dihedral group of order `2n` with rotation `r` of order `n` and reflection `s`.
    pub fn dihedral(group: &Arc<PermGroup>, r: usize, s: usize) -> Result<CharacterTable> {
        let pw = Self::powers(group, r);
        let n = pw.len();
        if group.order() != 2 * n || group.element_order(s) != 2 || pw.contains(&s) {
            return Err(LrbError::Precondition("elements do not present a dihedral group".into()));
        }
        // every element is r^a or r^a s
        let mut word = vec![(0usize, false); group.order()];
        for (a, &g) in pw.iter().enumerate() {
            word[g] = (a, false);
            word[group.mul(g, s)] = (a, true);
        }
        let mut irreducibles = Vec::new();
        let mut names = Vec::new();
        let lin = |rs: i64, ss: i64| {
            ClassFunction::from_int_fn(group, |g| {
                let (a, refl) = word[g];
                let v = if a % 2 == 1 { rs } else { 1 };
                if refl {
                    v * ss
                } else {
                    v
                }
            })
        };
        irreducibles.push(lin(1, 1));
        names.push("trivial".to_string());
        irreducibles.push(lin(1, -1));
        names.push("det".to_string());
        if n.is_multiple_of(2) {
            irreducibles.push(lin(-1, 1));
            names.push("lin_r-".to_string());
            irreducibles.push(lin(-1, -1));
            names.push("lin_r-s-".to_string());
        }
        for j in 1..=(n - 1) / 2 {
            irreducibles.push(ClassFunction::from_fn(group, |g| {
                let (a, refl) = word[g];
                if refl {
                    Cyclo::zero()
                } else {
                    Cyclo::zeta(n, j * a).add(&Cyclo::zeta(n, (n - j * a % n) % n))
                }
            }));
            names.push(format!("rho_{j}"));
        }
        let t = CharacterTable { group: group.clone(), irreducibles, names, source: format!("dihedral({})", 2 * n) };
        t.validate()?;
        Ok(t)
    }

    /// Rows given per conjugacy class of the built group.
    pub fn user(group: &Arc<PermGroup>, json: &str) -> Result<CharacterTable> {
        let j: UserTableJson = serde_json::from_str(json).map_err(|e| LrbError::Parse(e.to_string()))?;
        let irreducibles = j
            .rows
            .into_iter()
            .map(|r| ClassFunction::new(group.clone(), r))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| LrbError::BadCharacterTable(e.to_string()))?;
        let names = j.names.unwrap_or_else(|| (0..irreducibles.len()).map(|i| format!("chi_{i}")).collect());
        let t = CharacterTable { group: group.clone(), irreducibles, names, source: "user".into() };
        t.validate()?;
        Ok(t)
    }

    /// Row orthogonality, one row per class, and `Σ χ(1)² = |G|`.
    pub fn validate(&self) -> Result<()> {
        let k = self.irreducibles.len();
        if k != self.group.num_classes() {
            return Err(LrbError::BadCharacterTable(format!("{k} rows for {} classes", self.group.num_classes())));
        }
        for i in 0..k {
            for j in 0..k {
                let v = self.irreducibles[i].inner(&self.irreducibles[j])?;
                let expect = Cyclo::int(i64::from(i == j));
                if v != expect {
                    return Err(LrbError::BadCharacterTable(format!("<chi_{i}, chi_{j}> = {v}")));
                }
            }
        }
        let sum: i64 = self.irreducibles.iter().map(|c| c.degree().as_integer().unwrap_or(0).pow(2)).sum();
        if sum != self.group.order() as i64 {
            return Err(LrbError::BadCharacterTable(format!("sum of squared degrees is {sum}")));
        }
        Ok(())
    }

    /// Multiplicity of each irreducible in a character.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<i64>> {
        self.irreducibles.iter().map(|x| chi.multiplicity(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm::DEFAULT_GROUP_CAP;

    fn sym(n: usize) -> Arc<PermGroup> {
        let swap: Vec<usize> = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cyc: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Arc::new(PermGroup::generate(n, &[swap, cyc], DEFAULT_GROUP_CAP).unwrap())
    }

    #[test]
    fn symmetric_dims() {
        let g = sym(3);
        let t = CharacterTable::symmetric(&g, &[0, 1, 2]).unwrap();
        let mut dims: Vec<i64> = t.irreducibles.iter().map(|c| c.degree().as_integer().unwrap()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2]);
        for n in 4..=6 {
            CharacterTable::symmetric(&sym(n), &(0..n).collect::<Vec<_>>()).unwrap();
        }
    }

    #[test]
    fn hook_values() {
        // the standard representation: fixed points minus one
        assert_eq!(murnaghan_nakayama(&[3, 1], &[1, 1, 1, 1]), 3);
        assert_eq!(murnaghan_nakayama(&[3, 1], &[2, 1, 1]), 1);
        assert_eq!(murnaghan_nakayama(&[3, 1], &[4]), -1);
        assert_eq!(murnaghan_nakayama(&[1, 1, 1], &[2, 1]), -1);
        assert_eq!(murnaghan_nakayama(&[2, 2], &[2, 2]), 2);
    }

    #[test]
    fn cyclic_two() {
        let g = Arc::new(PermGroup::generate(2, &[vec![1, 0]], DEFAULT_GROUP_CAP).unwrap());
        let t = CharacterTable::cyclic(&g, 1).unwrap();
        assert_eq!(t.irreducibles[1].integer_values().unwrap(), vec![1, -1]);
    }

    #[test]
    fn dihedral_tables() {
        for n in 3..=6 {
            let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            let g = Arc::new(PermGroup::generate(n, &[r.clone(), s.clone()], DEFAULT_GROUP_CAP).unwrap());
            let ri = g.index_of(&r.iter().map(|&x| x as u32).collect::<Vec<_>>()).unwrap();
            let si = g.index_of(&s.iter().map(|&x| x as u32).collect::<Vec<_>>()).unwrap();
            let t = CharacterTable::dihedral(&g, ri, si).unwrap();
            let linear = t.irreducibles.iter().filter(|c| c.degree() == Cyclo::one()).count();
            assert_eq!(linear, if n % 2 == 0 { 4 } else { 2 });
        }
    }

    #[test]
    fn bad_user_table() {
        let g = Arc::new(PermGroup::generate(2, &[vec![1, 0]], DEFAULT_GROUP_CAP).unwrap());
        let err = CharacterTable::user(&g, r#"{"rows":[[{"rational":1},{"rational":1}],[{"rational":1},{"rational":1}]]}"#);
        assert!(matches!(err, Err(LrbError::BadCharacterTable(_))));
        CharacterTable::user(&g, r#"{"rows":[[{"rational":1},{"rational":1}],[{"rational":1},{"rational":-1}]]}"#).unwrap();
    }
}
