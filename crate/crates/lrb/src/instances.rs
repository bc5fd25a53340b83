//! Named instances: an LRB with a group action and, where known, a character
//! table and the geometric data some checks need.
//!
//! Builtins are addressed as `builtin:<name>?<k>=<v>&...`; files hold JSON
//! with exactly one of `table`, `lattice`, `arrangement`, `cubes`, `builtin`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::constructions::{
    boolean_lattice, cubulated_ngon, pg_lattice, rank2_arrangement_faces, uniform_rank2_lattice, ArrangementData,
    CubeComplexData, FlagLrb, GeometricLattice, Rank2Arrangement,
};
use crate::error::{LrbError, Result};
use crate::group::action::{close_group, GroupAction};
use crate::group::perm::PermGroup;
use crate::group::table::CharacterTable;
use crate::lrb::Lrb;
use crate::semigroup::Semigroup;

/// What an instance was built from, kept for checks that need more than `B`.
#[derive(Clone, Debug)]
pub enum Geometry {
    None,
    /// `B = S(ℒ)`.
    Flags(Box<FlagLrb>),
    /// Rank-2 arrangement face semigroup with its linear data.
    Arrangement(Box<Rank2Arrangement>),
    /// LRB of a CAT(0) cube complex.
    Cubes(CubeComplexData),
}

#[derive(Debug)]
pub struct Instance {
    pub key: String,
    pub lrb: Lrb,
    pub action: GroupAction,
    pub table: Option<CharacterTable>,
    pub geometry: Geometry,
    /// A `G`-stable set whose orbit sum is the natural generator candidate.
    pub generator_orbit: Option<Vec<usize>>,
}

impl Instance {
    pub fn group(&self) -> &Arc<PermGroup> {
        self.action.group()
    }

    pub fn flags(&self) -> Option<&FlagLrb> {
        match &self.geometry {
            Geometry::Flags(f) => Some(f),
            _ => None,
        }
    }
}

/// Parsed `name?k=v&k=v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinSpec {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl BuiltinSpec {
    pub fn parse(s: &str) -> Result<BuiltinSpec> {
        let s = s.strip_prefix("builtin:").unwrap_or(s);
        let (name, rest) = s.split_once('?').unwrap_or((s, ""));
        if name.is_empty() {
            return Err(LrbError::Parse("builtin instance needs a name".into()));
        }
        let mut params = BTreeMap::new();
        for kv in rest.split(['&', ',']).filter(|t| !t.is_empty()) {
            let (k, v) =
                kv.split_once('=').ok_or_else(|| LrbError::Parse(format!("parameter `{kv}` is not key=value")))?;
            params.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(BuiltinSpec { name: name.to_string(), params })
    }

    fn usize(&self, k: &str, default: Option<usize>) -> Result<usize> {
        match self.params.get(k) {
            Some(v) => v.parse().map_err(|_| LrbError::Parse(format!("parameter {k}={v} is not an integer"))),
            None => default.ok_or_else(|| LrbError::Parse(format!("builtin {} needs parameter {k}", self.name))),
        }
    }

    fn group<'s>(&'s self, default: &'s str) -> &'s str {
        self.params.get("group").map(String::as_str).unwrap_or(default)
    }

    pub fn key(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if ps.is_empty() {
            format!("builtin:{}", self.name)
        } else {
            format!("builtin:{}?{}", self.name, ps.join("&"))
        }
    }
}

fn action_from_generators(lrb: &Lrb, gens: &[Vec<usize>]) -> Result<GroupAction> {
    let g = close_group(lrb.semigroup(), gens)?;
    GroupAction::new(lrb, Arc::new(g))
}

fn index(group: &PermGroup, perm: &[usize]) -> Result<usize> {
    let p: Vec<u32> = perm.iter().map(|&x| x as u32).collect();
    group.index_of(&p).ok_or_else(|| LrbError::Inconsistent("generator missing from its closure".into()))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Symmetric-group table when `G` acts on `points` as their full symmetric group.
fn symmetric_table(action: &GroupAction, points: &[usize]) -> Result<Option<CharacterTable>> {
    let g = action.group();
    if g.order() == factorial(points.len()) && points.len() <= 8 {
        Ok(Some(CharacterTable::symmetric(g, points)?))
    } else {
        Ok(None)
    }
}

/// `S(ℒ)` with the group generated by lattice automorphisms.
pub fn flag_instance(key: String, lattice: GeometricLattice, lattice_gens: Vec<Vec<usize>>) -> Result<Instance> {
    let f = FlagLrb::new(lattice)?;
    let lrb = Lrb::new(f.semigroup().clone())?;
    let gens: Vec<Vec<usize>> = lattice_gens.iter().map(|p| f.induced_permutation(p)).collect::<Result<_>>()?;
    let action = action_from_generators(&lrb, &gens)?;
    let atoms = f.atom_flags();
    let table = if gens.is_empty() { Some(trivial_table(&action)?) } else { symmetric_table(&action, &atoms)? };
    Ok(Instance { key, lrb, action, table, geometry: Geometry::Flags(Box::new(f)), generator_orbit: Some(atoms) })
}

fn trivial_table(action: &GroupAction) -> Result<CharacterTable> {
    CharacterTable::cyclic(action.group(), 0)
}

/// The semilattice of subsets of `{1..n}` under intersection.
fn boolean_semilattice(n: usize) -> Result<Semigroup> {
    if n > 10 {
        return Err(LrbError::Invalid(format!("boolean semilattice of rank {n} is too large")));
    }
    let size = 1usize << n;
    let table = (0..size).map(|a| (0..size).map(|b| a & b).collect()).collect();
    let labels = (0..size)
        .map(|m| format!("{{{}}}", (0..n).filter(|i| m >> i & 1 == 1).map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    Semigroup::new(table, Some(size - 1), Some(labels))
}

/// The chain `0 < 1 < … < n` under `min`.
fn chain_semilattice(n: usize) -> Result<Semigroup> {
    let table = (0..=n).map(|a| (0..=n).map(|b| a.min(b)).collect()).collect();
    Semigroup::new(table, Some(n), None)
}

fn with_ngon_group(
    key: String,
    lrb: Lrb,
    rotation: &[usize],
    reflection: &[usize],
    group: &str,
    geometry: Geometry,
    generator_orbit: Option<Vec<usize>>,
) -> Result<Instance> {
    let gens = match group {
        "dihedral" => vec![rotation.to_vec(), reflection.to_vec()],
        "cyclic" => vec![rotation.to_vec()],
        "trivial" => vec![],
        other => return Err(LrbError::Parse(format!("unknown group `{other}` (dihedral|cyclic|trivial)"))),
    };
    let action = action_from_generators(&lrb, &gens)?;
    let g = action.group().clone();
    let table = match group {
        "dihedral" => Some(CharacterTable::dihedral(&g, index(&g, rotation)?, index(&g, reflection)?)?),
        "cyclic" => Some(CharacterTable::cyclic(&g, index(&g, rotation)?)?),
        _ => Some(trivial_table(&action)?),
    };
    Ok(Instance { key, lrb, action, table, geometry, generator_orbit })
}

pub fn builtin(spec: &BuiltinSpec) -> Result<Instance> {
    let key = spec.key();
    match spec.name.as_str() {
        "free-lrb" => {
            let n = spec.usize("n", None)?;
            let l = boolean_lattice(n)?;
            let gens = match spec.group("symmetric") {
                "symmetric" => l.atom_permutation_generators()?,
                "trivial" => vec![],
                g => return Err(LrbError::Parse(format!("unknown group `{g}` for free-lrb (symmetric|trivial)"))),
            };
            flag_instance(key, l, gens)
        }
        "q-free-lrb" => {
            let n = spec.usize("n", None)?;
            let q = spec.usize("q", Some(2))?;
            let pg = pg_lattice(n, q)?;
            let gens = match spec.group("gl") {
                "gl" => pg.gl_generators()?,
                "trivial" => vec![],
                g => return Err(LrbError::Parse(format!("unknown group `{g}` for q-free-lrb (gl|trivial)"))),
            };
            flag_instance(key, pg.lattice, gens)
        }
        "uniform-rank2" => {
            let m = spec.usize("m", None)?;
            let l = uniform_rank2_lattice(m)?;
            let gens = match spec.group("symmetric") {
                "symmetric" => l.atom_permutation_generators()?,
                "trivial" => vec![],
                g => return Err(LrbError::Parse(format!("unknown group `{g}` for uniform-rank2 (symmetric|trivial)"))),
            };
            flag_instance(key, l, gens)
        }
        "boolean-semilattice" => {
            let n = spec.usize("n", None)?;
            let lrb = Lrb::new(boolean_semilattice(n)?)?;
            let singletons: Vec<usize> = (0..n).map(|i| 1usize << i).collect();
            let gens: Vec<Vec<usize>> = match spec.group("trivial") {
                "symmetric" if n >= 2 => {
                    let swap = |m: usize| (m & !3) | ((m & 1) << 1) | ((m >> 1) & 1);
                    let cycle = |m: usize| ((m << 1) | (m >> (n - 1))) & ((1 << n) - 1);
                    vec![(0..1 << n).map(swap).collect(), (0..1 << n).map(cycle).collect()]
                }
                "symmetric" | "trivial" => vec![],
                g => return Err(LrbError::Parse(format!("unknown group `{g}` for boolean-semilattice"))),
            };
            let action = action_from_generators(&lrb, &gens)?;
            let table = if gens.is_empty() { Some(trivial_table(&action)?) } else { symmetric_table(&action, &singletons)? };
            Ok(Instance { key, lrb, action, table, geometry: Geometry::None, generator_orbit: None })
        }
        "chain-semilattice" => {
            let n = spec.usize("n", None)?;
            let lrb = Lrb::new(chain_semilattice(n)?)?;
            let action = GroupAction::trivial(&lrb);
            let table = Some(trivial_table(&action)?);
            Ok(Instance { key, lrb, action, table, geometry: Geometry::None, generator_orbit: None })
        }
        "cubulated-ngon" => {
            let n = spec.usize("n", None)?;
            let c = cubulated_ngon(n)?;
            let lrb = Lrb::new(c.semigroup()?)?;
            let vertices = c.vertices();
            let corners: Vec<usize> =
                vertices.iter().copied().filter(|&v| c.vertex_sets[v][0] >= 1 && c.vertex_sets[v][0] <= n).collect();
            let (rot, refl) = (c.rotation.clone(), c.reflection.clone());
            with_ngon_group(key, lrb, &rot, &refl, spec.group("dihedral"), Geometry::Cubes(c.data), Some(corners))
        }
        "arrangement" => {
            let m = spec.usize("m", None)?;
            let a = rank2_arrangement_faces(m)?;
            let lrb = Lrb::new(a.semigroup()?)?;
            let (rot, refl) = (a.rotation.clone(), a.reflection.clone());
            with_ngon_group(key, lrb, &rot, &refl, spec.group("dihedral"), Geometry::Arrangement(Box::new(a)), None)
        }
        other => Err(LrbError::Parse(format!(
            "unknown builtin `{other}` (free-lrb, q-free-lrb, uniform-rank2, boolean-semilattice, chain-semilattice, cubulated-ngon, arrangement)"
        ))),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    name: Option<String>,
    table: Option<serde_json::Value>,
    lattice: Option<serde_json::Value>,
    arrangement: Option<ArrangementData>,
    cubes: Option<CubeComplexData>,
    builtin: Option<String>,
    /// Permutations of `B`.
    generators: Option<Vec<Vec<usize>>>,
    /// Lattice automorphisms, for `lattice` sources.
    lattice_generators: Option<Vec<Vec<usize>>>,
    character_table: Option<serde_json::Value>,
}

/// Load an instance from JSON text.
pub fn from_json(text: &str, key: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| LrbError::Parse(format!("{key}: {e}")))?;
    let sources = [file.table.is_some(), file.lattice.is_some(), file.arrangement.is_some(), file.cubes.is_some(), file.builtin.is_some()];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(LrbError::Parse(format!(
            "{key}: exactly one of table, lattice, arrangement, cubes, builtin is required"
        )));
    }
    let key = file.name.clone().unwrap_or_else(|| key.to_string());
    let gens = file.generators.clone().unwrap_or_default();
    let mut inst = if let Some(b) = &file.builtin {
        if !gens.is_empty() || file.lattice_generators.is_some() {
            return Err(LrbError::Parse(format!("{key}: builtin instances choose their group with group=...")));
        }
        let mut i = builtin(&BuiltinSpec::parse(b)?)?;
        i.key = key.clone();
        i
    } else if let Some(lv) = &file.lattice {
        let l = GeometricLattice::from_json(&lv.to_string())?;
        let mut i = flag_instance(key.clone(), l, file.lattice_generators.clone().unwrap_or_default())?;
        if !gens.is_empty() {
            i.action = action_from_generators(&i.lrb, &gens)?;
            i.table = None;
        }
        i
    } else {
        let (s, geometry) = if let Some(t) = &file.table {
            (Semigroup::from_json_value(t)?, Geometry::None)
        } else if let Some(a) = &file.arrangement {
            (a.semigroup()?, Geometry::None)
        } else {
            let c = file.cubes.clone().unwrap();
            (crate::constructions::lrb_from_sign_vectors(c.k, &c.cubes)?, Geometry::Cubes(c))
        };
        let lrb = Lrb::new(s)?;
        let action = action_from_generators(&lrb, &gens)?;
        let table = if gens.is_empty() { Some(trivial_table(&action)?) } else { None };
        Instance { key: key.clone(), lrb, action, table, geometry, generator_orbit: None }
    };
    if let Some(t) = &file.character_table {
        inst.table = Some(CharacterTable::user(inst.group(), &t.to_string())?);
    }
    Ok(inst)
}

/// `builtin:...` or a path to a JSON file.
pub fn load(spec: &str) -> Result<Instance> {
    if spec.starts_with("builtin:") {
        builtin(&BuiltinSpec::parse(spec)?)
    } else {
        let text = std::fs::read_to_string(spec).map_err(|e| LrbError::Parse(format!("{spec}: {e}")))?;
        from_json(&text, spec)
    }
}

/// The instances every suite runs on.
pub fn corpus() -> Vec<&'static str> {
    vec![
        "builtin:boolean-semilattice?n=2",
        "builtin:boolean-semilattice?n=3&group=symmetric",
        "builtin:chain-semilattice?n=3",
        "builtin:free-lrb?n=2",
        "builtin:free-lrb?n=3",
        "builtin:free-lrb?n=4",
        "builtin:q-free-lrb?n=2&q=2",
        "builtin:uniform-rank2?m=3",
        "builtin:cubulated-ngon?n=4&group=dihedral",
        "builtin:cubulated-ngon?n=4&group=cyclic",
        "builtin:cubulated-ngon?n=5&group=dihedral",
        "builtin:cubulated-ngon?n=5&group=cyclic",
        "builtin:cubulated-ngon?n=6&group=dihedral",
        "builtin:cubulated-ngon?n=6&group=cyclic",
        "builtin:arrangement?m=3&group=dihedral",
        "builtin:arrangement?m=4&group=dihedral",
        "builtin:arrangement?m=4&group=cyclic",
    ]
}
