//! Exact representation theory of finite left regular band algebras under
//! finite group symmetry.

pub mod algebra;
pub mod analysis;
pub mod bitset;
pub mod constructions;
pub mod error;
pub mod field;
pub mod group;
pub mod instances;
pub mod linalg;
pub mod lrb;
pub mod poset;
pub mod rational;
pub mod semigroup;
pub mod topology;

pub use error::{LrbError, Result};
pub use field::{Field, PrimeField, Rationals};
pub use lrb::{Lrb, SupportLattice};
pub use poset::FinitePoset;
pub use rational::Q;
pub use semigroup::Semigroup;
