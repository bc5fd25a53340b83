//! The semigroup algebra: idempotents, radical, Peirce components.

pub mod cfpoi;
pub mod kb;
pub mod peirce;
pub mod radical;
pub mod structure;

pub use cfpoi::{build_cfpoi, choose_seeds, saliola_properties_check, Cfpoi, SaliolaReport, SeedPolicy};
pub use kb::{SemigroupAlgebra, Vector};
pub use peirce::{cartan_invariants, peirce_dimensions, peirce_space, CartanMatrix};
pub use radical::{radical_basis, radical_filtration, RadicalFiltration};
