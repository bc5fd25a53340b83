//! Builders for the standard families of LRBs.

pub mod arrangement;
pub mod cubes;
pub mod flags;
pub mod gf;
pub mod lattice;
pub mod sign;

pub use arrangement::{rank2_arrangement_faces, ArrangementData, Rank2Arrangement};
pub use cubes::{catzero_cube_lrb, cubulated_ngon, CubeComplexData, CubeLrb, CubulatedNgon};
pub use flags::FlagLrb;
pub use lattice::{ag_lattice, boolean_lattice, pg_lattice, uniform_rank2_lattice, GeometricLattice, SubspaceLattice};
pub use sign::{all_sign_vectors, lrb_from_sign_vectors, Sign, SignVector};
