//! Order complexes, reduced homology with group actions, and the twisted
//! lower-set actions of an LRB.

pub mod complex;
pub mod cw;
pub mod join;
pub mod star;

pub use complex::{equivariant_homology, interval_homology, mobius_checked, EquivariantHomology, OrderComplex};
pub use cw::{is_cw_lrb, non_cohen_macaulay_intervals, CwReport};
pub use join::{join_homology_check, JoinReport};
pub use star::{degree_character, h0_tilde_character, star_action_poset, star_homology, StarPoset};
