//! Permutation groups, characters, and group actions on LRBs.

pub mod action;
pub mod classfn;
pub mod cyclotomic;
pub mod perm;
pub mod table;

pub use action::{close_group, verify_automorphisms, GroupAction, GroupData};
pub use classfn::{ClassFunction, VirtualCharacter};
pub use cyclotomic::Cyclo;
pub use perm::{PermGroup, DEFAULT_GROUP_CAP};
pub use table::CharacterTable;
