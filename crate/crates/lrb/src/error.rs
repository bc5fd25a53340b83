use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrbError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("semigroup is empty")]
    Empty,
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("not a left regular band: {0}")]
    NotLrb(String),
    #[error("set of sign vectors is not closed: {0} * {1} = {2} is missing")]
    NotClosed(String, String, String),
    #[error("left regular band is not connected")]
    NotConnected,
    #[error("invalid geometric lattice: {0}")]
    InvalidLattice(String),
    #[error("group order exceeds the cap of {0}")]
    GroupTooLarge(usize),
    #[error("permutation {index} does not act by automorphisms: g({a}*{b}) != g({a})*g({b})")]
    NotAutomorphism { index: usize, a: usize, b: usize },
    #[error("field characteristic {0} divides the group order {1}")]
    CharacteristicDividesOrder(u64, usize),
    #[error("class-function operation needs characteristic zero")]
    NeedsCharacteristicZero,
    #[error("character table failed orthogonality: {0}")]
    BadCharacterTable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LrbError>;
