use crate::table::ElemIx;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Text could not be parsed; `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Group enumeration hit the element cap. `seen` counts the distinct
    /// elements discovered before aborting, so the true order exceeds it.
    #[error("group order exceeds cap of {cap} ({seen} elements found before aborting)")]
    CapacityExceeded { cap: usize, seen: usize },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("seed set is empty")]
    EmptySeed,

    #[error("set is not a subgroup")]
    NotASubgroup,

    #[error("word alphabet does not match the table's generating set")]
    AlphabetMismatch,

    #[error("element {element} is not a palindrome for this generating set")]
    NotAPalindrome { element: ElemIx },

    #[error("class generates a proper subgroup of order {order}")]
    ProperSubgroup { order: usize },

    #[error("subgroup contains non-palindromic elements")]
    SubgroupNotPalindromic,

    #[error("bound inapplicable: {0}")]
    BoundInapplicable(String),

    #[error("augmentation inapplicable: all generators commute")]
    AbelianAugmentation,

    #[error("group has no element of order 2")]
    NoInvolution,

    #[error("not simple or not generating: {0}")]
    NotSimple(String),

    #[error("unknown group: {0:?}")]
    UnknownGroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An internal consistency check failed. This indicates a bug: the
    /// checked facts hold unconditionally for correct computations.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
