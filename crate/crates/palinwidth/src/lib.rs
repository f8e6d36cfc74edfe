//! Palindrome sets and exact palindromic widths of finite permutation groups.
//!
//! A word over a generating alphabet is a palindrome when its letter
//! sequence, signs included, reads the same in both directions; a group
//! element is a palindrome when at least one palindromic word evaluates to
//! it. This crate enumerates finite permutation groups, computes their
//! palindrome sets and exact palindromic widths by breadth-first search, and
//! machine-checks the algebraic facts the computation leans on:
//! generating-set augmentation, the normal subgroup built from reversed
//! relations, involution-class lower bounds and conjugacy-class covering
//! bounds.

pub mod elemset;
pub mod error;
pub mod genset;
pub mod palindrome;
pub mod perm;
pub mod subgroup;
pub mod table;
pub mod verify;
pub mod word;

pub use elemset::ElementSet;
pub use error::{Error, Result};
pub use genset::{
    augment_generating_set, catalog_group, double_transposition_class_genset,
    find_noncommuting_pair, involution_class_genset, AugmentationResult,
};
pub use palindrome::{
    covering_number, involution_lower_bound, n_subgroup, palindrome_set, palindrome_witness,
    palindromic_width, width_from_set, width_upper_bound_via_subgroup, NStatus, NSubgroup,
    PalindromeData, WidthReport,
};
pub use perm::{Permutation, Point};
pub use table::{ElemIx, GroupTable, DEFAULT_MAX_ORDER};
pub use verify::{
    conjugates_in_palindrome_square, verify_normality_identities, IdentityCheckReport, Verdict,
};
pub use word::{evaluate, relations, GeneratingSet, Letter, RelationStream, Sign, Word};

/// Cap on the number of relation words consumed by a single scan. Large
/// alphabets have astronomically many short relations, so scans that search
/// for a property (a reversal witness, new reversed-relation values) stop
/// after this many relations even when the length cap is not exhausted.
pub const RELATION_SCAN_BUDGET: usize = 200_000;
