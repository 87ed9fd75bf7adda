//! Exact classification of square integer matrices: symmetrizability,
//! skew-symmetrizability, positivity via leading principal minors, and search
//! for positive quasi-Cartan companions of skew-symmetrizable matrices.
//!
//! All arithmetic is exact: matrix entries are arbitrary-precision integers
//! and symmetrizers are positive rationals. There is no floating point
//! anywhere in the crate.
//!
//! The main entry points are:
//!
//! - [`symmetrize::check_symmetrizable`] / [`symmetrize::check_skew_symmetrizable`]
//!   decide whether a positive diagonal `D` exists with `D*A` (skew-)symmetric,
//!   and return one when it does.
//! - [`symmetrize::find_symmetrizer`] constructs a symmetrizer for a matrix
//!   already known to be symmetrizable, with early exit.
//! - [`positivity::is_positive`] decides positivity of a symmetrizable matrix
//!   by checking its leading principal minors.
//! - [`companion::find_positive_companion`] searches the sign assignments of
//!   `|B|` for a positive quasi-Cartan companion of a skew-symmetrizable `B`.
//! - [`oracle`] holds deliberately slow brute-force references used for
//!   cross-validation.
//!
//! The `quasicartan` binary exposes all of this on the command line; see the
//! crate README.

pub mod companion;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod positivity;
pub mod report;
pub mod symmetrize;

pub use companion::{
    c_plus, find_positive_companion, verify_companion, CompanionError, CompanionResult, FastPath,
    SearchOptions, SignAssignment,
};
pub use io::{parse_matrix_auto, parse_matrix_json, parse_matrix_text, ParseError};
pub use matrix::{ComponentPartition, IntMatrix, Permutation, Rational, Symmetrizer, SymmetrizerKind};
pub use positivity::{all_principal_minors_positive, is_positive, MinorSequence, PositivityVerdict};
pub use report::{classify, ClassificationReport};
pub use symmetrize::{
    check_skew_symmetrizable, check_symmetrizable, find_symmetrizer, integer_normalize,
    FailureReason, SymmetrizeOutcome, SymmetrizeVerdict,
};
