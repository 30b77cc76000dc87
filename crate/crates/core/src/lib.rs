//! Exact enumeration of standard puzzles of shape 2 x n.
//!
//! A standard piece is a unit square whose corners carry a permutation of
//! `1..=4`; there are 24 of them, coded `A` to `Z` without `I` and `O`. A
//! standard 2 x n puzzle is a two-row matrix holding each of `1..=2n` once,
//! and its pieces are the reductions of the `n-1` windows of adjacent
//! columns. For a support `P` (a set of pieces), `P^n` is the set of 2 x n
//! puzzles all of whose pieces lie in `P`.
//!
//! - [`piece`], [`puzzle`]: the objects themselves.
//! - [`support`]: the T1/T2/T3 symmetry group and connected classes.
//! - [`count`]: the boundary-profile DP and a brute-force oracle.
//! - [`bijection`]: flip maps and the BGTY to BJRY normalisation.
//! - [`numbers`]: Catalan, tangent, secant, Genocchi and friends.
//! - [`verify`]: identity suites tying counts to closed forms.
//! - [`dictionary`]: census reports and offline OEIS matching.

pub mod bijection;
pub mod cli;
pub mod count;
pub mod dictionary;
pub mod error;
pub mod numbers;
pub mod piece;
pub mod puzzle;
mod serde_big;
pub mod support;
pub mod verify;

pub use count::{
    dp_count, dp_step, exact_support_count, inverse_reduction, profile, sequence, BoundaryProfile,
    Oracle, SequenceTerms,
};
pub use error::{Error, Result};
pub use piece::{reduce, ColumnSign, CornerQuad, Piece};
pub use puzzle::{is_standard, Label, Puzzle};
pub use support::{is_connected, orbit, Support, SupportClass};
