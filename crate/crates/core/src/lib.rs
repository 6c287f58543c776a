//! Exact construction, validation and saturation testing of equiangular
//! line sets.
//!
//! All arithmetic that decides an answer is exact: line sets are stored as
//! rational Gram matrices, and the heavy loops run on scaled integers with
//! an `i128` fast path and a `BigInt` fallback.

pub mod clique;
pub mod constructions;
pub mod error;
pub mod linalg;
pub mod lineset;
pub mod saturation;
pub mod search;

pub use error::{Error, Result};
pub use linalg::{parse_rational, RatMatrix, Rational};
pub use lineset::LineSet;
