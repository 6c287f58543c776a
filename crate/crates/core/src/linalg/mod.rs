//! Exact rational linear algebra. No floating point anywhere in here.

pub mod exact_int;
pub mod fraction_free;
mod matrix;
mod rational;

pub use matrix::RatMatrix;
pub use rational::{
    common_denominator, format_rational, int, is_lowest_terms, parse_rational, rat,
    scale_to_integers, Rational,
};
