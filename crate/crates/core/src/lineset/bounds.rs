use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Relative bound `r(1 - a^2) / (1 - r a^2)` on the size of an equiangular
/// set with angle `a` in dimension `r`, valid when `r < 1/a^2`.
pub fn relative_bound(r: usize, angle: &Rational) -> Result<Rational> {
    let a2 = angle * angle;
    let rr = Rational::from_integer(r.into());
    if !angle.is_positive() || &rr * &a2 >= Rational::one() {
        return Err(Error::HypothesisViolated { r, angle: angle.to_string() });
    }
    Ok(&rr * (Rational::one() - &a2) / (Rational::one() - &rr * &a2))
}

/// Integer line-count bound: floor of [`relative_bound`].
pub fn relative_bound_floor(r: usize, angle: &Rational) -> Result<u64> {
    let value = relative_bound(r, angle)?;
    Ok(value.numer().div_floor(value.denom()).to_u64().expect("bound fits in u64"))
}

/// Known range `lower..=upper` for the maximum number of equiangular lines
/// in dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsEntry {
    pub d: usize,
    pub lower: u32,
    pub upper: u32,
}

// (first d, last d, lower, upper)
const KNOWN: &[(usize, usize, u32, u32)] = &[
    (2, 2, 3, 3),
    (3, 4, 6, 6),
    (5, 5, 10, 10),
    (6, 6, 16, 16),
    (7, 13, 28, 28),
    (14, 14, 28, 29),
    (15, 15, 36, 36),
    (16, 16, 40, 41),
    (17, 17, 48, 49),
    (18, 18, 56, 60),
    (19, 19, 72, 75),
    (20, 20, 90, 95),
    (21, 21, 126, 126),
    (22, 22, 176, 176),
    (23, 41, 276, 276),
    (42, 42, 276, 288),
    (43, 43, 344, 344),
];

pub fn known_bounds(d: usize) -> Result<BoundsEntry> {
    KNOWN
        .iter()
        .find(|&&(lo, hi, _, _)| (lo..=hi).contains(&d))
        .map(|&(_, _, lower, upper)| BoundsEntry { d, lower, upper })
        .ok_or(Error::OutOfRange(d))
}
