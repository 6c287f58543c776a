use crate::linalg::{rat, RatMatrix};
use crate::lineset::LineSet;

/// One column of the 14 x 28 Tremain array, scaled by sqrt(5): three
/// entries ±1 among rows 1..=7 and a single sqrt(2) in row `7 + star_row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TremainColumn {
    pub circle: [i8; 7],
    /// 1..=7, i.e. rows 8..=14 of the array.
    pub star_row: u8,
}

impl TremainColumn {
    /// `5 <w_i, w_j>`; the star rows only ever pair stars with stars, so the
    /// product is rational.
    pub fn scaled_inner(&self, other: &Self) -> i64 {
        let circles: i64 =
            self.circle.iter().zip(&other.circle).map(|(a, b)| i64::from(a * b)).sum();
        circles + if self.star_row == other.star_row { 2 } else { 0 }
    }
}

const fn col(circle: [i8; 7], row: u8) -> TremainColumn {
    TremainColumn { circle, star_row: row - 7 }
}

/// Column descriptors, left to right.
pub const TREMAIN_COLUMNS: [TremainColumn; 28] = [
    col([1, 1, 0, 1, 0, 0, 0], 8),
    col([1, -1, 0, -1, 0, 0, 0], 8),
    col([-1, 1, 0, -1, 0, 0, 0], 8),
    col([-1, -1, 0, 1, 0, 0, 0], 8),
    col([0, 1, 1, 0, 1, 0, 0], 9),
    col([0, 1, -1, 0, -1, 0, 0], 9),
    col([0, -1, 1, 0, -1, 0, 0], 9),
    col([0, -1, -1, 0, 1, 0, 0], 9),
    col([0, 0, 1, 1, 0, 1, 0], 10),
    col([0, 0, 1, -1, 0, -1, 0], 10),
    col([0, 0, -1, 1, 0, -1, 0], 10),
    col([0, 0, -1, -1, 0, 1, 0], 10),
    col([0, 0, 0, 1, 1, 0, 1], 11),
    col([0, 0, 0, 1, -1, 0, -1], 11),
    col([0, 0, 0, -1, 1, 0, -1], 11),
    col([0, 0, 0, -1, -1, 0, 1], 11),
    col([1, 0, 0, 0, 1, 1, 0], 12),
    col([-1, 0, 0, 0, 1, -1, 0], 12),
    col([-1, 0, 0, 0, -1, 1, 0], 12),
    col([1, 0, 0, 0, -1, -1, 0], 12),
    col([0, 1, 0, 0, 0, 1, 1], 13),
    col([0, -1, 0, 0, 0, 1, -1], 13),
    col([0, -1, 0, 0, 0, -1, 1], 13),
    col([0, 1, 0, 0, 0, -1, -1], 13),
    col([1, 0, 1, 0, 0, 0, 1], 14),
    col([-1, 0, -1, 0, 0, 0, 1], 14),
    col([1, 0, -1, 0, 0, 0, -1], 14),
    col([-1, 0, 1, 0, 0, 0, -1], 14),
];

/// 28 equiangular lines in R^14 at angle 1/5, built from a (7,3,1) design.
pub fn tremain_28() -> LineSet {
    let cols = &TREMAIN_COLUMNS;
    let gram = RatMatrix::from_fn(28, 28, |i, j| rat(cols[i].scaled_inner(&cols[j]), 5));
    LineSet::from_gram(gram, rat(1, 5)).expect("square by construction")
}

/// Basis of 14 columns at even 0-based positions `0, 2, ..., 26`. The
/// columns at odd positions only reach rank 13.
pub fn tremain_even_basis() -> Vec<usize> {
    (0..28).step_by(2).collect()
}
