//! Equiangular line sets stored as exact Gram matrices.

mod bounds;
mod json;
mod validate;

pub use bounds::{known_bounds, relative_bound, relative_bound_floor, BoundsEntry};
pub use json::{from_json, to_json};
pub use validate::{Check, ValidationReport};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{int, RatMatrix, Rational};

/// Symmetric sign pattern with zero diagonal and ±1 elsewhere (the Seidel
/// matrix). For unit vectors at common angle α, `gram = I + α·S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    n: usize,
    signs: Vec<i8>,
}

impl SignMatrix {
    pub fn new(n: usize, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: signs.len() });
        }
        for i in 0..n {
            if signs[i * n + i] != 0 {
                return Err(Error::InvalidSignMatrix(format!("nonzero diagonal at {i}")));
            }
            for j in i + 1..n {
                let s = signs[i * n + j];
                if s != 1 && s != -1 {
                    return Err(Error::InvalidSignMatrix(format!("entry ({i}, {j}) is {s}")));
                }
                if signs[j * n + i] != s {
                    return Err(Error::InvalidSignMatrix(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, signs })
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        let mut signs = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            signs.extend_from_slice(row);
        }
        Self::new(n, signs)
    }

    /// Seidel matrix `J - I - 2A` of a simple graph: -1 on edges, +1 on
    /// non-edges.
    pub fn from_adjacency(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut signs = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    signs[i * n + j] = if adjacent(i, j) { -1 } else { 1 };
                }
            }
        }
        Self { n, signs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.signs[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.signs[i * self.n..(i + 1) * self.n]
    }
}

/// Integer ambient coordinates with a common squared norm; line `i` is the
/// unit vector `vectors[i] / sqrt(norm)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coordinates {
    pub norm: i64,
    pub vectors: Vec<Vec<i64>>,
}

impl Coordinates {
    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.vectors[i].iter().zip(&self.vectors[j]).map(|(a, b)| a * b).sum()
    }

    pub fn select(&self, indices: &[usize]) -> Self {
        Self { norm: self.norm, vectors: indices.iter().map(|&i| self.vectors[i].clone()).collect() }
    }
}

/// A set of lines given by the Gram matrix of unit representatives and the
/// declared common angle. Rank and semidefiniteness are computed once at
/// construction.
#[derive(Debug, Clone)]
pub struct LineSet {
    angle: Rational,
    gram: RatMatrix,
    rank: usize,
    psd: bool,
    coordinates: Option<Coordinates>,
}

impl PartialEq for LineSet {
    fn eq(&self, other: &Self) -> bool {
        self.angle == other.angle && self.gram == other.gram && self.coordinates == other.coordinates
    }
}

impl LineSet {
    /// Wraps an arbitrary square Gram matrix. No equiangularity is implied;
    /// run [`LineSet::validate`].
    pub fn from_gram(gram: RatMatrix, angle: Rational) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch { expected: gram.rows(), found: gram.cols() });
        }
        let rank = gram.rank();
        let psd = gram.is_symmetric() && gram.is_psd()?;
        Ok(Self { angle, gram, rank, psd, coordinates: None })
    }

    /// `gram = I + angle * S`.
    pub fn from_sign_matrix(signs: &SignMatrix, angle: Rational) -> Self {
        let plus = angle.clone();
        let minus = -angle.clone();
        let gram = RatMatrix::from_fn(signs.n(), signs.n(), |i, j| match signs.get(i, j) {
            0 => int(1),
            1 => plus.clone(),
            _ => minus.clone(),
        });
        Self::from_gram(gram, angle).expect("square by construction")
    }

    /// Gram matrix `<v_i, v_j> / norm` of integer vectors.
    pub fn from_coordinates(coords: Coordinates, angle: Rational) -> Result<Self> {
        let n = coords.vectors.len();
        let norm = Rational::from_integer(coords.norm.into());
        let gram = RatMatrix::from_fn(n, n, |i, j| {
            Rational::from_integer(coords.dot(i, j).into()) / &norm
        });
        let mut ls = Self::from_gram(gram, angle)?;
        ls.coordinates = Some(coords);
        Ok(ls)
    }

    pub fn n(&self) -> usize {
        self.gram.rows()
    }

    pub fn angle(&self) -> &Rational {
        &self.angle
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_psd(&self) -> bool {
        self.psd
    }

    pub fn coordinates(&self) -> Option<&Coordinates> {
        self.coordinates.as_ref()
    }

    /// The Seidel matrix, when the Gram matrix is exactly `I ± angle`.
    pub fn sign_matrix(&self) -> Option<SignMatrix> {
        let n = self.n();
        if self.angle.is_zero() || self.angle.is_negative() {
            return None;
        }
        let mut signs = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                let g = self.gram.get(i, j);
                signs[i * n + j] = if i == j {
                    if !g.is_one() {
                        return None;
                    }
                    0
                } else if *g == self.angle {
                    1
                } else if *g == -self.angle.clone() {
                    -1
                } else {
                    return None;
                };
            }
        }
        SignMatrix::new(n, signs).ok()
    }

    /// Principal sub-configuration on `indices`, rank recomputed.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n()) {
            return Err(Error::IndexOutOfBounds { index: bad, len: self.n() });
        }
        let mut ls = Self::from_gram(self.gram.principal_submatrix(indices), self.angle.clone())?;
        ls.coordinates = self.coordinates.as_ref().map(|c| c.select(indices));
        Ok(ls)
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    pub(crate) fn with_coordinates(mut self, coords: Option<Coordinates>) -> Self {
        self.coordinates = coords;
        self
    }
}
