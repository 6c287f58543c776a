use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fraction_free;
use super::rational::{common_denominator, scale_to_integers, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * factor).collect() }
    }

    /// Principal submatrix on `indices` (rows and columns in the given order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), indices.len(), |i, j| self.get(indices[i], indices[j]).clone())
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| self.get(row_idx[i], col_idx[j]).clone())
    }

    /// Whole-matrix integer image `scale * self`, with the smallest positive
    /// `scale` making every entry integral.
    pub fn to_scaled_integers(&self) -> (BigInt, Vec<BigInt>) {
        let scale = common_denominator(&self.data);
        let ints = scale_to_integers(&self.data, &scale);
        (scale, ints)
    }

    /// Exact rank over Q via Bareiss elimination. Rows are cleared of
    /// denominators independently, which does not change the rank.
    pub fn rank(&self) -> usize {
        let mut ints = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let row = self.row(i);
            ints.extend(scale_to_integers(row, &common_denominator(row)));
        }
        fraction_free::rank(&ints, self.rows, self.cols)
    }

    pub fn determinant(&self) -> Result<Rational> {
        self.require_square()?;
        let (scale, ints) = self.to_scaled_integers();
        let det = fraction_free::determinant(&ints, self.rows);
        Ok(Rational::new(det, num_traits::pow(scale, self.rows)))
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let (scale, ints) = self.to_scaled_integers();
        // (s M) R = d I  =>  M^-1 = s R / d
        let (d, r) = fraction_free::scaled_inverse(&ints, n).ok_or(Error::SingularMatrix)?;
        let data = r.into_iter().map(|x| Rational::new(x * &scale, d.clone())).collect();
        Ok(Self { rows: n, cols: n, data })
    }

    /// Solves `self * x = b` by Gaussian elimination over Q.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.require_square()?;
        let n = self.rows;
        if b.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.len() });
        }
        let w = n + 1;
        let mut a: Vec<Rational> = Vec::with_capacity(n * w);
        for (i, bi) in b.iter().enumerate() {
            a.extend_from_slice(self.row(i));
            a.push(bi.clone());
        }
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r * w + k].is_zero()).ok_or(Error::SingularMatrix)?;
            if p != k {
                for j in 0..w {
                    a.swap(p * w + j, k * w + j);
                }
            }
            let pivot = a[k * w + k].clone();
            for j in k..w {
                a[k * w + j] = &a[k * w + j] / &pivot;
            }
            for i in (0..n).filter(|&i| i != k) {
                let factor = a[i * w + k].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in k..w {
                    let delta = &factor * &a[k * w + j];
                    a[i * w + j] -= delta;
                }
            }
        }
        Ok((0..n).map(|i| a[i * w + n].clone()).collect())
    }

    /// Exact positive-semidefiniteness by symmetric pivoted LDLᵀ elimination.
    pub fn is_psd(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let (_, ints) = self.to_scaled_integers();
        Ok(fraction_free::is_psd(&ints, self.rows))
    }

    /// Basis of the right null space, one vector per free column of the
    /// reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
            let pivot = a[r * cols + c].clone();
            for j in 0..cols {
                a[r * cols + j] = &a[r * cols + j] / &pivot;
            }
            for i in (0..rows).filter(|&i| i != r) {
                let factor = a[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let delta = &factor * &a[r * cols + j];
                    a[i * cols + j] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); cols];
                v[free] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[row * cols + free].clone();
                }
                v
            })
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rows, found: self.cols })
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
