//! Fraction-free (Bareiss) elimination kernels on row-major integer data.
//!
//! Every intermediate entry is a minor of the input, so all divisions are
//! exact and growth is bounded by Hadamard's inequality.

use num_bigint::BigInt;

use super::exact_int::{convert_all, with_fallback, ExactInt, Overflow};

macro_rules! ck {
    ($e:expr) => {
        $e.ok_or(Overflow)?
    };
}

fn rank_kernel<T: ExactInt>(mut a: Vec<T>, rows: usize, cols: usize) -> Result<usize, Overflow> {
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + col].clone();
        for i in rank + 1..rows {
            let factor = a[i * cols + col].clone();
            for j in col + 1..cols {
                let lhs = ck!(pivot.mul(&a[i * cols + j]));
                let rhs = ck!(factor.mul(&a[rank * cols + j]));
                a[i * cols + j] = ck!(ck!(lhs.sub(&rhs)).div_exact(&prev));
            }
            a[i * cols + col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

fn det_kernel<T: ExactInt>(mut a: Vec<T>, n: usize) -> Result<T, Overflow> {
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let factor = a[i * n + k].clone();
            for j in k + 1..n {
                let lhs = ck!(pivot.mul(&a[i * n + j]));
                let rhs = ck!(factor.mul(&a[k * n + j]));
                a[i * n + j] = ck!(ck!(lhs.sub(&rhs)).div_exact(&prev));
            }
        }
        prev = pivot;
    }
    if negate {
        Ok(ck!(prev.neg()))
    } else {
        Ok(prev)
    }
}

/// Fraction-free Gauss-Jordan on `[A | I]`. Returns `(d, R)` with
/// `A * R = d * I` and `d = ±det(A) != 0`, or `None` when `A` is singular.
fn inverse_kernel<T: ExactInt>(a: &[T], n: usize) -> Result<Option<(T, Vec<T>)>, Overflow> {
    let w = 2 * n;
    let mut aug = vec![T::zero(); n * w];
    for i in 0..n {
        aug[i * w..i * w + n].clone_from_slice(&a[i * n..(i + 1) * n]);
        aug[i * w + n + i] = T::one();
    }
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !aug[r * w + k].is_zero()) else {
            return Ok(None);
        };
        if p != k {
            for j in 0..w {
                aug.swap(p * w + j, k * w + j);
            }
        }
        let pivot = aug[k * w + k].clone();
        for i in (0..n).filter(|&i| i != k) {
            let factor = aug[i * w + k].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                let lhs = ck!(pivot.mul(&aug[i * w + j]));
                let rhs = ck!(factor.mul(&aug[k * w + j]));
                aug[i * w + j] = ck!(ck!(lhs.sub(&rhs)).div_exact(&prev));
            }
            aug[i * w + k] = T::zero();
        }
        prev = pivot;
    }
    let mut right = Vec::with_capacity(n * n);
    for i in 0..n {
        debug_assert_eq!(aug[i * w + i], prev);
        right.extend_from_slice(&aug[i * w + n..(i + 1) * w]);
    }
    Ok(Some((prev, right)))
}

/// Symmetric elimination with diagonal pivoting. After pivoting on an index
/// set P, entry (i, j) equals det A[P+i, P+j], and the previous pivot equals
/// det A[P, P] > 0, so Schur-complement signs are read off directly.
fn psd_kernel<T: ExactInt>(mut a: Vec<T>, n: usize) -> Result<bool, Overflow> {
    let mut active: Vec<usize> = (0..n).collect();
    let mut prev = T::one();
    while !active.is_empty() {
        if active.iter().any(|&i| a[i * n + i].is_negative()) {
            return Ok(false);
        }
        let Some(pos) = active.iter().position(|&i| !a[i * n + i].is_zero()) else {
            // zero diagonal: PSD only if the whole remaining block vanishes
            return Ok(active
                .iter()
                .all(|&i| active.iter().all(|&j| a[i * n + j].is_zero())));
        };
        let k = active.remove(pos);
        let pivot = a[k * n + k].clone();
        for &i in &active {
            let factor = a[i * n + k].clone();
            for &j in &active {
                if j < i {
                    continue;
                }
                let lhs = ck!(pivot.mul(&a[i * n + j]));
                let rhs = ck!(factor.mul(&a[k * n + j]));
                let v = ck!(ck!(lhs.sub(&rhs)).div_exact(&prev));
                a[j * n + i] = v.clone();
                a[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    Ok(true)
}

pub fn rank(a: &[BigInt], rows: usize, cols: usize) -> usize {
    with_fallback(
        || rank_kernel::<i128>(convert_all(a)?, rows, cols),
        || rank_kernel::<BigInt>(a.to_vec(), rows, cols),
    )
}

pub fn determinant(a: &[BigInt], n: usize) -> BigInt {
    with_fallback(
        || det_kernel::<i128>(convert_all(a)?, n).map(|d| d.to_big()),
        || det_kernel::<BigInt>(a.to_vec(), n),
    )
}

/// `(d, R)` with `A * R = d * I`, or `None` if `A` is singular.
pub fn scaled_inverse(a: &[BigInt], n: usize) -> Option<(BigInt, Vec<BigInt>)> {
    with_fallback(
        || {
            let r = inverse_kernel::<i128>(&convert_all(a)?, n)?;
            Ok(r.map(|(d, m)| (d.to_big(), m.iter().map(ExactInt::to_big).collect())))
        },
        || inverse_kernel::<BigInt>(a, n),
    )
}

/// Generic entry for callers that run their own fixed-width/BigInt dispatch.
pub fn scaled_inverse_in<T: ExactInt>(a: &[T], n: usize) -> Result<Option<(T, Vec<T>)>, Overflow> {
    inverse_kernel(a, n)
}

/// Positive semidefiniteness of a symmetric integer matrix.
pub fn is_psd(a: &[BigInt], n: usize) -> bool {
    with_fallback(
        || psd_kernel::<i128>(convert_all(a)?, n),
        || psd_kernel::<BigInt>(a.to_vec(), n),
    )
}
