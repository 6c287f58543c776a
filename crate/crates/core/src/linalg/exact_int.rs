use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Integer arithmetic with overflow detection. Kernels are written once over
/// this trait, run on `i128` first and rerun on `BigInt` when an operation
/// overflows.
pub trait ExactInt: Clone + PartialEq + Send + Sync + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn from_big(value: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Division that is known to be exact.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.checked_rem(*other), Some(0));
        self.checked_div(*other)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
    fn from_big(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(other);
        debug_assert!(Zero::is_zero(&r));
        Some(q)
    }
}

/// Raised by a kernel when a fixed-width type overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub fn convert_all<T: ExactInt>(values: &[BigInt]) -> Result<Vec<T>, Overflow> {
    values.iter().map(|v| T::from_big(v).ok_or(Overflow)).collect()
}

/// `sum(a[i] * b[i])`.
pub fn dot<T: ExactInt>(a: &[T], b: &[T]) -> Result<T, Overflow> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y).ok_or(Overflow)?).ok_or(Overflow)?;
    }
    Ok(acc)
}

/// Runs `kernel` on `i128` and falls back to `BigInt` on overflow.
pub fn with_fallback<R>(
    fast: impl FnOnce() -> Result<R, Overflow>,
    slow: impl FnOnce() -> Result<R, Overflow>,
) -> R {
    match fast() {
        Ok(r) => r,
        Err(Overflow) => slow().expect("BigInt arithmetic cannot overflow"),
    }
}

pub type Checked<T> = Result<T, Overflow>;
