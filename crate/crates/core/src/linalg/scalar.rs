//! Integer scalars for fraction-free elimination.
//!
//! `i64` is the fast path: every operation is checked and reports overflow
//! with `None`, in which case the caller restarts the job on `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait IntScalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    /// `a * p - b * q`
    fn mul_sub(a: &Self, p: &Self, b: &Self, q: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl IntScalar for i64 {
    #[inline]
    fn zero() -> Self {
        0
    }
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn is_one(&self) -> bool {
        *self == 1
    }
    #[inline]
    fn is_negative(&self) -> bool {
        *self < 0
    }
    #[inline]
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64().filter(|x| *x != i64::MIN)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    #[inline]
    fn mul_sub(a: &Self, p: &Self, b: &Self, q: &Self) -> Option<Self> {
        let l = (*a as i128) * (*p as i128) - (*b as i128) * (*q as i128);
        if l > i64::MAX as i128 || l <= i64::MIN as i128 {
            None
        } else {
            Some(l as i64)
        }
    }
    #[inline]
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    #[inline]
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl IntScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul_sub(a: &Self, p: &Self, b: &Self, q: &Self) -> Option<Self> {
        Some(a * p - b * q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}
