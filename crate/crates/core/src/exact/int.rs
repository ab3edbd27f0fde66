//! Integer arithmetic used by the fraction-free enumeration kernels.
//!
//! Kernels run first on checked `i128` and are rerun on `BigInt` if any
//! operation overflows, so results are always exact.

use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub(crate) trait ExactInt: Clone + Eq + Hash + Send + Sync + std::fmt::Debug {
    fn zero() -> Self;
    fn from_big(x: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i32;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn abs(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    /// Exact division; `o` must divide `self`.
    fn div_exact(&self, o: &Self) -> Self;
    fn is_one_abs(&self) -> bool;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        x.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i32 {
        i128::signum(*self) as i32
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn abs(&self) -> Option<Self> {
        self.checked_abs()
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one_abs(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn abs(&self) -> Option<Self> {
        Some(Signed::abs(self))
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one_abs(&self) -> bool {
        Signed::abs(self) == BigInt::from(1)
    }
}

/// Converts rows of big integers, failing if any entry does not fit.
pub(crate) fn convert_rows<T: ExactInt>(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<T>>> {
    rows.iter().map(|r| r.iter().map(T::from_big).collect::<Option<Vec<T>>>()).collect()
}

/// `Σ a_i b_i`, or `None` on overflow.
pub(crate) fn dot_int<T: ExactInt>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = acc.add(&x.mul(y)?)?;
    }
    Some(acc)
}

/// Divides a vector by the gcd of its entries (sign preserved).
pub(crate) fn make_primitive<T: ExactInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one_abs() {
                return;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = x.div_exact(&g);
        }
    }
}

/// `s · u − t · v`, entrywise.
pub(crate) fn combine<T: ExactInt>(s: &T, u: &[T], t: &T, v: &[T]) -> Option<Vec<T>> {
    u.iter()
        .zip(v)
        .map(|(a, b)| {
            let l = if a.is_zero() { T::zero() } else { s.mul(a)? };
            let r = if b.is_zero() { T::zero() } else { t.mul(b)? };
            l.sub(&r)
        })
        .collect()
}
