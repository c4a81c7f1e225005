//! Arbitrary-precision integers with an inline fast path.
//!
//! Almost every coefficient met in practice fits in a machine word, so `Int`
//! keeps those inline and only promotes to a heap `BigInt` when a checked
//! operation overflows. The representation is canonical: a value that fits in
//! `i64` is always stored as `Small`, which keeps derived equality structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i64 {
        match self {
            Int::Small(v) => v.signum(),
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// `self * k` for a machine-word multiplier.
    #[inline]
    pub fn mul_i64(&self, k: i64) -> Int {
        match self {
            Int::Small(v) => match v.checked_mul(k) {
                Some(r) => Int::Small(r),
                None => Int::from_big(BigInt::from(*v) * BigInt::from(k)),
            },
            Int::Big(b) => Int::from_big(&**b * BigInt::from(k)),
        }
    }

    /// `self += x * k`, the inner step of every sparse series operation.
    #[inline]
    pub fn add_mul_i64(&mut self, x: &Int, k: i64) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, x) {
            if let Some(p) = b.checked_mul(k) {
                if let Some(s) = a.checked_add(p) {
                    *self = Int::Small(s);
                    return;
                }
            }
        }
        let sum = self.to_bigint() + x.to_bigint() * BigInt::from(k);
        *self = Int::from_big(sum);
    }

    /// `self += a * b`.
    #[inline]
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(x), Int::Small(y)) = (a, b) {
            if let Some(p) = x.checked_mul(*y) {
                if let Int::Small(s) = self {
                    if let Some(r) = s.checked_add(p) {
                        *s = r;
                        return;
                    }
                }
                *self = &*self + &Int::Small(p);
                return;
            }
        }
        let prod = a * b;
        *self += &prod;
    }

    /// Exact quotient, or `None` when `d` does not divide `self` (or `d == 0`).
    pub fn div_exact(&self, d: &Int) -> Option<Int> {
        if d.is_zero() {
            return None;
        }
        if let (Int::Small(a), Int::Small(b)) = (self, d) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return if r == 0 { Some(Int::Small(q)) } else { None };
            }
        }
        let (q, r) = self.to_bigint().div_rem(&d.to_bigint());
        if r.is_zero() {
            Some(Int::from_big(q))
        } else {
            None
        }
    }

    /// Least nonnegative residue modulo a positive machine word.
    pub fn rem_euclid_i64(&self, m: i64) -> i64 {
        assert!(m > 0, "modulus must be positive");
        match self {
            Int::Small(v) => v.rem_euclid(m),
            Int::Big(b) => b.mod_floor(&BigInt::from(m)).to_i64().expect("residue fits"),
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        Int::from_big(BigInt::from(v))
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Self {
        Int::from_big(BigInt::from(v))
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl std::str::FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Int::from_big(s.parse::<BigInt>()?))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Int> for &Int {
    type Output = Int;
    #[inline]
    fn add(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl Sub<&Int> for &Int {
    type Output = Int;
    #[inline]
    fn sub(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_bigint() - rhs.to_bigint())
    }
}

impl Mul<&Int> for &Int {
    type Output = Int;
    #[inline]
    fn mul(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for &Int {
    type Output = Int;
    #[inline]
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        &self + &rhs
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        &self - &rhs
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        &self * &rhs
    }
}

impl AddAssign<&Int> for Int {
    #[inline]
    fn add_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    #[inline]
    fn sub_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, rhs: &Int) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        let mut acc = Int::ZERO;
        for x in iter {
            acc += &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Int::from(i64::MAX);
        let sum = &big + &Int::ONE;
        assert!(matches!(sum, Int::Big(_)));
        let back = &sum - &Int::ONE;
        assert!(matches!(back, Int::Small(_)));
        assert_eq!(back, big);
    }

    #[test]
    fn add_mul_matches_bigint() {
        let mut acc = Int::from(i64::MAX - 3);
        acc.add_mul(&Int::from(1i64 << 40), &Int::from(1i64 << 40));
        let expect = BigInt::from(i64::MAX - 3) + (BigInt::from(1i64 << 40) * BigInt::from(1i64 << 40));
        assert_eq!(acc.to_bigint(), expect);
    }

    #[test]
    fn exact_division() {
        assert_eq!(Int::from(35).div_exact(&Int::from(7)), Some(Int::from(5)));
        assert_eq!(Int::from(36).div_exact(&Int::from(7)), None);
        assert_eq!(Int::from(i64::MIN).div_exact(&Int::from(-1)).unwrap().to_bigint(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn residues_are_nonnegative() {
        assert_eq!(Int::from(-3).rem_euclid_i64(5), 2);
        let huge = Int::from(i64::MAX).mul_i64(10);
        assert_eq!(huge.rem_euclid_i64(10), 0);
    }
}
