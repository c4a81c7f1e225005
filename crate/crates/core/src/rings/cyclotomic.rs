//! Cyclotomic integers ℤ[ζ_t] for prime t.
//!
//! Elements are stored on the basis 1, ζ, …, ζ^{t−2}. Products are formed in
//! ℤ[x]/(x^t − 1) and then folded back with ζ^{t−1} = −(1 + ζ + … + ζ^{t−2}).

use std::fmt;

use super::int::Int;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger {
    t: u32,
    coeffs: Vec<Int>,
}

pub fn is_prime(t: i64) -> bool {
    if t < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= t {
        if t % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(t: i64) -> Result<u32> {
    if is_prime(t) && t <= u32::MAX as i64 {
        Ok(t as u32)
    } else {
        Err(Error::NotPrime(t))
    }
}

impl CyclotomicInteger {
    pub fn zero(t: u32) -> Self {
        CyclotomicInteger { t, coeffs: vec![Int::ZERO; t as usize - 1] }
    }

    pub fn from_int(t: u32, n: Int) -> Self {
        let mut z = Self::zero(t);
        z.coeffs[0] = n;
        z
    }

    /// Canonical ζ_t^k.
    pub fn root_power(t: u32, k: i64) -> Self {
        let mut cyclic = vec![Int::ZERO; t as usize];
        cyclic[k.rem_euclid(t as i64) as usize] = Int::ONE;
        Self::fold(t, cyclic)
    }

    /// Builds an element from coefficients on the reduced basis. Missing
    /// entries are zero; extra entries are rejected.
    pub fn from_coeffs(t: u32, coeffs: Vec<Int>) -> Result<Self> {
        check_prime(t as i64)?;
        if coeffs.len() > t as usize - 1 {
            return Err(Error::Precondition(format!(
                "{} coefficients given for ζ_{t}, at most {} allowed",
                coeffs.len(),
                t - 1
            )));
        }
        let mut c = coeffs;
        c.resize(t as usize - 1, Int::ZERO);
        Ok(CyclotomicInteger { t, coeffs: c })
    }

    /// Reduces a vector indexed by powers of ζ (any length) to the basis.
    pub fn from_powers(t: u32, powers: &[Int]) -> Self {
        let mut cyclic = vec![Int::ZERO; t as usize];
        for (i, c) in powers.iter().enumerate() {
            cyclic[i % t as usize] += c;
        }
        Self::fold(t, cyclic)
    }

    fn fold(t: u32, mut cyclic: Vec<Int>) -> Self {
        let top = cyclic.pop().expect("t >= 2");
        if !top.is_zero() {
            for c in cyclic.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicInteger { t, coeffs: cyclic }
    }

    fn cyclic(&self) -> Vec<Int> {
        let mut v = self.coeffs.clone();
        v.push(Int::ZERO);
        v
    }

    pub fn modulus(&self) -> u32 {
        self.t
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Int::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.t == other.t {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("Z[zeta_{}]", self.t), format!("Z[zeta_{}]", other.t)))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.t, other.t);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInteger { t: self.t, coeffs }
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.t, other.t);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicInteger { t: self.t, coeffs }
    }

    pub(crate) fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub(crate) fn sub_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger { t: self.t, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.t, other.t);
        let t = self.t as usize;
        let mut cyclic = vec![Int::ZERO; t];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    cyclic[(i + j) % t].add_mul(a, b);
                }
            }
        }
        Self::fold(self.t, cyclic)
    }

    pub fn scale(&self, n: &Int) -> Self {
        CyclotomicInteger { t: self.t, coeffs: self.coeffs.iter().map(|c| c * n).collect() }
    }

    /// `self += c · ζ^k · x` without materializing the product.
    pub(crate) fn add_root_multiple(&mut self, x: &Self, c: i64, k: i64) {
        let t = self.t as usize;
        let k = k.rem_euclid(t as i64) as usize;
        // Position of ζ^{t-1} after the rotation; everything landing there is
        // folded back onto the basis.
        let top_src = (t - 1 + t - k) % t;
        let top = if top_src < t - 1 { x.coeffs[top_src].clone() } else { Int::ZERO };
        for (i, xc) in x.coeffs.iter().enumerate() {
            let dst = (i + k) % t;
            if dst < t - 1 && !xc.is_zero() {
                self.coeffs[dst].add_mul_i64(xc, c);
            }
        }
        if !top.is_zero() {
            for a in self.coeffs.iter_mut() {
                a.add_mul_i64(&top, -c);
            }
        }
    }

    /// Exact division by a rational integer.
    pub fn div_exact(&self, n: &Int) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.div_exact(n)).collect::<Option<Vec<_>>>()?;
        Some(CyclotomicInteger { t: self.t, coeffs })
    }

    /// Returns `(sign, k)` if `self = sign · ζ^k`.
    pub fn as_signed_root(&self) -> Option<(i64, i64)> {
        for k in 0..self.t as i64 {
            let r = Self::root_power(self.t, k);
            if *self == r {
                return Some((1, k));
            }
            if *self == r.neg() {
                return Some((-1, k));
            }
        }
        None
    }

    /// Renders as the coefficient vector `[a0,…,a_{t−2}]`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Rebuilds the cyclic representation of the conjugate ζ ↦ ζ^{-1}.
    pub fn conjugate(&self) -> Self {
        let t = self.t as usize;
        let cyc = self.cyclic();
        let mut out = vec![Int::ZERO; t];
        for (i, c) in cyc.into_iter().enumerate() {
            out[(t - i) % t] = c;
        }
        Self::fold(self.t, out)
    }
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ{}{}", self.t, self.render())
    }
}

/// ζ_t^{k mod t} in reduced form; rejects non-prime t.
pub fn cyc_from_root_power(t: i64, k: i64) -> Result<CyclotomicInteger> {
    let t = check_prime(t)?;
    Ok(CyclotomicInteger::root_power(t, k))
}

pub fn cyc_mul(a: &CyclotomicInteger, b: &CyclotomicInteger) -> Result<CyclotomicInteger> {
    a.try_mul(b)
}

pub fn cyc_is_zero(a: &CyclotomicInteger) -> bool {
    a.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(t: u32, v: &[i64]) -> CyclotomicInteger {
        CyclotomicInteger::from_coeffs(t, v.iter().map(|&x| Int::from(x)).collect()).unwrap()
    }

    #[test]
    fn root_powers_reduce() {
        assert_eq!(cyc_from_root_power(5, 0).unwrap(), cyc(5, &[1, 0, 0, 0]));
        assert_eq!(cyc_from_root_power(5, 7).unwrap(), cyc(5, &[0, 0, 1, 0]));
        assert_eq!(cyc_from_root_power(3, 2).unwrap(), cyc(3, &[-1, -1]));
        assert_eq!(cyc_from_root_power(7, -1).unwrap(), cyc(7, &[-1, -1, -1, -1, -1, -1]));
        assert_eq!(cyc_from_root_power(6, 1), Err(Error::NotPrime(6)));
        assert_eq!(cyc_from_root_power(1, 0), Err(Error::NotPrime(1)));
    }

    #[test]
    fn products() {
        let one_minus = |k| CyclotomicInteger::from_int(3, Int::ONE).sub(&CyclotomicInteger::root_power(3, k));
        assert_eq!(cyc_mul(&one_minus(1), &one_minus(2)).unwrap(), cyc(3, &[3, 0]));
        let p = cyc_mul(&CyclotomicInteger::root_power(5, 2), &CyclotomicInteger::root_power(5, 3)).unwrap();
        assert_eq!(p, cyc(5, &[1, 0, 0, 0]));
        assert!(cyc_mul(&cyc(5, &[1]), &cyc(7, &[1])).is_err());
    }

    #[test]
    fn zero_tests() {
        let sum = (0..5).fold(CyclotomicInteger::zero(5), |acc, k| acc.add(&CyclotomicInteger::root_power(5, k)));
        assert!(cyc_is_zero(&sum));
        let z7 = CyclotomicInteger::root_power(7, 1);
        assert!(cyc_is_zero(&z7.sub(&z7)));
        assert!(!cyc_is_zero(&CyclotomicInteger::from_int(3, Int::ONE).sub(&CyclotomicInteger::root_power(3, 1))));
    }

    #[test]
    fn rotation_matches_multiplication() {
        for t in [3u32, 5, 7] {
            let x = CyclotomicInteger::from_powers(t, &[3, -1, 4, 1, -5, 9, 2].map(Int::from));
            for k in -8..8 {
                let mut acc = CyclotomicInteger::from_int(t, Int::from(2));
                acc.add_root_multiple(&x, -3, k);
                let expect = CyclotomicInteger::from_int(t, Int::from(2))
                    .add(&x.mul(&CyclotomicInteger::root_power(t, k)).scale(&Int::from(-3)));
                assert_eq!(acc, expect, "t={t} k={k}");
            }
        }
    }

    #[test]
    fn signed_roots_are_recognized() {
        assert_eq!(CyclotomicInteger::root_power(5, 3).neg().as_signed_root(), Some((-1, 3)));
        assert_eq!(cyc(5, &[1, 1]).as_signed_root(), None);
    }

    #[test]
    fn conjugation() {
        let z = CyclotomicInteger::root_power(7, 2);
        assert_eq!(z.conjugate(), CyclotomicInteger::root_power(7, 5));
    }
}
