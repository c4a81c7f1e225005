//! Exact coefficient rings.
//!
//! A [`Ring`] value describes a coefficient domain and performs arithmetic on
//! its elements. Three domains are provided: the integers, the cyclotomic
//! integers ℤ[ζ_t] and the Laurent polynomials ℤ[z, z^{-1}].
//!
//! Every ring also fixes the image of the formal variable z: 1 in the
//! integers, ζ_t in ℤ[ζ_t], and z itself in the Laurent ring. Series builders
//! written once against this contract therefore produce the z = 1, z = ζ_t and
//! symbolic versions of the same object.

pub mod cyclotomic;
pub mod int;
pub mod laurent;

use std::fmt;

pub use cyclotomic::{cyc_from_root_power, cyc_is_zero, cyc_mul, is_prime, CyclotomicInteger};
pub use int::Int;
pub use laurent::{laurent_eval_at_root, laurent_mul, LaurentPolynomial};

use crate::error::{Error, Result};

pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn from_int(&self, n: &Int) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn mul_int(&self, a: &Self::Elem, n: &Int) -> Self::Elem;
    /// Exact division by a rational integer, `None` if it does not divide.
    fn div_int_exact(&self, a: &Self::Elem, n: &Int) -> Option<Self::Elem>;
    /// Image of `c · z^k`.
    fn z_monomial(&self, c: i64, k: i64) -> Self::Elem;
    /// `acc += c · z^k · x`.
    fn add_monomial_times(&self, acc: &mut Self::Elem, x: &Self::Elem, c: i64, k: i64);
    /// If `a = ±z^k` (a unit of monomial shape), returns its inverse.
    fn monomial_unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;

    fn one(&self) -> Self::Elem {
        self.from_int(&Int::ONE)
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&Int::from(n))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn sub_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.sub(a, b);
    }

    /// Image of a Laurent polynomial in z.
    fn from_laurent(&self, p: &LaurentPolynomial) -> Self::Elem {
        let mut acc = self.zero();
        for (e, c) in p.terms() {
            let term = self.mul_int(&self.z_monomial(1, *e), c);
            self.add_assign(&mut acc, &term);
        }
        acc
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.name(), other.name()))
        }
    }
}

/// ℤ, with z ↦ 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = Int;

    fn name(&self) -> String {
        "Z".into()
    }
    fn zero(&self) -> Int {
        Int::ZERO
    }
    fn from_int(&self, n: &Int) -> Int {
        n.clone()
    }
    fn add(&self, a: &Int, b: &Int) -> Int {
        a + b
    }
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a - b
    }
    fn neg(&self, a: &Int) -> Int {
        -a
    }
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a * b
    }
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }
    fn mul_int(&self, a: &Int, n: &Int) -> Int {
        a * n
    }
    fn div_int_exact(&self, a: &Int, n: &Int) -> Option<Int> {
        a.div_exact(n)
    }
    fn z_monomial(&self, c: i64, _k: i64) -> Int {
        Int::from(c)
    }
    fn add_monomial_times(&self, acc: &mut Int, x: &Int, c: i64, _k: i64) {
        acc.add_mul_i64(x, c);
    }
    fn monomial_unit_inverse(&self, a: &Int) -> Option<Int> {
        match a.to_i64() {
            Some(1) => Some(Int::ONE),
            Some(-1) => Some(Int::from(-1)),
            _ => None,
        }
    }
    fn render(&self, a: &Int) -> String {
        a.to_string()
    }
    fn add_assign(&self, a: &mut Int, b: &Int) {
        *a += b;
    }
    fn sub_assign(&self, a: &mut Int, b: &Int) {
        *a -= b;
    }
}

/// ℤ[ζ_t] for prime t, with z ↦ ζ_t.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Cyclotomic {
    t: u32,
}

impl Cyclotomic {
    pub fn new(t: i64) -> Result<Self> {
        if is_prime(t) {
            Ok(Cyclotomic { t: t as u32 })
        } else {
            Err(Error::NotPrime(t))
        }
    }

    pub fn modulus(&self) -> u32 {
        self.t
    }
}

impl Ring for Cyclotomic {
    type Elem = CyclotomicInteger;

    fn name(&self) -> String {
        format!("Z[zeta_{}]", self.t)
    }
    fn zero(&self) -> CyclotomicInteger {
        CyclotomicInteger::zero(self.t)
    }
    fn from_int(&self, n: &Int) -> CyclotomicInteger {
        CyclotomicInteger::from_int(self.t, n.clone())
    }
    fn add(&self, a: &CyclotomicInteger, b: &CyclotomicInteger) -> CyclotomicInteger {
        a.add(b)
    }
    fn sub(&self, a: &CyclotomicInteger, b: &CyclotomicInteger) -> CyclotomicInteger {
        a.sub(b)
    }
    fn neg(&self, a: &CyclotomicInteger) -> CyclotomicInteger {
        a.neg()
    }
    fn mul(&self, a: &CyclotomicInteger, b: &CyclotomicInteger) -> CyclotomicInteger {
        a.mul(b)
    }
    fn is_zero(&self, a: &CyclotomicInteger) -> bool {
        a.is_zero()
    }
    fn mul_int(&self, a: &CyclotomicInteger, n: &Int) -> CyclotomicInteger {
        a.scale(n)
    }
    fn div_int_exact(&self, a: &CyclotomicInteger, n: &Int) -> Option<CyclotomicInteger> {
        a.div_exact(n)
    }
    fn z_monomial(&self, c: i64, k: i64) -> CyclotomicInteger {
        CyclotomicInteger::root_power(self.t, k).scale(&Int::from(c))
    }
    fn add_monomial_times(&self, acc: &mut CyclotomicInteger, x: &CyclotomicInteger, c: i64, k: i64) {
        acc.add_root_multiple(x, c, k);
    }
    fn monomial_unit_inverse(&self, a: &CyclotomicInteger) -> Option<CyclotomicInteger> {
        a.as_signed_root().map(|(s, k)| self.z_monomial(s, -k))
    }
    fn render(&self, a: &CyclotomicInteger) -> String {
        a.render()
    }
    fn add_assign(&self, a: &mut CyclotomicInteger, b: &CyclotomicInteger) {
        a.add_assign(b);
    }
    fn sub_assign(&self, a: &mut CyclotomicInteger, b: &CyclotomicInteger) {
        a.sub_assign(b);
    }
}

/// ℤ[z, z^{-1}], with z symbolic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Laurent;

impl Ring for Laurent {
    type Elem = LaurentPolynomial;

    fn name(&self) -> String {
        "Z[z,1/z]".into()
    }
    fn zero(&self) -> LaurentPolynomial {
        LaurentPolynomial::zero()
    }
    fn from_int(&self, n: &Int) -> LaurentPolynomial {
        LaurentPolynomial::constant(n.clone())
    }
    fn add(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
        a.add(b)
    }
    fn sub(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
        a.sub(b)
    }
    fn neg(&self, a: &LaurentPolynomial) -> LaurentPolynomial {
        a.neg()
    }
    fn mul(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
        a.mul(b)
    }
    fn is_zero(&self, a: &LaurentPolynomial) -> bool {
        a.is_zero()
    }
    fn mul_int(&self, a: &LaurentPolynomial, n: &Int) -> LaurentPolynomial {
        a.scale(n)
    }
    fn div_int_exact(&self, a: &LaurentPolynomial, n: &Int) -> Option<LaurentPolynomial> {
        a.div_exact(n)
    }
    fn z_monomial(&self, c: i64, k: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(Int::from(c), k)
    }
    fn add_monomial_times(&self, acc: &mut LaurentPolynomial, x: &LaurentPolynomial, c: i64, k: i64) {
        acc.add_shifted_multiple(x, c, k);
    }
    fn monomial_unit_inverse(&self, a: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        match a.terms() {
            [(e, c)] if c.is_one() => Some(LaurentPolynomial::monomial(Int::ONE, -e)),
            [(e, c)] if *c == Int::from(-1) => Some(LaurentPolynomial::monomial(Int::from(-1), -e)),
            _ => None,
        }
    }
    fn render(&self, a: &LaurentPolynomial) -> String {
        a.render()
    }
    fn add_assign(&self, a: &mut LaurentPolynomial, b: &LaurentPolynomial) {
        a.add_shifted_multiple(b, 1, 0);
    }
    fn sub_assign(&self, a: &mut LaurentPolynomial, b: &LaurentPolynomial) {
        a.add_shifted_multiple(b, -1, 0);
    }
}

/// Runtime tag naming one of the three coefficient domains.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Integer,
    Cyclotomic(u32),
    TwoVariable,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integer => write!(f, "integer"),
            RingKind::Cyclotomic(t) => write!(f, "cyclotomic({t})"),
            RingKind::TwoVariable => write!(f, "two-variable"),
        }
    }
}
