//! Sums of product terms.
//!
//! Nearly every object in this crate is a sum of terms of the form
//!
//! ```text
//!     P(z, q) · Π (1 − x_i) / Π (1 − y_j)
//! ```
//!
//! where P is a small polynomial and the x_i, y_j are signed monomials
//! ±z^a q^e. A [`Term`] stores exactly that. Binomials with a negative
//! q-exponent are rewritten on insertion with 1 − x = −x(1 − x^{-1}), so the
//! stored binomials always have q-exponent ≥ 0 and the polynomial carries the
//! monomial corrections.
//!
//! [`evaluate`] expands a list of terms into a [`TruncatedSeries`]. Consecutive
//! terms of a Bailey-type or Pochhammer sum differ by only a handful of
//! binomials, so the sum is folded Horner-style: with u_n the binomial part of
//! term n, V_n = P_n + (u_{n+1}/u_n)·V_{n+1}, and the total is u_0·V_0. Each
//! step then costs a few sparse passes instead of a full product expansion.

use crate::error::{Error, Result};
use crate::rings::Ring;

use super::monomial::{normalize_poly, poly_mul, Monomial, MonomialSpec};
use super::series::TruncatedSeries;

/// The binomial 1 − c·z^z·q^q with c = ±1 and q ≥ 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Binomial {
    pub q: i64,
    pub z: i64,
    pub c: i8,
}

impl Binomial {
    fn as_poly(self) -> [Monomial; 2] {
        [Monomial::new(1, 0, 0), Monomial::new(-(self.c as i64), self.z, self.q)]
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Term {
    poly: Vec<Monomial>,
    num: Vec<Binomial>,
    den: Vec<Binomial>,
}

impl Term {
    pub fn one() -> Self {
        Term { poly: vec![Monomial::new(1, 0, 0)], num: vec![], den: vec![] }
    }

    pub fn from_poly(poly: Vec<Monomial>) -> Self {
        Term { poly: normalize_poly(poly), num: vec![], den: vec![] }
    }

    /// `c · z^z · q^q`.
    pub fn monomial(c: i64, z: i64, q: i64) -> Self {
        Self::from_poly(vec![Monomial::new(c, z, q)])
    }

    pub fn poly(&self) -> &[Monomial] {
        &self.poly
    }

    pub fn numerator(&self) -> &[Binomial] {
        &self.num
    }

    pub fn denominator(&self) -> &[Binomial] {
        &self.den
    }

    pub fn times_poly(mut self, p: &[Monomial]) -> Self {
        self.poly = poly_mul(&self.poly, p);
        self
    }

    pub fn times_monomial(self, c: i64, z: i64, q: i64) -> Self {
        self.times_poly(&[Monomial::new(c, z, q)])
    }

    /// Multiplies by the signed monomial `m`.
    pub fn times_spec(self, m: MonomialSpec) -> Self {
        self.times_monomial(m.sign as i64, m.z_exp, m.q_exp)
    }

    pub fn scale(self, c: i64) -> Self {
        self.times_monomial(c, 0, 0)
    }

    /// Multiplies by (1 − x).
    pub fn times(mut self, x: MonomialSpec) -> Self {
        if x.q_exp < 0 {
            self.poly = poly_mul(&self.poly, &[Monomial::new(-(x.sign as i64), x.z_exp, x.q_exp)]);
            self.num.push(Binomial { q: -x.q_exp, z: -x.z_exp, c: x.sign });
        } else {
            self.num.push(Binomial { q: x.q_exp, z: x.z_exp, c: x.sign });
        }
        self
    }

    /// Divides by (1 − x).
    pub fn over(mut self, x: MonomialSpec) -> Self {
        if x.q_exp < 0 {
            self.poly = poly_mul(&self.poly, &[Monomial::new(-(x.sign as i64), -x.z_exp, -x.q_exp)]);
            self.den.push(Binomial { q: -x.q_exp, z: -x.z_exp, c: x.sign });
        } else {
            self.den.push(Binomial { q: x.q_exp, z: x.z_exp, c: x.sign });
        }
        self
    }

    pub fn times_all(self, xs: &[MonomialSpec]) -> Self {
        xs.iter().fold(self, |t, x| t.times(*x))
    }

    pub fn over_all(self, xs: &[MonomialSpec]) -> Self {
        xs.iter().fold(self, |t, x| t.over(*x))
    }

    /// Multiplies by (1 − x) raised to an integer power.
    pub fn pow_all(self, xs: &[MonomialSpec], power: i32) -> Self {
        let mut t = self;
        for _ in 0..power.unsigned_abs() {
            t = if power > 0 { t.times_all(xs) } else { t.over_all(xs) };
        }
        t
    }

    pub fn mul(&self, other: &Term) -> Term {
        let mut num = self.num.clone();
        num.extend_from_slice(&other.num);
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        Term { poly: poly_mul(&self.poly, &other.poly), num, den }
    }

    /// The substitution q ↦ −q.
    pub fn negate_q(&self) -> Term {
        let flip = |q: i64| if q.rem_euclid(2) == 1 { -1 } else { 1 };
        let poly = self.poly.iter().map(|m| Monomial::new(m.c * flip(m.q), m.z, m.q)).collect();
        let tw = |b: &Binomial| Binomial { q: b.q, z: b.z, c: b.c * flip(b.q) as i8 };
        Term {
            poly: normalize_poly(poly),
            num: self.num.iter().map(tw).collect(),
            den: self.den.iter().map(tw).collect(),
        }
    }

    /// The substitution z ↦ z^{-1}.
    pub fn reflect_z(&self) -> Term {
        let poly = self.poly.iter().map(|m| Monomial::new(m.c, -m.z, m.q)).collect();
        let rf = |b: &Binomial| Binomial { q: b.q, z: -b.z, c: b.c };
        Term { poly: normalize_poly(poly), num: self.num.iter().map(rf).collect(), den: self.den.iter().map(rf).collect() }
    }

    /// The substitution q ↦ q^k, k > 0.
    pub fn stretch_q(&self, k: i64) -> Term {
        assert!(k > 0, "stretch factor must be positive");
        let poly = self.poly.iter().map(|m| Monomial::new(m.c, m.z, m.q * k)).collect();
        let st = |b: &Binomial| Binomial { q: b.q * k, z: b.z, c: b.c };
        Term { poly, num: self.num.iter().map(st).collect(), den: self.den.iter().map(st).collect() }
    }

    /// Lowest q-exponent of the polynomial part (`None` for the zero term).
    pub fn min_q(&self) -> Option<i64> {
        self.poly.iter().map(|m| m.q).min()
    }

    /// Sorts the binomial lists and cancels common factors.
    pub fn cancel(&mut self) {
        self.num.sort_unstable();
        self.den.sort_unstable();
        let (n, d) = cancel_sorted(&self.num, &self.den);
        self.num = n;
        self.den = d;
    }
}

/// Removes the multiset intersection of two sorted lists.
fn cancel_sorted(a: &[Binomial], b: &[Binomial]) -> (Vec<Binomial>, Vec<Binomial>) {
    let (mut i, mut j) = (0, 0);
    let mut ra = Vec::with_capacity(a.len());
    let mut rb = Vec::with_capacity(b.len());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                ra.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                rb.push(b[j]);
                j += 1;
            }
        }
    }
    ra.extend_from_slice(&a[i..]);
    rb.extend_from_slice(&b[j..]);
    (ra, rb)
}

fn merge_sorted(a: &[Binomial], b: &[Binomial]) -> Vec<Binomial> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v.sort_unstable();
    v
}

/// Factors of (arg; base)_n: arg, arg·base, …, arg·base^{n−1}.
pub fn poch(arg: MonomialSpec, base: MonomialSpec, n: usize) -> Vec<MonomialSpec> {
    (0..n as i64).map(|j| arg.mul(base.pow(j))).collect()
}

/// Factors of (arg; base)_∞ that can influence coefficients below `cutoff`.
pub fn poch_inf(arg: MonomialSpec, base: MonomialSpec, cutoff: usize) -> Result<Vec<MonomialSpec>> {
    if base.q_exp <= 0 {
        return Err(Error::Divergent(format!("infinite product with base q-exponent {}", base.q_exp)));
    }
    let mut out = Vec::new();
    let mut x = arg;
    while x.q_exp < cutoff as i64 {
        out.push(x);
        x = x.mul(base);
    }
    Ok(out)
}

/// Factors of (q^a; q^b)_∞.
pub fn qpoch_inf(a: i64, b: i64, cutoff: usize) -> Vec<MonomialSpec> {
    poch_inf(MonomialSpec::q(a), MonomialSpec::q(b), cutoff).expect("positive base")
}

/// Factors of the Jacobi product j(x; q^b) = (x, q^b/x; q^b)_∞.
pub fn jac(x: MonomialSpec, b: i64, cutoff: usize) -> Result<Vec<MonomialSpec>> {
    let base = MonomialSpec::q(b);
    let mut f = poch_inf(x, base, cutoff)?;
    f.extend(poch_inf(base.mul(x.inv()), base, cutoff)?);
    Ok(f)
}

/// Factors of j(q^a; q^b).
pub fn jq(a: i64, b: i64, cutoff: usize) -> Vec<MonomialSpec> {
    jac(MonomialSpec::q(a), b, cutoff).expect("positive base")
}

/// Factors of j(−q^a; q^b).
pub fn jnq(a: i64, b: i64, cutoff: usize) -> Vec<MonomialSpec> {
    jac(MonomialSpec::neg_q(a), b, cutoff).expect("positive base")
}

struct Prepared {
    poly: Vec<Monomial>,
    num: Vec<Binomial>,
    den: Vec<Binomial>,
}

fn binomial_value<R: Ring>(ring: &R, b: &Binomial) -> R::Elem {
    ring.sub(&ring.one(), &ring.z_monomial(b.c as i64, b.z))
}

fn place_poly<R: Ring>(ring: &R, poly: &[Monomial], order: usize, offset: i64) -> TruncatedSeries<R> {
    let mut s = TruncatedSeries::zero(ring.clone(), order);
    let one = ring.one();
    for m in poly {
        let idx = m.q + offset;
        debug_assert!(idx >= 0);
        if (idx as usize) < order {
            ring.add_monomial_times(&mut s.coeffs_mut()[idx as usize], &one, m.c, m.z);
        }
    }
    s
}

fn apply<R: Ring>(v: &mut TruncatedSeries<R>, num: &[Binomial], den: &[Binomial]) -> Result<()> {
    let order = v.order() as i64;
    for b in num.iter().filter(|b| b.q < order) {
        v.mul_poly_in_place(&b.as_poly());
    }
    for b in den.iter().filter(|b| b.q < order) {
        v.div_poly_in_place(&b.as_poly())?;
    }
    Ok(())
}

/// Expands Σ terms into a series of the given order in which index i holds
/// the coefficient of q^{i − offset}.
///
/// Every term must be representable after the shift: a term whose polynomial
/// reaches below q^{−offset} yields [`Error::NegativeExponent`] carrying the
/// shift that would suffice.
pub fn evaluate<R: Ring>(ring: &R, terms: &[Term], order: usize, offset: i64) -> Result<TruncatedSeries<R>> {
    let mut prepared: Vec<Prepared> = Vec::with_capacity(terms.len());
    let mut needed = i64::MIN;
    for t in terms {
        let Some(min_q) = t.min_q() else { continue };
        let mut t = t.clone();
        t.cancel();
        if t.num.iter().any(|b| b.q == 0 && ring.is_zero(&binomial_value(ring, b))) {
            continue;
        }
        if let Some(b) = t.den.iter().find(|b| b.q == 0) {
            return Err(if ring.is_zero(&binomial_value(ring, b)) {
                Error::Pole(format!("factor 1/(1 − ({})z^{}) vanishes", b.c, b.z))
            } else {
                Error::NonUnit(ring.name())
            });
        }
        if min_q + offset >= order as i64 {
            continue;
        }
        if min_q + offset < 0 {
            needed = needed.max(-min_q);
            continue;
        }
        prepared.push(Prepared { poly: t.poly, num: t.num, den: t.den });
    }
    if needed != i64::MIN {
        return Err(Error::NegativeExponent { needed });
    }

    let mut total = TruncatedSeries::zero(ring.clone(), order);
    let Some(last) = prepared.last() else { return Ok(total) };
    let mut v = place_poly(ring, &last.poly, order, offset);
    for i in (0..prepared.len() - 1).rev() {
        let next = &prepared[i + 1];
        let cur = &prepared[i];
        let (num, den) = cancel_sorted(&merge_sorted(&next.num, &cur.den), &merge_sorted(&next.den, &cur.num));
        if den.iter().any(|b| b.q == 0) {
            // The ratio is not a power series; close this run of terms.
            apply(&mut v, &next.num, &next.den)?;
            total.add_assign(&v);
            v = place_poly(ring, &cur.poly, order, offset);
            continue;
        }
        apply(&mut v, &num, &den)?;
        v.add_assign(&place_poly(ring, &cur.poly, order, offset));
    }
    apply(&mut v, &prepared[0].num, &prepared[0].den)?;
    total.add_assign(&v);
    Ok(total)
}

/// Collects terms `f(0), f(1), …` until `patience` consecutive nonzero terms
/// start at or beyond `cutoff`. `f` may return `None` to skip an index.
pub fn collect_terms(cutoff: usize, mut f: impl FnMut(i64) -> Option<Term>) -> Result<Vec<Term>> {
    collect_direction(cutoff, 0, 1, &mut f)
}

/// Collects a bilateral family `f(n)`, n ∈ ℤ, relying on the lowest exponent of
/// the terms being a convex function of n (true for every theta- and
/// Lambert-type sum handled here).
pub fn collect_bilateral(cutoff: usize, mut f: impl FnMut(i64) -> Option<Term>) -> Result<Vec<Term>> {
    let mut out = collect_direction(cutoff, 0, 1, &mut f)?;
    out.extend(collect_direction(cutoff, -1, -1, &mut f)?);
    Ok(out)
}

fn collect_direction(
    cutoff: usize,
    start: i64,
    step: i64,
    f: &mut impl FnMut(i64) -> Option<Term>,
) -> Result<Vec<Term>> {
    const PATIENCE: usize = 4;
    let limit = 8 * cutoff as i64 + 64;
    let mut out = Vec::new();
    let mut beyond = 0;
    let mut prev: Option<i64> = None;
    let mut n = start;
    loop {
        if n.abs() > limit {
            return Err(Error::Divergent(format!("terms do not leave the window q^0..q^{cutoff}")));
        }
        if let Some(t) = f(n) {
            if let Some(m) = t.min_q() {
                let rising = prev.map_or(true, |p| m >= p);
                if m >= cutoff as i64 && rising {
                    beyond += 1;
                    if beyond >= PATIENCE {
                        break;
                    }
                } else {
                    beyond = 0;
                    out.push(t);
                }
                prev = Some(m);
            }
        }
        n += step;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Int, Integers, Laurent, LaurentPolynomial};

    fn ints(s: &TruncatedSeries<Integers>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn euler_product_is_pentagonal() {
        let t = Term::one().times_all(&qpoch_inf(1, 1, 8));
        let s = evaluate(&Integers, &[t], 8, 0).unwrap();
        assert_eq!(ints(&s), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn negative_exponents_are_rewritten() {
        // (1 − q^{-1}) = −q^{-1}(1 − q): needs a shift of one.
        let t = Term::one().times(MonomialSpec::q(-1));
        assert_eq!(evaluate(&Integers, &[t.clone()], 4, 0), Err(Error::NegativeExponent { needed: 1 }));
        let s = evaluate(&Integers, &[t], 4, 1).unwrap();
        assert_eq!(ints(&s), vec![-1, 1, 0, 0]);
    }

    #[test]
    fn identical_factors_cancel() {
        let x = MonomialSpec::q(0);
        let t = Term::one().times(x).over(x);
        let s = evaluate(&Integers, &[t], 3, 0).unwrap();
        assert_eq!(ints(&s), vec![1, 0, 0]);
        let pole = Term::one().over(x);
        assert!(matches!(evaluate(&Integers, &[pole], 3, 0), Err(Error::Pole(_))));
    }

    #[test]
    fn horner_matches_termwise_sum() {
        // Σ_n q^{n^2} / (q;q)_n, checked against separate evaluation.
        let terms: Vec<Term> = (0..8)
            .map(|n| Term::monomial(1, 0, n * n).over_all(&poch(MonomialSpec::q(1), MonomialSpec::q(1), n as usize)))
            .collect();
        let whole = evaluate(&Integers, &terms, 40, 0).unwrap();
        let mut parts = TruncatedSeries::zero(Integers, 40);
        for t in &terms {
            parts.add_assign(&evaluate(&Integers, std::slice::from_ref(t), 40, 0).unwrap());
        }
        assert_eq!(whole, parts);
        // Rogers–Ramanujan: equals 1/((q;q^5)(q^4;q^5)).
        let rr = Term::one().over_all(&qpoch_inf(1, 5, 40)).over_all(&qpoch_inf(4, 5, 40));
        assert_eq!(whole, evaluate(&Integers, &[rr], 40, 0).unwrap());
    }

    #[test]
    fn two_variable_factor() {
        // (z;q)_1 = 1 − z
        let t = Term::one().times_all(&poch(MonomialSpec::zq(1, 0), MonomialSpec::q(1), 1));
        let s = evaluate(&Laurent, &[t], 2, 0).unwrap();
        assert_eq!(s.coeff(0), &LaurentPolynomial::from_i64_terms(&[(0, 1), (1, -1)]));
        assert_eq!(s.coeff(1), &LaurentPolynomial::zero());
    }

    #[test]
    fn bilateral_collection_stops() {
        let terms = collect_bilateral(30, |n| Some(Term::monomial(if n % 2 == 0 { 1 } else { -1 }, 0, n * n))).unwrap();
        let s = evaluate(&Integers, &terms, 30, 0).unwrap();
        let mut expect = vec![Int::ZERO; 30];
        for n in -6i64..=6 {
            if n * n < 30 {
                expect[(n * n) as usize] += &Int::from(if n % 2 == 0 { 1 } else { -1 });
            }
        }
        assert_eq!(s.coeffs(), expect.as_slice());
    }
}
