//! Integer Laurent polynomials in z, stored sparsely.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::CyclotomicInteger;
use super::int::Int;
use crate::error::Result;

/// Sorted `(exponent, coefficient)` pairs with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: Vec<(i64, Int)>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Int, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPolynomial { terms: vec![(e, c)] }
        }
    }

    /// Collects arbitrary `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Int)>>(it: I) -> Self {
        let mut map: BTreeMap<i64, Int> = BTreeMap::new();
        for (e, c) in it {
            *map.entry(e).or_default() += &c;
        }
        LaurentPolynomial { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    pub fn terms(&self) -> &[(i64, Int)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Int {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Merges `self + c·z^shift·other` into a fresh canonical vector.
    fn merged(&self, other: &Self, c: i64, shift: i64) -> Vec<(i64, Int)> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let eb = if j < b.len() { Some(b[j].0 + shift) } else { None };
            match (a.get(i), eb) {
                (Some((ea, ca)), Some(eb)) if *ea == eb => {
                    let mut s = ca.clone();
                    s.add_mul_i64(&b[j].1, c);
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ea, ca)), Some(eb)) if *ea < eb => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (Some((ea, ca)), None) => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (_, Some(eb)) => {
                    out.push((eb, b[j].1.mul_i64(c)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    /// `self += c · z^shift · other`.
    pub fn add_shifted_multiple(&mut self, other: &Self, c: i64, shift: i64) {
        if other.is_zero() || c == 0 {
            return;
        }
        if self.is_zero() {
            self.terms = other.terms.iter().map(|(e, x)| (e + shift, x.mul_i64(c))).collect();
            return;
        }
        self.terms = self.merged(other, c, shift);
    }

    pub fn add(&self, other: &Self) -> Self {
        LaurentPolynomial { terms: self.merged(other, 1, 0) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        LaurentPolynomial { terms: self.merged(other, -1, 0) }
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (mono, poly) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (e0, c0) = &mono.terms[0];
            let terms = poly.terms.iter().map(|(e, c)| (e + e0, c * c0)).filter(|(_, c)| !c.is_zero()).collect();
            return LaurentPolynomial { terms };
        }
        // Dense accumulation over the product's exponent range.
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut acc = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc[(ea + eb - lo) as usize].add_mul(ca, cb);
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        LaurentPolynomial { terms }
    }

    pub fn scale(&self, n: &Int) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, c * n)).collect() }
    }

    pub fn div_exact(&self, n: &Int) -> Option<Self> {
        let terms = self.terms.iter().map(|(e, c)| c.div_exact(n).map(|q| (*e, q))).collect::<Option<Vec<_>>>()?;
        Some(LaurentPolynomial { terms })
    }

    /// Value at z = 1.
    pub fn eval_at_one(&self) -> Int {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Image under z ↦ ζ_t.
    pub fn eval_at_root(&self, t: u32) -> CyclotomicInteger {
        let mut powers = vec![Int::ZERO; t as usize];
        for (e, c) in &self.terms {
            powers[e.rem_euclid(t as i64) as usize] += c;
        }
        CyclotomicInteger::from_powers(t, &powers)
    }

    /// Coefficient sums over exponent classes modulo `t`: entry k is
    /// Σ_{m ≡ k (mod t)} coeff(m).
    pub fn class_sums(&self, t: u32) -> Vec<Int> {
        let mut out = vec![Int::ZERO; t as usize];
        for (e, c) in &self.terms {
            out[e.rem_euclid(t as i64) as usize] += c;
        }
        out
    }

    /// z ↦ z^{-1}.
    pub fn reflect(&self) -> Self {
        let mut terms: Vec<(i64, Int)> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        LaurentPolynomial { terms }
    }

    /// Renders as `exp:coeff` pairs in exponent order, e.g. `[-1:1,0:-1,1:1]`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{e}:{c}")).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", self.render())
    }
}

pub fn laurent_mul(a: &LaurentPolynomial, b: &LaurentPolynomial) -> LaurentPolynomial {
    a.mul(b)
}

/// The ring homomorphism ℤ[z, z^{-1}] → ℤ[ζ_t], z ↦ ζ_t.
pub fn laurent_eval_at_root(a: &LaurentPolynomial, t: i64) -> Result<CyclotomicInteger> {
    super::cyclotomic::cyc_from_root_power(t, 0)?;
    Ok(a.eval_at_root(t as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_i64_terms(v)
    }

    #[test]
    fn multiplication_examples() {
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(-1, 1), (0, -1)]);
        assert_eq!(laurent_mul(&a, &b), lp(&[(1, -1), (-1, -1), (0, 2)]));
        assert_eq!(laurent_mul(&lp(&[(3, 1)]), &lp(&[(-3, 1)])), LaurentPolynomial::one());
        assert!(laurent_mul(&lp(&[(0, 1), (1, 1)]), &LaurentPolynomial::zero()).is_zero());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = lp(&[(2, 1), (2, -1), (0, 3)]);
        assert_eq!(p.terms().len(), 1);
        let q = lp(&[(1, 1)]).sub(&lp(&[(1, 1)]));
        assert!(q.is_zero());
        assert_eq!(q, LaurentPolynomial::zero());
    }

    #[test]
    fn evaluation_at_roots() {
        let s = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(laurent_eval_at_root(&s, 5).unwrap(), {
            let mut x = CyclotomicInteger::root_power(5, 1);
            x.add_assign(&CyclotomicInteger::root_power(5, 4));
            x
        });
        let full = lp(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert!(laurent_eval_at_root(&full, 5).unwrap().is_zero());
        assert_eq!(laurent_eval_at_root(&lp(&[(7, 1)]), 7).unwrap(), CyclotomicInteger::root_power(7, 0));
        assert!(laurent_eval_at_root(&s, 4).is_err());
    }

    #[test]
    fn shifted_multiple_accumulates() {
        let mut a = lp(&[(0, 1)]);
        a.add_shifted_multiple(&lp(&[(0, 1), (1, 2)]), -1, -1);
        assert_eq!(a, lp(&[(-1, -1), (0, -1)]));
    }

    #[test]
    fn render_is_sorted() {
        assert_eq!(lp(&[(1, 1), (-1, 1), (0, -1)]).render(), "[-1:1,0:-1,1:1]");
        assert_eq!(LaurentPolynomial::zero().render(), "[]");
    }
}
