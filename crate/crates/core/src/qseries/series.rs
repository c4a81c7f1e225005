use crate::error::{Error, Result};
use crate::rings::{Int, Ring};

use super::monomial::{normalize_poly, Monomial};

/// A power series in q known modulo q^N, with coefficients in `R`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        TruncatedSeries { ring, coeffs }
    }

    pub fn zero(ring: R, order: usize) -> Self {
        let coeffs = vec![ring.zero(); order];
        TruncatedSeries { ring, coeffs }
    }

    pub fn one(ring: R, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if order > 0 {
            s.coeffs[0] = s.ring.one();
        }
        s
    }

    /// `c · q^e`.
    pub fn monomial(ring: R, c: R::Elem, e: usize, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if e < order {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [R::Elem] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &R::Elem {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries { ring: self.ring.clone(), coeffs: self.coeffs[..n].to_vec() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(&self.ring, a, b)).collect();
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    /// In-place addition; the order drops to the smaller of the two.
    pub fn add_assign(&mut self, other: &Self) {
        self.coeffs.truncate(other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            self.ring.add_assign(a, b);
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    pub fn scale_int(&self, n: &Int) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul_int(a, n)).collect();
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    /// Exact division of every coefficient by a rational integer.
    pub fn div_int_exact(&self, n: &Int) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|a| self.ring.div_int_exact(a, n)).collect::<Option<Vec<_>>>()?;
        Some(TruncatedSeries { ring: self.ring.clone(), coeffs })
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let n = self.order().min(other.order());
        let mut out = vec![self.ring.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !self.ring.is_zero(b) {
                    let p = self.ring.mul(a, b);
                    self.ring.add_assign(&mut out[i + j], &p);
                }
            }
        }
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be a unit of monomial
    /// shape (±1, or ±z^k where z is a unit of the ring).
    pub fn invert(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let u = self.ring.monomial_unit_inverse(&self.coeffs[0]).ok_or_else(|| Error::NonUnit(self.ring.name()))?;
        let mut out: Vec<R::Elem> = Vec::with_capacity(n);
        out.push(u.clone());
        for m in 1..n {
            let mut acc = self.ring.zero();
            for k in 1..=m {
                if !self.ring.is_zero(&self.coeffs[k]) {
                    let p = self.ring.mul(&self.coeffs[k], &out[m - k]);
                    self.ring.add_assign(&mut acc, &p);
                }
            }
            out.push(self.ring.neg(&self.ring.mul(&acc, &u)));
        }
        Ok(TruncatedSeries { ring: self.ring.clone(), coeffs: out })
    }

    /// Σ_n c_{pn+r} q^n, of order ⌈(N − r)/p⌉.
    pub fn dissect(&self, p: usize, r: usize) -> Self {
        assert!(p > 0 && r < p, "dissection needs 0 <= r < p");
        let coeffs = self.coeffs.iter().skip(r).step_by(p).cloned().collect();
        TruncatedSeries { ring: self.ring.clone(), coeffs }
    }

    /// q ↦ (±1)·q^k. The output order is `N·k`, capped at `cap`.
    pub fn substitute(&self, k: usize, negate: bool, cap: usize) -> Self {
        assert!(k > 0, "substitution exponent must be positive");
        let order = (self.order() * k).min(cap.max(1));
        let mut out = vec![self.ring.zero(); order];
        for (n, c) in self.coeffs.iter().enumerate() {
            let e = n * k;
            if e >= order {
                break;
            }
            out[e] = if negate && n % 2 == 1 { self.ring.neg(c) } else { c.clone() };
        }
        TruncatedSeries { ring: self.ring.clone(), coeffs: out }
    }

    /// Multiplies by q^k (k ≥ 0), keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![self.ring.zero(); n];
        for i in k..n {
            out[i] = self.coeffs[i - k].clone();
        }
        TruncatedSeries { ring: self.ring.clone(), coeffs: out }
    }

    pub fn map<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> TruncatedSeries<S> {
        let coeffs = self.coeffs.iter().map(f).collect();
        TruncatedSeries { ring: target, coeffs }
    }

    /// First index below the common order where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// In-place multiplication by a polynomial in q whose coefficients are
    /// monomials in z. Terms at or beyond the order are ignored.
    pub fn mul_poly_in_place(&mut self, poly: &[Monomial]) {
        let n = self.order();
        let poly = normalize_poly(poly.iter().copied().filter(|m| m.q >= 0 && (m.q as usize) < n).collect());
        debug_assert!(poly.iter().all(|m| m.q >= 0));
        let unit_const = matches!(poly.first(), Some(m) if m.q == 0 && m.z == 0 && m.c == 1)
            && poly.iter().filter(|m| m.q == 0).count() == 1;
        if unit_const {
            // x ← x + Σ c z^a q^e x, computed from the top down so every read
            // sees an original coefficient.
            for m in (0..n).rev() {
                let (lo, hi) = self.coeffs.split_at_mut(m);
                for t in &poly[1..] {
                    let e = t.q as usize;
                    if e <= m {
                        self.ring.add_monomial_times(&mut hi[0], &lo[m - e], t.c, t.z);
                    }
                }
            }
            return;
        }
        for m in (0..n).rev() {
            let mut acc = self.ring.zero();
            for t in &poly {
                let e = t.q as usize;
                if e <= m {
                    self.ring.add_monomial_times(&mut acc, &self.coeffs[m - e], t.c, t.z);
                }
            }
            self.coeffs[m] = acc;
        }
    }

    /// In-place division by a polynomial in q whose q^0 part is a single
    /// monomial ±z^k (a unit in every ring here).
    pub fn div_poly_in_place(&mut self, poly: &[Monomial]) -> Result<()> {
        let n = self.order();
        let poly = normalize_poly(poly.iter().copied().filter(|m| m.q < n as i64).collect());
        if poly.iter().any(|m| m.q < 0) {
            return Err(Error::Precondition("divisor has a negative q-exponent".into()));
        }
        let consts: Vec<&Monomial> = poly.iter().filter(|m| m.q == 0).collect();
        let u = match consts.as_slice() {
            [m] if m.c == 1 || m.c == -1 => **m,
            _ => return Err(Error::NonUnit(self.ring.name())),
        };
        let rest: Vec<Monomial> = poly.iter().copied().filter(|m| m.q > 0).collect();
        let trivial_unit = u.c == 1 && u.z == 0;
        for m in 0..n {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            for t in &rest {
                let e = t.q as usize;
                if e <= m {
                    self.ring.add_monomial_times(&mut hi[0], &lo[m - e], -t.c, t.z);
                }
            }
            if !trivial_unit {
                let mut v = self.ring.zero();
                // u^{-1} = u.c · z^{-u.z} because u.c = ±1.
                self.ring.add_monomial_times(&mut v, &hi[0], u.c, -u.z);
                hi[0] = v;
            }
        }
        Ok(())
    }
}

pub fn series_mul<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    a.mul(b)
}

pub fn series_invert<R: Ring>(a: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    a.invert()
}

pub fn series_dissect<R: Ring>(a: &TruncatedSeries<R>, p: usize, r: usize) -> TruncatedSeries<R> {
    a.dissect(p, r)
}

/// q ↦ ±q^k with the configured order cap.
pub fn series_substitute<R: Ring>(a: &TruncatedSeries<R>, k: usize, negate: bool) -> TruncatedSeries<R> {
    a.substitute(k, negate, crate::order_cap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Integers, Laurent, LaurentPolynomial};

    fn zs(v: &[i64]) -> TruncatedSeries<Integers> {
        TruncatedSeries::from_coeffs(Integers, v.iter().map(|&x| Int::from(x)).collect())
    }

    #[test]
    fn products_and_inverses() {
        assert_eq!(zs(&[1, -1, 0, 0]).mul(&zs(&[1, 1, 0, 0])).unwrap(), zs(&[1, 0, -1, 0]));
        let mut p = TruncatedSeries::one(Integers, 8);
        for k in 1..=3 {
            p.mul_poly_in_place(&[Monomial::new(1, 0, 0), Monomial::new(-1, 0, k)]);
        }
        assert_eq!(p, zs(&[1, -1, -1, 0, 1, 1, -1, 0]));
        assert_eq!(zs(&[1, -1, 0, 0, 0]).invert().unwrap(), zs(&[1, 1, 1, 1, 1]));
        assert_eq!(zs(&[1, 0]).invert().unwrap(), zs(&[1, 0]));
        assert!(zs(&[2, 1]).invert().is_err());
    }

    #[test]
    fn order_is_minimum() {
        let a = zs(&[1, 2, 3]);
        let b = zs(&[1, 1]);
        assert_eq!(a.add(&b).unwrap().order(), 2);
        assert_eq!(a.mul(&b).unwrap().order(), 2);
    }

    #[test]
    fn dissect_and_substitute() {
        let ones = zs(&[1; 12]);
        assert_eq!(ones.dissect(3, 1), zs(&[1; 4]));
        assert_eq!(ones.dissect(1, 0), ones);
        assert_eq!(zs(&[1, 1]).substitute(2, false, 1200), zs(&[1, 0, 1, 0]));
        assert_eq!(zs(&[1, 1, 1]).substitute(1, true, 1200), zs(&[1, -1, 1]));
        assert_eq!(zs(&[1, 2]).substitute(1000, false, 1200).order(), 1200);
    }

    #[test]
    fn poly_division_inverts_multiplication() {
        let ring = Laurent;
        let mut s = TruncatedSeries::one(ring, 10);
        let f = [Monomial::new(1, 0, 0), Monomial::new(-1, 1, 1), Monomial::new(-1, -1, 1), Monomial::new(1, 0, 2)];
        let orig = s.clone();
        s.mul_poly_in_place(&f);
        assert_eq!(s.coeff(1), &LaurentPolynomial::from_i64_terms(&[(1, -1), (-1, -1)]));
        s.div_poly_in_place(&f).unwrap();
        assert_eq!(s, orig);
        let g = [Monomial::new(-1, 3, 0), Monomial::new(1, 0, 2)];
        s.mul_poly_in_place(&g);
        s.div_poly_in_place(&g).unwrap();
        assert_eq!(s, orig);
        assert!(s.div_poly_in_place(&[Monomial::new(1, 0, 0), Monomial::new(-1, 1, 0)]).is_err());
    }
}
