use serde::{Deserialize, Serialize};

/// `sign · z^{z_exp} · q^{q_exp}`, the argument format of the product and
/// bilateral builders.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialSpec {
    pub sign: i8,
    pub z_exp: i64,
    pub q_exp: i64,
}

impl MonomialSpec {
    pub const ONE: MonomialSpec = MonomialSpec { sign: 1, z_exp: 0, q_exp: 0 };

    pub fn new(sign: i8, z_exp: i64, q_exp: i64) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        MonomialSpec { sign, z_exp, q_exp }
    }

    /// `q^e`.
    pub fn q(e: i64) -> Self {
        MonomialSpec::new(1, 0, e)
    }

    /// `−q^e`.
    pub fn neg_q(e: i64) -> Self {
        MonomialSpec::new(-1, 0, e)
    }

    /// `z^a q^e`.
    pub fn zq(a: i64, e: i64) -> Self {
        MonomialSpec::new(1, a, e)
    }

    pub fn mul(self, o: MonomialSpec) -> Self {
        MonomialSpec { sign: self.sign * o.sign, z_exp: self.z_exp + o.z_exp, q_exp: self.q_exp + o.q_exp }
    }

    pub fn inv(self) -> Self {
        MonomialSpec { sign: self.sign, z_exp: -self.z_exp, q_exp: -self.q_exp }
    }

    pub fn pow(self, k: i64) -> Self {
        let sign = if self.sign < 0 && k.rem_euclid(2) == 1 { -1 } else { 1 };
        MonomialSpec { sign, z_exp: self.z_exp * k, q_exp: self.q_exp * k }
    }

    pub fn as_monomial(self) -> Monomial {
        Monomial { c: self.sign as i64, z: self.z_exp, q: self.q_exp }
    }
}

/// `c · z^z · q^q` with an arbitrary machine-word coefficient; polynomial
/// prefactors are lists of these.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    pub c: i64,
    pub z: i64,
    pub q: i64,
}

impl Monomial {
    pub fn new(c: i64, z: i64, q: i64) -> Self {
        Monomial { c, z, q }
    }

    pub fn mul(self, o: Monomial) -> Self {
        Monomial { c: self.c * o.c, z: self.z + o.z, q: self.q + o.q }
    }
}

/// Combines like terms and drops zero coefficients; the result is sorted.
pub fn normalize_poly(mut p: Vec<Monomial>) -> Vec<Monomial> {
    p.sort_by_key(|m| (m.q, m.z));
    let mut out: Vec<Monomial> = Vec::with_capacity(p.len());
    for m in p {
        match out.last_mut() {
            Some(last) if last.q == m.q && last.z == m.z => last.c += m.c,
            _ => out.push(m),
        }
    }
    out.retain(|m| m.c != 0);
    out
}

pub fn poly_mul(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.mul(*y));
        }
    }
    normalize_poly(out)
}

/// Builds a polynomial in z from `(z_exp, coeff)` pairs (all at q^0).
pub fn z_poly(terms: &[(i64, i64)]) -> Vec<Monomial> {
    normalize_poly(terms.iter().map(|&(z, c)| Monomial::new(c, z, 0)).collect())
}
