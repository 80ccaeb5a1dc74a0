use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use super::literal::{parse_terms, write_term};
use super::zpoly;
use crate::error::{Error, Result};

/// A polynomial in `x` with rational coefficients, stored as a rational
/// content times a primitive integer polynomial (lowest degree first,
/// positive leading coefficient). Zero has content zero and no terms, so
/// the representation is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    content: BigRational,
    prim: Vec<BigInt>,
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl Poly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut lcm = BigInt::one();
        for c in &coeffs {
            if !c.denom().is_one() {
                lcm = num::integer::lcm(lcm, c.denom().clone());
            }
        }
        let ints = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        Poly::from_ints(BigRational::from_integer(lcm).recip(), ints)
    }

    /// `scale * ints`.
    fn from_ints(scale: BigRational, mut ints: Vec<BigInt>) -> Self {
        zpoly::trim(&mut ints);
        if ints.is_empty() || scale.is_zero() {
            return Poly::zero();
        }
        let (g, prim) = zpoly::split(ints);
        Poly { content: scale * BigRational::from_integer(g), prim }
    }

    pub fn zero() -> Self {
        Poly { content: BigRational::zero(), prim: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut prim = vec![BigInt::zero(); deg + 1];
        prim[deg] = BigInt::one();
        Poly { content: c, prim }
    }

    pub fn x() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        match self.prim.get(k) {
            Some(n) if !n.is_zero() => &self.content * BigRational::from_integer(n.clone()),
            _ => BigRational::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.prim.len()).map(|k| self.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.prim.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.prim.len() == 1 && self.content.is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.prim.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<BigRational> {
        self.degree().map(|d| self.coeff(d))
    }

    /// Index of the lowest nonzero coefficient.
    pub fn ord(&self) -> Option<usize> {
        self.prim.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // g = gcd of the contents, so both cofactors are integers.
        let (a, b) = (&self.content, &rhs.content);
        let g = BigRational::new(
            num::integer::gcd(a.numer().clone(), b.numer().clone()),
            num::integer::lcm(a.denom().clone(), b.denom().clone()),
        );
        let ka = (a / &g).to_integer();
        let kb = (b / &g).to_integer();
        let n = self.prim.len().max(rhs.prim.len());
        let ints = (0..n)
            .map(|k| {
                let x = self.prim.get(k).map(|c| c * &ka).unwrap_or_default();
                match rhs.prim.get(k) {
                    Some(y) => x + y * &kb,
                    None => x,
                }
            })
            .collect();
        Poly::from_ints(g, ints)
    }

    pub fn neg(&self) -> Poly {
        Poly { content: -&self.content, prim: self.prim.clone() }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Products of primitive polynomials are primitive.
        Poly { content: &self.content * &rhs.content, prim: zpoly::mul(&self.prim, &rhs.prim) }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() || self.is_zero() {
            return Poly::zero();
        }
        Poly { content: &self.content * c, prim: self.prim.clone() }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().expect("nonzero").recip();
        let dc = d.coeffs();
        let mut rem = self.coeffs();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in dc.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient by a divisor. Panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        if d.prim.len() == 1 {
            return self.scale(&d.content.recip());
        }
        if self.is_zero() {
            return Poly::zero();
        }
        let q = zpoly::div_exact(&self.prim, &d.prim).expect("inexact polynomial division");
        Poly { content: &self.content / &d.content, prim: q }
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.prim.last() {
            None => Poly::zero(),
            Some(l) => Poly { content: BigRational::from_integer(l.clone()).recip(), prim: self.prim.clone() },
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        let g = zpoly::gcd(&self.prim, &rhs.prim);
        if g.len() == 1 {
            return Poly::one();
        }
        let lead = BigRational::from_integer(g.last().expect("nonzero").clone());
        Poly { content: lead.recip(), prim: g }
    }

    /// Substitutes `x ↦ -x`.
    pub fn reflect(&self) -> Poly {
        let mut prim: Vec<BigInt> =
            self.prim.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
        let mut content = self.content.clone();
        if prim.last().is_some_and(Signed::is_negative) {
            for c in prim.iter_mut() {
                *c = -&*c;
            }
            content = -content;
        }
        Poly { content, prim }
    }

    pub fn parse(s: &str) -> Result<Poly> {
        let mut out = Poly::zero();
        for t in parse_terms(s, &['x'], true)? {
            let deg = if t.unit.is_some() { t.exp as usize } else { 0 };
            if deg > 4096 {
                return Err(Error::Parse(format!("degree too large in `{s}`")));
            }
            out = out.add(&Poly::monomial(t.coef, deg));
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = match k {
                0 => None,
                1 => Some("x".to_string()),
                _ => Some(format!("x^{k}")),
            };
            let first = s.is_empty();
            write_term(&mut s, c, unit.as_deref(), first);
        }
        f.write_str(&s)
    }
}
