use std::fmt;

use num::{BigRational, Signed, Zero};

use super::literal::{parse_terms, write_term};
use super::{clear_denominators, RingId, StarField};
use crate::error::Result;

/// `re + im*i` with rational parts; the involution is complex conjugation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::from_integer(1.into()))
    }

    fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl StarField for Gaussian {
    const RING: RingId = RingId::Gaussian;

    fn zero() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Gaussian::new(BigRational::from_integer(1.into()), BigRational::zero())
    }
    fn from_rational(q: &BigRational) -> Self {
        Gaussian::new(q.clone(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Gaussian::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Gaussian::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let ([a, b], n1) = clear_denominators([&self.re, &self.im]);
        let ([c, d], n2) = clear_denominators([&rhs.re, &rhs.im]);
        let den = n1 * n2;
        Gaussian::new(BigRational::new(&a * &c - &b * &d, den.clone()), BigRational::new(&a * &d + &b * &c, den))
    }
    fn neg(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }
    fn star(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }
    fn is_hermitian(&self) -> bool {
        self.im.is_zero()
    }
    fn is_positive_hermitian(&self) -> bool {
        !self.re.is_negative()
    }
    fn parse_literal(s: &str) -> Result<Self> {
        let mut out = Gaussian::zero();
        for t in parse_terms(s, &['i'], false)? {
            match t.unit {
                None => out.re += t.coef,
                Some(_) => out.im += t.coef,
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        if !self.re.is_zero() {
            write_term(&mut s, &self.re, None, true);
        }
        if !self.im.is_zero() {
            let first = s.is_empty();
            write_term(&mut s, &self.im, Some("i"), first);
        }
        f.write_str(&s)
    }
}
