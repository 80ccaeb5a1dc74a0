use std::fmt;

use num::{BigInt, BigRational, Signed, Zero};

use super::literal::{parse_terms, write_term};
use super::{clear_denominators, RingId, StarField};
use crate::error::Result;

/// `a + b*i + c*j + d*k` with rational parts and Hamilton's multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Quaternion { a, b, c, d }
    }

    fn parts(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn unit(idx: usize) -> Self {
        let mut p = [(); 4].map(|_| BigRational::zero());
        p[idx] = BigRational::from_integer(1.into());
        let [a, b, c, d] = p;
        Quaternion::new(a, b, c, d)
    }

    pub fn i() -> Self {
        Self::unit(1)
    }
    pub fn j() -> Self {
        Self::unit(2)
    }
    pub fn k() -> Self {
        Self::unit(3)
    }

    fn norm_sq(&self) -> BigRational {
        self.parts().iter().map(|x| *x * *x).sum()
    }
}

impl StarField for Quaternion {
    const RING: RingId = RingId::Quaternion;

    fn zero() -> Self {
        Self::from_rational(&BigRational::zero())
    }
    fn one() -> Self {
        Self::unit(0)
    }
    fn from_rational(q: &BigRational) -> Self {
        Quaternion::new(q.clone(), BigRational::zero(), BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.parts().iter().all(|x| x.is_zero())
    }
    fn add(&self, r: &Self) -> Self {
        Quaternion::new(&self.a + &r.a, &self.b + &r.b, &self.c + &r.c, &self.d + &r.d)
    }
    fn sub(&self, r: &Self) -> Self {
        Quaternion::new(&self.a - &r.a, &self.b - &r.b, &self.c - &r.c, &self.d - &r.d)
    }
    fn mul(&self, r: &Self) -> Self {
        let ([a1, b1, c1, d1], n1) = clear_denominators([&self.a, &self.b, &self.c, &self.d]);
        let ([a2, b2, c2, d2], n2) = clear_denominators([&r.a, &r.b, &r.c, &r.d]);
        let den = n1 * n2;
        let part = |n: BigInt| BigRational::new(n, den.clone());
        Quaternion::new(
            part(&a1 * &a2 - &b1 * &b2 - &c1 * &c2 - &d1 * &d2),
            part(&a1 * &b2 + &b1 * &a2 + &c1 * &d2 - &d1 * &c2),
            part(&a1 * &c2 - &b1 * &d2 + &c1 * &a2 + &d1 * &b2),
            part(&a1 * &d2 + &b1 * &c2 - &c1 * &b2 + &d1 * &a2),
        )
    }
    fn neg(&self) -> Self {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        let s = self.star();
        Some(Quaternion::new(&s.a / &n, &s.b / &n, &s.c / &n, &s.d / &n))
    }
    fn star(&self) -> Self {
        Quaternion::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }
    fn is_hermitian(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
    fn is_positive_hermitian(&self) -> bool {
        !self.a.is_negative()
    }
    fn parse_literal(s: &str) -> Result<Self> {
        let mut out = Quaternion::zero();
        for t in parse_terms(s, &['i', 'j', 'k'], false)? {
            match t.unit {
                None => out.a += t.coef,
                Some('i') => out.b += t.coef,
                Some('j') => out.c += t.coef,
                Some(_) => out.d += t.coef,
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (part, unit) in self.parts().into_iter().zip([None, Some("i"), Some("j"), Some("k")]) {
            if !part.is_zero() {
                let first = s.is_empty();
                write_term(&mut s, part, unit, first);
            }
        }
        f.write_str(&s)
    }
}
