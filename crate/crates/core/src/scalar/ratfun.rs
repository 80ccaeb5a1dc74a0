use std::fmt;

use num::{BigRational, One, Signed};

use super::poly::Poly;
use super::{RingId, StarField};
use crate::error::{Error, Result};

/// A rational function `num/den` in `x` over the rationals, with the
/// involution `x ↦ -x`. Stored reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Builds and normalizes `num/den`. Returns `None` when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFun::zero());
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let lead = den.leading().expect("nonzero");
        if lead.is_one() {
            Some(RatFun { num, den })
        } else {
            let inv = lead.recip();
            Some(RatFun { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    /// Makes `den` monic; `num` and `den` must already be coprime.
    fn coprime(num: Poly, den: Poly) -> Self {
        let lead = den.leading().expect("nonzero");
        if lead.is_one() {
            RatFun { num, den }
        } else {
            let inv = lead.recip();
            RatFun { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn x() -> Self {
        RatFun::from_poly(Poly::x())
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Order and leading coefficient of the Laurent expansion at `x = 0`:
    /// `self = coef * x^valuation * (1 + higher order terms)`.
    pub fn laurent_leading(&self) -> Result<(i64, BigRational)> {
        let on = self.num.ord().ok_or(Error::ZeroInput)?;
        let od = self.den.ord().expect("denominator is nonzero");
        let coef = self.num.coeff(on) / self.den.coeff(od);
        Ok((on as i64 - od as i64, coef))
    }
}

impl StarField for RatFun {
    const RING: RingId = RingId::Ratfun;

    fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }
    fn from_rational(q: &BigRational) -> Self {
        RatFun::from_poly(Poly::constant(q.clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero");
        }
        // Henrici: only common factors of the denominators can cancel.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return RatFun { num, den: self.den.mul(&rhs.den) };
        }
        let b = self.den.div_exact(&g);
        let d = rhs.den.div_exact(&g);
        let t = self.num.mul(&d).add(&rhs.num.mul(&b));
        if t.is_zero() {
            return RatFun::zero();
        }
        let g2 = t.gcd(&g);
        RatFun { num: t.div_exact(&g2), den: b.mul(&rhs.den.div_exact(&g2)) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(self.num.mul(&rhs.num));
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        RatFun {
            num: self.num.div_exact(&g1).mul(&rhs.num.div_exact(&g2)),
            den: self.den.div_exact(&g2).mul(&rhs.den.div_exact(&g1)),
        }
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFun::coprime(self.den.clone(), self.num.clone()))
    }
    fn star(&self) -> Self {
        RatFun::coprime(self.num.reflect(), self.den.reflect())
    }
    fn is_positive_hermitian(&self) -> bool {
        // Hermitian elements are even functions, so the valuation is even;
        // x^2 counts as negative, which makes x* x = -x^2 positive.
        match self.laurent_leading() {
            Err(_) => true,
            Ok((v, c)) => {
                if v.rem_euclid(2) != 0 {
                    return false;
                }
                let sign_flip = (v / 2).rem_euclid(2) == 1;
                if sign_flip {
                    c.is_negative()
                } else {
                    c.is_positive()
                }
            }
        }
    }
    fn parse_literal(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad rational function literal `{s}`"));
        let (num, rest) = match compact.strip_prefix('(') {
            None => return Ok(RatFun::from_poly(Poly::parse(&compact)?)),
            Some(tail) => {
                let close = tail.find(')').ok_or_else(bad)?;
                (Poly::parse(&tail[..close])?, &tail[close + 1..])
            }
        };
        if rest.is_empty() {
            return Ok(RatFun::from_poly(num));
        }
        let den_src = rest.strip_prefix('/').ok_or_else(bad)?;
        let den_src = match den_src.strip_prefix('(') {
            Some(inner) => inner.strip_suffix(')').ok_or_else(bad)?,
            None => den_src,
        };
        let den = Poly::parse(den_src)?;
        RatFun::new(num, den).ok_or(Error::DivisionByZero)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFun {
        RatFun::parse_literal(s).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn involution_substitutes_minus_x() {
        assert_eq!(RatFun::x().star(), r("-x"));
        assert_eq!(r("1+x^2").star(), r("1+x^2"));
        assert_eq!(r("(1)/(1+x)").star(), r("(1)/(1-x)"));
    }

    #[test]
    fn canonical_form() {
        let a = r("(2*x^2-2)/(4*x+4)");
        assert_eq!(a.to_string(), "-1/2+1/2*x");
        assert_eq!(r("(x)/(2*x^2+2)").to_string(), "(1/2*x)/(1+x^2)");
        assert_eq!(a.mul(&a.inv().unwrap()), RatFun::one());
    }

    #[test]
    fn laurent_leading_examples() {
        assert_eq!(r("(x^2)/(1+x)").laurent_leading().unwrap(), (2, q(1, 1)));
        assert_eq!(r("(1)/(x^2)").laurent_leading().unwrap(), (-2, q(1, 1)));
        assert_eq!(r("3+x").laurent_leading().unwrap(), (0, q(3, 1)));
        assert_eq!(RatFun::zero().laurent_leading(), Err(Error::ZeroInput));
    }

    #[test]
    fn cone_membership() {
        assert!(r("-x^2").is_positive_hermitian());
        assert!(!r("x^2").is_positive_hermitian());
        assert!(RatFun::x().norm().is_positive_hermitian());
        assert!(r("x^4").is_positive_hermitian());
        assert!(r("(1)/(-x^2)").is_positive_hermitian());
        assert!(!r("-1").is_positive_hermitian());
        assert!(r("1-x^2").is_positive_hermitian());
    }

    #[test]
    fn literal_forms() {
        assert_eq!(r("(1+2*x+3*x^2)/(1+x)").to_string(), "(1+2*x+3*x^2)/(1+x)");
        assert_eq!(r("x"), RatFun::x());
        assert_eq!(r("(x)"), RatFun::x());
        assert_eq!(r("(1)/(2)"), RatFun::from_rational(&q(1, 2)));
        assert!(RatFun::parse_literal("(1)/(0)").is_err());
        assert!(RatFun::parse_literal("(1+x").is_err());
    }
}
