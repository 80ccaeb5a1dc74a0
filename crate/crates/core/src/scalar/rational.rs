use std::fmt;

use num::{BigRational, One, Signed, Zero};

use super::literal::parse_terms;
use super::{RingId, StarField};
use crate::error::{Error, Result};

/// An element of the rationals with the trivial involution.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(n: i64, d: i64) -> Self {
        Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl StarField for Rational {
    const RING: RingId = RingId::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_rational(q: &BigRational) -> Self {
        Rational(q.clone())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }
    fn star(&self) -> Self {
        self.clone()
    }
    fn is_hermitian(&self) -> bool {
        true
    }
    fn is_positive_hermitian(&self) -> bool {
        !self.0.is_negative()
    }
    fn parse_literal(s: &str) -> Result<Self> {
        let terms = parse_terms(s, &[], false)?;
        if terms.len() != 1 {
            return Err(Error::Parse(format!("bad rational literal `{s}`")));
        }
        Ok(Rational(terms[0].coef.clone()))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        for s in ["0", "-3", "7/2", "-1/9"] {
            assert_eq!(Rational::parse_literal(s).unwrap().to_string(), s);
        }
        assert_eq!(Rational::parse_literal("4/6").unwrap(), Rational::new(2, 3));
        assert!(Rational::parse_literal("1+2").is_err());
    }

    #[test]
    fn cone_is_nonnegative_rationals() {
        assert!(Rational::zero().is_positive_hermitian());
        assert!(!Rational::from_int(-1).is_positive_hermitian());
        assert!(Rational::new(1, 3).is_positive_hermitian());
    }
}
