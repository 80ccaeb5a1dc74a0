//! Ordered division *-rings with exact arithmetic.
//!
//! Four concrete rings are supported: the rationals, the Gaussian rationals
//! `Q(i)`, the rational quaternions, and the rational function field `Q(X)`
//! with the involution `X ↦ -X`. Each implements [`StarField`], which is what
//! the rest of the engine is generic over. [`Scalar`] is a tagged union of the
//! four for callers that pick the ring at runtime.

mod gaussian;
mod literal;
mod poly;
mod quaternion;
mod ratfun;
mod rational;
mod zpoly;

use std::fmt;
use std::str::FromStr;

use num::integer::Integer;
use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use gaussian::Gaussian;
pub use poly::Poly;
pub use quaternion::Quaternion;
pub use ratfun::RatFun;
pub use rational::Rational;

/// Identifies one of the supported scalar rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingId {
    Rational,
    Gaussian,
    Quaternion,
    Ratfun,
}

impl RingId {
    pub const ALL: [RingId; 4] = [RingId::Rational, RingId::Gaussian, RingId::Quaternion, RingId::Ratfun];

    pub fn name(self) -> &'static str {
        match self {
            RingId::Rational => "rational",
            RingId::Gaussian => "gaussian",
            RingId::Quaternion => "quaternion",
            RingId::Ratfun => "ratfun",
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rational" | "q" => Ok(RingId::Rational),
            "gaussian" | "qi" => Ok(RingId::Gaussian),
            "quaternion" | "h" => Ok(RingId::Quaternion),
            "ratfun" | "qx" => Ok(RingId::Ratfun),
            other => Err(Error::Parse(format!("unknown ring `{other}`"))),
        }
    }
}

/// An ordered division *-ring whose Hermitian part is totally ordered.
///
/// Every value is kept in a canonical form, so `==` is exact equality of the
/// represented ring elements. The involution is an anti-automorphism:
/// `(ab)* = b*a*`.
pub trait StarField: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const RING: RingId;

    fn zero() -> Self;
    fn one() -> Self;
    /// The image of a rational number; always central and Hermitian.
    fn from_rational(q: &BigRational) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;
    fn star(&self) -> Self;

    /// Cone membership for a Hermitian element. The result is unspecified
    /// for non-Hermitian input; use [`is_positive_scalar`] for a checked call.
    fn is_positive_hermitian(&self) -> bool;

    /// Parses the textual literal form of an element of this ring.
    fn parse_literal(s: &str) -> Result<Self>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn is_hermitian(&self) -> bool {
        self.star() == *self
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    /// `self* self`, the canonical positive element attached to `self`.
    fn norm(&self) -> Self {
        self.star().mul(self)
    }
}

/// Checked positivity test: `Err(NotHermitian)` for non-Hermitian input.
pub fn is_positive_scalar<D: StarField>(a: &D) -> Result<bool> {
    if !a.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    Ok(a.is_positive_hermitian())
}

/// Fallible inverse with a `DivisionByZero` error.
pub fn try_inv<D: StarField>(a: &D) -> Result<D> {
    a.inv().ok_or(Error::DivisionByZero)
}

/// A scalar known to satisfy `a* = a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermitian<D>(D);

impl<D: StarField> Hermitian<D> {
    pub fn new(value: D) -> Result<Self> {
        if value.is_hermitian() {
            Ok(Hermitian(value))
        } else {
            Err(Error::NotHermitian)
        }
    }

    pub fn value(&self) -> &D {
        &self.0
    }

    pub fn into_inner(self) -> D {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive_hermitian()
    }
}

/// A ring element tagged with its ring, for callers that choose the ring at
/// runtime. Arithmetic between different rings is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(Gaussian),
    Quaternion(Quaternion),
    Ratfun(RatFun),
}

macro_rules! binary_op {
    ($name:ident) => {
        pub fn $name(&self, rhs: &Scalar) -> Result<Scalar> {
            match (self, rhs) {
                (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a.$name(b))),
                (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(a.$name(b))),
                (Scalar::Quaternion(a), Scalar::Quaternion(b)) => Ok(Scalar::Quaternion(a.$name(b))),
                (Scalar::Ratfun(a), Scalar::Ratfun(b)) => Ok(Scalar::Ratfun(a.$name(b))),
                _ => Err(Error::RingMismatch { left: self.ring(), right: rhs.ring() }),
            }
        }
    };
}

macro_rules! unary_map {
    ($self:expr, $v:ident => $body:expr) => {
        match $self {
            Scalar::Rational($v) => Scalar::Rational($body),
            Scalar::Gaussian($v) => Scalar::Gaussian($body),
            Scalar::Quaternion($v) => Scalar::Quaternion($body),
            Scalar::Ratfun($v) => Scalar::Ratfun($body),
        }
    };
}

impl Scalar {
    pub fn ring(&self) -> RingId {
        match self {
            Scalar::Rational(_) => RingId::Rational,
            Scalar::Gaussian(_) => RingId::Gaussian,
            Scalar::Quaternion(_) => RingId::Quaternion,
            Scalar::Ratfun(_) => RingId::Ratfun,
        }
    }

    pub fn parse(ring: RingId, text: &str) -> Result<Scalar> {
        Ok(match ring {
            RingId::Rational => Scalar::Rational(Rational::parse_literal(text)?),
            RingId::Gaussian => Scalar::Gaussian(Gaussian::parse_literal(text)?),
            RingId::Quaternion => Scalar::Quaternion(Quaternion::parse_literal(text)?),
            RingId::Ratfun => Scalar::Ratfun(RatFun::parse_literal(text)?),
        })
    }

    binary_op!(add);
    binary_op!(mul);

    pub fn neg(&self) -> Scalar {
        unary_map!(self, a => a.neg())
    }

    pub fn star(&self) -> Scalar {
        unary_map!(self, a => a.star())
    }

    pub fn inv(&self) -> Result<Scalar> {
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(try_inv(a)?),
            Scalar::Gaussian(a) => Scalar::Gaussian(try_inv(a)?),
            Scalar::Quaternion(a) => Scalar::Quaternion(try_inv(a)?),
            Scalar::Ratfun(a) => Scalar::Ratfun(try_inv(a)?),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Gaussian(a) => a.is_zero(),
            Scalar::Quaternion(a) => a.is_zero(),
            Scalar::Ratfun(a) => a.is_zero(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.star() == *self
    }

    pub fn is_positive_scalar(&self) -> Result<bool> {
        match self {
            Scalar::Rational(a) => is_positive_scalar(a),
            Scalar::Gaussian(a) => is_positive_scalar(a),
            Scalar::Quaternion(a) => is_positive_scalar(a),
            Scalar::Ratfun(a) => is_positive_scalar(a),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => a.fmt(f),
            Scalar::Gaussian(a) => a.fmt(f),
            Scalar::Quaternion(a) => a.fmt(f),
            Scalar::Ratfun(a) => a.fmt(f),
        }
    }
}

/// Integer numerators over one common denominator.
fn clear_denominators<const N: usize>(parts: [&BigRational; N]) -> ([BigInt; N], BigInt) {
    let mut den = BigInt::one();
    for p in parts {
        if !p.denom().is_one() && !(&den % p.denom()).is_zero() {
            den = den.lcm(p.denom());
        }
    }
    let nums = parts.map(|p| if p.denom() == &den { p.numer().clone() } else { p.numer() * (&den / p.denom()) });
    (nums, den)
}
