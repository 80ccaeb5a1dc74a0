//! Exact computation in categories of weighted matrices over ordered
//! division *-rings.
//!
//! Objects are weight vectors `(m, α)`, morphisms are matrices, and the
//! involution is the weighted conjugate transpose
//! `(M*)_{jk} = α_j M_{kj}* β_k^{-1}`. On top of that the crate provides
//! kernels and complements, Gram–Schmidt on cospans, certified positivity
//! for Hermitian endomorphisms, contractions, Douglas extensions and
//! codilators, plus a randomized law harness.

pub mod category;
pub mod dilation;
pub mod document;
pub mod error;
pub mod factor;
pub mod gram_schmidt;
pub mod harness;
pub mod matrix;
pub mod order;
pub mod scalar;

pub use category::{WMorphism, WObject};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Gaussian, Quaternion, RatFun, Rational, RingId, Scalar, StarField};
