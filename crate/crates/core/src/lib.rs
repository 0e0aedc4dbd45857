//! Exact polynomial families related by Eulerian summation operators.
//!
//! Everything is computed over arbitrary-precision rationals. The polynomial
//! ring [`Poly`] is generic over its coefficient type; the families are fixed
//! to [`QPoly`].

pub mod catalan;
pub mod combinat;
pub mod error;
pub mod families;
pub mod operators;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod tables;

pub use error::{Error, Result};
pub use poly::Poly;
pub use report::{IdentityReport, Status};
pub use scalar::{ExactSqrt, Field, Scalar};

/// Exact fraction, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Polynomial with rational coefficients.
pub type QPoly = Poly<Rational>;
/// Polynomial with integer coefficients.
pub type ZPoly = Poly<Integer>;
