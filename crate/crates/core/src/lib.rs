//! Exact-arithmetic combinatorics: symmetric-function transition matrices,
//! brick-tabloid homomorphisms, the partition bijection machine, Cayley tree
//! bijections, q-derangements, q-rook numbers and permutation-pattern
//! statistics, each paired with a brute-force reference enumeration.
//!
//! Algebraic routines are generic over a [`Scalar`] field; the aliases below
//! fix the exact rational instantiation used throughout the crate.

pub mod algebra;
pub mod bijection;
pub mod cayley;
pub mod error;
pub mod homomorphism;
pub mod objects;
pub mod patterns;
pub mod rook;
pub mod symfunc;
pub mod verify;

pub use algebra::{MultiPoly, PowerSeries, Scalar, Var};
pub use error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;
/// Polynomial in `q, x, y, z` with rational coefficients.
pub type Poly = MultiPoly<Rational>;
/// Truncated power series in `t` with rational polynomial coefficients.
pub type Series = PowerSeries<Rational>;
/// Floating-point instantiation, for numeric spot checks only.
pub type PolyF64 = MultiPoly<f64>;
pub type SeriesF64 = PowerSeries<f64>;
