//! The coefficient field every polynomial and series is generic over.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// A field of coefficients.
///
/// Exact rationals are the intended instantiation; `f64` also satisfies the
/// bound and is handy for quick numeric sanity checks, but nothing in the
/// library relies on floating point.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar field contains the integers")
    }

    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("every scalar field contains the integers")
    }

    /// Parses a decimal literal such as `3`, `-2` or `5/12`.
    fn parse_literal(src: &str) -> Option<Self> {
        Self::from_str_radix(src, 10).ok().or_else(|| {
            // rationals insist on an explicit denominator
            if src.contains('/') {
                None
            } else {
                Self::from_str_radix(&format!("{src}/1"), 10).ok()
            }
        })
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Signed + FromPrimitive + Send + Sync + 'static
{
}
