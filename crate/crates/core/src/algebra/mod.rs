//! Exact coefficient arithmetic: polynomials, truncated series and
//! q-analogues.

mod parse;
mod poly;
mod qanalog;
mod scalar;
mod series;

pub use parse::parse_poly;
pub use poly::{Exponents, MultiPoly, Var, NVARS};
pub use qanalog::{pochhammer_zx, q_binomial, q_factorial, q_int, QAnalogue};
pub use scalar::Scalar;
pub use series::{PowerSeries, DEFAULT_ORDER, MAX_ORDER};
