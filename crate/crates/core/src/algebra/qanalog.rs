//! q-integers, q-factorials, Gaussian binomials and the `(z - zx; q)_k`
//! Pochhammer product.

use super::{MultiPoly, Scalar, Var};
use crate::error::{Error, Result};

/// A q-analogue to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QAnalogue {
    /// `[n]_q`
    Int(u32),
    /// `[n]_q!`
    Factorial(u32),
    /// Gaussian binomial `[k choose n]_q`, requires `n <= k`.
    Binomial { k: u32, n: u32 },
    /// `(z - zx; q)_k`, a polynomial in `z`, `x` and `q`.
    PochhammerZx(u32),
}

impl QAnalogue {
    pub fn eval<S: Scalar>(self) -> Result<MultiPoly<S>> {
        match self {
            QAnalogue::Int(n) => Ok(q_int(n)),
            QAnalogue::Factorial(n) => Ok(q_factorial(n)),
            QAnalogue::Binomial { k, n } => q_binomial(k, n),
            QAnalogue::PochhammerZx(k) => Ok(pochhammer_zx(k)),
        }
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int<S: Scalar>(n: u32) -> MultiPoly<S> {
    let mut p = MultiPoly::zero();
    for i in 0..n {
        p += MultiPoly::var_pow(S::one(), Var::Q, i);
    }
    p
}

pub fn q_factorial<S: Scalar>(n: u32) -> MultiPoly<S> {
    (1..=n).fold(MultiPoly::one(), |acc, i| acc * q_int(i))
}

/// `[k choose n]_q`, computed as a ratio of q-factorials.
pub fn q_binomial<S: Scalar>(k: u32, n: u32) -> Result<MultiPoly<S>> {
    if n > k {
        return Err(Error::domain(format!("q-binomial needs 0 <= n <= k, got k={k}, n={n}")));
    }
    let den = q_factorial::<S>(n) * q_factorial::<S>(k - n);
    q_factorial::<S>(k).div_exact(&den)
}

/// `(z - zx; q)_k = prod_{i<k} (1 - (z - zx) q^i)`.
pub fn pochhammer_zx<S: Scalar>(k: u32) -> MultiPoly<S> {
    let z = MultiPoly::<S>::var(Var::Z);
    let a = &z - &(&z * &MultiPoly::var(Var::X));
    (0..k).fold(MultiPoly::one(), |acc, i| {
        let factor = MultiPoly::one() - a.mul_monomial(&[i, 0, 0, 0]);
        acc * factor
    })
}
