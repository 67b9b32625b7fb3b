//! Truncated power series in the distinguished variable `t` with polynomial
//! coefficients.
//!
//! Binary operations truncate to the smaller of the two orders. Every
//! transcendental operation (`exp`, `log`, `q_power`) is computed by the usual
//! coefficient recurrences, so results are exact whenever the scalar field is.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{MultiPoly, Scalar, Var};
use crate::error::{Error, Result};

/// Default truncation order for series computations.
pub const DEFAULT_ORDER: usize = 12;

/// Orders never grow past this bound, e.g. when integrating.
pub const MAX_ORDER: usize = 64;

/// `coeffs[n]` is the coefficient of `t^n`, for `n` in `0..=order`.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<S> {
    order: usize,
    coeffs: Vec<MultiPoly<S>>,
}

impl<S: Scalar> PowerSeries<S> {
    pub fn zero(order: usize) -> Self {
        PowerSeries { order, coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    pub fn constant(c: MultiPoly<S>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(MultiPoly::one(), 1, order)
    }

    /// `c * t^k` (zero if `k` exceeds the order).
    pub fn monomial(c: MultiPoly<S>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are discarded.
    pub fn from_coeffs(coeffs: Vec<MultiPoly<S>>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[n] = c;
        }
        s
    }

    /// Reads the polynomial `p` as a series in `v`, which is renamed to `t`.
    pub fn from_poly_in(p: &MultiPoly<S>, v: Var, order: usize) -> Self {
        let top = p.degree_in(v).unwrap_or(0) as usize;
        let coeffs = (0..=top.min(order)).map(|k| p.coeff_of(v, k as u32)).collect();
        Self::from_coeffs(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[MultiPoly<S>] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &MultiPoly<S> {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order.min(self.order))
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly<S>) -> MultiPoly<S>) -> Self {
        PowerSeries { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&MultiPoly<S>) -> Result<MultiPoly<S>>) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(PowerSeries { order: self.order, coeffs })
    }

    pub fn scale(&self, c: &MultiPoly<S>) -> Self {
        self.map_coeffs(|a| a * c)
    }

    pub fn scale_scalar(&self, c: &S) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    /// `f(c t)`: multiplies the coefficient of `t^n` by `c^n`.
    pub fn dilate(&self, c: &MultiPoly<S>) -> Self {
        let mut power = MultiPoly::one();
        let mut out = Self::zero(self.order);
        for (n, a) in self.coeffs.iter().enumerate() {
            out.coeffs[n] = a * &power;
            power = &power * c;
        }
        out
    }

    pub fn subs(&self, v: Var, value: &S) -> Self {
        self.map_coeffs(|a| a.subs(v, value))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    fn scalar_n(n: usize) -> S {
        S::from_usize_exact(n)
    }

    /// Multiplicative inverse, for a series whose constant term is a nonzero
    /// scalar. Use [`PowerSeries::ratio`] when the constant term is a
    /// non-constant polynomial.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() || !c0.is_constant() {
            return Err(Error::domain(format!(
                "series with constant term {c0} is not invertible over the scalars"
            )));
        }
        let inv_c0 = S::one() / c0.constant_term();
        let mut out = Self::zero(self.order);
        out.coeffs[0] = MultiPoly::constant(inv_c0.clone());
        for n in 1..=self.order {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = acc.scale(&-inv_c0.clone());
        }
        Ok(out)
    }

    /// `num / den`, where the constant term of `den` may be any nonzero
    /// polynomial that divides every coefficient of both series.
    pub fn ratio(num: &Self, den: &Self) -> Result<Self> {
        let c0 = den.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::domain("denominator has zero constant term"));
        }
        let num = num.try_map_coeffs(|a| a.div_exact(&c0))?;
        let den = den.try_map_coeffs(|a| a.div_exact(&c0))?;
        Ok(&num * &den.inverse()?)
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp requires a series with zero constant term"));
        }
        // n g_n = sum_{k=1}^{n} k f_k g_{n-k}
        let mut out = Self::zero(self.order);
        out.coeffs[0] = MultiPoly::one();
        for n in 1..=self.order {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &out.coeffs[n - k]).scale(&Self::scalar_n(k));
                }
            }
            out.coeffs[n] = acc.scale(&(S::one() / Self::scalar_n(n)));
        }
        Ok(out)
    }

    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain("log requires a series with constant term 1"));
        }
        // g_n = f_n - (1/n) sum_{k=1}^{n-1} k g_k f_{n-k}
        let mut out = Self::zero(self.order);
        for n in 1..=self.order {
            let mut acc = MultiPoly::zero();
            for k in 1..n {
                if !self.coeffs[n - k].is_zero() {
                    acc += &(&out.coeffs[k] * &self.coeffs[n - k]).scale(&Self::scalar_n(k));
                }
            }
            out.coeffs[n] = &self.coeffs[n] - &acc.scale(&(S::one() / Self::scalar_n(n)));
        }
        Ok(out)
    }

    /// Divides every coefficient by the variable `v`.
    pub fn div_by_var(&self, v: Var) -> Result<Self> {
        self.try_map_coeffs(|a| {
            a.div_by_var(v)
                .ok_or_else(|| Error::domain(format!("coefficient {a} is not divisible by {}", v.name())))
        })
    }

    /// `f^(1/q)`, computed as `exp(log(f) / q)`.
    pub fn q_power(&self) -> Result<Self> {
        self.log()?.div_by_var(Var::Q)?.exp()
    }

    /// Term-wise antiderivative with zero constant term. The order grows by
    /// one, up to [`MAX_ORDER`].
    pub fn integrate(&self) -> Self {
        let order = (self.order + 1).min(MAX_ORDER);
        let mut out = Self::zero(order);
        for k in 0..order {
            out.coeffs[k + 1] = self.coeffs[k].scale(&(S::one() / Self::scalar_n(k + 1)));
        }
        out
    }

    /// Formal derivative; the order drops by one (not below zero).
    pub fn derivative(&self) -> Self {
        let order = self.order.saturating_sub(1);
        let mut out = Self::zero(order);
        for k in 1..=self.order {
            if k - 1 <= order {
                out.coeffs[k - 1] = self.coeffs[k].scale(&Self::scalar_n(k));
            }
        }
        out
    }

    /// `exp(c t)`.
    pub fn exp_linear(c: &MultiPoly<S>, order: usize) -> Self {
        let mut out = Self::zero(order);
        let mut term = MultiPoly::one();
        for n in 0..=order {
            out.coeffs[n] = term.clone();
            term = (&term * c).scale(&(S::one() / Self::scalar_n(n + 1)));
        }
        out
    }

    /// Taylor series of `cos(t)` with rational coefficients.
    pub fn cos(order: usize) -> Self {
        let mut out = Self::zero(order);
        let mut fact = S::one();
        for n in 0..=order {
            if n > 0 {
                fact = fact * Self::scalar_n(n);
            }
            if n % 2 == 0 {
                let sign = if (n / 2) % 2 == 0 { S::one() } else { -S::one() };
                out.coeffs[n] = MultiPoly::constant(sign / fact.clone());
            }
        }
        out
    }

    /// `sec(t) = 1 / cos(t)`.
    pub fn sec(order: usize) -> Self {
        Self::cos(order).inverse().expect("cos has constant term 1")
    }
}

impl<S: Scalar> fmt::Display for PowerSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

impl<'a, S: Scalar> Add<&'a PowerSeries<S>> for &'a PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn add(self, rhs: &'a PowerSeries<S>) -> PowerSeries<S> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect();
        PowerSeries { order, coeffs }
    }
}

impl<'a, S: Scalar> Sub<&'a PowerSeries<S>> for &'a PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn sub(self, rhs: &'a PowerSeries<S>) -> PowerSeries<S> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect();
        PowerSeries { order, coeffs }
    }
}

impl<'a, S: Scalar> Mul<&'a PowerSeries<S>> for &'a PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn mul(self, rhs: &'a PowerSeries<S>) -> PowerSeries<S> {
        let order = self.order.min(rhs.order);
        let mut out = PowerSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn neg(self) -> PowerSeries<S> {
        self.map_coeffs(|a| -a)
    }
}

macro_rules! forward_owned_series_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<S: Scalar> $tr for PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $m(self, rhs: PowerSeries<S>) -> PowerSeries<S> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned_series_binop!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational, Series};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }
    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_series() {
        let one_minus_t = &Series::one(8) - &Series::t(8);
        let inv = one_minus_t.inverse().unwrap();
        for n in 0..=8 {
            assert!(inv.coeff(n).is_one());
        }
        let one_minus_qt = &Series::one(8) - &Series::monomial(p("q"), 1, 8);
        let inv = one_minus_qt.inverse().unwrap();
        for n in 0..=8 {
            assert_eq!(inv.coeff(n), &Poly::var_pow(r(1, 1), Var::Q, n as u32));
        }
    }

    #[test]
    fn secant_coefficients() {
        let sec = Series::sec(8);
        assert_eq!(sec.coeff(2), &Poly::constant(r(1, 2)));
        assert_eq!(sec.coeff(4), &Poly::constant(r(5, 24)));
        assert_eq!(sec.coeff(6), &Poly::constant(r(61, 720)));
        assert!(sec.coeff(3).is_zero());
    }

    #[test]
    fn log_of_secant() {
        let l = Series::sec(6).log().unwrap();
        assert_eq!(l.coeff(2), &Poly::constant(r(1, 2)));
        assert_eq!(l.coeff(4), &Poly::constant(r(1, 12)));
    }

    #[test]
    fn exp_of_linear_term() {
        let e = Series::t(4).scale(&p("x - 1")).exp().unwrap();
        assert_eq!(e.coeff(2), &p("(x-1)^2/2"));
        assert_eq!(e, Series::exp_linear(&p("x-1"), 4));
    }

    #[test]
    fn exp_log_roundtrip_on_one_plus_t() {
        let f = &Series::one(6) + &Series::t(6);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn q_power_of_secant() {
        let sec_qt = Series::sec(8).dilate(&p("q"));
        let root = sec_qt.q_power().unwrap();
        assert_eq!(root.coeff(2), &p("q/2"));
        assert_eq!(root.coeff(4), &p("q^3/12 + q^2/8"));
        assert!(Series::one(5).q_power().unwrap() == Series::one(5));
    }

    #[test]
    fn q_power_rejects_unscaled_input() {
        let err = Series::sec(4).q_power();
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn integration() {
        let i = Series::one(4).integrate();
        assert_eq!(i, Series::t(5));
        let t3 = Series::monomial(Poly::one(), 3, 5);
        assert_eq!(t3.integrate().coeff(4), &Poly::constant(r(1, 4)));
        let sec_qt = Series::sec(6).dilate(&p("q"));
        let integrand = &sec_qt * &sec_qt.q_power().unwrap();
        assert_eq!(integrand.integrate().coeff(3), &p("(q^2+q)/6"));
    }

    #[test]
    fn precondition_errors() {
        assert!(Series::t(3).inverse().is_err());
        assert!(Series::constant(p("x"), 3).inverse().is_err());
        assert!(Series::one(3).exp().is_err());
        assert!(Series::t(3).log().is_err());
    }

    #[test]
    fn ratio_with_polynomial_constant_term() {
        // (x-1) / (x - exp((x-1)t)) starts 1 + t + (1+x)/2 t^2
        let num = Series::constant(p("x-1"), 3);
        let den = &Series::constant(p("x"), 3) - &Series::exp_linear(&p("x-1"), 3);
        let f = Series::ratio(&num, &den).unwrap();
        assert!(f.coeff(0).is_one());
        assert!(f.coeff(1).is_one());
        assert_eq!(f.coeff(2), &p("1/2 + 1/2*x"));
    }

    #[test]
    fn binary_ops_take_min_order() {
        let a = Series::one(3);
        let b = Series::one(7);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
    }

    #[test]
    fn derivative_undoes_integration() {
        let f = Series::sec(6);
        assert_eq!(f.integrate().derivative(), f);
    }
}
