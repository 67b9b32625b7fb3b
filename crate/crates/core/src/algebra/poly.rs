//! Sparse multivariate polynomials in the fixed variables `q, x, y, z`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Scalar;
use crate::error::{Error, Result};

/// Number of coefficient variables.
pub const NVARS: usize = 4;

/// Exponent vector, indexed in the order `q, x, y, z`.
pub type Exponents = [u32; NVARS];

/// A coefficient variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Q,
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn unit(self) -> Exponents {
        let mut e = [0; NVARS];
        e[self.index()] = 1;
        e
    }
}

/// Polynomial with exact coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<S> {
    terms: BTreeMap<Exponents, S>,
}

impl<S: Scalar> Default for MultiPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, [0; NVARS])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(S::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(S::one(), v.unit())
    }

    /// `c * v^k`
    pub fn var_pow(c: S, v: Var, k: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = k;
        Self::monomial(c, e)
    }

    pub fn monomial(c: S, exps: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// Adds `c * x^exps` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: Exponents, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    /// True when no variable occurs (the zero polynomial included).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; NVARS])
    }

    pub fn constant_term(&self) -> S {
        self.coeff(&[0; NVARS])
    }

    pub fn coeff(&self, exps: &Exponents) -> S {
        self.terms.get(exps).cloned().unwrap_or_else(S::zero)
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    /// Highest power of `v`, or `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[v.index()] == k {
                let mut e2 = *e;
                e2[v.index()] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect() }
    }

    pub fn mul_monomial(&self, exps: &Exponents) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = *e;
                    for i in 0..NVARS {
                        e2[i] += exps[i];
                    }
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides by the variable `v`, or returns `None` if some term lacks it.
    pub fn div_by_var(&self, v: Var) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[v.index()] == 0 {
                return None;
            }
            let mut e2 = *e;
            e2[v.index()] -= 1;
            out.terms.insert(e2, c.clone());
        }
        Some(out)
    }

    /// Exact division. Fails unless `divisor` divides `self` with zero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lead_e, lead_c) =
            divisor.leading_term().ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            let mut shift = [0; NVARS];
            for i in 0..NVARS {
                if e[i] < lead_e[i] {
                    return Err(Error::domain(format!("{divisor} does not divide {self}")));
                }
                shift[i] = e[i] - lead_e[i];
            }
            let factor = c.clone() / lead_c.clone();
            rem -= &divisor.mul_monomial(&shift).scale(&factor);
            quot.add_term(shift, factor);
        }
        Ok(quot)
    }

    /// Lexicographically largest term.
    fn leading_term(&self) -> Option<(&Exponents, &S)> {
        self.terms.iter().next_back()
    }

    /// Substitutes the scalar `value` for `v`.
    pub fn subs(&self, v: Var, value: &S) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = std::mem::take(&mut e2[v.index()]);
            out.add_term(e2, c.clone() * pow_scalar(value, k));
        }
        out
    }

    /// Substitutes a polynomial for `v`.
    pub fn compose(&self, v: Var, value: &Self) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<Self> = vec![Self::one()];
        for (e, c) in &self.terms {
            let k = e[v.index()] as usize;
            while powers.len() <= k {
                let next = &powers[powers.len() - 1] * value;
                powers.push(next);
            }
            let mut e2 = *e;
            e2[v.index()] = 0;
            out += &powers[k].mul_monomial(&e2).scale(c);
        }
        out
    }

    /// Evaluates at a full point `(q, x, y, z)`.
    pub fn eval(&self, point: &[S; NVARS]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (e, c)| {
            let mut term = c.clone();
            for i in 0..NVARS {
                term = term * pow_scalar(&point[i], e[i]);
            }
            acc + term
        })
    }

    /// Terms in rendering order: ascending total degree, then descending
    /// exponent vector.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &S)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), Reverse(**e)));
        v
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MultiPoly<T> {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }
}

fn pow_scalar<S: Scalar>(base: &S, k: u32) -> S {
    (0..k).fold(S::one(), |acc, _| acc * base.clone())
}

fn render_monomial(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(v.name().to_string()),
            k => parts.push(format!("{}^{k}", v.name())),
        }
    }
    parts.join("*")
}

impl<S: Scalar> fmt::Display for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = render_monomial(e);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Zero for MultiPoly<S> {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for MultiPoly<S> {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl<S: Scalar> From<Var> for MultiPoly<S> {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl<'a, S: Scalar> AddAssign<&'a MultiPoly<S>> for MultiPoly<S> {
    fn add_assign(&mut self, rhs: &'a MultiPoly<S>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a, S: Scalar> SubAssign<&'a MultiPoly<S>> for MultiPoly<S> {
    fn sub_assign(&mut self, rhs: &'a MultiPoly<S>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<S: Scalar> AddAssign for MultiPoly<S> {
    fn add_assign(&mut self, rhs: MultiPoly<S>) {
        *self += &rhs;
    }
}

impl<S: Scalar> SubAssign for MultiPoly<S> {
    fn sub_assign(&mut self, rhs: MultiPoly<S>) {
        *self -= &rhs;
    }
}

impl<'a, S: Scalar> Add<&'a MultiPoly<S>> for &'a MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn add(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, S: Scalar> Sub<&'a MultiPoly<S>> for &'a MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn sub(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, S: Scalar> Mul<&'a MultiPoly<S>> for &'a MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn mul(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<S: Scalar> Neg for MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<S: Scalar> $tr for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $m(self, rhs: MultiPoly<S>) -> MultiPoly<S> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, S: Scalar> $tr<&'a MultiPoly<S>> for MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $m(self, rhs: &'a MultiPoly<S>) -> MultiPoly<S> {
                (&self).$m(rhs)
            }
        }
        impl<'a, S: Scalar> $tr<MultiPoly<S>> for &'a MultiPoly<S> {
            type Output = MultiPoly<S>;
            fn $m(self, rhs: MultiPoly<S>) -> MultiPoly<S> {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);
