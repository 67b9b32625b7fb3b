//! Ring homomorphisms defined on the elementary symmetric functions, pushed
//! through the brick-tabloid expansion of `h_n` and through the reciprocal
//! identity `sum h_n t^n = 1 / sum (-1)^n e_n t^n`.

use serde::Deserialize;

use crate::algebra::{parse_poly, q_binomial, MultiPoly, PowerSeries, Scalar, Var};
use crate::error::{Error, Result};
use crate::objects::partitions;

/// The images `phi(e_0) = 1, phi(e_1), ..., phi(e_N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EHomomorphism<S> {
    values: Vec<MultiPoly<S>>,
}

/// A homomorphism shipped with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinPhi {
    /// Gives `n! h_n -> A_n(x)`, the descent polynomial of `S_n`.
    Eulerian,
    /// Gives `h_n -> sum x^des q^sum` over words of length `n` on `k` letters.
    Words(u32),
}

#[derive(Deserialize)]
struct PhiJson {
    values: Vec<String>,
}

impl<S: Scalar> EHomomorphism<S> {
    pub fn new(values: Vec<MultiPoly<S>>) -> Result<Self> {
        match values.first() {
            Some(v) if v.is_one() => Ok(EHomomorphism { values }),
            Some(v) => Err(Error::domain(format!("phi(e_0) must be 1, got {v}"))),
            None => Err(Error::domain("phi needs at least phi(e_0)")),
        }
    }

    /// Parses `{"values": ["1", "-1/2*(x-1)", ...]}`, listing `phi(e_0)` first.
    pub fn from_json(src: &str) -> Result<Self> {
        let raw: PhiJson = serde_json::from_str(src).map_err(|e| Error::parse(e.to_string()))?;
        let values = raw.values.iter().map(|s| parse_poly(s)).collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn builtin(kind: BuiltinPhi, max_n: usize) -> Result<Self> {
        let x_minus_1 = MultiPoly::<S>::var(Var::X) - MultiPoly::one();
        let mut values = vec![MultiPoly::one()];
        let mut fact = S::one();
        for n in 1..=max_n {
            let sign = if (n - 1) % 2 == 0 { S::one() } else { -S::one() };
            let power = x_minus_1.pow(n as u32 - 1);
            let v = match kind {
                BuiltinPhi::Eulerian => {
                    fact = fact * S::from_usize_exact(n);
                    power.scale(&(sign / fact.clone()))
                }
                BuiltinPhi::Words(k) => {
                    if n as u32 > k {
                        MultiPoly::zero()
                    } else {
                        let qb = q_binomial::<S>(k, n as u32)?;
                        let shift = (n * (n - 1) / 2) as u32;
                        (&qb * &power).mul_monomial(&[shift, 0, 0, 0]).scale(&sign)
                    }
                }
            };
            values.push(v);
        }
        Self::new(values)
    }

    /// Largest `n` with a known `phi(e_n)`.
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[MultiPoly<S>] {
        &self.values
    }

    pub fn on_e(&self, n: usize) -> Result<&MultiPoly<S>> {
        self.values.get(n).ok_or_else(|| {
            Error::domain(format!("phi(e_{n}) is not defined (known up to e_{})", self.max_n()))
        })
    }

    /// `phi(h_n) = sum_lambda (-1)^(n - l) |B_{lambda,(n)}| prod phi(e_{lambda_i})`.
    pub fn apply_to_h(&self, n: usize) -> Result<MultiPoly<S>> {
        if n > self.max_n() {
            return Err(Error::domain(format!(
                "phi(h_{n}) needs phi(e_{n}), known up to e_{}",
                self.max_n()
            )));
        }
        let mut total = MultiPoly::zero();
        for lambda in partitions(n) {
            let mut term = MultiPoly::one();
            for &p in lambda.parts() {
                term = &term * &self.values[p];
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            // |B_{lambda,(n)}| is the number of distinct orderings of the parts
            let mut bricks = S::from_usize_exact(factorial(lambda.len()));
            for (_, m) in lambda.multiplicities() {
                bricks = bricks / S::from_usize_exact(factorial(m));
            }
            if (n - lambda.len()) % 2 == 1 {
                bricks = -bricks;
            }
            total += &term.scale(&bricks);
        }
        Ok(total)
    }

    /// `sum_n phi(h_n) t^n` to order `order`, as the reciprocal of
    /// `sum_n (-1)^n phi(e_n) t^n`.
    pub fn series(&self, order: usize) -> Result<PowerSeries<S>> {
        if order > self.max_n() {
            return Err(Error::domain(format!(
                "series to order {order} needs phi(e_{order}), known up to e_{}",
                self.max_n()
            )));
        }
        let coeffs = (0..=order)
            .map(|n| if n % 2 == 0 { self.values[n].clone() } else { -self.values[n].clone() })
            .collect();
        PowerSeries::from_coeffs(coeffs, order).inverse()
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `(x - 1) / (x - exp(t(x - 1)))`.
pub fn eulerian_closed_form<S: Scalar>(order: usize) -> Result<PowerSeries<S>> {
    let x = MultiPoly::<S>::var(Var::X);
    let x_minus_1 = &x - &MultiPoly::one();
    let num = PowerSeries::constant(x_minus_1.clone(), order);
    let den = &PowerSeries::constant(x, order) - &PowerSeries::exp_linear(&x_minus_1, order);
    PowerSeries::ratio(&num, &den)
}

/// `(x - 1) / (x - (t - tx; q)_k)`.
pub fn words_closed_form<S: Scalar>(k: u32, order: usize) -> Result<PowerSeries<S>> {
    let x = MultiPoly::<S>::var(Var::X);
    let num = PowerSeries::constant(&x - &MultiPoly::one(), order);
    let poch = PowerSeries::from_poly_in(&crate::algebra::pochhammer_zx::<S>(k), Var::Z, order);
    let den = &PowerSeries::constant(x, order) - &poch;
    PowerSeries::ratio(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{eulerian_polynomial, factorial as fact, word_statistics_polynomial};
    use crate::{Poly, Rational};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn builtin_values() {
        let e = EHomomorphism::<Rational>::builtin(BuiltinPhi::Eulerian, 3).unwrap();
        assert_eq!(e.values()[1], p("1"));
        assert_eq!(e.values()[2], p("-1/2*(x-1)"));
        let w = EHomomorphism::<Rational>::builtin(BuiltinPhi::Words(2), 3).unwrap();
        assert_eq!(w.values()[2], p("-q*(x-1)"));
        assert!(w.values()[3].is_zero());
    }

    #[test]
    fn eulerian_oracle() {
        let e = EHomomorphism::<Rational>::builtin(BuiltinPhi::Eulerian, 8).unwrap();
        assert_eq!(e.apply_to_h(2).unwrap(), p("1/2 + 1/2*x"));
        for n in 0..=8 {
            let scaled = e.apply_to_h(n).unwrap().scale(&Rational::from_int(fact(n) as i64));
            assert_eq!(scaled, eulerian_polynomial(n), "n={n}");
        }
    }

    #[test]
    fn words_oracle() {
        for k in 1..=4 {
            let w = EHomomorphism::<Rational>::builtin(BuiltinPhi::Words(k), 6).unwrap();
            assert_eq!(w.apply_to_h(1).unwrap(), crate::algebra::q_int(k));
            for n in 0..=6 {
                assert_eq!(
                    w.apply_to_h(n).unwrap(),
                    word_statistics_polynomial(n, k as usize).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn series_agrees_with_expansion_and_closed_forms() {
        let e = EHomomorphism::<Rational>::builtin(BuiltinPhi::Eulerian, 8).unwrap();
        let s = e.series(8).unwrap();
        for n in 0..=8 {
            assert_eq!(s.coeff(n), &e.apply_to_h(n).unwrap());
        }
        assert_eq!(s, eulerian_closed_form(8).unwrap());
        for k in 1..=3 {
            let w = EHomomorphism::<Rational>::builtin(BuiltinPhi::Words(k), 6).unwrap();
            assert_eq!(w.series(6).unwrap(), words_closed_form(k, 6).unwrap(), "k={k}");
        }
    }

    #[test]
    fn trivial_phi_is_geometric() {
        let phi = EHomomorphism::<Rational>::new(vec![p("1"), p("1"), p("0"), p("0")]).unwrap();
        let s = phi.series(3).unwrap();
        for n in 0..=3 {
            assert!(s.coeff(n).is_one());
        }
    }

    #[test]
    fn json_and_errors() {
        let phi = EHomomorphism::<Rational>::from_json(r#"{"values": ["1", "1", "-1/2*(x-1)"]}"#).unwrap();
        assert_eq!(phi.apply_to_h(2).unwrap(), p("1/2 + 1/2*x"));
        assert!(phi.apply_to_h(3).is_err());
        assert!(phi.series(3).is_err());
        assert!(EHomomorphism::<Rational>::from_json(r#"{"values": ["2"]}"#).is_err());
        assert!(EHomomorphism::<Rational>::from_json(r#"{"values": ["1", "x +"]}"#).is_err());
    }
}
