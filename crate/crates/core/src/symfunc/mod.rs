//! Symmetric functions at fixed degree: Kostka and inverse Kostka numbers,
//! brick tabloids, and the `h`-to-`e` transition.

mod brick;
mod expansion;
mod rimhook;
mod tableaux;

use std::collections::BTreeMap;
use std::fmt;

pub use brick::{brick_tabloid_count, brick_tabloids, BrickTabloid};
pub use expansion::{compositions, MonomialExpansion};
pub use rimhook::{
    inverse_kostka, inverse_kostka_column, inverse_kostka_matrix, special_rim_hook_tabloids,
    special_rim_hooks, Cell, RimHook, SpecialRimHookTabloid,
};
pub use tableaux::{kostka, kostka_composition, kostka_matrix};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::objects::{partitions, Partition};

/// A basis of the degree-`n` symmetric functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Elementary,
    Homogeneous,
    Monomial,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::Elementary, Basis::Homogeneous, Basis::Monomial, Basis::Schur];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Monomial => "m",
            Basis::Schur => "s",
        }
    }
}

/// A homogeneous symmetric function written in one basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SymFunc<S> {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, S>,
}

impl<S: Scalar> SymFunc<S> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.coeffs.insert(lambda, S::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, S> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> S {
        self.coeffs.get(lambda).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: S) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::domain(format!("{lambda} does not have size {}", self.degree)));
        }
        let entry = self.coeffs.entry(lambda.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    /// Expands in `nvars` variables by summing the expansions of the basis
    /// elements.
    pub fn expand_in_vars(&self, nvars: usize) -> MonomialExpansion<S> {
        self.coeffs.iter().fold(MonomialExpansion::zero(nvars), |acc, (lambda, c)| {
            &acc + &MonomialExpansion::basis_element(self.basis, lambda, nvars).scale(c)
        })
    }
}

impl<S: Scalar> fmt::Display for SymFunc<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}_{lambda}", self.basis.symbol())?;
        }
        Ok(())
    }
}

/// Expansion of a basis element in `nvars` variables.
pub fn expand_in_vars<S: Scalar>(basis: Basis, lambda: &Partition, nvars: usize) -> MonomialExpansion<S> {
    MonomialExpansion::basis_element(basis, lambda, nvars)
}

/// `h_mu = sum_lambda (-1)^(n - l(lambda)) |B_{lambda,mu}| e_lambda`.
pub fn h_to_e<S: Scalar>(mu: &Partition) -> SymFunc<S> {
    let n = mu.size();
    let mut out = SymFunc::zero(n, Basis::Elementary);
    for lambda in partitions(n) {
        let count = brick_tabloid_count(&lambda, mu).expect("sizes agree");
        if count == 0 {
            continue;
        }
        let sign = if (n - lambda.len()).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(lambda, S::from_int(sign * count as i64)).expect("sizes agree");
    }
    out
}

pub(crate) fn check_sizes(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::domain(format!("{lambda} and {mu} have different sizes")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn h_to_e_small() {
        assert_eq!(h_to_e::<Rational>(&part(&[1])).to_string(), "e_(1)");
        assert_eq!(h_to_e::<Rational>(&part(&[2])).to_string(), "e_(1,1) - e_(2)");
        assert_eq!(h_to_e::<Rational>(&part(&[1, 1])).to_string(), "e_(1,1)");
    }

    #[test]
    fn h_to_e_matches_two_variable_oracle() {
        for mu in [part(&[2]), part(&[1, 1])] {
            let lhs = expand_in_vars::<Rational>(Basis::Homogeneous, &mu, 2);
            assert_eq!(h_to_e::<Rational>(&mu).expand_in_vars(2), lhs);
        }
    }

    #[test]
    fn inverse_times_kostka_is_identity_small() {
        for n in 1..=5 {
            let (parts, m) = inverse_kostka_matrix(n);
            let (_, k) = kostka_matrix(n);
            for i in 0..parts.len() {
                for j in 0..parts.len() {
                    let dot: i64 = (0..parts.len()).map(|l| m[i][l] * k[l][j]).sum();
                    assert_eq!(dot, i64::from(i == j), "n={n} {} {}", parts[i], parts[j]);
                }
            }
        }
    }

    #[test]
    fn add_term_checks_degree() {
        let mut f = SymFunc::<Rational>::zero(3, Basis::Schur);
        assert!(f.add_term(part(&[2]), Rational::from_int(1)).is_err());
    }
}
