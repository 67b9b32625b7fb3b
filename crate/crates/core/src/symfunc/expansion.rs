//! Explicit polynomials in `x_1..x_m`, used as the ground-truth oracle for
//! identities between symmetric-function bases.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use super::tableaux::kostka_composition;
use super::Basis;
use crate::algebra::Scalar;
use crate::objects::Partition;

/// Polynomial in `m` variables, keyed by exponent vectors of length `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialExpansion<S> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Scalar> MonomialExpansion<S> {
    pub fn zero(nvars: usize) -> Self {
        MonomialExpansion { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut e = Self::zero(nvars);
        e.add_term(vec![0; nvars], S::one());
        e
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> S {
        self.terms.get(exps).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: S) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Exchanges variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i, j);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Invariance under every adjacent transposition, hence under all of
    /// `S_m`.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i - 1, i) == *self)
    }

    /// Elementary `e_k(x_1..x_m)`.
    pub fn elementary(k: usize, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        let mut cur = vec![0u32; nvars];
        subsets(0, k, &mut cur, &mut out);
        out
    }

    /// Complete homogeneous `h_k(x_1..x_m)`.
    pub fn homogeneous(k: usize, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for alpha in compositions(k, nvars) {
            out.add_term(alpha, S::one());
        }
        out
    }

    /// Monomial `m_mu`: the sum of all distinct rearrangements of `x^mu`.
    pub fn monomial_symmetric(mu: &Partition, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        if mu.len() > nvars {
            return out;
        }
        let mut padded: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
        padded.resize(nvars, 0);
        padded.sort_unstable();
        loop {
            out.add_term(padded.clone(), S::one());
            if !next_multiset_permutation(&mut padded) {
                break;
            }
        }
        out
    }

    /// Schur `s_lambda`: the generating function of semistandard tableaux.
    pub fn schur(lambda: &Partition, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for alpha in compositions(lambda.size(), nvars) {
            let content: Vec<usize> = alpha.iter().map(|&a| a as usize).collect();
            let k = kostka_composition(lambda, &content);
            if k > 0 {
                out.add_term(alpha, S::from_int(k as i64));
            }
        }
        out
    }

    /// Expands the basis element `b_lambda` in `nvars` variables. Products of
    /// generators are multiplied out directly for `e` and `h`.
    pub fn basis_element(basis: Basis, lambda: &Partition, nvars: usize) -> Self {
        match basis {
            Basis::Elementary => {
                lambda.parts().iter().fold(Self::one(nvars), |acc, &k| &acc * &Self::elementary(k, nvars))
            }
            Basis::Homogeneous => {
                lambda.parts().iter().fold(Self::one(nvars), |acc, &k| &acc * &Self::homogeneous(k, nvars))
            }
            Basis::Monomial => Self::monomial_symmetric(lambda, nvars),
            Basis::Schur => Self::schur(lambda, nvars),
        }
    }
}

fn subsets<S: Scalar>(start: usize, k: usize, cur: &mut Vec<u32>, out: &mut MonomialExpansion<S>) {
    if k == 0 {
        out.add_term(cur.clone(), S::one());
        return;
    }
    for i in start..cur.len() {
        if cur.len() - i < k {
            break;
        }
        cur[i] = 1;
        subsets(i + 1, k - 1, cur, out);
        cur[i] = 0;
    }
}

/// Weak compositions of `n` into exactly `parts` parts.
pub fn compositions(n: usize, parts: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, slot: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot + 1 == cur.len() {
            cur[slot] = n as u32;
            out.push(cur.clone());
            return;
        }
        for a in 0..=n {
            cur[slot] = a as u32;
            go(n - a, slot + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0; parts];
    go(n, 0, &mut cur, &mut out);
    out
}

fn next_multiset_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl<'a, S: Scalar> Add<&'a MonomialExpansion<S>> for &'a MonomialExpansion<S> {
    type Output = MonomialExpansion<S>;
    fn add(self, rhs: &'a MonomialExpansion<S>) -> MonomialExpansion<S> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a MonomialExpansion<S>> for &'a MonomialExpansion<S> {
    type Output = MonomialExpansion<S>;
    fn sub(self, rhs: &'a MonomialExpansion<S>) -> MonomialExpansion<S> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, S: Scalar> Mul<&'a MonomialExpansion<S>> for &'a MonomialExpansion<S> {
    type Output = MonomialExpansion<S>;
    fn mul(self, rhs: &'a MonomialExpansion<S>) -> MonomialExpansion<S> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MonomialExpansion::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}
