use crate::algebra::{MultiPoly, PowerSeries, Scalar, Var};
use crate::error::{Error, Result};
use crate::objects::{standardize, Permutation};

/// How an occurrence may sit inside the permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Any subsequence.
    Classical,
    /// Contiguous windows only.
    Consecutive,
}

/// Occurrences of `tau` in `sigma`.
pub fn occurrences(sigma: &Permutation, tau: &Permutation, mode: Mode) -> usize {
    let (s, t) = (sigma.as_slice(), tau.as_slice());
    if t.len() > s.len() {
        return 0;
    }
    match mode {
        Mode::Consecutive => s.windows(t.len()).filter(|w| standardize(w) == t).count(),
        Mode::Classical => {
            let mut count = 0;
            let mut pick = Vec::with_capacity(t.len());
            classical(s, t, 0, &mut pick, &mut count);
            count
        }
    }
}

fn classical(s: &[usize], t: &[usize], start: usize, pick: &mut Vec<usize>, count: &mut usize) {
    let k = pick.len();
    if k == t.len() {
        *count += 1;
        return;
    }
    for i in start..=s.len() - (t.len() - k) {
        // the new entry must compare with every earlier pick as tau does
        let ok = pick.iter().enumerate().all(|(j, &p)| (s[p] < s[i]) == (t[j] < t[k]));
        if ok {
            pick.push(i);
            classical(s, t, i + 1, pick, count);
            pick.pop();
        }
    }
}

/// A consecutive pattern starting with 1 and having exactly one descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsecutivePattern(Permutation);

impl ConsecutivePattern {
    pub fn new(tau: Permutation) -> Result<Self> {
        if tau.is_empty() || tau.at(1) != 1 || tau.descents() != 1 {
            return Err(Error::domain(format!("{tau} must start with 1 and have exactly one descent")));
        }
        Ok(ConsecutivePattern(tau))
    }

    pub fn tau(&self) -> &Permutation {
        &self.0
    }
}

/// Permutations of `n` avoiding `tau` consecutively, built by extending
/// prefixes and checking only the newest window.
pub fn consecutive_avoiders(tau: &Permutation, n: usize) -> Vec<Permutation> {
    fn go(n: usize, tau: &[usize], used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::new(cur.clone()).expect("built from distinct values"));
            return;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            cur.push(v);
            let m = tau.len();
            let hit = cur.len() >= m && standardize(&cur[cur.len() - m..]) == tau;
            if !hit {
                used[v] = true;
                go(n, tau, used, cur, out);
                used[v] = false;
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, tau.as_slice(), &mut vec![false; n + 1], &mut Vec::with_capacity(n), &mut out);
    out
}

/// `1 + sum_{n>=1} t^n/n! sum x^LRmin y^(1+des)` over consecutive
/// `tau`-avoiders.
pub fn lrmin_des_series<S: Scalar>(tau: &ConsecutivePattern, order: usize) -> PowerSeries<S> {
    let mut coeffs = vec![MultiPoly::one()];
    let mut fact = S::one();
    for n in 1..=order {
        fact = fact * S::from_usize_exact(n);
        let mut poly = MultiPoly::zero();
        for sigma in consecutive_avoiders(tau.tau(), n) {
            poly.add_term([0, sigma.lrmin() as u32, 1 + sigma.descents() as u32, 0], S::one());
        }
        coeffs.push(poly.scale(&(S::one() / fact.clone())));
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// Recovers `U_{tau,n}(y)` from `series = (1 + sum U_n t^n/n!)^(-x)`.
/// Entry 0 is 1. Fails when `log(series) / x` still involves `x`.
pub fn extract_u<S: Scalar>(tau: &ConsecutivePattern, order: usize) -> Result<Vec<MultiPoly<S>>> {
    let series = lrmin_des_series::<S>(tau, order);
    let log = series.log()?;
    let violation = || {
        Error::IdentityViolation(format!(
            "log of the series for {} is not x times an x-free series",
            tau.tau()
        ))
    };
    let inner = log.div_by_var(Var::X).map_err(|_| violation())?;
    if inner.coeffs().iter().any(|c| c.depends_on(Var::X)) {
        return Err(violation());
    }
    let base = inner.scale_scalar(&-S::one()).exp()?;
    let mut fact = S::one();
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        if n > 0 {
            fact = fact * S::from_usize_exact(n);
        }
        out.push(base.coeff(n).scale(&fact));
    }
    Ok(out)
}
