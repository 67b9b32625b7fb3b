use std::collections::BTreeMap;

use crate::algebra::{MultiPoly, PowerSeries, Scalar, Var};
use crate::error::{Error, Result};
use crate::objects::Permutation;

/// Occurrences of the bivincular pattern: adjacent positions `p, p+1` and a
/// later position `r` with `s_r < s_p < s_{p+1}` and `s_p = s_r + 1`.
pub fn fishburn_occurrences(sigma: &Permutation) -> usize {
    let s = sigma.as_slice();
    let mut count = 0;
    for p in 0..s.len().saturating_sub(1) {
        if s[p] < s[p + 1] {
            count += s[p + 2..].iter().filter(|&&v| v + 1 == s[p]).count();
        }
    }
    count
}

/// Avoiders of the bivincular pattern in `S_n`, in lexicographic order.
/// Prefixes are pruned as soon as the newest entry completes an occurrence.
pub fn fishburn_avoiders(n: usize) -> Vec<Permutation> {
    fn go(n: usize, used: &mut [bool], pos: &mut [usize], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::new(cur.clone()).expect("distinct values"));
            return;
        }
        let r = cur.len();
        for v in 1..=n {
            if used[v] {
                continue;
            }
            // v completes an occurrence if v + 1 sits at some p with an
            // ascent p -> p+1 and p + 1 < r
            if v < n && used[v + 1] {
                let p = pos[v + 1];
                if p + 1 < r && cur[p] < cur[p + 1] {
                    continue;
                }
            }
            used[v] = true;
            pos[v] = r;
            cur.push(v);
            go(n, used, pos, cur, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; n + 2], &mut vec![0; n + 2], &mut Vec::with_capacity(n), &mut out);
    out
}

/// Longest stretch of adjacent entries each one less than the previous.
pub fn max_value_run(sigma: &Permutation) -> usize {
    let s = sigma.as_slice();
    if s.is_empty() {
        return 0;
    }
    let mut best = 1;
    let mut cur = 1;
    for w in s.windows(2) {
        cur = if w[1] + 1 == w[0] { cur + 1 } else { 1 };
        best = best.max(cur);
    }
    best
}

/// Length of the initial decreasing run `s_1 > s_2 > ... > s_j`.
pub fn leftmost_run(sigma: &Permutation) -> usize {
    let s = sigma.as_slice();
    if s.is_empty() {
        return 0;
    }
    1 + s.windows(2).take_while(|w| w[0] > w[1]).count()
}

/// How "at most k consecutive elements in decreasing order" is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RunBoundary {
    /// Value runs shorter than `k`; agrees with the product formula.
    #[default]
    Strict,
    /// Value runs of length at most `k`.
    Inclusive,
}

impl RunBoundary {
    pub fn admits(self, run: usize, k: usize) -> bool {
        match self {
            RunBoundary::Strict => run < k,
            RunBoundary::Inclusive => run <= k,
        }
    }
}

/// Aggregated statistics over the avoiders in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FishburnCensus {
    pub n: usize,
    pub avoiders: u64,
    /// Avoider count by longest consecutive-value descending run.
    pub by_max_run: BTreeMap<usize, u64>,
    /// Avoider count by length of the leftmost decreasing run.
    pub by_leftmost_run: BTreeMap<usize, u64>,
}

impl FishburnCensus {
    /// Avoiders whose value runs all satisfy the boundary for `k`.
    pub fn bounded_by(&self, k: usize, boundary: RunBoundary) -> u64 {
        self.by_max_run.iter().filter(|(&r, _)| boundary.admits(r, k)).map(|(_, c)| c).sum()
    }

    /// `sum z^(leftmost run)` over avoiders.
    pub fn leftmost_polynomial<S: Scalar>(&self) -> MultiPoly<S> {
        let mut p = MultiPoly::zero();
        for (&r, &c) in &self.by_leftmost_run {
            p.add_term([0, 0, 0, r as u32], S::from_int(c as i64));
        }
        p
    }
}

pub fn fishburn_census(n: usize) -> FishburnCensus {
    let mut census =
        FishburnCensus { n, avoiders: 0, by_max_run: BTreeMap::new(), by_leftmost_run: BTreeMap::new() };
    for sigma in fishburn_avoiders(n) {
        census.avoiders += 1;
        *census.by_max_run.entry(max_value_run(&sigma)).or_insert(0) += 1;
        *census.by_leftmost_run.entry(leftmost_run(&sigma)).or_insert(0) += 1;
    }
    census
}

/// The product-form generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FishburnGf {
    /// `sum_n prod_{i=1}^n (1 - ((1-t)/(1-t^k))^i)`.
    FishburnK(usize),
    /// `sum_n prod_{i=1}^n (1 - (1-t)^i)`.
    Fishburn,
    /// `sum_n prod_{i=1}^n (1 - (1-t)^(i-1) (1 - zt))`.
    LeftmostConjecture,
}

/// Exact expansion to `t^order`. The `n`-th product is `O(t^n)`, so the
/// outer sum stops at `n = order`.
pub fn reference_gf<S: Scalar>(kind: FishburnGf, order: usize) -> Result<PowerSeries<S>> {
    let one = PowerSeries::<S>::one(order);
    let one_minus_t = &one - &PowerSeries::t(order);
    let base = match kind {
        FishburnGf::FishburnK(k) => {
            if k == 0 {
                return Err(Error::domain("the run bound k must be at least 1"));
            }
            let den = &one - &PowerSeries::monomial(MultiPoly::one(), k, order);
            &one_minus_t * &den.inverse()?
        }
        FishburnGf::Fishburn | FishburnGf::LeftmostConjecture => one_minus_t.clone(),
    };
    let one_minus_zt = &one - &PowerSeries::monomial(MultiPoly::var(Var::Z), 1, order);
    let mut total = one.clone();
    let mut product = one.clone();
    let mut power = one.clone();
    for _ in 1..=order {
        let factor = match kind {
            FishburnGf::LeftmostConjecture => {
                let f = &one - &(&power * &one_minus_zt);
                power = &power * &base;
                f
            }
            _ => {
                power = &power * &base;
                &one - &power
            }
        };
        product = &product * &factor;
        total = &total + &product;
    }
    Ok(total)
}
