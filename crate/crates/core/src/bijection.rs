//! Bijections between partition-avoidance classes by the Garsia-Milne
//! involution principle.
//!
//! Two families `A_1, A_2, ...` and `B_1, B_2, ...` of multisets with equal
//! max-union sums over every index set give equinumerous classes of
//! partitions avoiding them. The signed sets are pairs `(lambda, S)` with
//! every `A_i`, `i in S`, contained in `lambda`; the cross map swaps the
//! union of the `A_i` for the union of the `B_i`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::{partitions, Partition};

/// Multiset of positive integers as value -> multiplicity.
pub type Multiset = BTreeMap<usize, usize>;

/// A family `A_1, A_2, ...` of forbidden sub-multisets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionFamily {
    /// `A_i = {2i}`.
    EvenParts,
    /// `A_i = {i, ..., i}` with `m` copies (default 2).
    Repeated {
        #[serde(default = "two")]
        m: usize,
    },
    /// `A_i = {m i}`.
    Multiples { m: usize },
    /// `A_i` given directly; indices past the list are absent.
    Explicit { sets: Vec<Vec<usize>> },
}

fn two() -> usize {
    2
}

impl PartitionFamily {
    pub fn repeated() -> Self {
        PartitionFamily::Repeated { m: 2 }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PartitionFamily::Repeated { m } | PartitionFamily::Multiples { m } if *m == 0 => {
                Err(Error::domain("family parameter m must be positive"))
            }
            PartitionFamily::Explicit { sets } => {
                for (i, s) in sets.iter().enumerate() {
                    if s.is_empty() || s.contains(&0) {
                        return Err(Error::domain(format!(
                            "A_{} must be a nonempty multiset of positive integers",
                            i + 1
                        )));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// `A_i` for `i >= 1`, or `None` past the end of an explicit list.
    pub fn member(&self, i: usize) -> Option<Vec<usize>> {
        assert!(i >= 1, "family indices start at 1");
        match self {
            PartitionFamily::EvenParts => Some(vec![2 * i]),
            PartitionFamily::Repeated { m } => Some(vec![i; *m]),
            PartitionFamily::Multiples { m } => Some(vec![m * i]),
            PartitionFamily::Explicit { sets } => sets.get(i - 1).cloned(),
        }
    }

    /// Indices `i` with `sum A_i <= n`, in increasing order.
    pub fn active_indices(&self, n: usize) -> Vec<usize> {
        match self {
            PartitionFamily::Explicit { sets } => sets
                .iter()
                .enumerate()
                .filter(|(_, s)| s.iter().sum::<usize>() <= n)
                .map(|(i, _)| i + 1)
                .collect(),
            // every member sum grows linearly with i
            _ => (1..).take_while(|&i| self.member(i).unwrap().iter().sum::<usize>() <= n).collect(),
        }
    }

    pub fn is_avoided_by(&self, lambda: &Partition) -> bool {
        self.active_indices(lambda.size())
            .into_iter()
            .all(|i| !lambda.contains_multiset(&self.member(i).unwrap()))
    }
}

/// Partitions of `n` containing no `A_i`.
pub fn avoiders(family: &PartitionFamily, n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|l| family.is_avoided_by(l)).collect()
}

fn to_multiset(parts: &[usize]) -> Multiset {
    let mut m = Multiset::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

fn max_union(into: &mut Multiset, other: &Multiset) {
    for (&v, &k) in other {
        let e = into.entry(v).or_insert(0);
        *e = (*e).max(k);
    }
}

fn multiset_sum(m: &Multiset) -> usize {
    m.iter().map(|(v, k)| v * k).sum()
}

/// Union of `A_i` over `set`, with maximum multiplicities.
fn union_over(family: &PartitionFamily, set: &BTreeSet<usize>) -> Multiset {
    let mut u = Multiset::new();
    for &i in set {
        if let Some(a) = family.member(i) {
            max_union(&mut u, &to_multiset(&a));
        }
    }
    u
}

/// Indices that are active for `a` or for `b` at level `n`.
fn joint_active(a: &PartitionFamily, b: &PartitionFamily, n: usize) -> Vec<usize> {
    let mut idx: BTreeSet<usize> = a.active_indices(n).into_iter().collect();
    idx.extend(b.active_indices(n));
    idx.into_iter().collect()
}

/// Above this many active indices the exhaustive subset check refuses to run.
pub const DEFAULT_SUBSET_CAP: usize = 24;

/// Checking the sum condition gets slow past this many active indices.
pub const SUBSET_WARNING: usize = 20;

/// A subset `S` of the active indices whose union sums differ, if any.
pub fn find_sum_violation(
    a: &PartitionFamily,
    b: &PartitionFamily,
    n: usize,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let idx = joint_active(a, b, n);
    for &i in &idx {
        if a.member(i).is_none() || b.member(i).is_none() {
            return Ok(Some(vec![i]));
        }
    }
    if idx.len() > cap {
        return Err(Error::domain(format!(
            "{} active indices at n={n}; the subset check is capped at {cap}",
            idx.len()
        )));
    }
    for mask in 1u64..(1u64 << idx.len()) {
        let s: BTreeSet<usize> =
            idx.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
        if multiset_sum(&union_over(a, &s)) != multiset_sum(&union_over(b, &s)) {
            return Ok(Some(s.into_iter().collect()));
        }
    }
    Ok(None)
}

/// Whether every subset of active indices has equal union sums on both sides.
pub fn check_sum_condition(a: &PartitionFamily, b: &PartitionFamily, n: usize) -> Result<bool> {
    Ok(find_sum_violation(a, b, n, DEFAULT_SUBSET_CAP)?.is_none())
}

/// An element `(lambda, S)` of a signed set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPair {
    pub partition: Partition,
    pub set: BTreeSet<usize>,
}

impl SignedPair {
    pub fn new(partition: Partition, set: BTreeSet<usize>) -> Self {
        SignedPair { partition, set }
    }

    pub fn sign(&self) -> i64 {
        if self.set.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// The machine for one pair of families at one level `n`.
#[derive(Debug, Clone)]
pub struct BijectionMachine {
    a: PartitionFamily,
    b: PartitionFamily,
    n: usize,
    step_cap: usize,
}

impl BijectionMachine {
    /// Fails with a domain error naming the offending index set when the
    /// sum condition does not hold at level `n`.
    pub fn new(a: PartitionFamily, b: PartitionFamily, n: usize) -> Result<Self> {
        a.validate()?;
        b.validate()?;
        if let Some(s) = find_sum_violation(&a, &b, n, DEFAULT_SUBSET_CAP)? {
            return Err(Error::domain(format!("sum condition fails for S = {s:?} at n={n}")));
        }
        let step_cap = signed_set(&a, n).len() + 1;
        Ok(BijectionMachine { a, b, n, step_cap })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn families(&self) -> (&PartitionFamily, &PartitionFamily) {
        (&self.a, &self.b)
    }

    /// The sign-reversing involution on the `A` side.
    pub fn alpha(&self, p: &SignedPair) -> SignedPair {
        toggle_least(&self.a, p)
    }

    /// The sign-reversing involution on the `B` side.
    pub fn beta(&self, p: &SignedPair) -> SignedPair {
        toggle_least(&self.b, p)
    }

    /// Cross map from the `A` side to the `B` side.
    pub fn theta(&self, p: &SignedPair) -> SignedPair {
        swap_unions(&self.a, &self.b, p)
    }

    pub fn theta_inv(&self, p: &SignedPair) -> SignedPair {
        swap_unions(&self.b, &self.a, p)
    }

    pub fn signed_set_a(&self) -> Vec<SignedPair> {
        signed_set(&self.a, self.n)
    }

    pub fn signed_set_b(&self) -> Vec<SignedPair> {
        signed_set(&self.b, self.n)
    }

    /// Image of an `A`-avoider, found by chasing through the signed sets.
    pub fn map(&self, lambda: &Partition) -> Result<Partition> {
        if lambda.size() != self.n {
            return Err(Error::domain(format!("{lambda} is not a partition of {}", self.n)));
        }
        if !self.a.is_avoided_by(lambda) {
            return Err(Error::domain(format!("{lambda} contains a member of the source family")));
        }
        let mut y = self.theta(&SignedPair::new(lambda.clone(), BTreeSet::new()));
        let mut steps = 0;
        loop {
            let next = self.beta(&y);
            if next == y {
                return Ok(y.partition);
            }
            steps += 1;
            if steps > self.step_cap {
                return Err(Error::Internal(format!("chase from {lambda} exceeded {} steps", self.step_cap)));
            }
            y = self.theta(&self.alpha(&self.theta_inv(&next)));
        }
    }

    /// `(lambda, image)` for every `A`-avoider of `n`.
    pub fn map_all(&self) -> Result<Vec<(Partition, Partition)>> {
        avoiders(&self.a, self.n).into_iter().map(|l| self.map(&l).map(|m| (l, m))).collect()
    }
}

/// Convenience wrapper: builds the machine and maps one partition.
pub fn gm_map(a: &PartitionFamily, b: &PartitionFamily, n: usize, lambda: &Partition) -> Result<Partition> {
    BijectionMachine::new(a.clone(), b.clone(), n)?.map(lambda)
}

fn toggle_least(family: &PartitionFamily, p: &SignedPair) -> SignedPair {
    let least = family
        .active_indices(p.partition.size())
        .into_iter()
        .find(|&i| p.partition.contains_multiset(&family.member(i).unwrap()));
    let mut out = p.clone();
    if let Some(j) = least {
        if !out.set.remove(&j) {
            out.set.insert(j);
        }
    }
    out
}

fn swap_unions(from: &PartitionFamily, to: &PartitionFamily, p: &SignedPair) -> SignedPair {
    let mut parts = p.partition.multiplicities();
    for (v, k) in union_over(from, &p.set) {
        let e = parts.get_mut(&v).expect("union is contained in the partition");
        *e -= k;
    }
    for (v, k) in union_over(to, &p.set) {
        *parts.entry(v).or_insert(0) += k;
    }
    let flat = parts.into_iter().flat_map(|(v, k)| std::iter::repeat_n(v, k)).collect();
    SignedPair::new(Partition::from_unsorted(flat), p.set.clone())
}

/// All `(lambda, S)` with `lambda |- n` and `A_i` contained in `lambda` for
/// each `i in S`.
pub fn signed_set(family: &PartitionFamily, n: usize) -> Vec<SignedPair> {
    let active = family.active_indices(n);
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let inside: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&i| lambda.contains_multiset(&family.member(i).unwrap()))
            .collect();
        for mask in 0u64..(1u64 << inside.len()) {
            let set =
                inside.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect();
            out.push(SignedPair::new(lambda.clone(), set));
        }
    }
    out
}

/// A random pair of explicit families satisfying the sum condition: each
/// `A_i` is a single part `s_i` (distinct across `i`), and `B_i` is a
/// partition of `s_i`, with the `B_i` on pairwise disjoint supports.
pub fn random_explicit_pair(seed: u64, max_part: usize, count: usize) -> (PartitionFamily, PartitionFamily) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sums: Vec<usize> = (2..=max_part.max(2)).collect();
    sums.shuffle(&mut rng);
    let mut a_sets = Vec::new();
    let mut b_sets = Vec::new();
    let mut used = BTreeSet::new();
    for s in sums {
        if a_sets.len() == count {
            break;
        }
        for _ in 0..32 {
            let parts = random_composition_parts(&mut rng, s);
            let support: BTreeSet<usize> = parts.iter().copied().collect();
            if support.is_disjoint(&used) {
                used.extend(support);
                a_sets.push(vec![s]);
                b_sets.push(parts);
                break;
            }
        }
    }
    (PartitionFamily::Explicit { sets: a_sets }, PartitionFamily::Explicit { sets: b_sets })
}

/// Random parts summing to `s`, at least two of them when `s >= 2`.
fn random_composition_parts(rng: &mut ChaCha8Rng, s: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = s;
    while left > 0 {
        let top = if parts.is_empty() && left > 1 { left - 1 } else { left };
        let p = rng.gen_range(1..=top);
        parts.push(p);
        left -= p;
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn euler() -> BijectionMachine {
        BijectionMachine::new(PartitionFamily::EvenParts, PartitionFamily::repeated(), 3).unwrap()
    }

    #[test]
    fn avoider_examples() {
        let shown = |f: &PartitionFamily, n| avoiders(f, n).iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(shown(&PartitionFamily::EvenParts, 5), vec!["(5)", "(3,1,1)", "(1,1,1,1,1)"]);
        assert_eq!(shown(&PartitionFamily::repeated(), 5), vec!["(5)", "(4,1)", "(3,2)"]);
        assert_eq!(avoiders(&PartitionFamily::EvenParts, 0), vec![Partition::empty()]);
    }

    #[test]
    fn sum_condition_examples() {
        assert!(check_sum_condition(&PartitionFamily::EvenParts, &PartitionFamily::repeated(), 10).unwrap());
        assert!(check_sum_condition(&PartitionFamily::EvenParts, &PartitionFamily::EvenParts, 10).unwrap());
        let a = PartitionFamily::Explicit { sets: vec![vec![1]] };
        let b = PartitionFamily::Explicit { sets: vec![vec![2]] };
        assert!(!check_sum_condition(&a, &b, 2).unwrap());
        assert_eq!(find_sum_violation(&a, &b, 2, 24).unwrap(), Some(vec![1]));
        assert!(BijectionMachine::new(a, b, 2).is_err());
    }

    #[test]
    fn hand_chases() {
        let m = euler();
        assert_eq!(m.map(&part(&[1, 1, 1])).unwrap(), part(&[2, 1]));
        assert_eq!(m.map(&part(&[3])).unwrap(), part(&[3]));
        assert!(m.map(&part(&[2, 1])).is_err());
        let m0 = BijectionMachine::new(PartitionFamily::EvenParts, PartitionFamily::repeated(), 0).unwrap();
        assert_eq!(m0.map(&Partition::empty()).unwrap(), Partition::empty());
    }

    #[test]
    fn involutions_and_cross_map() {
        for n in 0..=10 {
            let m =
                BijectionMachine::new(PartitionFamily::EvenParts, PartitionFamily::repeated(), n).unwrap();
            for p in m.signed_set_a() {
                let q = m.alpha(&p);
                assert_eq!(m.alpha(&q), p);
                if q == p {
                    assert!(p.set.is_empty() && PartitionFamily::EvenParts.is_avoided_by(&p.partition));
                } else {
                    assert_eq!(q.sign(), -p.sign());
                }
                let t = m.theta(&p);
                assert_eq!(t.sign(), p.sign());
                assert_eq!(m.theta_inv(&t), p);
            }
        }
    }

    #[test]
    fn euler_pair_is_a_bijection() {
        for n in 0..=12 {
            let m =
                BijectionMachine::new(PartitionFamily::EvenParts, PartitionFamily::repeated(), n).unwrap();
            let images: BTreeSet<Partition> = m.map_all().unwrap().into_iter().map(|(_, b)| b).collect();
            let target: BTreeSet<Partition> = avoiders(&PartitionFamily::repeated(), n).into_iter().collect();
            assert_eq!(images, target, "n={n}");
        }
    }

    #[test]
    fn random_families_satisfy_the_condition() {
        for seed in 0..20 {
            let (a, b) = random_explicit_pair(seed, 9, 4);
            for n in 0..=12 {
                assert!(check_sum_condition(&a, &b, n).unwrap(), "seed={seed} n={n} {a:?} {b:?}");
            }
        }
    }

    #[test]
    fn family_json() {
        let f: PartitionFamily = serde_json::from_str(r#"{"kind":"repeated"}"#).unwrap();
        assert_eq!(f, PartitionFamily::repeated());
        let f: PartitionFamily = serde_json::from_str(r#"{"kind":"multiples","m":3}"#).unwrap();
        assert_eq!(f.member(2), Some(vec![6]));
        let f: PartitionFamily = serde_json::from_str(r#"{"kind":"explicit","sets":[[2],[4],[6]]}"#).unwrap();
        assert_eq!(f.active_indices(5), vec![1, 2]);
        assert!(serde_json::from_str::<PartitionFamily>(r#"{"kind":"even_parts"}"#).is_ok());
    }
}
