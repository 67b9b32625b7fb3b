use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part value -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Whether `sub` is contained in the parts as a sub-multiset.
    pub fn contains_multiset(&self, sub: &[usize]) -> bool {
        let have = self.multiplicities();
        let mut need = BTreeMap::new();
        for &p in sub {
            *need.entry(p).or_insert(0usize) += 1;
        }
        need.iter().all(|(p, k)| have.get(p).copied().unwrap_or(0) >= *k)
    }

    /// Row length in French convention, `row` counted from 1 at the bottom;
    /// zero past the last row.
    pub fn row(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1,1)`, `3,1,1`, `3 1 1` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in lexicographically decreasing order:
/// `(n), (n-1,1), ..., (1^n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        cur.push(p);
        fill(remaining - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` whose every part satisfies `keep`.
pub fn partitions_filtered(n: usize, keep: impl Fn(usize) -> bool) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.parts().iter().all(|&x| keep(x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        let p4 = partitions(4);
        assert_eq!(p4.len(), 5);
        assert_eq!(p4[0].parts(), &[4]);
        assert_eq!(p4[4].parts(), &[1, 1, 1, 1]);
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for w in partitions(7).windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    #[test]
    fn odd_part_filter() {
        let odd: Vec<String> = partitions_filtered(5, |p| p % 2 == 1).iter().map(|p| p.to_string()).collect();
        assert_eq!(odd, vec!["(5)", "(3,1,1)", "(1,1,1,1,1)"]);
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap().parts(), &[3, 1, 1]);
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn multiset_containment() {
        let p = Partition::new(vec![4, 2, 2, 1]).unwrap();
        assert!(p.contains_multiset(&[2, 2]));
        assert!(!p.contains_multiset(&[1, 1]));
        assert!(p.contains_multiset(&[]));
        assert_eq!(p.conjugate().parts(), &[4, 3, 1, 1]);
    }
}
