use std::fmt;

use crate::algebra::{MultiPoly, Scalar};
use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// The statistics carried by a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermStats {
    pub des: usize,
    pub maj: usize,
    pub inv: usize,
    pub lrmin: usize,
    /// `s1 < s2 > s3 < ...`; vacuously true for `n <= 1`.
    pub is_updown: bool,
    /// `s1 > s2 < s3 > ...`; vacuously true for `n <= 1`.
    pub is_downup: bool,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::domain(format!("{one_line:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn stats(&self) -> PermStats {
        let s = &self.0;
        let n = s.len();
        let mut des = 0;
        let mut maj = 0;
        for i in 1..n {
            if s[i - 1] > s[i] {
                des += 1;
                maj += i;
            }
        }
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if s[i] > s[j] {
                    inv += 1;
                }
            }
        }
        PermStats {
            des,
            maj,
            inv,
            lrmin: left_to_right_minima(s),
            is_updown: alternates(s, true),
            is_downup: alternates(s, false),
        }
    }

    pub fn descents(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn lrmin(&self) -> usize {
        left_to_right_minima(&self.0)
    }

    /// Number of right-to-left maxima.
    pub fn rlmax(&self) -> usize {
        let mut best = 0;
        let mut count = 0;
        for &v in self.0.iter().rev() {
            if v > best {
                best = v;
                count += 1;
            }
        }
        count
    }

    /// Disjoint cycles, each starting at its least element, sorted by that
    /// element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.at(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_derangement(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v != i + 1)
    }

    /// Lexicographic successor, or `None` at the last permutation.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.0.clone();
        let n = v.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Permutation(v))
    }
}

fn left_to_right_minima(s: &[usize]) -> usize {
    let mut best = usize::MAX;
    let mut count = 0;
    for &v in s {
        if v < best {
            best = v;
            count += 1;
        }
    }
    count
}

fn alternates(s: &[usize], starts_up: bool) -> bool {
    s.windows(2).enumerate().all(|(i, w)| {
        let up = (i % 2 == 0) == starts_up;
        if up {
            w[0] < w[1]
        } else {
            w[0] > w[1]
        }
    })
}

/// Relative order of `values` as a permutation of `1..=len`.
pub fn standardize(values: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by_key(|&i| values[i]);
    let mut out = vec![0; values.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

impl fmt::Display for Permutation {
    /// Digits run together when every value is below 10, otherwise they are
    /// comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() < 10 { "" } else { "," };
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(sep))
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<usize>> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::parse(format!("bad entry {t:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::parse(format!("bad digit {c:?}")))
                })
                .collect()
        };
        Permutation::new(values?)
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        self.next = cur.next_lex();
        Some(cur)
    }
}

pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some(Permutation::identity(n)) }
}

/// `sum_{sigma in S_n} x^des(sigma)`, by enumeration.
pub fn eulerian_polynomial<S: Scalar>(n: usize) -> MultiPoly<S> {
    let mut counts = vec![0i64; n.max(1)];
    for p in permutations(n) {
        counts[p.descents()] += 1;
    }
    let mut out = MultiPoly::zero();
    for (d, c) in counts.into_iter().enumerate() {
        out.add_term([0, d as u32, 0, 0], S::from_int(c));
    }
    out
}

/// `sum_{sigma in S_n} q^maj x^des`, by enumeration.
pub fn maj_des_polynomial<S: Scalar>(n: usize) -> MultiPoly<S> {
    let mut out = MultiPoly::zero();
    for p in permutations(n) {
        let st = p.stats();
        out.add_term([st.maj as u32, st.des as u32, 0, 0], S::one());
    }
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational, Var};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn statistics_examples() {
        let st = Permutation::identity(3).stats();
        assert_eq!((st.des, st.maj, st.inv, st.lrmin), (0, 0, 0, 1));
        assert!(!st.is_updown && !st.is_downup);

        let st = perm("2413").stats();
        assert_eq!((st.des, st.maj, st.inv, st.lrmin), (1, 2, 3, 2));
        assert!(st.is_updown && !st.is_downup);

        let st = perm("321").stats();
        assert_eq!((st.des, st.maj, st.inv, st.lrmin), (2, 3, 3, 3));
    }

    #[test]
    fn at_most_one_alternation_sense() {
        for n in 2..=6 {
            for p in permutations(n) {
                let st = p.stats();
                assert!(!(st.is_updown && st.is_downup), "{p}");
            }
        }
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["123", "132", "213", "231", "312", "321"]);
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(6).count(), 720);
    }

    #[test]
    fn eulerian_small() {
        let e = |n| eulerian_polynomial::<Rational>(n);
        assert!(e(1).is_one());
        assert_eq!(e(2), "1 + x".parse::<Poly>().unwrap());
        assert_eq!(e(3), "1 + 4x + x^2".parse::<Poly>().unwrap());
        for n in 0..=7 {
            let total = e(n).subs(Var::X, &Rational::from_int(1));
            assert_eq!(total.constant_term(), Rational::from_int(factorial(n) as i64));
        }
    }

    #[test]
    fn cycles_and_validation() {
        assert_eq!(perm("312").cycles(), vec![vec![1, 3, 2]]);
        assert_eq!(perm("2143").cycles(), vec![vec![1, 2], vec![3, 4]]);
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert_eq!(standardize(&[5, 2, 9]), vec![2, 1, 3]);
        assert_eq!(perm("1324").rlmax(), 1);
        assert_eq!(perm("2413").rlmax(), 2);
    }
}
