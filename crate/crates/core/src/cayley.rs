//! Cayley's formula by a bijection between functions `{2..n-1} -> {1..n}`
//! and labeled trees on `{1..n}`, with ranking and unranking.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A function `f: {2..n-1} -> {1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoFunction {
    n: usize,
    /// `values[i - 2] = f(i)`.
    values: Vec<usize>,
}

impl EndoFunction {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("n must be at least 2, got {n}")));
        }
        if values.len() != n - 2 {
            return Err(Error::domain(format!(
                "expected {} values f(2..{}), got {}",
                n - 2,
                n - 1,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::domain(format!("value {v} outside 1..{n}")));
        }
        Ok(EndoFunction { n, values })
    }

    /// Reads `f(2),...,f(n-1)` as comma separated values.
    pub fn parse(n: usize, src: &str) -> Result<Self> {
        let values = src
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::parse(format!("bad function value {t:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `f(i)` for `2 <= i <= n-1`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 2]
    }

    /// The cycles of `f`, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut on_cycle = vec![false; n + 1];
        for start in 2..n {
            // after n steps inside the domain the walk sits on a cycle; as
            // every cycle point is a start, every cycle point gets marked
            let mut x = start;
            let mut inside = true;
            for _ in 0..n {
                if x == 1 || x == n {
                    inside = false;
                    break;
                }
                x = self.at(x);
            }
            if inside && (x != 1 && x != n) {
                on_cycle[x] = true;
            }
        }
        let mut cycles = Vec::new();
        let mut seen = vec![false; n + 1];
        for m in 2..n {
            if !on_cycle[m] || seen[m] {
                continue;
            }
            let mut cycle = vec![m];
            seen[m] = true;
            let mut x = self.at(m);
            while x != m {
                seen[x] = true;
                cycle.push(x);
                x = self.at(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Mixed-radix rank `sum (f(i) - 1) n^(i-2)` in `[0, n^(n-2))`.
    pub fn rank(&self) -> u128 {
        let n = self.n as u128;
        self.values.iter().rev().fold(0u128, |acc, &v| acc * n + (v as u128 - 1))
    }

    pub fn unrank(rank: u128, n: usize) -> Result<Self> {
        let total = count_functions(n)?;
        if rank >= total {
            return Err(Error::domain(format!("rank {rank} outside [0, {total})")));
        }
        let mut r = rank;
        let values = (2..n)
            .map(|_| {
                let v = (r % n as u128) as usize + 1;
                r /= n as u128;
                v
            })
            .collect();
        Self::new(n, values)
    }
}

impl fmt::Display for EndoFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// `n^(n-2)`, the number of functions and of trees.
pub fn count_functions(n: usize) -> Result<u128> {
    if n < 2 {
        return Err(Error::domain(format!("n must be at least 2, got {n}")));
    }
    (0..n - 2)
        .try_fold(1u128, |acc, _| acc.checked_mul(n as u128))
        .ok_or_else(|| Error::domain(format!("n^(n-2) overflows for n={n}")))
}

/// A tree on `{1..n}` with edges stored as `(smaller, larger)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledTree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("n must be at least 2, got {n}")));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::domain(format!("bad edge {a}-{b} for n={n}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::domain(format!("repeated edge {a}-{b}")));
            }
        }
        if set.len() != n - 1 {
            return Err(Error::domain(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                set.len()
            )));
        }
        let tree = LabeledTree { n, edges: set };
        let parent = tree.parents(1);
        if (2..=n).any(|v| parent[v].is_none()) {
            return Err(Error::domain("edges do not form a connected graph"));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// BFS parents toward `root`; entry 0 unused.
    fn parents(&self, root: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![None; self.n + 1];
        let mut seen = vec![false; self.n + 1];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Vertices on the path from `n` to `1`.
    pub fn spine(&self) -> Vec<usize> {
        let parent = self.parents(1);
        let mut path = vec![self.n];
        let mut v = self.n;
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    }

    pub fn rank(&self) -> Result<u128> {
        Ok(tree_to_func(self)?.rank())
    }

    pub fn unrank(rank: u128, n: usize) -> Result<Self> {
        Ok(func_to_tree(&EndoFunction::unrank(rank, n)?))
    }

    /// Reads `a-b` edges separated by newlines, commas or spaces. The
    /// vertex count is the largest label.
    pub fn parse_edges(src: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for tok in src.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (a, b) =
                tok.split_once('-').ok_or_else(|| Error::parse(format!("expected a-b, got {tok:?}")))?;
            let num = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad vertex in {tok:?}")))
            };
            edges.push((num(a)?, num(b)?));
        }
        let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        Self::new(n, edges)
    }
}

impl fmt::Display for LabeledTree {
    /// One `a-b` edge per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for LabeledTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_edges(s)
    }
}

/// Lays the cycles (with `n` and `1` as extra singletons) out in decreasing
/// order of minima, joins them into one path and hangs the remaining
/// function edges off it.
pub fn func_to_tree(f: &EndoFunction) -> LabeledTree {
    let n = f.n;
    let mut cycles = f.cycles();
    cycles.push(vec![n]);
    cycles.push(vec![1]);
    cycles.sort_by(|a, b| b[0].cmp(&a[0]));
    let path: Vec<usize> = cycles.iter().flatten().copied().collect();
    let mut on_path = vec![false; n + 1];
    path.iter().for_each(|&v| on_path[v] = true);
    let mut edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    edges.extend((2..n).filter(|&i| !on_path[i]).map(|i| (i, f.at(i))));
    LabeledTree::new(n, edges).expect("construction yields a tree")
}

/// Inverse of [`func_to_tree`]: cut the `n`-to-`1` path at its
/// left-to-right minima and orient everything else toward the path.
pub fn tree_to_func(t: &LabeledTree) -> Result<EndoFunction> {
    let n = t.n;
    let spine = t.spine();
    let mut values = vec![0usize; n + 1];
    let mut starts = Vec::new();
    let mut best = usize::MAX;
    for (k, &v) in spine.iter().enumerate() {
        if v < best {
            best = v;
            starts.push(k);
        }
    }
    starts.push(spine.len());
    for w in starts.windows(2) {
        let seg = &spine[w[0]..w[1]];
        for (k, &v) in seg.iter().enumerate() {
            values[v] = seg[(k + 1) % seg.len()];
        }
    }
    let mut on_path = vec![false; n + 1];
    spine.iter().for_each(|&v| on_path[v] = true);
    let adj = t.adjacency();
    let mut queue: VecDeque<usize> = spine.iter().copied().collect();
    let mut seen = on_path.clone();
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                values[w] = v;
                queue.push_back(w);
            }
        }
    }
    EndoFunction::new(n, values[2..n].to_vec())
}
