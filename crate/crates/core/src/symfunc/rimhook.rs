//! Special rim hook tabloids and the signed inverse Kostka numbers.
//!
//! Diagrams are drawn in French convention: row 1 is the bottom (longest)
//! row, and the "top left" cell is the first cell of the highest row. A
//! special rim hook starts there, follows the northeast boundary, and must
//! leave a partition diagram behind when removed.

use std::collections::BTreeMap;

use super::check_sizes;
use crate::error::Result;
use crate::objects::{partitions, Partition};

/// A cell `(row, column)`, both 1-based, row 1 at the bottom.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    /// Cells in travel order, from the top-left cell.
    pub cells: Vec<Cell>,
    /// Number of row-to-row moves inside the hook.
    pub vertical_steps: usize,
}

impl RimHook {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialRimHookTabloid {
    pub shape: Partition,
    /// Hooks in removal order.
    pub hooks: Vec<RimHook>,
}

impl SpecialRimHookTabloid {
    pub fn vertical_steps(&self) -> usize {
        self.hooks.iter().map(|h| h.vertical_steps).sum()
    }

    pub fn sign(&self) -> i64 {
        if self.vertical_steps().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Hook lengths as a partition.
    pub fn content(&self) -> Partition {
        Partition::from_unsorted(self.hooks.iter().map(RimHook::len).collect())
    }

    /// Every cell of the shape is covered by exactly one hook.
    pub fn tiles_shape(&self) -> bool {
        let mut covered = std::collections::BTreeSet::new();
        for h in &self.hooks {
            for &c in &h.cells {
                if !covered.insert(c) {
                    return false;
                }
            }
        }
        let expected: std::collections::BTreeSet<Cell> = self
            .shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
            .collect();
        covered == expected
    }
}

/// Cells of the northeast rim of `rows`, walked from the top-left cell down
/// to the end of the bottom row.
fn rim_path(rows: &[usize]) -> Vec<Cell> {
    let height = rows.len();
    let mut path = Vec::new();
    if height == 0 {
        return path;
    }
    let len = |r: usize| if r == 0 || r > height { 0 } else { rows[r - 1] };
    let mut row = height;
    let mut col = 1;
    loop {
        path.push((row, col));
        // a cell is on the rim when its upper-right neighbour is absent
        if col < len(row) && len(row + 1) < col + 2 {
            col += 1;
        } else if row > 1 {
            row -= 1;
        } else {
            break;
        }
    }
    path
}

/// Row lengths after removing `cells`, or `None` when the remainder is not a
/// partition diagram.
fn remove_cells(rows: &[usize], cells: &[Cell]) -> Option<Vec<usize>> {
    let mut removed = vec![0usize; rows.len()];
    let mut min_col = vec![usize::MAX; rows.len()];
    for &(r, c) in cells {
        removed[r - 1] += 1;
        min_col[r - 1] = min_col[r - 1].min(c);
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, &len) in rows.iter().enumerate() {
        if removed[i] > 0 && min_col[i] + removed[i] - 1 != len {
            return None;
        }
        out.push(len - removed[i]);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    if out.windows(2).any(|w| w[0] < w[1]) || out.contains(&0) {
        return None;
    }
    Some(out)
}

/// Every special rim hook that can be removed first from `rows`.
pub fn special_rim_hooks(rows: &[usize]) -> Vec<(RimHook, Vec<usize>)> {
    let path = rim_path(rows);
    let mut out = Vec::new();
    for l in 1..=path.len() {
        let cells = &path[..l];
        if let Some(rest) = remove_cells(rows, cells) {
            let vertical_steps = cells.windows(2).filter(|w| w[0].0 != w[1].0).count();
            out.push((RimHook { cells: cells.to_vec(), vertical_steps }, rest));
        }
    }
    out
}

/// All special rim hook tabloids of the given shape. When `content` is
/// given, only those whose hook lengths form that multiset are produced.
pub fn special_rim_hook_tabloids(
    shape: &Partition,
    content: Option<&Partition>,
) -> Vec<SpecialRimHookTabloid> {
    let mut budget: Option<BTreeMap<usize, usize>> = content.map(|c| c.multiplicities());
    let mut out = Vec::new();
    let mut hooks = Vec::new();
    enumerate(shape, shape.parts(), &mut budget, &mut hooks, &mut out);
    out
}

fn enumerate(
    shape: &Partition,
    rows: &[usize],
    budget: &mut Option<BTreeMap<usize, usize>>,
    hooks: &mut Vec<RimHook>,
    out: &mut Vec<SpecialRimHookTabloid>,
) {
    if rows.is_empty() {
        out.push(SpecialRimHookTabloid { shape: shape.clone(), hooks: hooks.clone() });
        return;
    }
    for (hook, rest) in special_rim_hooks(rows) {
        let l = hook.len();
        if let Some(b) = budget.as_mut() {
            match b.get_mut(&l) {
                Some(k) if *k > 0 => *k -= 1,
                _ => continue,
            }
        }
        hooks.push(hook);
        enumerate(shape, &rest, budget, hooks, out);
        hooks.pop();
        if let Some(b) = budget.as_mut() {
            *b.get_mut(&l).expect("decremented above") += 1;
        }
    }
}

/// Coefficient of `s_lambda` in `m_mu`: the signed count of special rim
/// hook tabloids of shape `lambda` and content `mu`.
pub fn inverse_kostka(mu: &Partition, lambda: &Partition) -> Result<i64> {
    check_sizes(lambda, mu)?;
    Ok(special_rim_hook_tabloids(lambda, Some(mu)).iter().map(|t| t.sign()).sum())
}

/// Signed tabloid counts for one shape, keyed by content.
pub fn inverse_kostka_column(lambda: &Partition) -> BTreeMap<Partition, i64> {
    let mut col = BTreeMap::new();
    for t in special_rim_hook_tabloids(lambda, None) {
        *col.entry(t.content()).or_insert(0) += t.sign();
    }
    col
}

/// Matrix `M[i][j]` = coefficient of `s_{lambda_j}` in `m_{mu_i}`, over
/// partitions of `n` in lexicographically decreasing order.
pub fn inverse_kostka_matrix(n: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions(n);
    let mut m = vec![vec![0i64; parts.len()]; parts.len()];
    for (j, lambda) in parts.iter().enumerate() {
        let col = inverse_kostka_column(lambda);
        for (i, mu) in parts.iter().enumerate() {
            m[i][j] = col.get(mu).copied().unwrap_or(0);
        }
    }
    (parts, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rim_of_staircase() {
        assert_eq!(rim_path(&[3, 2, 1]), vec![(3, 1), (2, 1), (2, 2), (1, 2), (1, 3)]);
        assert_eq!(rim_path(&[4]), vec![(1, 1), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(rim_path(&[1, 1]), vec![(2, 1), (1, 1)]);
    }

    #[test]
    fn small_inverse_kostka() {
        for n in 1..=5 {
            assert_eq!(inverse_kostka(&part(&[n]), &part(&[n])).unwrap(), 1);
        }
        assert_eq!(inverse_kostka(&part(&[2]), &part(&[1, 1])).unwrap(), -1);
        assert!(inverse_kostka(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn mixed_shape_admits_two_tabloids() {
        let shape = part(&[5, 5, 4, 3, 1]);
        let ts = special_rim_hook_tabloids(&shape, Some(&part(&[6, 6, 4, 2])));
        assert!(ts.len() >= 2);
        for t in &ts {
            assert!(t.tiles_shape());
            assert_eq!(t.hooks[0].cells[0], (5, 1));
        }
        let orders: Vec<Vec<usize>> = ts.iter().map(|t| t.hooks.iter().map(RimHook::len).collect()).collect();
        assert!(orders.contains(&vec![6, 2, 6, 4]));
        assert!(orders.contains(&vec![4, 6, 6, 2]));
    }

    #[test]
    fn every_tabloid_tiles() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                for t in special_rim_hook_tabloids(&lambda, None) {
                    assert!(t.tiles_shape(), "{lambda}");
                    for h in &t.hooks {
                        assert_eq!(h.cells[0].1, 1, "special rim hooks start in column 1");
                    }
                }
            }
        }
    }
}
