//! Brick tabloids: rows of a diagram of shape `mu` cut into bricks whose
//! lengths, taken together, form the partition `lambda`.

use std::collections::BTreeMap;

use super::check_sizes;
use crate::error::Result;
use crate::objects::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickTabloid {
    pub shape: Partition,
    /// Brick lengths in each row, left to right; row `i` is `shape[i]` long.
    pub bricks: Vec<Vec<usize>>,
}

impl BrickTabloid {
    /// The multiset of brick lengths.
    pub fn brick_type(&self) -> Partition {
        Partition::from_unsorted(self.bricks.iter().flatten().copied().collect())
    }
}

/// All brick tabloids in `B_{lambda,mu}`.
pub fn brick_tabloids(lambda: &Partition, mu: &Partition) -> Result<Vec<BrickTabloid>> {
    check_sizes(lambda, mu)?;
    let mut out = Vec::new();
    let mut avail = lambda.multiplicities();
    let mut rows = Vec::new();
    fill_rows(mu, 0, &mut avail, &mut rows, &mut |rows| {
        out.push(BrickTabloid { shape: mu.clone(), bricks: rows.to_vec() });
    });
    Ok(out)
}

/// `|B_{lambda,mu}|`.
pub fn brick_tabloid_count(lambda: &Partition, mu: &Partition) -> Result<u64> {
    check_sizes(lambda, mu)?;
    let mut count = 0;
    let mut avail = lambda.multiplicities();
    let mut rows = Vec::new();
    fill_rows(mu, 0, &mut avail, &mut rows, &mut |_| count += 1);
    Ok(count)
}

fn fill_rows(
    mu: &Partition,
    row: usize,
    avail: &mut BTreeMap<usize, usize>,
    rows: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if row == mu.len() {
        visit(rows);
        return;
    }
    let mut cur = Vec::new();
    split_row(mu, row, mu.parts()[row], avail, &mut cur, rows, visit);
}

fn split_row(
    mu: &Partition,
    row: usize,
    remaining: usize,
    avail: &mut BTreeMap<usize, usize>,
    cur: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if remaining == 0 {
        rows.push(cur.clone());
        fill_rows(mu, row + 1, avail, rows, visit);
        rows.pop();
        return;
    }
    let lengths: Vec<usize> =
        avail.iter().filter(|(&l, &k)| k > 0 && l <= remaining).map(|(&l, _)| l).collect();
    for l in lengths {
        *avail.get_mut(&l).expect("listed above") -= 1;
        cur.push(l);
        split_row(mu, row, remaining - l, avail, cur, rows, visit);
        cur.pop();
        *avail.get_mut(&l).expect("listed above") += 1;
    }
}
