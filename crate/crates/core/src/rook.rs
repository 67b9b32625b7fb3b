//! Rook placements on the staircase board with columns of heights
//! `0, 1, ..., n-1` sitting on columns of unbounded depth.
//!
//! Upper rows are numbered `1, 2, ...` upward from the base line, lower rows
//! `1, 2, ...` downward. A rook attacks every cell below it in its column
//! and every cell to its right in its row.

use crate::algebra::{q_factorial, q_int, MultiPoly, PowerSeries, Scalar, Var};
use crate::error::{Error, Result};
use crate::objects::permutations;

/// A cell within one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RookCell {
    /// Upper row `r`, present in column `c` when `r < c`.
    Upper(usize),
    /// Lower row `r >= 1`.
    Lower(usize),
}

impl RookCell {
    /// Larger is further down.
    fn depth(self) -> i64 {
        match self {
            RookCell::Upper(r) => -(r as i64),
            RookCell::Lower(r) => r as i64,
        }
    }
}

/// Rooks on the upper staircase only; `rows[c-1]` is the upper row of the
/// rook in column `c`, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperPlacement {
    pub rows: Vec<Option<usize>>,
}

/// One rook in every column, in the upper or the lower region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullPlacement {
    pub cells: Vec<RookCell>,
}

impl FullPlacement {
    pub fn new(cells: Vec<RookCell>) -> Result<Self> {
        let rooks: Vec<Option<RookCell>> = cells.iter().copied().map(Some).collect();
        validate(&rooks)?;
        Ok(FullPlacement { cells })
    }

    /// Lower row of the deepest rook, or 0 with no lower rooks.
    pub fn max(&self) -> usize {
        self.cells
            .iter()
            .filter_map(|c| match c {
                RookCell::Lower(r) => Some(*r),
                RookCell::Upper(_) => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// `(inv, max)`, counting free cells over the upper staircase and lower
    /// rows `1..=max`.
    pub fn statistics(&self) -> (usize, usize) {
        let rooks: Vec<Option<RookCell>> = self.cells.iter().copied().map(Some).collect();
        let max = self.max();
        (free_cells(&rooks, max), max)
    }
}

impl UpperPlacement {
    pub fn rook_count(&self) -> usize {
        self.rows.iter().flatten().count()
    }

    pub fn inv(&self) -> usize {
        let rooks: Vec<Option<RookCell>> = self.rows.iter().map(|r| r.map(RookCell::Upper)).collect();
        free_cells(&rooks, 0)
    }
}

fn validate(rooks: &[Option<RookCell>]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for (c, cell) in rooks.iter().enumerate() {
        match cell {
            Some(RookCell::Upper(r)) if *r == 0 || *r > c => {
                return Err(Error::domain(format!("column {} has no upper row {r}", c + 1)));
            }
            Some(RookCell::Lower(0)) => return Err(Error::domain("lower rows start at 1")),
            Some(cell) if !seen.insert(*cell) => {
                return Err(Error::domain(format!("two rooks share row {cell:?}")));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Unoccupied cells attacked by no rook, over the upper staircase plus
/// lower rows `1..=lower_rows`.
fn free_cells(rooks: &[Option<RookCell>], lower_rows: usize) -> usize {
    let mut free = 0;
    for (c, own) in rooks.iter().enumerate() {
        let upper = (1..=c).map(RookCell::Upper);
        let lower = (1..=lower_rows).map(RookCell::Lower);
        for cell in upper.chain(lower) {
            let attacked = match own {
                Some(r) => r.depth() <= cell.depth(),
                None => false,
            } || rooks[..c].contains(&Some(cell));
            if !attacked {
                free += 1;
            }
        }
    }
    free
}

/// All placements of `rooks` non-attacking rooks on the upper staircase.
pub fn upper_placements(n: usize, rooks: usize) -> Vec<UpperPlacement> {
    fn go(
        c: usize,
        n: usize,
        left: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<Option<usize>>,
        out: &mut Vec<UpperPlacement>,
    ) {
        if c > n {
            if left == 0 {
                out.push(UpperPlacement { rows: cur.clone() });
            }
            return;
        }
        // columns c..=n can hold at most n - c + 1 more rooks
        if left > n - c + 1 {
            return;
        }
        cur.push(None);
        go(c + 1, n, left, used, cur, out);
        cur.pop();
        if left == 0 {
            return;
        }
        for r in 1..c {
            if !used[r] {
                used[r] = true;
                cur.push(Some(r));
                go(c + 1, n, left - 1, used, cur, out);
                cur.pop();
                used[r] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, rooks, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out
}

/// All full placements with every lower rook in rows `1..=max_row`.
pub fn full_placements(n: usize, max_row: usize) -> Vec<FullPlacement> {
    fn go(c: usize, n: usize, max_row: usize, cur: &mut Vec<RookCell>, out: &mut Vec<FullPlacement>) {
        if c > n {
            out.push(FullPlacement { cells: cur.clone() });
            return;
        }
        let options = (1..c).map(RookCell::Upper).chain((1..=max_row).map(RookCell::Lower));
        for cell in options {
            if !cur.contains(&cell) {
                cur.push(cell);
                go(c + 1, n, max_row, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, max_row, &mut Vec::new(), &mut out);
    out
}

/// `S_{n,k}(q)`: `q^inv` summed over placements of `n - k` rooks.
pub fn stirling_q<S: Scalar>(n: usize, k: usize) -> MultiPoly<S> {
    if k > n {
        return MultiPoly::zero();
    }
    let mut out = MultiPoly::zero();
    for p in upper_placements(n, n - k) {
        out.add_term([p.inv() as u32, 0, 0, 0], S::one());
    }
    out
}

/// `sum q^inv t^max` over full placements with `max <= order`.
pub fn full_board_series<S: Scalar>(n: usize, order: usize) -> PowerSeries<S> {
    let mut coeffs = vec![MultiPoly::zero(); order + 1];
    for p in full_placements(n, order) {
        let (inv, max) = p.statistics();
        coeffs[max].add_term([inv as u32, 0, 0, 0], S::one());
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// `1 / prod_{i in range} (1 - t q^i)`.
fn geometric_product<S: Scalar>(range: std::ops::RangeInclusive<usize>, order: usize) -> PowerSeries<S> {
    let mut den = PowerSeries::one(order);
    for i in range {
        let factor = PowerSeries::one(order)
            - PowerSeries::monomial(MultiPoly::var_pow(S::one(), Var::Q, i as u32), 1, order);
        den = &den * &factor;
    }
    den.inverse().expect("constant term 1")
}

/// `sum_sigma q^maj t^(des+1) / ((1 - tq)...(1 - tq^n))`.
pub fn maj_des_series<S: Scalar>(n: usize, order: usize) -> Result<PowerSeries<S>> {
    if n == 0 {
        return Err(Error::domain("the maj/des series needs n >= 1"));
    }
    let mut num = vec![MultiPoly::zero(); order + 1];
    for p in permutations(n) {
        let st = p.stats();
        if st.des < order {
            num[st.des + 1].add_term([st.maj as u32, 0, 0, 0], S::one());
        }
    }
    Ok(&PowerSeries::from_coeffs(num, order) * &geometric_product(1..=n, order))
}

/// Where the denominator product `prod (1 - t q^i)` of the Stirling side starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DenominatorRange {
    /// `i = 1..k`; agrees with the other two sides.
    #[default]
    FromOne,
    /// `i = 0..k`, an extra factor `1/(1 - t)`.
    FromZero,
}

/// `sum_k S_{n,k}(q) [k]_q! t^k / prod (1 - t q^i)`.
pub fn stirling_side_series<S: Scalar>(
    n: usize,
    order: usize,
    range: DenominatorRange,
) -> Result<PowerSeries<S>> {
    if n == 0 {
        return Err(Error::domain("the Stirling side needs n >= 1"));
    }
    let mut total = PowerSeries::zero(order);
    for k in 0..=n.min(order) {
        let s = stirling_q::<S>(n, k);
        if s.is_zero() {
            continue;
        }
        let numer = PowerSeries::monomial(&s * &q_factorial::<S>(k as u32), k, order);
        let start = match range {
            DenominatorRange::FromOne => 1,
            DenominatorRange::FromZero => 0,
        };
        total = &total + &(&numer * &geometric_product(start..=k, order));
    }
    Ok(total)
}

/// Right side of `S_{n+1,k} = q^(k-1) S_{n,k-1} + [k]_q S_{n,k}`, for `k >= 1`.
pub fn stirling_q_recursion_rhs<S: Scalar>(n: usize, k: usize) -> MultiPoly<S> {
    assert!(k >= 1, "the recursion is stated for k >= 1");
    stirling_q::<S>(n, k - 1).mul_monomial(&[k as u32 - 1, 0, 0, 0])
        + &q_int::<S>(k as u32) * &stirling_q::<S>(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn small_stirling() {
        assert_eq!(stirling_q::<Rational>(2, 1), p("1"));
        assert_eq!(stirling_q::<Rational>(3, 2), p("2q + q^2"));
        assert!(stirling_q::<Rational>(1, 0).is_zero());
        assert!(stirling_q::<Rational>(2, 3).is_zero());
        for n in 0..=6 {
            assert_eq!(stirling_q::<Rational>(n, n), p(&format!("q^{}", n * n.saturating_sub(1) / 2)));
        }
    }

    #[test]
    fn sample_placement() {
        let b = FullPlacement::new(vec![
            RookCell::Lower(3),
            RookCell::Upper(1),
            RookCell::Upper(2),
            RookCell::Lower(5),
        ])
        .unwrap();
        assert_eq!(b.statistics(), (6, 5));
        for r in 1..=5 {
            assert_eq!(FullPlacement::new(vec![RookCell::Lower(r)]).unwrap().statistics(), (r - 1, r));
        }
        assert!(FullPlacement::new(vec![RookCell::Upper(1)]).is_err());
        assert!(FullPlacement::new(vec![RookCell::Lower(1), RookCell::Lower(1)]).is_err());
    }

    #[test]
    fn triple_identity() {
        let order = 6;
        for n in 1..=4 {
            let a = stirling_side_series::<Rational>(n, order, DenominatorRange::FromOne).unwrap();
            let b = full_board_series::<Rational>(n, order);
            let c = maj_des_series::<Rational>(n, order).unwrap();
            assert_eq!(a, b, "n={n}");
            assert_eq!(b, c, "n={n}");
        }
        let printed = stirling_side_series::<Rational>(1, order, DenominatorRange::FromZero).unwrap();
        assert_ne!(printed, maj_des_series::<Rational>(1, order).unwrap());
    }

    #[test]
    fn recursion() {
        for n in 0..=6 {
            for k in 1..=n + 1 {
                assert_eq!(stirling_q::<Rational>(n + 1, k), stirling_q_recursion_rhs(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn single_column_series() {
        let s = full_board_series::<Rational>(1, 4);
        assert_eq!(s.to_string(), "(1)*t + (q)*t^2 + (q^2)*t^3 + (q^3)*t^4 + O(t^5)");
        assert!(full_board_series::<Rational>(0, 3).coeff(0).is_one());
    }
}
