use std::fmt;
use std::str::FromStr;

use crate::algebra::{MultiPoly, PowerSeries, Scalar, Var};
use crate::error::{Error, Result};
use crate::objects::{permutations, Permutation};

/// Quadrant thresholds: at least `a` points NE, `b` NW, `c` SW and `d` SE.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MarkedMeshPattern {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl MarkedMeshPattern {
    pub const fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        MarkedMeshPattern { a, b, c, d }
    }
}

impl fmt::Display for MarkedMeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MMP({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for MarkedMeshPattern {
    type Err = Error;
    /// Accepts `MMP(a,b,c,d)` or `a,b,c,d`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches("MMP").trim_start_matches('(').trim_end_matches(')');
        let v = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad threshold {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match v.as_slice() {
            [a, b, c, d] => Ok(MarkedMeshPattern::new(*a, *b, *c, *d)),
            _ => Err(Error::parse(format!("expected four thresholds, got {s:?}"))),
        }
    }
}

/// Whether position `i` (1-based) matches `pattern`.
pub fn mmp_match(sigma: &Permutation, i: usize, pattern: &MarkedMeshPattern) -> Result<bool> {
    if i == 0 || i > sigma.len() {
        return Err(Error::domain(format!("position {i} outside 1..{}", sigma.len())));
    }
    let s = sigma.as_slice();
    let v = s[i - 1];
    let mut quad = [0usize; 4];
    for (j, &w) in s.iter().enumerate() {
        let j = j + 1;
        let q = match (j > i, w > v) {
            _ if j == i => continue,
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        };
        quad[q] += 1;
    }
    Ok(quad[0] >= pattern.a && quad[1] >= pattern.b && quad[2] >= pattern.c && quad[3] >= pattern.d)
}

/// Number of positions matching `pattern`.
pub fn mmp_statistic(sigma: &Permutation, pattern: &MarkedMeshPattern) -> usize {
    (1..=sigma.len()).filter(|&i| mmp_match(sigma, i, pattern).expect("index in range")).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even lengths, up-down permutations `s1 < s2 > s3 < ...`.
    Even,
    /// Odd lengths, down-up permutations `s1 > s2 < s3 > ...`.
    Odd,
}

/// `sum t^n/n! sum_sigma q^mmp(1,0,0,0)(sigma)` over alternating `sigma`
/// of the given parity, by enumeration.
pub fn alternating_mmp_series<S: Scalar>(parity: Parity, order: usize) -> PowerSeries<S> {
    let pattern = MarkedMeshPattern::new(1, 0, 0, 0);
    let mut coeffs = vec![MultiPoly::zero(); order + 1];
    let mut fact = S::one();
    for (n, slot) in coeffs.iter_mut().enumerate() {
        if n > 0 {
            fact = fact * S::from_usize_exact(n);
        }
        let wanted = match parity {
            Parity::Even => n % 2 == 0,
            Parity::Odd => n % 2 == 1,
        };
        if !wanted {
            continue;
        }
        let mut poly = MultiPoly::zero();
        for sigma in permutations(n) {
            let st = sigma.stats();
            let alternating = match parity {
                Parity::Even => st.is_updown,
                Parity::Odd => st.is_downup,
            };
            if alternating {
                poly.add_term([mmp_statistic(&sigma, &pattern) as u32, 0, 0, 0], S::one());
            }
        }
        *slot = poly.scale(&(S::one() / fact.clone()));
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// `sec(qt)^(1/q)` for even lengths and `int_0^t sec(qu)^(1 + 1/q) du` for
/// odd lengths.
pub fn alternating_mmp_closed_form<S: Scalar>(parity: Parity, order: usize) -> Result<PowerSeries<S>> {
    let q = MultiPoly::var(Var::Q);
    match parity {
        Parity::Even => PowerSeries::<S>::sec(order).dilate(&q).q_power(),
        Parity::Odd => {
            let inner = order.saturating_sub(1);
            let sec_q = PowerSeries::<S>::sec(inner).dilate(&q);
            let integrand = &sec_q * &sec_q.q_power()?;
            Ok(integrand.integrate().truncate(order))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn quadrant_examples() {
        let sigma = perm("471569283");
        assert!(mmp_match(&sigma, 5, &MarkedMeshPattern::new(2, 0, 3, 1)).unwrap());
        assert!(!mmp_match(&sigma, 5, &MarkedMeshPattern::new(3, 0, 3, 1)).unwrap());
        let ne = MarkedMeshPattern::new(1, 0, 0, 0);
        assert!(!mmp_match(&sigma, 9, &ne).unwrap());
        assert!(mmp_match(&perm("12"), 1, &ne).unwrap());
        assert!(mmp_match(&perm("12"), 3, &ne).is_err());
        assert_eq!(mmp_statistic(&perm("1324"), &ne), 3);
        assert_eq!(mmp_statistic(&perm("21"), &ne), 0);
        assert_eq!(mmp_statistic(&perm("2413"), &ne), 2);
        assert_eq!("MMP(2,0,3,1)".parse::<MarkedMeshPattern>().unwrap(), MarkedMeshPattern::new(2, 0, 3, 1));
    }

    #[test]
    fn alternating_coefficients() {
        let even = alternating_mmp_series::<Rational>(Parity::Even, 4);
        let fact = |n: i64| Rational::from_int((1..=n).product());
        assert_eq!(even.coeff(2).scale(&fact(2)), "q".parse::<Poly>().unwrap());
        assert_eq!(even.coeff(4).scale(&fact(4)), "2q^3 + 3q^2".parse::<Poly>().unwrap());
        let odd = alternating_mmp_series::<Rational>(Parity::Odd, 5);
        assert_eq!(odd.coeff(3).scale(&fact(3)), "q^2 + q".parse::<Poly>().unwrap());
        assert_eq!(odd.coeff(5).scale(&fact(5)), "5q^4 + 8q^3 + 3q^2".parse::<Poly>().unwrap());
    }

    #[test]
    fn closed_forms_match() {
        for parity in [Parity::Even, Parity::Odd] {
            let order = 7;
            assert_eq!(
                alternating_mmp_series::<Rational>(parity, order),
                alternating_mmp_closed_form(parity, order).unwrap(),
                "{parity:?}"
            );
        }
    }
}
