//! Verification suites: each identity checked against an independent
//! brute-force computation, reported check by check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{q_int, Var};
use crate::bijection::{avoiders, random_explicit_pair, signed_set, BijectionMachine, PartitionFamily};
use crate::cayley::{count_functions, func_to_tree, tree_to_func, EndoFunction, LabeledTree};
use crate::error::{Error, Result};
use crate::homomorphism::{eulerian_closed_form, words_closed_form, BuiltinPhi, EHomomorphism};
use crate::objects::{
    eulerian_polynomial, factorial, partitions, q_derangement, word_statistics_polynomial, Partition,
};
use crate::patterns::{
    alternating_mmp_closed_form, alternating_mmp_series, extract_u, fishburn_census, lrmin_des_series,
    reference_gf, ConsecutivePattern, FishburnGf, Parity, RunBoundary,
};
use crate::rook::{
    full_board_series, maj_des_series, stirling_q, stirling_q_recursion_rhs, stirling_side_series,
    DenominatorRange, FullPlacement, RookCell,
};
use crate::symfunc::{
    brick_tabloid_count, h_to_e, inverse_kostka_matrix, kostka_matrix, Basis, MonomialExpansion,
};
use crate::{Poly, Rational, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    KostkaInverse,
    Eq1,
    Homomorphism,
    Derangement,
    Gm,
    Cayley,
    Rook,
    Mmp,
    Consecutive,
    Fishburn,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::KostkaInverse,
        Suite::Eq1,
        Suite::Homomorphism,
        Suite::Derangement,
        Suite::Gm,
        Suite::Cayley,
        Suite::Rook,
        Suite::Mmp,
        Suite::Consecutive,
        Suite::Fishburn,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::KostkaInverse => "kostka-inverse",
            Suite::Eq1 => "eq1",
            Suite::Homomorphism => "homomorphism",
            Suite::Derangement => "derangement",
            Suite::Gm => "gm",
            Suite::Cayley => "cayley",
            Suite::Rook => "rook",
            Suite::Mmp => "mmp",
            Suite::Consecutive => "consecutive",
            Suite::Fishburn => "fishburn",
            Suite::Conjecture => "conjecture",
        }
    }

    /// Main size bound used when none is given.
    pub fn default_n(self) -> usize {
        match self {
            Suite::KostkaInverse | Suite::Eq1 | Suite::Homomorphism | Suite::Rook | Suite::Mmp => 8,
            Suite::Consecutive | Suite::Conjecture => 8,
            Suite::Derangement | Suite::Fishburn => 9,
            Suite::Gm => 16,
            Suite::Cayley => 7,
        }
    }

    /// Experimental suites report without failing.
    pub fn is_experimental(self) -> bool {
        self == Suite::Conjecture
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    /// Values seen on failure.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub checks: Vec<Check>,
    /// Informational lines that never affect the outcome.
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: Suite, n: usize) -> Self {
        Report { suite, n, checks: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool, detail: impl FnOnce() -> String) {
        let detail = if pass { None } else { Some(detail()) };
        self.checks.push(Check { label: label.into(), pass, detail });
    }

    fn check_eq<T: PartialEq + fmt::Display>(&mut self, label: impl Into<String>, got: &T, want: &T) {
        self.check(label, got == want, || format!("got {got}, expected {want}"));
    }

    /// All checks pass, or the suite is experimental.
    pub fn passed(&self) -> bool {
        self.suite.is_experimental() || self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match (c.pass, self.suite.is_experimental()) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "AGREE",
                (false, true) => "DIFFER",
            };
            write!(f, "{tag} {}: {}", self.suite, c.label)?;
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        for note in &self.notes {
            writeln!(f, "note {}: {note}", self.suite)?;
        }
        Ok(())
    }
}

/// Runs `suite` with main bound `n` (the suite default when `None`).
pub fn run_suite(suite: Suite, n: Option<usize>) -> Result<Report> {
    let n = n.unwrap_or_else(|| suite.default_n());
    let mut r = Report::new(suite, n);
    match suite {
        Suite::KostkaInverse => kostka_inverse(&mut r),
        Suite::Eq1 => eq1(&mut r),
        Suite::Homomorphism => homomorphism(&mut r)?,
        Suite::Derangement => derangement(&mut r),
        Suite::Gm => gm(&mut r)?,
        Suite::Cayley => cayley(&mut r)?,
        Suite::Rook => rook(&mut r)?,
        Suite::Mmp => mmp(&mut r)?,
        Suite::Consecutive => consecutive(&mut r)?,
        Suite::Fishburn => fishburn(&mut r)?,
        Suite::Conjecture => conjecture(&mut r)?,
    }
    Ok(r)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn kostka_inverse(r: &mut Report) {
    for n in 1..=r.n {
        let (parts, m) = inverse_kostka_matrix(n);
        let (_, k) = kostka_matrix(n);
        let mut bad = None;
        'outer: for i in 0..parts.len() {
            for j in 0..parts.len() {
                let dot: i64 = (0..parts.len()).map(|l| m[i][l] * k[l][j]).sum();
                if dot != i64::from(i == j) {
                    bad = Some(format!("entry ({}, {}) is {dot}", parts[i], parts[j]));
                    break 'outer;
                }
            }
        }
        r.check(format!("n={n} M*K = I over {} partitions", parts.len()), bad.is_none(), || bad.unwrap());
    }
}

fn eq1(r: &mut Report) {
    for m in 1..=r.n {
        let parts = partitions(m);
        let e_exp: Vec<MonomialExpansion<Rational>> =
            parts.iter().map(|l| MonomialExpansion::basis_element(Basis::Elementary, l, m)).collect();
        for mu in &parts {
            let h = MonomialExpansion::<Rational>::basis_element(Basis::Homogeneous, mu, m);
            let f = h_to_e::<Rational>(mu);
            let mut rhs = MonomialExpansion::zero(m);
            for (i, lambda) in parts.iter().enumerate() {
                let c = f.coeff(lambda);
                if !num_traits::Zero::is_zero(&c) {
                    rhs = &rhs + &e_exp[i].scale(&c);
                }
            }
            r.check(format!("h_{mu} = {f}"), h == rhs, || format!("expansions differ in {m} variables"));
        }
    }
}

fn multinomial(lambda: &Partition) -> u64 {
    let top = factorial(lambda.len());
    lambda.multiplicities().values().fold(top, |acc, &k| acc / factorial(k))
}

fn homomorphism(r: &mut Report) -> Result<()> {
    let n = r.n;
    let phi = EHomomorphism::<Rational>::builtin(BuiltinPhi::Eulerian, n)?;
    for m in 0..=n {
        let got = phi.apply_to_h(m)?.scale(&int(factorial(m) as i64));
        r.check_eq(format!("eulerian n={m}: n! phi(h_n) = sum x^des"), &got, &eulerian_polynomial(m));
    }
    let series = phi.series(n)?;
    let by_h = (0..=n).map(|m| phi.apply_to_h(m)).collect::<Result<Vec<_>>>()?;
    r.check_eq(
        format!("eulerian series = sum phi(h_n) t^n through t^{n}"),
        &series,
        &Series::from_coeffs(by_h, n),
    );
    r.check_eq(
        format!("eulerian series = (x-1)/(x-e^(t(x-1))) through t^{n}"),
        &series,
        &eulerian_closed_form(n)?,
    );

    let wn = n.min(6);
    for k in 1..=4u32 {
        let phi = EHomomorphism::<Rational>::builtin(BuiltinPhi::Words(k), wn)?;
        for m in 0..=wn {
            let want = word_statistics_polynomial(m, k as usize)?;
            r.check_eq(format!("words k={k} n={m}: phi(h_n) = sum x^des q^sum"), &phi.apply_to_h(m)?, &want);
        }
        r.check_eq(
            format!("words k={k} series = (x-1)/(x-(t-tx;q)_k) through t^{wn}"),
            &phi.series(wn)?,
            &words_closed_form(k, wn)?,
        );
    }
    for m in 1..=n {
        let (mut ok, row) = (true, Partition::new(vec![m])?);
        for lambda in partitions(m) {
            ok &= brick_tabloid_count(&lambda, &row)? == multinomial(&lambda);
        }
        r.check(format!("n={m}: |B_(lambda,(n))| = multinomial count"), ok, || "brick counts differ".into());
    }
    Ok(())
}

fn classical_derangements(n: usize) -> i64 {
    let (mut a, mut b) = (1i64, 0i64);
    if n == 0 {
        return 1;
    }
    for k in 2..=n {
        let c = (k as i64 - 1) * (a + b);
        a = b;
        b = c;
    }
    b
}

fn derangement(r: &mut Report) {
    let d: Vec<Poly> = (0..=r.n + 1).map(q_derangement::<Rational>).collect();
    for n in 2..=r.n {
        let qn = q_int::<Rational>(n as u32);
        let first = &(&qn * &d[n]).mul_monomial(&[1, 0, 0, 0]) + &(&qn * &d[n - 1]);
        r.check_eq(format!("n={n}: d_(n+1) = q[n] d_n + [n] d_(n-1)"), &d[n + 1], &first);
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        let second = &(&q_int::<Rational>(n as u32 + 1) * &d[n]) + &Poly::from_int(sign);
        r.check_eq(format!("n={n}: d_(n+1) = [n+1] d_n + (-1)^(n+1)"), &d[n + 1], &second);
    }
    for (n, dn) in d.iter().enumerate() {
        let at1 = dn.subs(Var::Q, &int(1));
        r.check_eq(
            format!("n={n}: d_n at q=1 is the derangement number"),
            &at1,
            &Poly::from_int(classical_derangements(n)),
        );
    }
}

fn gm(r: &mut Report) -> Result<()> {
    let bound = r.n;
    let (a, b) = (PartitionFamily::EvenParts, PartitionFamily::repeated());
    let count_to = bound.max(25);
    let mut counts_ok = true;
    let mut detail = String::new();
    for n in 0..=count_to {
        let (x, y) = (avoiders(&a, n).len(), avoiders(&b, n).len());
        if x != y {
            counts_ok = false;
            detail = format!("n={n}: {x} vs {y}");
            break;
        }
    }
    r.check(
        format!("no even parts and no repeated parts equinumerous for n <= {count_to}"),
        counts_ok,
        || detail,
    );

    for n in 0..=bound {
        let m = BijectionMachine::new(a.clone(), b.clone(), n)?;
        r.check(
            format!("n={n}: chase is a bijection onto the repeated-part avoiders"),
            is_bijection(&m)?,
            || "image differs from the target class".into(),
        );
    }
    for n in 0..=bound.min(14) {
        let m = BijectionMachine::new(a.clone(), b.clone(), n)?;
        r.check(format!("n={n}: alpha, beta involutive and theta invertible"), well_formed(&m), || {
            "a signed-set map misbehaves".into()
        });
    }
    let (ra, rb) = random_explicit_pair(7, 9, 4);
    let show = |f: &PartitionFamily| serde_json::to_string(f).expect("families serialize");
    r.notes.push(format!("random pair A={} B={}", show(&ra), show(&rb)));
    for n in 0..=bound.min(12) {
        let m = BijectionMachine::new(ra.clone(), rb.clone(), n)?;
        let ok = well_formed(&m) && is_bijection(&m)?;
        r.check(format!("random explicit pair n={n}: certified"), ok, || "certificate failed".into());
    }
    Ok(())
}

fn is_bijection(m: &BijectionMachine) -> Result<bool> {
    let (_, b) = m.families();
    let images: Vec<Partition> = m.map_all()?.into_iter().map(|(_, y)| y).collect();
    let distinct: BTreeSet<&Partition> = images.iter().collect();
    let target: BTreeSet<Partition> = avoiders(b, m.n()).into_iter().collect();
    Ok(distinct.len() == images.len() && distinct.into_iter().cloned().collect::<BTreeSet<_>>() == target)
}

fn well_formed(m: &BijectionMachine) -> bool {
    let (a, b) = m.families();
    let side_ok = |pairs: Vec<crate::bijection::SignedPair>,
                   inv: &dyn Fn(&crate::bijection::SignedPair) -> crate::bijection::SignedPair,
                   fam: &PartitionFamily| {
        pairs.iter().all(|p| {
            let q = inv(p);
            let fixed_ok = if q == *p {
                p.set.is_empty() && fam.is_avoided_by(&p.partition)
            } else {
                q.sign() == -p.sign()
            };
            inv(&q) == *p && fixed_ok
        })
    };
    let theta_ok = signed_set(a, m.n()).iter().all(|p| {
        let t = m.theta(p);
        t.sign() == p.sign() && m.theta_inv(&t) == *p
    });
    side_ok(m.signed_set_a(), &|p| m.alpha(p), a) && side_ok(m.signed_set_b(), &|p| m.beta(p), b) && theta_ok
}

fn cayley(r: &mut Report) -> Result<()> {
    for n in 2..=r.n {
        let total = count_functions(n)?;
        let mut trees = BTreeSet::new();
        let mut roundtrip = true;
        for rank in 0..total {
            let f = EndoFunction::unrank(rank, n)?;
            let t = func_to_tree(&f);
            roundtrip &= f.rank() == rank && tree_to_func(&t)? == f;
            trees.insert(t);
        }
        r.check(format!("n={n}: tree_to_func and rank invert func_to_tree and unrank"), roundtrip, || {
            "mismatch".into()
        });
        r.check(format!("n={n}: {total} distinct trees = n^(n-2)"), trees.len() as u128 == total, || {
            format!("{} distinct", trees.len())
        });
    }
    let f = EndoFunction::new(12, vec![3, 3, 7, 1, 3, 8, 4, 12, 7, 10])?;
    let tree: LabeledTree = "9-12 4-7 7-8 10-7 11-10 6-3 2-3 5-1 12-4 8-3 3-1".parse()?;
    r.check("12-vertex example: function to tree", func_to_tree(&f) == tree, || {
        func_to_tree(&f).to_string().replace('\n', " ")
    });
    r.check("12-vertex example: tree to function", tree_to_func(&tree)? == f, || "mismatch".into());
    Ok(())
}

/// Stirling numbers of the second kind by enumerating restricted growth
/// strings.
fn set_partition_counts(n: usize) -> Vec<i64> {
    fn go(i: usize, n: usize, blocks: usize, counts: &mut [i64]) {
        if i == n {
            counts[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            go(i + 1, n, blocks.max(b + 1), counts);
        }
    }
    let mut counts = vec![0; n + 1];
    if n == 0 {
        counts[0] = 1;
    } else {
        go(0, n, 0, &mut counts);
    }
    counts
}

fn rook(r: &mut Report) -> Result<()> {
    let n_max = r.n;
    for n in 0..=n_max {
        let s2 = set_partition_counts(n);
        let ok = (0..=n).all(|k| stirling_q::<Rational>(n, k).subs(Var::Q, &int(1)) == Poly::from_int(s2[k]));
        r.check(format!("n={n}: S_(n,k)(1) = S(n,k)"), ok, || format!("expected {s2:?}"));
        r.check_eq(
            format!("n={n}: S_(n,n) = q^C(n,2)"),
            &stirling_q::<Rational>(n, n),
            &Poly::var_pow(int(1), Var::Q, (n * n.saturating_sub(1) / 2) as u32),
        );
    }
    let mut printed_fails = Vec::new();
    for n in 0..n_max {
        for k in 1..=n + 1 {
            r.check_eq(
                format!("S_({},{k}) = q^(k-1) S_({n},{}) + [k] S_({n},{k})", n + 1, k - 1),
                &stirling_q::<Rational>(n + 1, k),
                &stirling_q_recursion_rhs(n, k),
            );
            if n >= 1 && stirling_q::<Rational>(n - 1, k) != stirling_q_recursion_rhs::<Rational>(n, k) {
                printed_fails.push(format!("({n},{k})"));
            }
        }
    }
    r.notes.push(format!(
        "left side S_(n-1,k) in place of S_(n+1,k) fails at {} of the (n,k) pairs checked",
        printed_fails.len()
    ));
    let order = 6;
    for n in 1..=n_max.min(4) {
        let a = stirling_side_series::<Rational>(n, order, DenominatorRange::FromOne)?;
        let b = full_board_series::<Rational>(n, order);
        let c = maj_des_series::<Rational>(n, order)?;
        r.check(
            format!("n={n}: Stirling side = full board = maj/des through t^{order}"),
            a == b && b == c,
            || format!("{a} | {b} | {c}"),
        );
        if stirling_side_series::<Rational>(n, order, DenominatorRange::FromZero)? != c {
            r.notes.push(format!("n={n}: denominator starting at i=0 does not match"));
        }
    }
    let sample = FullPlacement::new(vec![
        RookCell::Lower(3),
        RookCell::Upper(1),
        RookCell::Upper(2),
        RookCell::Lower(5),
    ])?;
    let (inv, max) = sample.statistics();
    r.check("sample placement has (inv, max) = (6, 5)", (inv, max) == (6, 5), || format!("({inv}, {max})"));
    Ok(())
}

/// Euler zigzag numbers by the boustrophedon (Seidel) triangle.
fn zigzag(n: usize) -> i64 {
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![0i64];
        for &v in row.iter().rev() {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    *row.last().unwrap()
}

fn mmp(r: &mut Report) -> Result<()> {
    let (even_order, odd_order) = if r.n == Suite::Mmp.default_n() { (8, 9) } else { (r.n, r.n) };
    for (parity, order, closed) in
        [(Parity::Even, even_order, "sec(qt)^(1/q)"), (Parity::Odd, odd_order, "int sec(qz)^(1+1/q)")]
    {
        let brute = alternating_mmp_series::<Rational>(parity, order);
        r.check_eq(
            format!("{parity:?} lengths: series = {closed} through t^{order}"),
            &brute,
            &alternating_mmp_closed_form(parity, order)?,
        );
        let at1 = brute.subs(Var::Q, &int(1));
        let ok = (0..=order)
            .filter(|m| (m % 2 == 0) == (parity == Parity::Even))
            .all(|m| at1.coeff(m).scale(&int(factorial(m) as i64)) == Poly::from_int(zigzag(m)));
        r.check(format!("{parity:?} lengths at q=1: alternating counts are the zigzag numbers"), ok, || {
            "mismatch".into()
        });
    }
    Ok(())
}

fn consecutive(r: &mut Report) -> Result<()> {
    let order = r.n;
    for t in ["132", "1243"] {
        let tau = ConsecutivePattern::new(t.parse()?)?;
        match extract_u::<Rational>(&tau, order) {
            Ok(u) => {
                r.check(format!("tau={t}: log(series)/x is x-free through t^{order}"), true, String::new);
                if t == "132" && order >= 1 {
                    r.check_eq("U_(132,1)(y) = -y".to_string(), &u[1], &(-Poly::var(Var::Y)));
                }
                // rebuilding the series from U recovers the avoider counts
                let s = lrmin_des_series::<Rational>(&tau, order);
                let at1 = s.subs(Var::X, &int(1)).subs(Var::Y, &int(1));
                let counts: Vec<i64> = (0..=order)
                    .map(|m| crate::patterns::consecutive_avoiders(tau.tau(), m).len() as i64)
                    .collect();
                let ok = counts
                    .iter()
                    .enumerate()
                    .all(|(m, &c)| at1.coeff(m).scale(&int(factorial(m) as i64)) == Poly::from_int(c));
                r.check(format!("tau={t}: x=y=1 gives avoider counts {counts:?}"), ok, || "mismatch".into());
            }
            Err(e) => r.check(format!("tau={t}: log(series)/x is x-free through t^{order}"), false, || {
                e.to_string()
            }),
        }
    }
    Ok(())
}

fn fishburn(r: &mut Report) -> Result<()> {
    let n_max = r.n;
    let gf = reference_gf::<Rational>(FishburnGf::Fishburn, n_max)?;
    let censuses: Vec<_> = (0..=n_max).map(fishburn_census).collect();
    let counts: Vec<u64> = censuses.iter().map(|c| c.avoiders).collect();
    let ok = counts.iter().enumerate().all(|(m, &c)| gf.coeff(m) == &Poly::from_int(c as i64));
    r.check(format!("avoider counts {counts:?} = product series coefficients"), ok, || {
        format!("series {gf}")
    });
    let k_max = n_max.min(8);
    for k in [2, 3] {
        let gk = reference_gf::<Rational>(FishburnGf::FishburnK(k), k_max)?;
        let strict: Vec<u64> =
            censuses[..=k_max].iter().map(|c| c.bounded_by(k, RunBoundary::Strict)).collect();
        let ok = strict.iter().enumerate().all(|(m, &c)| gk.coeff(m) == &Poly::from_int(c as i64));
        r.check(format!("k={k}: value runs shorter than k give {strict:?}"), ok, || format!("series {gk}"));
        let inclusive: Vec<u64> =
            censuses[..=k_max].iter().map(|c| c.bounded_by(k, RunBoundary::Inclusive)).collect();
        let inc_ok = inclusive.iter().enumerate().all(|(m, &c)| gk.coeff(m) == &Poly::from_int(c as i64));
        r.notes.push(format!(
            "k={k}: runs of length at most k give {inclusive:?}, {}",
            if inc_ok { "matching" } else { "not matching" }
        ));
    }
    Ok(())
}

fn conjecture(r: &mut Report) -> Result<()> {
    let gf = reference_gf::<Rational>(FishburnGf::LeftmostConjecture, r.n)?;
    for m in 0..=r.n {
        let census = fishburn_census(m).leftmost_polynomial::<Rational>();
        let agree = gf.coeff(m) == &census;
        r.check(format!("n={m}: sum z^(leftmost run) = {census}"), agree, || {
            format!("series gives {}", gf.coeff(m))
        });
    }
    let first_bad = r.checks.iter().position(|c| !c.pass);
    r.notes.push(match first_bad {
        None => format!("AGREE through n={}", r.n),
        Some(m) => format!("DISAGREE at n={m}"),
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles() {
        assert_eq!(
            (0..8).map(classical_derangements).collect::<Vec<_>>(),
            vec![1, 0, 1, 2, 9, 44, 265, 1854]
        );
        assert_eq!((0..10).map(zigzag).collect::<Vec<_>>(), vec![1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]);
        assert_eq!(set_partition_counts(4), vec![0, 1, 7, 6, 1]);
    }

    #[test]
    fn small_runs_pass() {
        for suite in Suite::ALL {
            let n = match suite {
                Suite::Gm => 6,
                Suite::Cayley => 5,
                _ => 4,
            };
            let report = run_suite(suite, Some(n)).unwrap();
            assert!(report.checks.iter().all(|c| c.pass), "{report}");
        }
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
