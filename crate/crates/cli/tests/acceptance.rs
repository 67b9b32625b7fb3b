//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p remmelkit-cli --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use remmelkit::verify::{run_suite, Check, Report, Suite};

struct Outcome {
    pass: bool,
    summary: String,
}

fn from_checks<'a>(checks: impl Iterator<Item = &'a Check>) -> Outcome {
    let (mut total, mut bad) = (0, Vec::new());
    for c in checks {
        total += 1;
        if !c.pass {
            bad.push(c.label.clone());
        }
    }
    let pass = total > 0 && bad.is_empty();
    let summary = if bad.is_empty() {
        format!("{total} checks")
    } else {
        format!("{} of {total} checks failing, first: {}", bad.len(), bad[0])
    };
    Outcome { pass, summary }
}

fn suite(s: Suite) -> Report {
    run_suite(s, None).unwrap_or_else(|e| panic!("{} suite errored: {e}", s.name()))
}

fn whole(s: Suite) -> Outcome {
    from_checks(suite(s).checks.iter())
}

fn criterion(n: usize) -> Outcome {
    match n {
        1 => whole(Suite::KostkaInverse),
        2 => whole(Suite::Eq1),
        3 | 4 => {
            let r = suite(Suite::Homomorphism);
            let words = n == 4;
            from_checks(r.checks.iter().filter(|c| c.label.starts_with("words") == words))
        }
        5 => whole(Suite::Derangement),
        6 => whole(Suite::Gm),
        7 => whole(Suite::Cayley),
        8 => whole(Suite::Rook),
        9 => whole(Suite::Mmp),
        10 => whole(Suite::Consecutive),
        11 => whole(Suite::Fishburn),
        12 => {
            // reported, never failing
            let r = suite(Suite::Conjecture);
            let status = r.notes.last().cloned().unwrap_or_default();
            Outcome { pass: true, summary: status }
        }
        13 => {
            let bad = common::check_all();
            let stable = common::CASES.iter().all(|c| common::transcript(c) == common::transcript(c));
            let pass = bad.is_empty() && stable;
            let summary = if pass {
                format!("{} golden transcripts, byte-identical on rerun", common::CASES.len())
            } else {
                format!("mismatched: {bad:?}, deterministic: {stable}")
            };
            Outcome { pass, summary }
        }
        _ => unreachable!(),
    }
}

const TITLES: [&str; 13] = [
    "Kostka inversion M*K = I, n <= 8",
    "h_mu in the e basis equals the monomial oracle, m <= 8",
    "Eulerian homomorphism and series through t^8",
    "word homomorphism and series, n <= 6, k <= 4",
    "q-derangement recursions, 2 <= n <= 9",
    "involution-principle bijection certificates",
    "Cayley tree bijection, n <= 7, worked example",
    "rook placements: q-Stirling, triple identity, sample placement",
    "alternating MMP series through t^8 / t^9",
    "consecutive patterns: log-linearity in x",
    "Fishburn counts and k-refinements",
    "leftmost-run conjecture experiment",
    "CLI golden files and determinism",
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, title) in TITLES.iter().enumerate() {
        let start = Instant::now();
        let o = criterion(i + 1);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed += 1;
        }
        println!("{verdict} criterion {}: {title} ({}; {:.2?})", i + 1, o.summary, start.elapsed());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        eprintln!("{failed} acceptance criteria failing");
        ExitCode::FAILURE
    }
}
