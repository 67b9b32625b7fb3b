//! `remmelkit`: tables, series, bijections and verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 domain or precondition error.

mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use remmelkit::bijection::{avoiders, BijectionMachine, PartitionFamily, SUBSET_WARNING};
use remmelkit::cayley::{func_to_tree, tree_to_func, EndoFunction, LabeledTree};
use remmelkit::homomorphism::{BuiltinPhi, EHomomorphism};
use remmelkit::objects::{eulerian_polynomial, partitions, q_derangement, Partition};
use remmelkit::patterns::fishburn_census;
use remmelkit::rook::stirling_q;
use remmelkit::symfunc::{brick_tabloid_count, inverse_kostka_matrix, kostka_matrix};
use remmelkit::verify::{run_suite, Suite};
use remmelkit::{Error, Poly, Rational};

use render::{Cell, Format, Table};

const MAX_N_VAR: &str = "REMMELKIT_MAX_N";

#[derive(Parser)]
#[command(
    name = "remmelkit",
    version,
    about = "Exact enumerative combinatorics: tables, series, bijections, identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table. Partitions index matrices in lexicographically
    /// decreasing order.
    Table(TableArgs),
    /// Run a verification suite (or `all`) and print PASS/FAIL lines.
    Verify(VerifyArgs),
    /// Run one of the bijections.
    Biject {
        #[command(subcommand)]
        mode: BijectMode,
    },
    /// Coefficients of the series of a homomorphism on the e_n.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Kostka,
    InverseKostka,
    Brick,
    StirlingQ,
    Eulerian,
    QDerangement,
    FishburnCensus,
}

#[derive(Args)]
struct TableArgs {
    kind: TableKind,
    #[arg(long)]
    n: usize,
    /// Restrict stirling-q to a single k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// kostka-inverse, eq1, homomorphism, derangement, gm, cayley, rook, mmp,
    /// consecutive, fishburn, conjecture or all
    suite: String,
    /// Main size bound; each suite has its own default.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum BijectMode {
    /// Map every avoider of family A to an avoider of family B.
    Partition {
        /// Family JSON such as {"kind":"multiples","m":3}, or a bare kind
        /// name (even_parts, repeated).
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        n: usize,
    },
    /// Functions {2..n-1} -> {1..n} and labeled trees.
    Tree(TreeArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["unrank", "rank", "to_func", "to_tree"])))]
struct TreeArgs {
    /// Print the tree of this rank (needs --n).
    #[arg(long, requires = "n")]
    unrank: Option<u128>,
    /// Print the rank of the tree read from --input or stdin.
    #[arg(long)]
    rank: bool,
    /// Print f(2),...,f(n-1) for the tree read from --input or stdin.
    #[arg(long)]
    to_func: bool,
    /// Print the tree of the function given by --func.
    #[arg(long, requires = "func")]
    to_tree: bool,
    #[arg(long)]
    n: Option<usize>,
    /// Comma separated f(2),...,f(n-1).
    #[arg(long, allow_hyphen_values = true)]
    func: Option<String>,
    /// Edge list with one a-b pair per line.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PhiKind {
    Eulerian,
    Words,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum, conflicts_with = "json")]
    phi: Option<PhiKind>,
    /// Alphabet size for --phi words.
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// File holding {"values": ["1", ...]} with phi(e_0) first.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::usage(e.to_string()),
            _ => Failure::domain(e.to_string()),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Biject { mode: BijectMode::Partition { a, b, n } } => cmd_biject_partition(&a, &b, n),
        Command::Biject { mode: BijectMode::Tree(args) } => cmd_biject_tree(args),
        Command::Series(args) => cmd_series(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Enforces the enumeration budget: `REMMELKIT_MAX_N` when set, otherwise
/// the command's own default.
fn check_budget(what: &str, n: usize, default: usize) -> Result<(), Failure> {
    let cap = match std::env::var(MAX_N_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Failure::usage(format!("{MAX_N_VAR}={v:?} is not a number")))?
        }
        Err(_) => default,
    };
    if n > cap {
        return Err(Failure::domain(format!(
            "{what}: n={n} exceeds the budget {cap} (set {MAX_N_VAR} to change it)"
        )));
    }
    Ok(())
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn matrix_table(
    name: &str,
    corner: &str,
    rows: &[Partition],
    cols: &[Partition],
    value: impl Fn(usize, usize) -> i64,
) -> Table {
    let col_names: Vec<String> = cols.iter().map(|p| p.to_string()).collect();
    let mut headers = vec![corner];
    headers.extend(col_names.iter().map(String::as_str));
    let mut t = Table::new(name, &headers);
    for (i, r) in rows.iter().enumerate() {
        let mut row = vec![Cell::Text(r.to_string())];
        row.extend((0..cols.len()).map(|j| Cell::Int(value(i, j))));
        t.push(row);
    }
    t
}

fn single_poly(name: &str, n: usize, p: Poly) -> Table {
    let mut t = Table::new(name, &["n", "polynomial"]);
    t.plain = Some(p.to_string());
    t.push(vec![Cell::Int(n as i64), Cell::Poly(p)]);
    t
}

fn cmd_table(args: TableArgs) -> CmdResult {
    let n = args.n;
    let table = match args.kind {
        TableKind::Kostka => {
            check_budget("kostka", n, 12)?;
            let (parts, k) = kostka_matrix(n);
            matrix_table("kostka", "lambda\\mu", &parts, &parts, |i, j| k[i][j])
        }
        TableKind::InverseKostka => {
            check_budget("inverse-kostka", n, 10)?;
            let (parts, m) = inverse_kostka_matrix(n);
            matrix_table("inverse-kostka", "mu\\lambda", &parts, &parts, |i, j| m[i][j])
        }
        TableKind::Brick => {
            check_budget("brick", n, 12)?;
            let parts = partitions(n);
            let mut counts = vec![vec![0i64; parts.len()]; parts.len()];
            for (i, l) in parts.iter().enumerate() {
                for (j, mu) in parts.iter().enumerate() {
                    counts[i][j] = brick_tabloid_count(l, mu)? as i64;
                }
            }
            matrix_table("brick", "lambda\\mu", &parts, &parts, |i, j| counts[i][j])
        }
        TableKind::StirlingQ => {
            check_budget("stirling-q", n, 10)?;
            match args.k {
                Some(k) => {
                    let mut t = Table::new("stirling-q", &["n", "k", "polynomial"]);
                    let p = stirling_q::<Rational>(n, k);
                    t.plain = Some(p.to_string());
                    t.push(vec![Cell::Int(n as i64), Cell::Int(k as i64), Cell::Poly(p)]);
                    t
                }
                None => {
                    let mut t = Table::new("stirling-q", &["n", "k", "polynomial"]);
                    for k in 0..=n {
                        t.push(vec![Cell::Int(n as i64), Cell::Int(k as i64), Cell::Poly(stirling_q(n, k))]);
                    }
                    t
                }
            }
        }
        TableKind::Eulerian => {
            check_budget("eulerian", n, 10)?;
            single_poly("eulerian", n, eulerian_polynomial(n))
        }
        TableKind::QDerangement => {
            check_budget("q-derangement", n, 10)?;
            single_poly("q-derangement", n, q_derangement(n))
        }
        TableKind::FishburnCensus => {
            check_budget("fishburn-census", n, 10)?;
            let mut t = Table::new("fishburn-census", &["n", "statistic", "value", "count"]);
            for m in 0..=n {
                let c = fishburn_census(m);
                t.push(vec![
                    Cell::Int(m as i64),
                    Cell::Text("avoiders".into()),
                    Cell::Text(String::new()),
                    Cell::Int(c.avoiders as i64),
                ]);
                for (stat, map) in [("max-value-run", &c.by_max_run), ("leftmost-run", &c.by_leftmost_run)] {
                    for (v, count) in map {
                        t.push(vec![
                            Cell::Int(m as i64),
                            Cell::Text(stat.into()),
                            Cell::Int(*v as i64),
                            Cell::Int(*count as i64),
                        ]);
                    }
                }
            }
            t
        }
    };
    let text = table.render(args.format).map_err(Failure::usage)?;
    emit(&text, args.output.as_ref())?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let suites: Vec<Suite> =
        if args.suite == "all" { Suite::ALL.to_vec() } else { vec![args.suite.parse::<Suite>()?] };
    if let Some(n) = args.n {
        check_budget("verify", n, usize::MAX)?;
    }
    let mut ok = true;
    for suite in suites {
        let report = run_suite(suite, args.n)?;
        print!("{report}");
        let failed = report.failures().count();
        let status = if suite.is_experimental() {
            "REPORTED"
        } else if failed == 0 {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{status} {suite} (n={}, {} checks, {failed} failing)", report.n, report.checks.len());
        ok &= report.passed();
    }
    Ok(if ok { 0 } else { 1 })
}

fn parse_family(src: &str) -> Result<PartitionFamily, Failure> {
    let json = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        format!("{{\"kind\":\"{}\"}}", src.trim())
    };
    serde_json::from_str(&json).map_err(|e| Failure::usage(format!("bad family {src:?}: {e}")))
}

fn cmd_biject_partition(a: &str, b: &str, n: usize) -> CmdResult {
    let (a, b) = (parse_family(a)?, parse_family(b)?);
    check_budget("biject partition", n, 40)?;
    let active = a.active_indices(n).len().max(b.active_indices(n).len());
    if active > SUBSET_WARNING {
        eprintln!(
            "warning: {active} active indices; checking the sum condition enumerates 2^{active} subsets"
        );
    }
    let machine = BijectionMachine::new(a.clone(), b, n)?;
    for lambda in avoiders(&a, n) {
        println!("{lambda} -> {}", machine.map(&lambda)?);
    }
    Ok(0)
}

fn read_edges(input: Option<&PathBuf>) -> Result<LabeledTree, Failure> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(e.to_string()))?;
            s
        }
    };
    Ok(text.parse::<LabeledTree>()?)
}

fn cmd_biject_tree(args: TreeArgs) -> CmdResult {
    if let Some(r) = args.unrank {
        let n = args.n.expect("clap enforces --n");
        check_budget("biject tree", n, 26)?;
        println!("{}", LabeledTree::unrank(r, n)?);
    } else if args.rank {
        println!("{}", read_edges(args.input.as_ref())?.rank()?);
    } else if args.to_func {
        println!("{}", tree_to_func(&read_edges(args.input.as_ref())?)?);
    } else {
        let src = args.func.expect("clap enforces --func");
        let count = src.split(',').filter(|t| !t.trim().is_empty()).count();
        let n = args.n.unwrap_or(count + 2);
        println!("{}", func_to_tree(&EndoFunction::parse(n, &src)?));
    }
    Ok(0)
}

fn cmd_series(args: SeriesArgs) -> CmdResult {
    let phi: EHomomorphism<Rational> = match (&args.json, args.phi) {
        (Some(path), _) => {
            let src = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            EHomomorphism::from_json(&src)?
        }
        (None, Some(PhiKind::Eulerian)) => EHomomorphism::builtin(BuiltinPhi::Eulerian, args.order)?,
        (None, Some(PhiKind::Words)) => {
            if args.k == 0 {
                return Err(Failure::domain("alphabet size k must be at least 1"));
            }
            EHomomorphism::builtin(BuiltinPhi::Words(args.k), args.order)?
        }
        (None, None) => return Err(Failure::usage("give --phi or --json")),
    };
    let series = phi.series(args.order)?;
    let mut t = Table::new("series", &["n", "coefficient"]);
    for (n, c) in series.coeffs().iter().enumerate() {
        t.push(vec![Cell::Int(n as i64), Cell::Poly(c.clone())]);
    }
    print!("{}", t.render(args.format).map_err(Failure::usage)?);
    Ok(0)
}
