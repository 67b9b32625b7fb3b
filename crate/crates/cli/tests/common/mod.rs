//! Documented CLI invocations and their golden transcripts.

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: &'static [(&'static str, &'static str)],
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, env: &[] }
}

pub const CASES: &[Case] = &[
    case("table_inverse_kostka_csv", &["table", "inverse-kostka", "--n", "3", "--format", "csv"]),
    case("table_inverse_kostka_4", &["table", "inverse-kostka", "--n", "4"]),
    case("table_kostka_4", &["table", "kostka", "--n", "4"]),
    case("table_brick_4", &["table", "brick", "--n", "4"]),
    case("table_q_derangement_3", &["table", "q-derangement", "--n", "3"]),
    case("table_eulerian_1", &["table", "eulerian", "--n", "1"]),
    case("table_eulerian_json", &["table", "eulerian", "--n", "4", "--format", "json"]),
    case("table_stirling_q_4", &["table", "stirling-q", "--n", "4"]),
    case("table_fishburn_census_6", &["table", "fishburn-census", "--n", "6"]),
    case("verify_eq1_6", &["verify", "eq1", "--n", "6"]),
    case("verify_gm_12", &["verify", "gm", "--n", "12"]),
    case("verify_conjecture_6", &["verify", "conjecture", "--n", "6"]),
    case("biject_euler_3", &["biject", "partition", "--a", "even_parts", "--b", "repeated", "--n", "3"]),
    case("biject_euler_8", &["biject", "partition", "--a", "even_parts", "--b", "repeated", "--n", "8"]),
    case("biject_tree_unrank", &["biject", "tree", "--unrank", "0", "--n", "3"]),
    case("biject_tree_to_func", &["biject", "tree", "--to-func", "--input", "tests/golden/worked_tree.txt"]),
    case("biject_tree_rank", &["biject", "tree", "--rank", "--input", "tests/golden/worked_tree.txt"]),
    case("biject_tree_to_tree", &["biject", "tree", "--to-tree", "--func", "3,3,7,1,3,8,4,12,7,10"]),
    case("series_eulerian", &["series", "--phi", "eulerian", "--order", "4"]),
    case("series_words", &["series", "--phi", "words", "--k", "2", "--order", "3"]),
    case("error_unknown_suite", &["verify", "nonsense"]),
    case(
        "error_sum_condition",
        &["biject", "partition", "--a", "even_parts", "--b", r#"{"kind":"multiples","m":3}"#, "--n", "4"],
    ),
    Case { name: "error_budget", args: &["table", "kostka", "--n", "6"], env: &[("REMMELKIT_MAX_N", "4")] },
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.txt"))
}

/// Runs one case and renders its transcript: the command line, stdout,
/// stderr lines prefixed with `! `, and the exit code when nonzero.
pub fn transcript(case: &Case) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_remmelkit"));
    cmd.args(case.args).current_dir(manifest_dir()).env_remove("REMMELKIT_MAX_N");
    for (k, v) in case.env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn remmelkit");
    let mut s = String::from("$");
    for (k, v) in case.env {
        s.push_str(&format!(" {k}={v}"));
    }
    s.push_str(" remmelkit");
    for a in case.args {
        if a.contains(|c: char| c.is_whitespace() || c == '"' || c == '{') {
            s.push_str(&format!(" '{a}'"));
        } else {
            s.push_str(&format!(" {a}"));
        }
    }
    s.push('\n');
    s.push_str(&String::from_utf8_lossy(&out.stdout));
    for line in String::from_utf8_lossy(&out.stderr).lines() {
        s.push_str(&format!("! {line}\n"));
    }
    let code = out.status.code().unwrap_or(-1);
    if code != 0 {
        s.push_str(&format!("[exit {code}]\n"));
    }
    s
}

pub fn blessing() -> bool {
    std::env::var_os("REMMELKIT_BLESS").is_some()
}

/// Compares every case against its golden file, or rewrites the files when
/// blessing. Returns the names of mismatching cases.
pub fn check_all() -> Vec<String> {
    let mut bad = Vec::new();
    for case in CASES {
        let got = transcript(case);
        let path = golden_path(case.name);
        if blessing() {
            std::fs::write(&path, &got).expect("write golden file");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            _ => bad.push(case.name.to_string()),
        }
    }
    bad
}
