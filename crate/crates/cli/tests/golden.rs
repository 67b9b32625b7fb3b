mod common;

use common::{transcript, CASES};

#[test]
fn golden_files_match() {
    let bad = common::check_all();
    assert!(bad.is_empty(), "golden mismatch (rerun with REMMELKIT_BLESS=1 after review): {bad:?}");
}

#[test]
fn output_is_deterministic() {
    for case in CASES.iter().filter(|c| !c.name.starts_with("verify_gm")) {
        assert_eq!(transcript(case), transcript(case), "{}", case.name);
    }
}

#[test]
fn exit_codes() {
    let code = |name: &str| {
        let case = CASES.iter().find(|c| c.name == name).unwrap();
        let t = transcript(case);
        t.lines().last().and_then(|l| l.strip_prefix("[exit ")).map(|l| l.trim_end_matches(']').to_string())
    };
    assert_eq!(code("error_unknown_suite").as_deref(), Some("2"));
    assert_eq!(code("error_sum_condition").as_deref(), Some("3"));
    assert_eq!(code("error_budget").as_deref(), Some("3"));
    assert_eq!(code("table_kostka_4"), None);
}
