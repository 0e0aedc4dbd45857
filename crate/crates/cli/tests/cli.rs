use std::process::{Command, Output};

use eulerian::tables::{TableFn, TableView};
use eulerian::IdentityReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const P_TABLE: &str = "\
| P(m,n) | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 |
|---|---|---|---|---|---|---|---|---|
| 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 |
| 2 | 2 | 14 | 34 | 62 | 98 | 142 | 194 | 254 |
| 3 | -1 | 35 | 255 | 899 | 2303 | 4899 | 9215 | 15875 |
| 4 | 4 | 60 | 900 | 5884 | 24196 | 75324 | 194820 | 441340 |
| 5 | -3 | 101 | 2301 | 24197 | 151805 | 676197 | 2376701 | 7031301 |
| 6 | 6 | 138 | 4902 | 75322 | 676198 | 4160778 | 19475142 | 74307834 |
| 7 | -5 | 199 | 9211 | 194823 | 2376699 | 19475143 | 118493179 | 573785095 |
| 8 | 8 | 248 | 15880 | 441336 | 7031304 | 74307832 | 573785096 | 3465441272 |
";

const Q_TABLE: &str = "\
| Q(m,n) | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 |
|---|---|---|---|---|---|---|---|---|
| 1 | 2 | 2 | 2 | 2 | 2 | 2 | 2 | 2 |
| 2 | 2 | 18 | 50 | 98 | 162 | 242 | 338 | 450 |
| 3 | 2 | 50 | 338 | 1250 | 3362 | 7442 | 14450 | 25538 |
| 4 | 2 | 98 | 1250 | 7938 | 33282 | 106722 | 284258 | 661250 |
| 5 | 2 | 162 | 3362 | 33282 | 206082 | 927522 | 3323042 | 10044162 |
| 6 | 2 | 242 | 7442 | 106722 | 927522 | 5664978 | 26688818 | 103190978 |
| 7 | 2 | 338 | 14450 | 284258 | 3323042 | 26688818 | 161604242 | 786061250 |
| 8 | 2 | 450 | 25538 | 661250 | 10044162 | 103190978 | 786061250 | 4731504642 |
";

#[test]
fn markdown_tables_are_exact() {
    assert_eq!(stdout(&["table"]), P_TABLE);
    assert_eq!(stdout(&["table", "--fn", "Q", "--rows", "8", "--cols", "8"]), Q_TABLE);
    let a = stdout(&["table", "--fn", "A", "--rows", "3", "--cols", "3"]);
    assert_eq!(a, "| A(m,n) | 1 | 2 | 3 |\n|---|---|---|---|\n| 1 | 4 | 16 | 36 |\n| 2 | 4 | 64 | 324 |\n| 3 | 4 | 144 | 1444 |\n");
}

#[test]
fn csv_and_json_tables() {
    let csv = stdout(&["table", "--rows", "2", "--cols", "2", "--format", "csv"]);
    assert_eq!(csv, "P(m,n),1,2\n1,1,1\n2,2,14\n");
    let json = stdout(&["table", "--fn", "Ptilde", "--rows", "3", "--cols", "3", "--format", "json"]);
    let view: TableView = serde_json::from_str(&json).unwrap();
    assert_eq!(view.function, TableFn::Ptilde);
    assert_eq!(view.values[2][1], "34");
    assert_eq!(view.values[1][2], "34");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "half-cycle", "--max", "4", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    assert_eq!(stdout(&["table", "--fn", "Q"]), stdout(&["table", "--fn", "Q"]));
}

#[test]
fn poly_reports_symmetry_and_squares() {
    let p = stdout(&["poly", "--family", "P", "--index", "3"]);
    assert!(p.contains("P(3): 4x^4 - 8x^2 + 3"), "{p}");
    assert!(p.contains("symmetry: even about 0"));
    let q = stdout(&["poly", "--family", "Q", "--index", "3"]);
    assert!(q.contains("symmetry: even about 1/2"), "{q}");
    assert!(q.contains("square form: (8)(x^2 - x + 1/2)^2"), "{q}");
    let e = stdout(&["poly", "--family", "e", "--index", "1"]);
    assert_eq!(e, "e(1): (1/2)x - 1/4\ncoefficients: -1/4, 1/2\nsymmetry: none\n");
    let e2 = stdout(&["poly", "--family", "e2", "--index", "2"]);
    assert!(e2.contains("e2(2): (1/4)x^2 - (1/2)x + 1/8"), "{e2}");
    assert!(e2.contains("symmetry: even about 1\n"), "{e2}");
}

#[test]
fn conjecture_and_halfint() {
    let c = stdout(&["conjecture", "--max", "6"]);
    assert!(c.contains("m = 1: square, sqrt(2Q) = 2 (coefficients 2)\n"), "{c}");
    assert!(c.contains("m = 2: square, sqrt(2Q) = 4x - 2 (coefficients -2, 4)\n"), "{c}");
    assert!(c.ends_with("6 of 6 are squares\n"), "{c}");
    let h = stdout(&["halfint", "--m-max", "3", "--k-max", "1"]);
    assert!(h.contains("| 3 | 1/2 | 5/4 | 1/4 | 9 | 1/2 |"), "{h}");
    assert!(h.contains("| 2 | 3/2 | 7 |"), "{h}");
    assert!(h.lines().last().unwrap().starts_with("PASS half-cycle"));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--suite", "thm-summation", "--max", "8"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("PASS thm-summation"));

    let all = run(&["verify", "--max", "3"]);
    assert_eq!(all.status.code(), Some(1));
    let text = String::from_utf8_lossy(&all.stdout);
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failing.len(), 1, "{text}");
    assert!(failing[0].starts_with("FAIL c-recursion-second "));
}

#[test]
fn verify_json_round_trips() {
    let out = run(&["verify", "--suite", "c-recursions", "--max", "4", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let reports: Vec<IdentityReport> = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(
        ids,
        ["preimages", "c-recursion-first", "c-recursion-second", "c-recursion-second-corrected"]
    );
    let bad = reports.iter().find(|r| !r.passed()).unwrap();
    assert_eq!(bad.id, "c-recursion-second");
    assert!(bad.counterexample.is_some());
    let again = serde_json::to_string_pretty(&reports).unwrap();
    assert_eq!(again.trim_end(), String::from_utf8_lossy(&out.stdout).trim_end());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["poly", "--family", "Q", "--index", "0"][..],
        &["poly", "--family", "R", "--index", "2"],
        &["table", "--rows", "0"],
        &["table", "--fn", "Z"],
        &["verify", "--suite", "nope"],
        &["verify", "--max", "0"],
        &["conjecture", "--max", "0"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{args:?}");
    }
}
