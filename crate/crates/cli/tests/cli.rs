use gamma_cli::{run, OutputRecord};
use gamma_cli::verify::{golden_poincare_rows, COUNTS_CSV};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv: Vec<&str> = std::iter::once("gamma").chain(args.iter().copied()).collect();
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gens_five_in_canonical_order() {
    let (code, out, _) = cli(&["gens", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "6\tx1*x2\n8\tx1^3\n9\tx2^2\n10\tx1*x3\n15\tx2*x3\n25\tx3^2\n");
    assert_eq!(cli(&["gens", "5", "--brute"]).1, out);
    let (_, csv, _) = cli(&["gens", "5", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("weight,monomial,v,degree"));
    assert_eq!(csv.lines().nth(2), Some("8,x1^3,1,3"));
}

#[test]
fn counts_match_golden_files() {
    assert_eq!(cli(&["counts", "--nmax", "30", "--format", "csv"]).1, COUNTS_CSV);
    let (_, text, _) = cli(&["counts", "--nmax", "9"]);
    assert_eq!(text.lines().last(), Some("9: 11 = 5 + 3 + 2 + 1"));
    let (_, graded, _) = cli(&["counts", "--nmax", "5", "--graded"]);
    assert_eq!(graded, "n=2 v=1: 1\nn=3 v=1: 2\nn=3 v=2: 1\nn=4 v=1: 1 1\nn=4 v=2: 1\nn=5 v=1: 2 1\nn=5 v=2: 2\nn=5 v=3: 1\n");
    let (_, gcsv, _) = cli(&["counts", "--nmax", "5", "--graded", "--format", "csv"]);
    assert_eq!(gcsv.lines().next(), Some("n,v,C_d2,C_d3"));
    assert_eq!(gcsv.lines().nth(1), Some("2,1,1,"));
}

#[test]
fn poincare_matches_golden_table() {
    assert_eq!(cli(&["poincare", "9"]).1, "(1 + t)/(1 - 3*t - 5*t^2)\n");
    assert_eq!(cli(&["poincare", "9", "--residue"]).1, "(1 + t)/(1 - 3*t - 5*t^2)\n");
    for (n, graded, plain) in golden_poincare_rows() {
        let n = n.to_string();
        assert_eq!(cli(&["poincare", &n]).1.trim_end(), plain);
        if let Some(g) = graded {
            assert_eq!(cli(&["poincare", &n, "--graded"]).1.trim_end(), g);
        }
    }
}

#[test]
fn other_commands() {
    assert_eq!(cli(&["betti", "9"]).1, "11 23 18 5\n");
    assert_eq!(cli(&["betti", "5", "--format", "csv"]).1, "q,beta\n0,6\n1,8\n2,3\n");
    assert_eq!(cli(&["hilbert", "5"]).1, "1 + 3*t + t^2\n");
    assert_eq!(cli(&["hilbert", "5", "--bigraded"]).1, "1 + t*u^2 + t*u^3 + t*u^5 + t^2*u^4\n");
    assert_eq!(cli(&["poincare", "5", "--ideal"]).1, "6 + 8*t + 3*t^2\n");
    let (code, out, _) = cli(&["conjecture", "--nmax", "12"]);
    assert_eq!(code, 0);
    assert!(out.contains("9\t1\t1\t2\t[-1, 3, 5]\t1\tok"), "{out}");
    assert!(out.ends_with("levels with clause failures: 0\n"));
}

#[test]
fn json_records_round_trip() {
    for args in [
        vec!["gens", "7", "--format", "json"],
        vec!["counts", "--nmax", "12", "--graded", "--format", "json"],
        vec!["poincare", "25", "--graded", "--format", "json"],
        vec!["betti", "30", "--format", "json"],
        vec!["conjecture", "--nmax", "10", "--format", "json"],
        vec!["hilbert", "12", "--bigraded", "--format", "json"],
    ] {
        let (code, out, _) = cli(&args);
        assert_eq!(code, 0, "{args:?}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], args.join(" "));
        assert_eq!(v["format"], "json");
        assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
        let record: OutputRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&record).unwrap() + "\n", out, "{args:?}");
    }
    let (_, out, _) = cli(&["counts", "--nmax", "10", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n_range"], serde_json::json!([2, 10]));
    assert_eq!(v["payload"][7]["C_n_v"], serde_json::json!([5, 3, 2, 1]));
}

#[test]
fn output_is_deterministic() {
    for args in [vec!["verify", "--suite", "oracles", "--nmax", "7", "--qmax", "3", "--seed", "4"], vec!["counts", "--nmax", "40"]] {
        assert_eq!(cli(&args).1, cli(&args).1);
    }
}

#[test]
fn exit_codes() {
    let (code, _, err) = cli(&["gens", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("level 1"));
    assert_eq!(cli(&["frobnicate"]).0, 1);
    assert_eq!(cli(&["counts"]).0, 1);
    assert_eq!(cli(&["poincare", "5", "--ideal", "--residue"]).0, 1);
    assert_eq!(cli(&["hilbert", "5", "--format", "csv"]).0, 1);
    assert_eq!(cli(&["verify", "--suite", "oracles", "--nmax", "1"]).0, 1);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "--suite", "figures"],
        vec!["verify", "--suite", "gamma", "--seed", "9"],
        vec!["verify", "--suite", "theorems", "--nmax", "120"],
        vec!["verify", "--suite", "oracles", "--nmax", "8", "--qmax", "3", "--modular"],
    ] {
        let (code, out, _) = cli(&args);
        assert_eq!(code, 0, "{args:?}\n{out}");
        assert!(!out.contains("FAIL"));
    }
    let (_, out, _) = cli(&["verify", "--suite", "oracles", "--nmax", "6", "--qmax", "2"]);
    assert!(!out.contains("probabilistic"));
    let (_, out, _) = cli(&["verify", "--suite", "oracles", "--nmax", "7", "--qmax", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["probabilistic"], true);
}

#[test]
fn budget_errors_exit_with_usage_status() {
    let (code, out, err) = cli(&["verify", "--suite", "oracles", "--nmax", "30", "--qmax", "6"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("exceeds"));
}
