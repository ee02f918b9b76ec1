use std::process::{Command, Output};

fn partlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counts_flushed_partitions() {
    let o = partlab(&["count", "F", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn counts_with_negative_parameter() {
    let o = partlab(&["count", "N_rank", "--n", "4", "--m", "-3"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn enumerates_in_comma_notation() {
    let o = partlab(&["enumerate", "F", "--n", "6"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.starts_with('(') && l.ends_with(')')));
    let o = partlab(&["enumerate", "ce", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn shows_the_bijection() {
    let o = partlab(&["bijection", "phi", "--n", "2", "--show"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1=1 → (2)"), "{text}");
    assert!(text.contains("1>0=0<1 → (1,1)"), "{text}");
    let o = partlab(&["bijection", "phi", "--n", "8", "--check-inverse"]);
    assert_eq!(stdout(&o).matches(": bijective").count(), 8);
}

#[test]
fn verifies_one_identity_as_json() {
    let o = partlab(&[
        "verify",
        "cor3.8-ramanujan",
        "--order",
        "100",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "verified");
    assert_eq!(v["order"], 100);
    assert!(v["first_discrepancy"].is_null());
}

#[test]
fn perturbation_fails_with_exit_one() {
    let o = partlab(&["verify", "lem4.1a", "--perturb-degree", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("q^5"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["count", "nope", "--n", "3"],
        &["count", "F"],
        &["verify", "bogus"],
        &["verify", "thm2.1", "--order", "0"],
        &["verify", "eq1.1-flushed-gf", "--order", "100000"],
        &["involution", "beta", "--max-weight", "3"],
        &["involution", "alpha"],
        &["series", "nope"],
    ] {
        let o = partlab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = partlab(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn involution_trace_lists_fixed_points() {
    let o = partlab(&["involution", "alpha1", "--trace", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("fixed points: 1"), "{text}");
    assert!(text.contains("lambda=() mu=(0,0) d=2 sign=+1"), "{text}");
}

#[test]
fn involution_checks_pass() {
    let o = partlab(&["involution", "alpha", "--max-weight", "12", "--z-refined"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(": pass").count(), 3);
}

#[test]
fn prints_series() {
    let o = partlab(&["series", "euler", "--order", "7"]);
    assert_eq!(stdout(&o), "1 - q - q^2 + q^5 + q^7 (order 7)\n");
}

#[test]
fn json_round_trips_byte_for_byte() {
    let runs: &[&[&str]] = &[
        &["count", "p", "--n", "20"],
        &["enumerate", "UF", "--n", "6"],
        &["enumerate", "ce", "--n", "5"],
        &["verify", "thm2.1"],
        &["verify", "--list"],
        &["involution", "alpha2", "--max-weight", "6", "--z-refined"],
        &["involution", "alpha", "--trace", "4"],
        &["bijection", "phi", "--n", "5", "--show"],
        &["series", "mock-f", "--order", "40"],
    ];
    for args in runs {
        let mut args = args.to_vec();
        args.extend(["--format", "json"]);
        let o = partlab(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}
