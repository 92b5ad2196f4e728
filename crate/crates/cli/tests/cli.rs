use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modp-gl2"))
        .args(args)
        .output()
        .expect("failed to spawn binary")
}

fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}\nstderr:\n{}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

fn statuses(rep: &Value) -> Vec<(String, String)> {
    rep["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["name"].as_str().unwrap().to_string(),
                c["status"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

fn assert_golden(name: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    let out = run(args);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&expected),
        "stdout for {args:?} differs from {name}"
    );
}

#[test]
fn weight_character() {
    let rep = report(&["weights", "char", "--p", "29", "--f", "1", "--digits", "3", "--twist", "2"]);
    assert_eq!(rep["command"], "weights char");
    assert_eq!(rep["results"]["character"], serde_json::json!([5, 2]));
}

#[test]
fn weight_s_examples() {
    let rep = report(&["weights", "s", "--p", "29", "--f", "1", "--digits", "3"]);
    assert_eq!(rep["results"]["image"], serde_json::json!({"digits": [25], "twist": 3}));
    let rep = report(&["weights", "s", "--p", "29", "--f", "2", "--digits", "3,4"]);
    assert_eq!(rep["results"]["image"], serde_json::json!({"digits": [25, 24], "twist": 119}));
}

#[test]
fn intersection_witness_is_identity() {
    let rep = report(&["tuples", "intersection", "--p", "29", "--f", "3"]);
    assert_eq!(
        statuses(&rep),
        vec![("identity-only".to_string(), "pass".to_string())]
    );
    assert_eq!(rep["checks"][0]["witness"], serde_json::json!(["x+0", "x+0", "x+0"]));
}

#[test]
fn twist_and_weight_of_tuple() {
    let rep = report(&["tuples", "e", "--p", "29", "--f", "1", "--tuple", "P-3-x", "--digits", "3"]);
    assert_eq!(rep["results"]["twist"], 4);
    let rep = report(&["tuples", "weight", "--p", "29", "--f", "1", "--tuple", "P-3-x", "--digits", "3"]);
    assert_eq!(rep["results"]["weight"], serde_json::json!({"digits": [23], "twist": 4}));
}

#[test]
fn lattice_examples() {
    let rep = report(&["lattice", "soc", "--p", "29", "--f", "2", "--r", "3", "--profile", "3/3/3"]);
    assert_eq!(rep["results"]["soc_length"], 12);
    let rep = report(&[
        "lattice", "quotient", "--p", "29", "--f", "2", "--r", "3", "--outer", "3/3/3", "--inner",
        "1/2/0",
    ]);
    assert_eq!(rep["results"]["quotient"]["dims"], serde_json::json!([2, 1, 3]));
    let rep = report(&["lattice", "bound", "--p", "29", "--f", "1", "--r", "3", "--outer", "3", "--inner", "0"]);
    assert_eq!(rep["results"]["length_bound"], 3);
    let rep = report(&["lattice", "chains", "--p", "29", "--f", "1", "--r", "2", "--field", "2"]);
    assert_eq!(rep["results"]["exhaustive_max"], 4);
}

#[test]
fn cycle_of_direct_sum() {
    let rep = report(&[
        "cycles", "cycle", "--p", "29", "--f", "1", "--summand", "y0:2", "--summand", "z0",
    ]);
    assert_eq!(rep["results"]["cycle"], serde_json::json!({"(y0)": 2, "(z0)": 1}));
    let rep = report(&["cycles", "primes", "--p", "29", "--f", "2"]);
    assert_eq!(rep["results"]["p0"], "(z0, z1)");
    assert_eq!(rep["results"]["primes"].as_array().unwrap().last().unwrap(), "(z0, z1)");
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    let out = run(&["weights", "char", "--f", "1", "--digits", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        &["weights", "char", "--p", "4", "--f", "1", "--digits", "1"][..],
        &["weights", "s", "--p", "29", "--f", "1", "--digits", "0"],
        &["weights", "thresholds", "--p", "29", "--f", "1", "--theorem", "nope"],
        &["tuples", "e", "--p", "29", "--f", "1", "--tuple", "x+7", "--digits", "3"],
        &["lattice", "bound", "--p", "29", "--f", "1", "--r", "2", "--outer", "1/1", "--inner", "2/0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--p-max", "13", "--f-max", "2", "--seed", "7", "--samples", "10"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn golden_reports() {
    assert_golden("weights_char.json", &["weights", "char", "--p", "29", "--f", "1", "--digits", "3", "--twist", "2"]);
    assert_golden("tuples_list_d.json", &["tuples", "list-D", "--p", "29", "--f", "2"]);
}

#[test]
fn verify_sweep_passes_and_names_every_check() {
    let rep = report(&["verify", "--p-max", "31", "--f-max", "4"]);
    let checks = statuses(&rep);
    for prefix in ["weights/", "tuples/", "diagram/", "lattice/", "cycles/"] {
        assert!(checks.iter().any(|(n, _)| n.starts_with(prefix)), "no {prefix} checks");
    }
    let failed: Vec<_> = checks.iter().filter(|(_, s)| s != "pass").collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
    for name in [
        "weights/char-injective-on-1-generic",
        "weights/weight-s-involution",
        "tuples/transfer-equals-brute-force",
        "diagram/jh-meets-weight-set-in-sigma0",
        "lattice/socle-additivity",
        "cycles/mult-equals-oracles",
    ] {
        let cases = rep["results"]["coverage"][name]["cases"].as_u64().unwrap();
        assert!(cases > 0, "{name} ran no cases");
    }
}
