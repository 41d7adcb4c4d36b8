use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_urtetrad"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn reals(v: &Value) -> Vec<f64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect()
}

fn pairs(v: &Value) -> Vec<[f64; 2]> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|p| [p[0].as_f64().unwrap(), p[1].as_f64().unwrap()])
        .collect()
}

#[test]
fn real_tetrad_at_identity() {
    let out = run(&["tetrad", "--quat", "1", "0", "0", "0", "--real"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["kind"], "real");
    assert_eq!(reals(&doc["t"]), [1.0, 0.0, 0.0, 0.0]);
    assert_eq!(reals(&doc["z"]), [0.0, 0.0, 0.0, -1.0]);
    assert_eq!(reals(&doc["x"]), [0.0, 1.0, 0.0, 0.0]);
    assert_eq!(reals(&doc["y"]), [0.0, 0.0, -1.0, 0.0]);
    assert!(doc["convention"]
        .as_str()
        .unwrap()
        .contains("diag(-1, 1, 1, 1)"));
}

#[test]
fn null_tetrad_at_identity() {
    let out = run(&[
        "tetrad", "--a", "1", "0", "--b", "0", "0", "--phi", "0", "--null",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert_eq!(
        pairs(&doc["m"]),
        [[h, 0.0], [0.0, 0.0], [0.0, 0.0], [-h, 0.0]]
    );
    assert_eq!(
        pairs(&doc["n"]),
        [[h, 0.0], [0.0, 0.0], [0.0, 0.0], [h, 0.0]]
    );
    assert_eq!(
        pairs(&doc["l"]),
        [[0.0, 0.0], [h, 0.0], [0.0, h], [0.0, 0.0]]
    );
    assert_eq!(
        pairs(&doc["l_star"]),
        [[0.0, 0.0], [h, 0.0], [0.0, -h], [0.0, 0.0]]
    );
    assert_eq!(reals(&doc["input"]["a"]), [1.0, 0.0]);
}

#[test]
fn negative_components_parse() {
    let h = format!("{}", std::f64::consts::FRAC_1_SQRT_2);
    let out = run(&[
        "tetrad",
        "--a",
        &h,
        "0",
        "--b",
        "0",
        &format!("-{h}"),
        "--real",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn tetrad_rejects_non_unit_input() {
    let out = run(&["tetrad", "--a", "1", "0", "--b", "1", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a unit"));
}

#[test]
fn tetrad_usage_errors() {
    assert_eq!(run(&["tetrad", "--real"]).status.code(), Some(2));
    assert_eq!(run(&["tetrad", "--a", "1", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["tetrad", "--quat", "1", "0", "zero", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["tetrad", "--quat", "1", "0", "0", "0", "--null", "--real"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fock_time_component_matrix() {
    let out = run(&["fock", "--cutoff", "1", "--op", "t0", "--matrix"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["dimension"], 5);
    let triplets = doc["triplets"].as_array().unwrap();
    let values: Vec<f64> = triplets.iter().map(|t| t["re"].as_f64().unwrap()).collect();
    assert_eq!(values, [2.0, 3.0, 3.0, 3.0, 3.0]);
    assert!(triplets
        .iter()
        .all(|t| t["row"] == t["col"] && t["im"].as_f64() == Some(0.0)));
    assert_eq!(doc["basis"][1], serde_json::json!([0, 0, 0, 1]));
}

#[test]
fn fock_coherent_expectation() {
    let out = run(&[
        "fock",
        "--cutoff",
        "12",
        "--op",
        "z3",
        "--expect-coherent",
        "1",
        "0",
        "0",
        "0",
        "0",
        "0.5",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert!((doc["expectation"].as_f64().unwrap() + 0.25).abs() < 1e-6);
    assert_eq!(doc["classical"].as_f64(), Some(-0.25));
    assert!(doc["difference"].as_f64().unwrap() < 1e-6);
}

#[test]
fn fock_tau_is_complex_valued() {
    let out = run(&[
        "fock",
        "--cutoff",
        "10",
        "--op",
        "tau",
        "1",
        "3",
        "--expect-coherent",
        "0.6",
        "0",
        "0",
        "0.8",
        "0.3",
        "0.4",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    let e = &doc["expectation"];
    let c = &doc["classical"];
    assert!((e[0].as_f64().unwrap() - c[0].as_f64().unwrap()).abs() < 1e-6);
    assert!((e[1].as_f64().unwrap() - c[1].as_f64().unwrap()).abs() < 1e-6);
}

#[test]
fn fock_vacuum_tau_is_empty() {
    let out = run(&["fock", "--cutoff", "0", "--op", "tau", "1", "2", "--matrix"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["triplets"], serde_json::json!([]));
}

#[test]
fn fock_errors() {
    assert_eq!(
        run(&["fock", "--cutoff", "1", "--op", "q7", "--matrix"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["fock", "--cutoff", "1", "--op", "tau", "1", "5", "--matrix"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["fock", "--cutoff", "1", "--op", "t0"]).status.code(),
        Some(2)
    );
    let lossy = run(&[
        "fock",
        "--cutoff",
        "2",
        "--op",
        "z3",
        "--expect-coherent",
        "1",
        "0",
        "0",
        "0",
        "0",
        "2",
    ]);
    assert_eq!(lossy.status.code(), Some(1));
}

#[test]
fn cosmos_examples() {
    let doc = json(&run(&["cosmos", "--r0", "1", "--c", "1", "--epoch", "2"]));
    assert_eq!(doc["radius"].as_f64(), Some(3.0));
    assert_eq!(doc["ur_count_reference"].as_f64(), Some(1e120));
    let doc = json(&run(&["cosmos", "--r0", "4.5", "--c", "2", "--epoch", "0"]));
    assert_eq!(doc["radius"].as_f64(), Some(4.5));
    assert_eq!(
        run(&["cosmos", "--r0", "1", "--c", "1", "--epoch", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_tetrad_suite() {
    let out = run(&[
        "verify",
        "--suite",
        "tetrad",
        "--samples",
        "1000",
        "--seed",
        "7",
        "--tol",
        "1e-12",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["seed"], 7);
    let metric = doc["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "tetrad.metric_reconstruction")
        .unwrap();
    assert_eq!(metric["samples"], 1000);
    assert!(metric["max_deviation"].as_f64().unwrap() < 1e-12);
}

#[test]
fn verify_fock_suite_at_cutoff_one() {
    let out = run(&[
        "verify",
        "--suite",
        "fock",
        "--cutoff",
        "1",
        "--samples",
        "20",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    let names: Vec<&str> = doc["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"fock.commutator_a_adag_safe_subspace"));
    assert!(doc["records"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["pass"] == true));
}

#[test]
fn verify_reports_failure_with_exit_one() {
    // Rounding alone exceeds a zero tolerance.
    let out = run(&[
        "verify",
        "--suite",
        "tetrad",
        "--samples",
        "50",
        "--tol",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["pass"], false);
}

#[test]
fn verify_rejects_bad_flags() {
    assert_eq!(run(&["verify", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--suite", "gravity"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--tol", "-1"]).status.code(), Some(2));
}
