//! End-to-end tests of the `hessmap` binary: argument handling, exit codes,
//! JSON output shapes, and file round trips.

use std::process::{Command, Output};

fn hessmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hessmap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn hessian_text_and_json() {
    let out = hessmap(&["hessian", "--input", "x1^3 + x2^3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("H(f) = 36*x1*x2"));

    let out = hessmap(&["hessian", "--input", "x1^3 + x2^3", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["hessian"]["terms"][0]["coeff"], "36");
    assert_eq!(v["report"]["is_question1_shape"], true);
}

#[test]
fn kayal_exit_codes() {
    let eq = hessmap(&["kayal", "--input", "2*x1^3 + 6*x1*x2^2", "--json"]);
    assert_eq!(eq.status.code(), Some(0));
    let v = stdout_json(&eq);
    assert_eq!(v["status"], "Equivalent");
    assert_eq!(v["forms"].as_array().unwrap().len(), 2);

    let rej = hessmap(&["kayal", "--input", "x1^2*x2^2 + x3^4"]);
    assert_eq!(rej.status.code(), Some(1));

    let inc = hessmap(&["kayal", "--input", "2*x1^3 + 12*x1*x2^2"]);
    assert_eq!(inc.status.code(), Some(2));

    let zero = hessmap(&["kayal", "--input", "x1^3", "--nvars", "2"]);
    assert_eq!(zero.status.code(), Some(1));
}

#[test]
fn kayal_with_candidate_forms() {
    // g = (x1+x2)^3 + (x2+x3)^3 + (x1+x3)^3
    let g = "2*x1^3 + 3*x1^2*x2 + 3*x1^2*x3 + 3*x1*x2^2 + 3*x1*x3^2 \
             + 2*x2^3 + 3*x2^2*x3 + 3*x2*x3^2 + 2*x3^3";
    let ok = hessmap(&[
        "kayal",
        "--input",
        g,
        "--candidates",
        "x1 + x2; x2 + x3; x1 + x3",
        "--json",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let v = stdout_json(&ok);
    assert_eq!(v["status"], "Equivalent");
    assert!(v["forms"].as_array().unwrap().iter().all(|f| f["alpha"] == "1"));

    // without candidates the trivariate non-monomial case is inconclusive
    let inc = hessmap(&["kayal", "--input", g]);
    assert_eq!(inc.status.code(), Some(2));

    // wrong candidate count is a usage error
    let bad = hessmap(&["kayal", "--input", g, "--candidates", "x1 + x2; x3"]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    let missing = hessmap(&["hessian"]);
    assert_eq!(missing.status.code(), Some(3));
    let unparseable = hessmap(&["hessian", "--input", "x0 + 1"]);
    assert_eq!(unparseable.status.code(), Some(3));
    let unknown = hessmap(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(3));
    let help = hessmap(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn budget_exit_code() {
    let out = hessmap(&[
        "explore",
        "--input",
        r#"{"nvars":4,"degree":8,"coeffs":[1,2],"support_budget":40}"#,
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn classify_and_counterexample() {
    let odd = hessmap(&["classify-binary", "--input", "7", "--json"]);
    let v = stdout_json(&odd);
    assert_eq!(v["verdict"], "NoSingularSolutions");
    assert_eq!(v["family"], serde_json::Value::Null);

    let even = hessmap(&["classify-binary", "--input", "6", "--json"]);
    let v = stdout_json(&even);
    assert_eq!(v["verdict"], "CentralMonomialFamily");
    assert_eq!(v["family"], "a*x1^3*x2^3");

    let ce = hessmap(&["counterexample", "--input", r#"{"n":3,"d":4,"q":2}"#, "--json"]);
    assert_eq!(ce.status.code(), Some(0));
    let v = stdout_json(&ce);
    assert_eq!(v["alpha"], "-144");
    assert_eq!(v["pass"], true);
    assert_eq!(v["spec"]["k"], 2);

    // invalid family parameters are usage errors
    let bad = hessmap(&["counterexample", "--input", r#"{"n":2,"d":3,"q":2}"#]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn kernel_json_shape() {
    let out = hessmap(&["kernel", "--input", "x1^4*x2^4", "--json"]);
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["basis"][0]["terms"][0]["exp"], serde_json::json!([6, 2]));
}

#[test]
fn file_input_and_output() {
    let dir = std::env::temp_dir().join(format!("hessmap-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("f.txt");
    let output = dir.join("h.json");
    std::fs::write(&input, "x1^4 + x2^4\n").unwrap();
    let out = hessmap(&[
        "hessian",
        "--input",
        input.to_str().unwrap(),
        "--json",
        "--out",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(v["report"]["alpha"], "144");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_poly_input_accepted() {
    let poly = r#"{"nvars":2,"scalar":"rational","terms":[{"exp":[3,0],"coeff":"1"},{"exp":[0,3],"coeff":"1"}]}"#;
    let out = hessmap(&["hessian", "--input", poly]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("36*x1*x2"));
}

#[test]
fn invariants_and_jacobian() {
    let inv = hessmap(&[
        "invariants",
        "--input",
        r#"{"d":4,"e":2,"n":2}"#,
        "--degree",
        "4",
        "--json",
    ]);
    let v = stdout_json(&inv);
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);

    let jac = hessmap(&["jacobian", "--input", "x1^4 + x2^4", "--json"]);
    let v = stdout_json(&jac);
    assert_eq!(v["smoothness"]["is_smooth"], true);
    assert_eq!(v["standard_monomial_count"], 9);
}

#[test]
fn verify_paper_runs_clean() {
    let out = hessmap(&["verify-paper", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let items = v.as_array().unwrap();
    assert!(items.len() >= 80);
    assert!(items.iter().all(|i| i["pass"] == true));
    // two runs are byte-identical
    let again = hessmap(&["verify-paper", "--json"]);
    assert_eq!(out.stdout, again.stdout);

    let md = hessmap(&["verify-paper"]);
    let text = String::from_utf8_lossy(&md.stdout);
    assert!(text.starts_with("# Verification report"));
    assert!(text.contains("checks passed"));
}

#[test]
fn dhess_and_explore() {
    let out = hessmap(&[
        "dhess",
        "--input",
        "x1^3 + x2^3",
        "--g",
        "x1^3 + x2^3",
    ]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("72*x1*x2"));

    let ex = hessmap(&[
        "explore",
        "--input",
        r#"{"nvars":2,"degree":4,"coeffs":["-1","0","1"],"support_budget":5}"#,
        "--json",
    ]);
    let v = stdout_json(&ex);
    let hits = v.as_array().unwrap();
    assert!(!hits.is_empty());
    assert!(hits.iter().all(|h| h["hessian_report"]["is_monomial"] == true));
}
