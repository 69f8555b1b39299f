use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_quadlattice")).args(args).output().expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let json = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    (out.status.code().expect("exit code"), json)
}

fn raw(args: &[&str]) -> Vec<u8> {
    Command::new(env!("CARGO_BIN_EXE_quadlattice")).args(args).output().expect("binary runs").stdout
}

#[test]
fn eval_constant_member() {
    let (code, j) = run(&["eval", "--family", "racah", "--label", "0,0", "--point", "3/2,5/2"]);
    assert_eq!(code, 0);
    assert_eq!(j["result"]["value"], "1");
    assert_eq!(j["params"]["b0"], "1/5");
    assert_eq!(j["params"]["N"], "17/2");
    assert!(j["version"].as_str().unwrap().starts_with("quadlattice "));
    assert_eq!(j["tables"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn eval_accepts_gaussian_points() {
    let (code, j) = run(&["eval", "--family", "wilson", "--label", "1,0", "--point", "2i,1/2"]);
    assert_eq!(code, 0);
    assert!(j["result"]["value"].is_string());
}

#[test]
fn verify_pde_marks_every_label() {
    let (code, j) = run(&["verify-pde", "--family", "racah", "--max-total-degree", "3"]);
    assert_eq!(code, 0);
    assert_eq!(j["pass"], true);
    let labels = j["result"]["labels"].as_array().unwrap();
    assert_eq!(labels.len(), 10);
    assert!(labels.iter().all(|l| l["pass"] == true));
    let first = &j["result"]["residuals"][0];
    assert_eq!(first["value"], "0");
    assert!(first["point"][0].is_string());
}

#[test]
fn ttrr_reports_eigenvalues_and_matrices() {
    let (code, j) = run(&["ttrr", "--family", "cdh", "--n", "2"]);
    assert_eq!(code, 0);
    let eigen = j["result"]["eigenvalues"].as_array().unwrap();
    assert_eq!(eigen[2]["lambda"], "2");
    let step = &j["result"]["steps"][2];
    for key in ["A1", "A2", "B1", "B2", "C1", "C2", "Gnn", "Gn,n-1", "Gn,n-2", "Sn", "Tn"] {
        assert!(step.get(key).is_some(), "missing {key}");
    }
    assert!(j["result"]["sn_tn_diffs"].as_array().unwrap().is_empty());
}

#[test]
fn other_commands_pass_at_defaults() {
    for args in [
        &["verify-ladder", "--family", "ch-bar", "--max-total-degree", "2"][..],
        &["verify-second-order", "--family", "cdh", "--max-total-degree", "2"],
        &["verify-difference-form", "--family", "wilson-bar", "--max-total-degree", "2"],
        &["recover-coeffs", "--family", "racah"],
        &["generate", "--family", "racah-bar", "--kind", "family", "--n", "2"],
        &["generate", "--family", "ch", "--n", "2"],
        &["connect", "--family", "wilson", "--n", "2"],
        &["verify-trivariate", "--max-total-degree", "1"],
    ] {
        let (code, j) = run(args);
        assert_eq!(code, 0, "{args:?}: {j}");
        assert_eq!(j["pass"], true, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-pde", "--family", "ch", "--max-total-degree", "2", "--seed", "11"];
    assert_eq!(raw(&args), raw(&args));
    let other = ["verify-pde", "--family", "ch", "--max-total-degree", "2", "--seed", "12"];
    assert_ne!(raw(&args), raw(&other));
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("quadlattice-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_quadlattice"))
        .args(["eval", "--label", "1,1", "--point", "3/2,5/2", "--out", p])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(j["command"], "eval");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn degenerate_parameters_exit_2() {
    let (code, j) = run(&["verify-pde", "--param", "b0=2/3", "--param", "b1=2/3"]);
    assert_eq!(code, 2);
    assert_eq!(j["result"]["error"]["kind"], "degenerate-parameters");
    assert_eq!(j["params"]["b1"], "2/3");
    // eigenvalue collision in the recurrence
    let (code, _) = run(&["ttrr", "--family", "racah", "--param", "b3=1/5"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["verify-pde", "--param", "b3=x"][..],
        &["verify-pde", "--param", "zz=1"],
        &["verify-pde", "--grid-size", "2"],
        &["connect", "--family", "cdh"],
        &["eval", "--label", "1,1,1", "--point", "1,2"],
        &["verify-second-order", "--family", "ch"],
    ] {
        let (code, j) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(j["pass"], false);
    }
    let status = Command::new(env!("CARGO_BIN_EXE_quadlattice")).arg("no-such-command").output().unwrap().status;
    assert_eq!(status.code(), Some(1));
}
