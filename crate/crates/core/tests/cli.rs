//! Golden output and exit codes of the `mocktheta` binary.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mocktheta"))
        .args(args)
        .env_remove("MOCKTHETA_ORDER")
        .env_remove("MOCKTHETA_ORDER_BI")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn series_text() {
    assert_eq!(stdout_of(&["series", "gauss", "--order", "10"]), "-q + q^4 - q^9\n");
    assert_eq!(stdout_of(&["series", "f", "--order", "3"]), "1 + q - 2q^2 + 3q^3\n");
    assert_eq!(stdout_of(&["series", "phi_alpha", "--twisted", "--order", "2"]), "1 - q\n");
    assert_eq!(stdout_of(&["series", "phi_alpha", "--twisted", "--order", "5"]), "1 - q + (α)q^3 + q^4 + (-α^2)q^5\n");
    assert_eq!(stdout_of(&["series", "poch:(-aq;q)_inf", "--order", "3"]), "1 + (α)q + (α)q^2 + (α + α^2)q^3\n");
}

#[test]
fn series_json() {
    assert_eq!(stdout_of(&["--format", "json", "series", "f", "--order", "3"]), "{\"order\":3,\"coeffs\":[1,1,-2,3]}\n");
    let bi = stdout_of(&["series", "f_alpha", "--order", "2", "--format", "json"]);
    assert!(bi.starts_with("{\"order\":2,\"coeffs\":[[1]"), "{bi}");
}

#[test]
fn series_env_order() {
    let out = Command::new(env!("CARGO_BIN_EXE_mocktheta"))
        .args(["series", "gauss"])
        .env("MOCKTHETA_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "-q + q^4\n");
}

#[test]
fn series_errors() {
    assert_eq!(run(&["series", "nope", "--order", "3"]).0, 2);
    assert_eq!(run(&["series", "f", "--order", "0"]).0, 2);
    assert_eq!(run(&["series", "f", "--bogus"]).0, 2);
}

#[test]
fn verify_codes() {
    let (code, out, _) = run(&["verify", "--id", "R1", "--order", "50"]);
    assert_eq!(code, 0);
    assert_eq!(out, "R1          order  50  pass\n1 checked, 0 failed\n");
    let (code, _, err) = run(&["verify", "--id", "NOPE"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown identity `NOPE`"), "{err}");
    assert_eq!(run(&["verify"]).0, 2);
}

#[test]
fn verify_all_json() {
    let (code, out, _) = run(&["--format", "json", "verify", "--all", "--order", "20", "--order-bi", "10"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("\"status\":\"pass\"").count(), 24);
    assert!(out.contains("{\"id\":\"RG1\",\"order\":10,\"status\":\"pass\""));
}

#[test]
fn audit_tables() {
    let phi = stdout_of(&["audit", "phi", "--n-max", "7"]);
    assert!(phi.lines().any(|l| l == "  7       11      10        1         0          0"), "{phi}");
    assert!(phi.ends_with("ok\n"));
    let ups = stdout_of(&["audit", "upsilon", "--n-max", "4"]);
    assert!(ups.lines().any(|l| l == "  4       14      12        0         2          0"), "{ups}");
    let psi = stdout_of(&["audit", "psi", "--n-max", "0"]);
    assert!(psi.lines().any(|l| l == "  0        0       0        0         0          0"), "{psi}");
}

#[test]
fn audit_elements_are_stable() {
    let a = stdout_of(&["audit", "psi", "--n-max", "4", "--elements"]);
    let b = stdout_of(&["audit", "psi", "--n-max", "4", "--elements"]);
    assert_eq!(a, b);
    assert!(a.contains("((1),(3,0))  excluded-merge  companion (3,1)\n"));
    assert!(a.contains("((3,1),∅)  excluded-staircase\n"));
    assert!(a.contains("((1),(3))  Psi-II-b  -> ((3,1),(0))\n"));
}

#[test]
fn traces() {
    assert_eq!(
        stdout_of(&["trace", "psi", "--lam", "9,7,5,3,1", "--mu", "16,15,8,6,2"]),
        "psi ((9,7,5,3,1),(16,15,8,6,2))\n  outcome: Paired\n  case: Psi-III-a\n  image: ((7,5,3,1),(16,15,11,8,6))\n  round trip: ok\n"
    );
    assert_eq!(
        stdout_of(&["trace", "phi", "--lam", "1", "--mu", "5,1"]),
        "phi ((1),(5,1))\n  outcome: Excluded\n  case: excluded-merge\n  companion: (5,2)\n"
    );
    let t = stdout_of(&["trace", "psi", "--lam", "1", "--mu", "3"]);
    assert!(t.contains("outcome: Paired") && t.contains("image: ((3,1),(0))"), "{t}");
    let zero = stdout_of(&["trace", "psi", "--lam", "1", "--mu", "3", "--mu-zero"]);
    assert_eq!(zero, stdout_of(&["trace", "psi", "--lam", "1", "--mu", "3,0"]));
    let json = stdout_of(&["--format", "json", "trace", "phi", "--lam", "1", "--mu", "5,1"]);
    assert!(json.contains("\"companion\":\"(5,2)\""), "{json}");
}

#[test]
fn trace_domain_errors() {
    let (code, _, err) = run(&["trace", "phi", "--lam", "2", "--mu", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("not in DO"), "{err}");
    let (code, _, err) = run(&["trace", "psi", "--lam", "3", "--mu", ""]);
    assert_eq!(code, 2);
    assert!(err.contains("not in OC"), "{err}");
}

#[test]
fn enumerations() {
    assert_eq!(stdout_of(&["enumerate", "Pdo", "--n", "4"]), "Pdo n=4 count 1\n(3,1)\n");
    assert_eq!(stdout_of(&["enumerate", "D0", "--n", "2"]), "D0 n=2 count 2\n(2)\n(2,0)\n");
    let oc = stdout_of(&["enumerate", "OC", "--n", "4"]);
    assert!(oc.contains("(1,1,1,1)\n") && oc.contains("(3,1)\n") && oc.starts_with("OC n=4 count 2\n"));
    assert_eq!(
        stdout_of(&["--format", "json", "enumerate", "D0", "--n", "2"]),
        "{\"class\":\"D0\",\"n\":2,\"count\":2,\"partitions\":[\"(2)\",\"(2,0)\"]}\n"
    );
    assert_eq!(run(&["enumerate", "XX", "--n", "2"]).0, 2);
}
