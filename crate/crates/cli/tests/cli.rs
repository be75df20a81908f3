//! End-to-end behavior of the command-line interface: documented
//! examples, exit codes, JSON shape, and byte-level determinism.

use gwweyl::run;

fn ok(args: &[&str]) -> String {
    let out = run(args.iter().copied());
    assert_eq!(out.code, 0, "args {args:?}: stderr {}", out.stderr);
    out.stdout
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["gwweyl", "sign", "--type", "C3", "--weight", "0,1,0"]), "+1\n");
    assert_eq!(ok(&["gwweyl", "tensor", "--type", "A1", "--x", "1", "--y", "1"]), "E_2 + E_0\n");
    assert_eq!(ok(&["gwweyl", "torsor-lift", "--n", "3"]), "OK\n");
}

#[test]
fn exit_codes() {
    // unknown subcommand is a usage error
    assert_eq!(run(["gwweyl", "frobnicate"]).code, 2);
    // bad flag value is a usage error
    assert_eq!(run(["gwweyl", "dim", "--type", "C2", "--weight", "1,0", "--format", "yaml"]).code, 2);
    // well-formed request that fails mathematically is a computation error
    let out = run(["gwweyl", "dim", "--type", "C2", "--weight", "-1,0", "--basis", "eps"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("dominant"));
    // precision cap is enforced
    assert_eq!(run(["gwweyl", "complete", "--r", "2", "--precision", "11"]).code, 2);
    // help goes to stdout and succeeds
    let help = run(["gwweyl", "--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify-all"));
}

#[test]
fn json_is_versioned_and_echoes_both_bases() {
    let text = ok(&["gwweyl", "dim", "--type", "C2", "--weight", "0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["weight"]["fund"], serde_json::json!([0, 1]));
    assert_eq!(v["weight"]["eps"], serde_json::json!([1, 1]));
    assert_eq!(v["dimension"], "5");
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "gwweyl", "tensor", "--type", "C3", "--x", "1,1,0", "--y", "1,0,0", "--format", "json",
    ];
    let first = ok(&args);
    let second = ok(&args);
    assert_eq!(first.as_bytes(), second.as_bytes());

    let report = ["gwweyl", "as-map", "--r", "2", "--precision", "5", "--format", "json"];
    assert_eq!(ok(&report).as_bytes(), ok(&report).as_bytes());
}

#[test]
fn basis_flag_changes_weight_interpretation() {
    // omega_2 of C2 is (0,1) in fundamental and (1,1) in epsilon coordinates
    let from_fund = ok(&["gwweyl", "dim", "--type", "C2", "--weight", "0,1"]);
    let from_eps = ok(&["gwweyl", "dim", "--type", "C2", "--weight", "1,1", "--basis", "eps"]);
    assert_eq!(from_fund, from_eps);
}

#[test]
fn coeff_model_flag_switches_coefficients() {
    let split = ok(&["gwweyl", "augment", "--type", "C2", "--x", "1|0,1"]);
    let real = ok(&["gwweyl", "augment", "--type", "C2", "--x", "1|0,1", "--coeff-model", "real"]);
    // Lambda^2 restricts to 2H+ + 2: models render H+ differently
    assert_eq!(split.trim(), "6");
    assert_eq!(real.trim(), "4 + 2*e");
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let dir = std::env::temp_dir().join("gwweyl-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.toml");
    std::fs::write(&path, "coeff-model = \"real\"\nformat = \"json\"\n").unwrap();
    let cfg = path.to_str().unwrap();

    let from_file = ok(&["gwweyl", "augment", "--type", "C2", "--x", "1|0,1", "--config", cfg]);
    let v: serde_json::Value = serde_json::from_str(&from_file).unwrap();
    assert_eq!(v["model"], "real");

    let overridden = ok(&[
        "gwweyl", "augment", "--type", "C2", "--x", "1|0,1", "--config", cfg, "--format", "text",
        "--coeff-model", "split",
    ]);
    assert_eq!(overridden.trim(), "6");
}

#[test]
fn restrict_matches_closed_forms() {
    let sym = ok(&["gwweyl", "restrict", "--r", "3", "--k", "3", "--symfun"]);
    assert_eq!(sym.trim(), "(2)*s1 + (1)*s3");
    let borel = ok(&["gwweyl", "restrict", "--r", "2", "--k", "2", "--vars", "b"]);
    assert_eq!(borel.trim(), "(1)*b1*b2 + (1*Hm)*b1 + (1*Hm)*b2 + (6)");
}
