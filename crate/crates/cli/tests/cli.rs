//! End-to-end tests of the `refacto` binary: exit codes, output schemas,
//! and determinism.

use std::process::{Command, Output};

fn refacto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_refacto"))
        .args(args)
        .env_remove("REFACTO_WORK_LIMIT")
        .env_remove("REFACTO_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_both_engines_match() {
    let out = refacto(&[
        "count", "--group", "g_d1n", "--d", "2", "--n", "3", "--k", "2", "--engine", "both",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["verdict"], "MATCH");
    assert_eq!(json["query"]["group"], "G(2,1,3)");
    let results = json["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["polynomial"], results[1]["polynomial"]);
    // coefficients are decimal strings
    assert!(results[0]["polynomial"][0]["coefficient"].is_string());
}

#[test]
fn count_is_deterministic() {
    let args = [
        "count", "--group", "g_ddn", "--d", "3", "--n", "3", "--k", "2", "--transitivity",
        "transitive", "--engine", "both",
    ];
    let a = refacto(&args);
    let b = refacto(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn count_k1_is_trivial() {
    let out = refacto(&[
        "count", "--group", "g_d1n", "--d", "3", "--n", "2", "--k", "1", "--engine", "both",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let poly = json["results"][0]["polynomial"].as_array().unwrap();
    assert_eq!(poly.len(), 1);
    assert_eq!(poly[0]["exponents"], serde_json::json!([0]));
    assert_eq!(poly[0]["coefficient"], "1");
}

#[test]
fn count_jackson_formula_emits_polynomial() {
    let out = refacto(&[
        "count", "--group", "sym", "--n", "4", "--k", "2", "--engine", "formula", "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("engine,key,value"));
    // coefficients over all terms sum to n! = 24
    let total: i64 = lines
        .map(|l| l.rsplit(',').next().unwrap().parse::<i64>().unwrap())
        .sum();
    assert_eq!(total, 24);
}

#[test]
fn count_weight_dist_matches() {
    let out = refacto(&[
        "count", "--group", "g_d1n", "--d", "2", "--n", "2", "--k", "2", "--classify",
        "weight-dist", "--engine", "both",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["verdict"], "MATCH");
}

#[test]
fn verify_suites_pass() {
    for suite in ["recurrence-Ms", "alt-nc", "rank2"] {
        let out = refacto(&["verify", suite]);
        assert!(out.status.success(), "{suite} failed");
        let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert!(json.as_array().unwrap().iter().all(|r| r["pass"] == true));
    }
    // the all-weights suite records the extraction-variant note
    let out = refacto(&["verify", "all-weights"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("extraction"));
}

#[test]
fn tables_list_and_show() {
    let out = refacto(&["tables", "list", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["G4", "G21", "G23", "G25", "G27", "G32"] {
        assert!(text.contains(name), "missing {name}");
    }
    assert_eq!(text.lines().count(), 18);

    let out = refacto(&["tables", "show", "G4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("entry dim=1 chi=1 f=24*P2 + 48*P1 + 24"));
}

#[test]
fn tables_check_rejects_corruption() {
    let dir = std::env::temp_dir();
    let good = dir.join("refacto_cli_test_g4.ct");
    let show = refacto(&["tables", "show", "G4"]);
    std::fs::write(&good, stdout(&show)).unwrap();
    let out = refacto(&["tables", "check", good.to_str().unwrap()]);
    assert!(out.status.success());

    let bad = dir.join("refacto_cli_test_g4_bad.ct");
    let corrupted = stdout(&show).replace("f=24*P2 + 48*P1 + 24", "f=24*P2 + 47*P1 + 24");
    std::fs::write(&bad, corrupted).unwrap();
    let out = refacto(&["tables", "check", bad.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("f_triv"), "names the failed invariant");
}

#[test]
fn usage_errors_exit_2() {
    // missing --d for a wreath family
    let out = refacto(&["count", "--group", "g_d1n", "--n", "2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // raising the work limit needs explicit acknowledgment
    let out = refacto(&[
        "count", "--group", "g_d1n", "--d", "2", "--n", "2", "--k", "2", "--work-limit",
        "200000000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("accept-large-budget"));

    // unknown suite
    let out = refacto(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}
