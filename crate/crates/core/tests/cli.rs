use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maximin"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_mixed_game_with_rules() {
    let path = fixture("mixed_maximin_3x3.json");
    let out = run(&["analyze", path.to_str().unwrap(), "--rules", "nash,maximin,minimax"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_eq!(doc["security_levels"][0]["exact"], "11/2");
    assert_eq!(doc["maximin"][0]["vertices"][0]["exact"], serde_json::json!(["0", "5/8", "3/8"]));
    assert_eq!(doc["equilibria"]["extreme"][0]["profile"]["player_1"]["exact"], serde_json::json!(["1/2", "1/4", "1/4"]));
    let induced = &doc["rule_dynamics"]["induced_game"]["payoffs"];
    assert_eq!(induced[1][1], serde_json::json!(["49/8", "49/8"]));
    assert_eq!(induced[0][1], serde_json::json!(["45/8", "23/4"]));
    let evo = &doc["rule_dynamics"]["evolution"];
    assert_eq!(evo["a"]["holds"], true);
    assert_eq!(evo["ess_m"], true);
    assert_eq!(evo["ess_n"], false);
    assert_eq!(doc["propositions"]["failed"], 0);
}

#[test]
fn analyze_flags_unprofitable_game() {
    let path = fixture("unprofitable_2x2.json");
    let doc = json(&run(&["analyze", path.to_str().unwrap()]));
    assert_eq!(doc["unprofitable"], true);
    assert_eq!(doc["equilibria"]["extreme"][0]["attains_security"], serde_json::json!([true, true]));
}

#[test]
fn analyze_with_pure_rules_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let path = fixture("ordinal_maximin_3x3.json");
    let out = run(&["analyze", path.to_str().unwrap(), "--rules", "nash=y,maximin=z", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(out_path).unwrap()).unwrap();
    let evo = &doc["rule_dynamics"]["evolution"];
    assert_eq!(evo["d"]["holds"], false);
    assert_eq!(evo["ess_m"], true);
    assert_eq!(evo["ess_n"], true);
    assert_eq!(doc["pure_dominance"]["maximin_dominates_all_equilibria"], true);
}

#[test]
fn malformed_payoff_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"actions_1":["T","B"],"actions_2":["L"],"payoffs":[[["1","2"]],[["3/0","1"]]]}"#).unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("row 2 (B), column 1 (L)"), "{err}");
}

#[test]
fn missing_file_and_bad_rule_exit_2() {
    assert_eq!(run(&["analyze", "/nonexistent/game.json"]).status.code(), Some(2));
    let path = fixture("chicken.json");
    assert_eq!(run(&["analyze", path.to_str().unwrap(), "--rules", "optimin"]).status.code(), Some(2));
}

#[test]
fn injected_fault_exits_3() {
    let path = fixture("chicken.json");
    assert_eq!(run(&["--inject-fault", "analyze", path.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(run(&["--inject-fault", "classics"]).status.code(), Some(3));
}

#[test]
fn extend_seed_with_printed_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("extended.json");
    let seed = fixture("extension_seed_2x2.json");
    let params = r#"{"l":["-2","-2"],"rho":["0","0"],"n":["2","2"],"h":["3","3"],"H":["5","5"]}"#;
    let out = run(&["extend", seed.to_str().unwrap(), "--mode", "maximin", "--params", params, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let cert = json(&out);
    assert_eq!(cert["holds"], true);
    let written = maximin_core::format::read_game(&out_path).unwrap();
    assert_eq!(written, maximin_core::fixtures::extension_seed_5x5());
}

#[test]
fn extend_equilibrium_mode_keeps_maximin_faces() {
    let path = fixture("prisoners_dilemma.json");
    let out = run(&["extend", path.to_str().unwrap(), "--mode", "equilibrium"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let clauses = doc["certificate"]["clauses"].as_array().unwrap();
    let faces = clauses.iter().find(|c| c["name"] == "maximin_faces_unchanged").unwrap();
    assert_eq!(faces["holds"], true);
    assert_eq!(doc["game"]["payoffs"][2][2], serde_json::json!(["5", "5"]));
}

#[test]
fn extend_rejects_bad_ordering() {
    let seed = fixture("extension_seed_2x2.json");
    let params = r#"{"l":[0,0],"rho":[0,0],"n":[2,2],"h":[3,3],"H":[5,5]}"#;
    let out = run(&["extend", seed.to_str().unwrap(), "--mode", "maximin", "--params", params]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["extend", seed.to_str().unwrap(), "--mode", "maximin", "--params", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_is_thread_independent() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for (dir, threads) in [(&a, "1"), (&b, "8")] {
        let out = run(&["census", "--out", dir.path().to_str().unwrap(), "--threads", threads, "--raw"]);
        assert_eq!(out.status.code(), Some(0));
    }
    for name in ["table1.csv", "table2.csv", "raw_counts.csv"] {
        let x = std::fs::read(a.path().join(name)).unwrap();
        let y = std::fs::read(b.path().join(name)).unwrap();
        assert_eq!(x, y, "{name}");
    }
    let t1 = std::fs::read_to_string(a.path().join("table1.csv")).unwrap();
    assert!(t1.contains("0,4480,7.41") && t1.contains("3,8960,14.81"));
    let t2 = std::fs::read_to_string(a.path().join("table2.csv")).unwrap();
    assert!(t2.starts_with("statistic,1 NE,2 NE,3 NE,has NE\n"));
    assert!(t2.contains("Some NE strictly dominates maximin profile,23.42,70.22,75.69,54.25"));
}

#[test]
fn classics_exit_0() {
    let out = run(&["classics"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("Battle of the Sexes"));
    assert!(text.contains("maximin: (1/3, 2/3): 2/3, 2/3"));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn reports_are_deterministic() {
    let path = fixture("coordination_failure_5x5.json");
    let a = run(&["analyze", path.to_str().unwrap()]);
    let b = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}
