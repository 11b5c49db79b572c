//! End-to-end runs of the command-line verbs and the JSON round trips.

use std::path::{Path, PathBuf};

use coringlab::algebra::{parse_presentation, realize};
use coringlab::bar::tor_bialgebra;
use coringlab::cli::run;
use coringlab::io::{from_json, ResultEnvelope, StableCoringJson, TorHopfJson};
use coringlab::stable::shifted_subgroup_coring;
use coringlab::Error;
use serde_json::Value;
use tempfile::TempDir;

fn cli(args: &[&str]) -> i32 {
    run(std::iter::once("coringlab").chain(args.iter().copied()))
}

fn load(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn out(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn tor_dims(envelope: &Value, n: usize) -> Vec<usize> {
    let mut dims = vec![0; n + 1];
    for b in envelope["payload"]["data"]["basis"].as_array().unwrap() {
        dims[b["hdeg"].as_u64().unwrap() as usize] += 1;
    }
    dims
}

fn failing_axioms(envelope: &Value) -> Vec<String> {
    envelope["report"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] != "pass")
        .map(|e| e["axiom"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn tor_of_the_plane() {
    let dir = TempDir::new().unwrap();
    let path = out(&dir, "out.json");
    let code = cli(&["tor", "--ring", "Q[x,y]", "--max-degree", "4", "--check", "hopf", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let env = load(&path);
    assert_eq!(tor_dims(&env, 4), vec![1, 2, 1, 0, 0]);
    assert_eq!(env["convention"], "homological");
    assert!(failing_axioms(&env).is_empty());
    assert!(env["report"].as_array().unwrap().iter().any(|e| e["axiom"] == "left antipode law"));
}

#[test]
fn shifted_subgroup_at_two() {
    let dir = TempDir::new().unwrap();
    let path = out(&dir, "c.json");
    assert_eq!(cli(&["shifted", "--p", "2", "--r", "3", "--point", "1,0,1", "--out", path.to_str().unwrap()]), 0);
    let env = load(&path);
    assert_eq!(env["payload"]["kind"], "stable_coring");
    assert_eq!(env["payload"]["data"]["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn tampered_constant_is_reported() {
    let dir = TempDir::new().unwrap();
    let good = out(&dir, "c.json");
    assert_eq!(cli(&["shifted", "--p", "2", "--r", "2", "--point", "1,1", "--out", good.to_str().unwrap()]), 0);
    assert_eq!(cli(&["check", "--in", good.to_str().unwrap()]), 0);

    let mut env = load(&good);
    let mult = env["payload"]["data"]["bialgebra"]["mult"].as_array_mut().unwrap();
    let entry = mult.first_mut().unwrap().as_array_mut().unwrap();
    let last = entry.len() - 1;
    entry[last] = Value::from(0);
    let tampered = out(&dir, "tampered.json");
    std::fs::write(&tampered, serde_json::to_string(&env).unwrap()).unwrap();
    let rechecked = out(&dir, "rechecked.json");
    assert_eq!(cli(&["check", "--in", tampered.to_str().unwrap(), "--out", rechecked.to_str().unwrap()]), 2);
    let failed = failing_axioms(&load(&rechecked));
    assert!(failed.iter().any(|a| a.starts_with("bialgebra: ")), "{failed:?}");
}

#[test]
fn stale_reports_are_flagged() {
    let dir = TempDir::new().unwrap();
    let path = out(&dir, "t.json");
    assert_eq!(cli(&["tor", "--ring", "GF(2)[x]/(x^2)", "--max-degree", "3", "--out", path.to_str().unwrap()]), 0);
    let mut env = load(&path);
    env["report"].as_array_mut().unwrap().pop();
    std::fs::write(&path, serde_json::to_string(&env).unwrap()).unwrap();
    assert_eq!(cli(&["check", "--in", path.to_str().unwrap()]), 2);
}

#[test]
fn identical_command_lines_give_identical_payloads() {
    let dir = TempDir::new().unwrap();
    let runs: [&[&str]; 4] = [
        &["tor", "--ring", "GF(3)[x]/(x^3)", "--max-degree", "4"],
        &["descend", "--battery", "3"],
        &["extract", "--spec", "SPEC", "--battery", "2"],
        &["galois", "--field", "GF(4)"],
    ];
    let spec = out(&dir, "spec.json");
    std::fs::write(&spec, r#"{"rings": ["GF(2)", "GF(2)[x]/(x^2)"], "maps": [{"from": 0, "to": 1, "images": []}], "pattern": "FU"}"#).unwrap();
    for (i, args) in runs.iter().enumerate() {
        let mut texts = Vec::new();
        for round in 0..2 {
            let path = out(&dir, &format!("{i}-{round}.json"));
            let mut argv: Vec<&str> = args.iter().map(|a| if *a == "SPEC" { spec.to_str().unwrap() } else { a }).collect();
            argv.extend(["--seed", "11", "--out", path.to_str().unwrap()]);
            assert_eq!(cli(&argv), 0, "{argv:?}");
            let mut env = load(&path);
            env.as_object_mut().unwrap().remove("timing");
            texts.push(serde_json::to_string(&env).unwrap());
        }
        assert_eq!(texts[0], texts[1], "{args:?}");
    }
}

#[test]
fn usage_and_parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let path = out(&dir, "x.json");
    assert_eq!(cli(&["tor", "--ring", "Q[x]/(x-1)", "--out", path.to_str().unwrap()]), 1);
    assert_eq!(cli(&["shifted", "--p", "2", "--r", "2", "--point", "0,0"]), 1);
    assert_eq!(cli(&["frobnicate"]), 1);
    assert_eq!(cli(&["check", "--in", path.to_str().unwrap()]), 1);
    assert!(!path.exists());
}

#[test]
fn config_files_supply_flags() {
    let dir = TempDir::new().unwrap();
    let config = out(&dir, "config.json");
    std::fs::write(&config, r#"{"ring": "Q[x]", "max-degree": 3}"#).unwrap();
    let path = out(&dir, "t.json");
    assert_eq!(cli(&["--config", config.to_str().unwrap(), "--out", path.to_str().unwrap(), "tor"]), 0);
    let env = load(&path);
    assert_eq!(tor_dims(&env, 3), vec![1, 1, 0, 0]);
    assert_eq!(env["inputs"]["ring"], "Q[x]");

    std::fs::write(&config, r#"{"ring": "Q[x]", "colour": 3}"#).unwrap();
    assert_eq!(cli(&["--config", config.to_str().unwrap(), "tor"]), 1);
}

#[test]
fn tor_round_trip() {
    let a = realize(&parse_presentation("GF(3)[x,y]/(x^3)").unwrap(), 6).unwrap();
    let t = tor_bialgebra(&a, 3).unwrap();
    let text = serde_json::to_string(&TorHopfJson::encode(&t)).unwrap();
    let back = from_json::<TorHopfJson>(&text).unwrap().decode("").unwrap();
    assert_eq!(back.hopf, t.hopf);
    assert_eq!(back.bidegrees, t.bidegrees);
    assert_eq!(back.representatives, t.representatives);
    assert_eq!((back.n_max, back.d_max), (t.n_max, t.d_max));
}

#[test]
fn stable_coring_round_trip() {
    for (p, r, point) in [(2, 3, vec![1, 0, 1]), (3, 2, vec![1, 2])] {
        let s = shifted_subgroup_coring(p, r, &point).unwrap();
        let text = serde_json::to_string(&StableCoringJson::encode(&s)).unwrap();
        let back = from_json::<StableCoringJson>(&text).unwrap().decode("").unwrap();
        assert_eq!(back, s);
    }
}

#[test]
fn envelopes_without_a_convention_are_rejected() {
    let dir = TempDir::new().unwrap();
    let path = out(&dir, "t.json");
    assert_eq!(cli(&["tor", "--ring", "Q[x]", "--max-degree", "2", "--out", path.to_str().unwrap()]), 0);
    let mut env = load(&path);
    env.as_object_mut().unwrap().remove("convention");
    match from_json::<ResultEnvelope>(&env.to_string()) {
        Err(Error::Schema { path, .. }) => assert_eq!(path, "/convention"),
        other => panic!("expected a schema error, got {other:?}"),
    }
    env["convention"] = Value::from("homological");
    env["extra"] = Value::from(1);
    match from_json::<ResultEnvelope>(&env.to_string()) {
        Err(Error::Schema { path, .. }) => assert_eq!(path, "/extra"),
        other => panic!("expected a schema error, got {other:?}"),
    }
}
