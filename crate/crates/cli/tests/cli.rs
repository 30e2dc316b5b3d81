use std::process::{Command, Output};

use serde_json::Value;

fn tabwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tabwalk"))
        .args(args)
        .env_remove("TW_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn row_end_suite_passes() {
    let out = tabwalk(&["verify", "--suite", "theorem1", "--n", "8", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["suite"], "row-end");
    assert!(report.get("duration_ms").is_none());
}

#[test]
fn baxter_four_is_22() {
    let out = tabwalk(&["series", "baxter", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], "22");
}

#[test]
fn conjecture_at_zero_passes() {
    let out = tabwalk(&["walks", "conjecture", "--nmax", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn identical_flags_give_identical_bytes() {
    for args in [
        &["verify", "--suite", "marked-symmetry", "--n", "12"][..],
        &["walks", "q", "--n", "6"],
        &["enumerate", "open-partition", "--n", "4"],
        &["series", "syt", "--k", "2", "--order", "8"],
    ] {
        let a = tabwalk(args);
        let b = tabwalk(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn emit_writes_stdout_document() {
    let dir = std::env::temp_dir().join(format!("tabwalk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tree.json");
    let out = tabwalk(&["tree", "--rule", "open_partitions", "--depth", "7", "--emit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    let levels = json(&out)["levels"].clone();
    assert_eq!(levels, serde_json::json!(["1", "2", "6", "22", "92", "422", "2074"]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["verify", "--suite", "no-such-suite"],
        &["tree", "--rule", "nope"],
        &["bij", "psi", "--in", "{\"n\": 2}"],
        &["bij", "phi", "--in", "/nonexistent/diagram.json"],
        &["series", "syt", "--k", "0"],
    ] {
        let out = tabwalk(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn phi_then_inverse_round_trips() {
    let d = r#"{"n":6,"arcs":[[1,4],[2,5],[4,6]],"open":[],"class":"set_partition"}"#;
    let out = tabwalk(&["bij", "phi", "--in", d]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["input"]["stats"]["cr"], 2);
    let seq = doc["image"]["sequence"].to_string();
    let back = json(&tabwalk(&["bij", "inverse", "--in", &seq]));
    let original: Value = serde_json::from_str(d).unwrap();
    assert_eq!(back["image"]["diagram"], original);
}

#[test]
fn swap_exchanges_enhanced_nesting_and_future_nesting() {
    let d = r#"{"n":5,"arcs":[[2,4],[3,5]],"open":[],"class":"involution"}"#;
    let doc = json(&tabwalk(&["bij", "swap", "--in", d]));
    let before = &doc["input"]["stats"];
    let after = &doc["image"]["stats"];
    assert_ne!(before["enhne"], before["futne"]);
    assert_eq!(before["enhne"], after["futne"]);
    assert_eq!(before["futne"], after["enhne"]);
}

#[test]
fn enumerate_count_matches_lines() {
    let lines = tabwalk(&["enumerate", "involution", "--n", "6"]);
    let n = String::from_utf8(lines.stdout).unwrap().lines().count();
    assert_eq!(n, 76);
    let count = json(&tabwalk(&["enumerate", "involution", "--n", "6", "--count"]));
    assert_eq!(count["count"], 76);
}

/// Top-level keys of `doc` satisfy the `required` and `properties` lists of a schema.
fn conforms(doc: &Value, schema: &str) {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/v1/");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(format!("{path}{schema}")).unwrap()).unwrap();
    let obj = doc.as_object().expect("document is an object");
    let props = schema["properties"].as_object().unwrap();
    for key in schema["required"].as_array().unwrap() {
        assert!(obj.contains_key(key.as_str().unwrap()), "missing {key}");
    }
    for key in obj.keys() {
        assert!(props.contains_key(key), "unexpected {key}");
    }
}

#[test]
fn outputs_follow_the_schemas() {
    conforms(&json(&tabwalk(&["verify", "--suite", "bessel", "--order", "6"])), "report.json");
    conforms(&json(&tabwalk(&["walks", "conjecture", "--nmax", "4", "--switch-max", "4"])), "conjecture.json");
    let line = tabwalk(&["enumerate", "open-partition", "--n", "3"]).stdout;
    let first = String::from_utf8(line).unwrap().lines().next().unwrap().to_string();
    conforms(&serde_json::from_str(&first).unwrap(), "diagram.json");
    let seq = tabwalk(&["enumerate", "hesitating", "--n", "2"]).stdout;
    let first = String::from_utf8(seq).unwrap().lines().next().unwrap().to_string();
    conforms(&serde_json::from_str(&first).unwrap(), "sequence.json");
}
