use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn polyame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyame"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn polytope_show() {
    let out = polyame(&["polytope", "show", "dodecahedron"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["vertices"], 20);
    assert_eq!(v["edges"], 30);
    assert_eq!(v["faces"].as_array().unwrap().len(), 12);
    assert_eq!(v["faces"][0], serde_json::json!([1, 2, 3, 4, 5]));
    assert_eq!(polyame(&["polytope", "show", "cube"]).status.code(), Some(0));
    assert_eq!(polyame(&["polytope", "show", "prism"]).status.code(), Some(2));
}

#[test]
fn ame_dump() {
    let out = polyame(&["ame", "dump", "ame52", "--verify"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "i\ts1\ts2\ts3\ts4\ts5\tc_i");
    assert_eq!(lines.len(), 1 + 32 + 1);
    assert!(lines[33].contains("AME over 10 cuts: true"));
    assert_eq!(polyame(&["ame", "dump", "ame99"]).status.code(), Some(2));
}

#[test]
fn code_rs() {
    let out = polyame(&["code", "rs", "--p", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime"));

    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("rs.json");
    let out = polyame(&["code", "rs", "--p", "11", "--report", path_str(&report)]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["p"], 11);
    assert_eq!(v["n"], 12);
    assert_eq!(v["k"], 6);
    assert_eq!(v["d_H"], 7);
    assert_eq!(v["is_ame"], true);
    assert_eq!(v["generator"][5], serde_json::json!([0, 1, 10, 1, 1, 1, 10, 10, 10, 1, 10, 1]));

    // Too large to enumerate: distance and AME check are skipped, not faked.
    let v = stdout_json(&polyame(&["code", "rs", "--p", "29"]));
    assert_eq!(v["n"], 30);
    assert!(v["d_H"].is_null());
    assert_eq!(v["skipped"].as_array().unwrap().len(), 2);
}

#[test]
fn code_d2_entropies() {
    let out = polyame(&["code", "d2", "--entropies"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["k"], 8);
    assert_eq!(v["d_H"], 6);
    let m5 = &v["entropies"][4];
    assert_eq!(m5["m"], 5);
    let counts: u64 = m5["counts"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(counts, 15504);
    assert_eq!(m5["counts"].as_object().unwrap().keys().collect::<Vec<_>>(), ["4", "5"]);
}

#[test]
fn build_and_analyze_d1() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("d1.bin");
    let out = polyame(&["build", "d1", "--out", path_str(&state)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("d1.bin.json")).unwrap()).unwrap();
    assert_eq!(sidecar["id"], "d1");
    assert_eq!(sidecar["assignment"]["orientations"].as_array().unwrap().len(), 12);
    assert_eq!(std::fs::metadata(&state).unwrap().len(), 16 + (1 << 20));

    let report = dir.path().join("r.json");
    let out = polyame(&[
        "analyze", "--state", path_str(&state), "--m", "6", "--sample", "100", "--seed", "7", "--out",
        path_str(&report),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["state_id"], "d1");
    assert_eq!(v["rows"][0]["examined"], 100);
    assert_eq!(v["rows"][0]["seed"], 7);
    assert_eq!(v["budget"], 200_000);
    assert_eq!(v["rows"][0]["values"], serde_json::json!([6.0]));
}

#[test]
fn build_d2_round_trip_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("d2.bin");
    assert!(polyame(&["build", "d2", "--out", path_str(&state)]).status.success());
    let stored = polyame::statefile::read_state(&state).unwrap();
    let built = polyame::contraction::build_d2().unwrap();
    assert_eq!(stored, polyame::statefile::StoredState::Coefficients(built.coefficients.clone()));

    let f64_state = dir.path().join("d2f.bin");
    assert!(polyame(&["build", "d2", "--encoding", "f64", "--out", path_str(&f64_state)]).status.success());
    let normalized = built.coefficients.normalized::<f64>().unwrap();
    let polyame::statefile::StoredState::Amplitudes(a) = polyame::statefile::read_state(&f64_state).unwrap() else {
        panic!("f64 encoding expected")
    };
    assert!(a.amps().iter().zip(normalized.amps()).all(|(x, y)| x.to_bits() == y.to_bits()));

    let plan = dir.path().join("plan.json");
    std::fs::write(
        &plan,
        r#"{"rows": [{"m": 5, "modes": [{"mode": "exhaustive"}]}, {"m": 10, "modes": [{"mode": "structured", "solid": "dodecahedron"}]}]}"#,
    )
    .unwrap();
    let csv = dir.path().join("t.csv");
    let (r1, r2) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for r in [&r1, &r2] {
        let out = polyame(&[
            "analyze", "--state", path_str(&state), "--plan", path_str(&plan), "--out", path_str(r), "--csv",
            path_str(&csv),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let strip = |p: &Path| {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("metadata");
        v
    };
    assert_eq!(strip(&r1), strip(&r2));
    let v = strip(&r1);
    assert_eq!(v["rows"][0]["values"], serde_json::json!([4.0, 5.0]));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("|A|,10,5\nS_A(d2),"));
    assert!(text.contains("\"4,5\""));
}

#[test]
fn orientations_and_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("o.json");
    std::fs::write(&file, "[0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0, {\"offset\": 2, \"reflected\": true}]").unwrap();
    let state = dir.path().join("s.bin");
    let out = polyame(&["build", "d1", "--orientations", path_str(&file), "--out", path_str(&state)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("s.bin.json")).unwrap()).unwrap();
    assert_eq!(sidecar["assignment"]["orientations"][11]["reflected"], true);

    std::fs::write(&file, "[0, 1]").unwrap();
    let out = polyame(&["build", "d1", "--orientations", path_str(&file), "--out", path_str(&state)]);
    assert_eq!(out.status.code(), Some(2));
    let out = polyame(&["build", "hovering", "--hover-pos", "7", "--out", path_str(&state)]);
    assert_eq!(out.status.code(), Some(2));
    let out = polyame(&["analyze", "--state", "/nonexistent/x.bin", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = polyame(&["reproduce", "table9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_polyame"))
        .args(["polytope", "show", "cube"])
        .env("POLYAME_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_cheap_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("res.json");
    let out = polyame(&["reproduce", "table1", "table3", "rs12-11", "ame52-rot", "ame62", "--out", path_str(&out_file)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let results = v.as_array().unwrap();
    assert_eq!(results.len(), 5);
    assert!(results.iter().all(|r| r["status"] == "pass" && r["diffs"].as_array().unwrap().is_empty()));
    let rs = results.iter().find(|r| r["id"] == "rs12-11").unwrap();
    assert_eq!(rs["details"]["d_H"], 7);
    assert_eq!(rs["details"]["is_ame"], true);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().any(|l| l.starts_with("PASS    table3")));
}

#[test]
fn reproduce_exit_code_tracks_status() {
    // The hovering check under the default cell convention; the exit code
    // must be 1 exactly when the check reports a failure.
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("h.json");
    let out = polyame(&["reproduce", "hovering", "--out", path_str(&out_file)]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let failed = v[0]["status"] == "fail";
    assert_eq!(out.status.code(), Some(if failed { 1 } else { 0 }));
    assert_eq!(v[0]["details"]["cuts"], 924);
}
