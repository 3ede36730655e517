use std::process::{Command, Output};

fn twistcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn graph_json_k3() {
    let o = twistcone(&["graph", "--k", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["adjacency"][0], serde_json::json!([0, 0, 1, 1, 1, 0]));
    assert_eq!(v["adjacency"].as_array().unwrap().len(), 6);
}

#[test]
fn graph_dot_k3() {
    let o = twistcone(&["graph", "--k", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph G_6_3 {"));
    assert_eq!(text.matches(" -- ").count(), 9);
    let vertices = text
        .lines()
        .filter(|l| l.trim_end().ends_with("\";") && !l.contains("--"));
    assert_eq!(vertices.count(), 6);
}

#[test]
fn graph_even_k_is_usage_error() {
    let o = twistcone(&["graph", "--k", "4", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn topology_reports() {
    let o = twistcone(&["topology", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"k":3,"euler":-6,"boundary":3,"orientable":false,"genus":5}"#
    );
    let o = twistcone(&["topology", "--k", "9"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (v["genus"].as_u64(), v["boundary"].as_u64()),
        (Some(11), Some(9))
    );
    assert_eq!(twistcone(&["topology", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn word_reproduces_phi3() {
    let o = twistcone(&["word", "--k", "3", "--word", "r t1 r r"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matrix"]["n"], 6);
    assert_eq!(
        v["matrix"]["rows"][5],
        serde_json::json!(["1", "0", "1", "0", "1", "1"])
    );
    assert_eq!(
        v["char_poly"]["coeffs"],
        serde_json::json!(["-1", "-1", "3", "2", "-3", "-1", "1"])
    );
}

#[test]
fn empty_word_is_identity() {
    let o = twistcone(&["word", "--k", "3", "--word", ""]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["matrix"]["rows"][0],
        serde_json::json!(["1", "0", "0", "0", "0", "0"])
    );
    assert_eq!(
        v["matrix"]["rows"][5],
        serde_json::json!(["0", "0", "0", "0", "0", "1"])
    );
}

#[test]
fn word_errors() {
    assert_eq!(
        twistcone(&["word", "--k", "3", "--word", "t7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twistcone(&["word", "--k", "3", "--word", "q"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twistcone(&["word", "--k", "3", "--word", "r- r"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn verify_k3() {
    let o = twistcone(&["verify", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["spectral"]["sink"], serde_json::json!([3, 6]));
    assert_eq!(
        v["spectral"]["dilatation"].as_f64(),
        Some(1.618033988749895)
    );
    assert_eq!(v["topology"]["genus"], 5);
}

#[test]
fn scan_3_to_25() {
    let o = twistcone(&["scan", "--from", "3", "--to", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "k,genus,boundary,identity_verified,dilatation,runtime_ms"
    );
    assert_eq!(lines.len(), 13);
    for (row, k) in lines[1..].iter().zip((3..=25).step_by(2)) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0], k.to_string());
        assert_eq!(fields[1], (k + 2).to_string());
        assert_eq!(fields[2], k.to_string());
        assert_eq!(fields[3], "true");
        assert_eq!(fields[4], "1.618033988749895");
    }
}

#[test]
fn scan_json_is_deterministic_apart_from_runtime() {
    let strip = |o: Output| {
        let mut v: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
        for row in &mut v {
            row.as_object_mut().unwrap().remove("runtime_ms");
        }
        v
    };
    let a = strip(twistcone(&[
        "scan", "--from", "3", "--to", "11", "--format", "json",
    ]));
    let b = strip(twistcone(&[
        "scan", "--from", "3", "--to", "11", "--format", "json",
    ]));
    assert_eq!(a, b);
    assert_eq!(a.len(), 5);
}

#[test]
fn scan_reversed_bounds() {
    assert_eq!(
        twistcone(&["scan", "--from", "9", "--to", "3"])
            .status
            .code(),
        Some(2)
    );
}
