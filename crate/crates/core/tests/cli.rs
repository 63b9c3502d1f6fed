//! The `hgx` binary: exit codes, diagnostics, determinism, JSON schema
//! conformance and DOT well-formedness.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn hgx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgx"))
        .args(args)
        .env_remove("HGX_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = hgx(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn has_line(text: &str, line: &str) -> bool {
    text.lines().any(|l| l == line)
}

#[test]
fn frobenius_text() {
    let a = ok(&["frobenius", "--p", "5", "--d", "2", "--format", "text"]);
    assert!(has_line(&a, "almost classically Galois: false"));
    assert!(has_line(&a, "all structures bijective: true"));
    let b = ok(&["frobenius", "--p", "7", "--d", "2"]);
    assert!(has_line(&b, "almost classically Galois: true"));
}

#[test]
fn input_errors_exit_2() {
    let cases: [(&[&str], &str); 6] = [
        (&["frobenius", "--p", "6", "--d", "2"], "p must be prime"),
        (&["frobenius", "--p", "7", "--d", "4"], "d must divide p-1"),
        (&["frobenius", "--p", "7", "--d", "2", "--zeta", "2"], "zeta must generate"),
        (&["dihedral", "--p", "9"], "p must be an odd prime"),
        (
            &["analyze", "--group", &data("s3_natural.group"), "--stabilizer", &data("a3_in_s3.group")],
            "action not faithful",
        ),
        (&["analyze", "--group", "/nonexistent.group", "--point", "1"], "nonexistent"),
    ];
    for (args, msg) in cases {
        let o = hgx(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(msg), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn malformed_group_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.group");
    std::fs::write(&path, "n: 3\ngenerators: [(1,2,4)]\n").unwrap();
    let o = hgx(&["analyze", "--group", path.to_str().unwrap(), "--point", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("generator 0"));
}

#[test]
fn resource_errors_exit_3() {
    let o = hgx(&["counterexample", "--full-search", "--node-budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(has_line(&out, "search: incomplete"));
    assert!(has_line(&out, "almost classically Galois: false"));
    assert!(stderr(&o).contains("incomplete"));

    let o = hgx(&["counterexample", "--full-search", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(3));

    let o = hgx(&["analyze", "--group", &data("s3xs3.group"), "--point", "1", "--closure-cap", "10"]);
    assert_eq!(o.status.code(), Some(3));

    let o = hgx(&["analyze", "--group", &data("s3xs3.group"), "--point", "1", "--subgroup-bound", "20"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn budget_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_hgx"))
        .args(["dihedral", "--p", "7", "--enumerate"])
        .env("HGX_BUDGET_MS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn dihedral_enumeration() {
    let out = ok(&["dihedral", "--p", "3", "--enumerate"]);
    assert!(has_line(&out, "structures found: 5"));
    let out = ok(&["dihedral", "--p", "5"]);
    let blocks: Vec<&str> = out.split("structure ").collect();
    let lambda = blocks.iter().find(|b| b.starts_with("lambda-nonclassical")).unwrap();
    assert!(lambda.lines().any(|l| l == "  image: 3"));
}

#[test]
fn counterexample_defaults() {
    let out = ok(&["counterexample"]);
    for line in [
        "almost classically Galois: false",
        "stable involutions: 3",
        "pairwise commuting: false",
        "intermediate subgroups by order: 3:1 6:3 9:1 18:3 36:1",
    ] {
        assert!(has_line(&out, line), "{line}");
    }
    let full = ok(&["counterexample", "--full-search"]);
    assert!(has_line(&full, "bijective structures found: 0"));
}

#[test]
fn analyze_small_galois_case() {
    let out = ok(&[
        "analyze",
        "--group",
        &data("s3_regular.group"),
        "--stabilizer",
        &data("trivial6.group"),
        "--enumerate",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let structures = v["structures"].as_array().unwrap();
    assert_eq!(structures.len(), 5);
    let bij: Vec<(&str, bool)> = structures
        .iter()
        .map(|s| (s["iso_type"].as_str().unwrap(), s["bijective"].as_bool().unwrap()))
        .collect();
    assert_eq!(bij.iter().filter(|(_, b)| *b).count(), 1);
    assert!(bij.contains(&("S3", true)));
    assert!(bij.contains(&("S3", false)));
}

/// The report sections that do not depend on the command.
fn shared_sections(json: &str) -> serde_json::Value {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    let acg = v["facts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| {
            let k = f["key"].as_str().unwrap();
            k == "almost classically Galois" || k.starts_with("intermediate subgroups")
        })
        .cloned()
        .collect::<Vec<_>>();
    serde_json::json!({ "group": v["group"], "intermediate": v["intermediate"], "facts": acg })
}

#[test]
fn analyze_reproduces_counterexample() {
    let base = ["--format", "json", "--no-timings"];
    let ce = ok(&[&["counterexample"][..], &base].concat());
    let g = data("s3xs3.group");
    let by_point = ok(&[&["analyze", "--group", &g, "--point", "1"][..], &base].concat());
    let st = data("s3xs3_stabilizer.group");
    let by_file = ok(&[&["analyze", "--group", &g, "--stabilizer", &st][..], &base].concat());
    assert_eq!(shared_sections(&ce), shared_sections(&by_point));
    assert_eq!(shared_sections(&ce), shared_sections(&by_file));
}

fn all_invocations() -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let base: Vec<Vec<&str>> = vec![
        vec!["frobenius", "--p", "5", "--d", "2"],
        vec!["frobenius", "--p", "13", "--d", "4"],
        vec!["dihedral", "--p", "5", "--enumerate"],
        vec!["counterexample"],
        vec!["counterexample", "--full-search", "--verbose"],
    ];
    let g = data("s3xs3.group");
    let s3 = data("s3_regular.group");
    let t6 = data("trivial6.group");
    let analyze: Vec<Vec<&str>> = vec![
        vec!["analyze", "--group", &g, "--point", "1", "--enumerate"],
        vec!["analyze", "--group", &s3, "--stabilizer", &t6, "--enumerate"],
    ];
    for args in base.iter().chain(&analyze) {
        for format in ["text", "json", "dot"] {
            let mut v: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            v.extend(["--format".into(), format.into(), "--no-timings".into()]);
            out.push(v);
        }
    }
    out
}

#[test]
fn reports_are_deterministic() {
    for args in all_invocations() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(ok(&args), ok(&args), "{args:?}");
    }
}

#[test]
fn generator_order_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let variants = [
        "n: 12\ngenerators: [(1,2,3,4,5,6)(7,8,9,10,11,12), (1,9)(2,10)(3,7)(4,8)(5,11)(6,12)]\n",
        "n: 12\ngenerators: [(1,9)(2,10)(3,7)(4,8)(5,11)(6,12), (1,2,3,4,5,6)(7,8,9,10,11,12)]\n",
        "n: 12\ngenerators: [\n (1,9)(2,10)(3,7)(4,8)(5,11)(6,12),\n (1,3,5)(7,9,11),\n (1,2,3,4,5,6)(7,8,9,10,11,12)\n]\n",
    ];
    let mut outputs = Vec::new();
    for (i, text) in variants.iter().enumerate() {
        let path: PathBuf = dir.path().join(format!("g{i}.group"));
        std::fs::write(&path, text).unwrap();
        let p = path.to_str().unwrap();
        let mut per_format = Vec::new();
        for format in ["text", "json", "dot"] {
            per_format.push(ok(&["analyze", "--group", p, "--point", "1", "--enumerate", "--format", format, "--no-timings"]));
        }
        outputs.push(per_format);
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn json_reports_match_schema() {
    let schema_path = format!("{}/schema/report.schema.json", env!("CARGO_MANIFEST_DIR"));
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let mut invocations: Vec<Vec<String>> = all_invocations()
        .into_iter()
        .filter(|a| a.contains(&"json".to_string()))
        .collect();
    invocations.push(
        ["frobenius", "--p", "7", "--d", "3", "--format", "json"]
            .map(String::from)
            .to_vec(),
    );
    invocations.push(
        ["dihedral", "--p", "3", "--enumerate", "--verbose", "--format", "json"]
            .map(String::from)
            .to_vec(),
    );
    for args in invocations {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = ok(&args);
        assert!(out.ends_with("}\n"));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        if let Err(errors) = compiled.validate(&v) {
            let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}");
        };
    }
    let incomplete = hgx(&["counterexample", "--full-search", "--node-budget", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&incomplete.stdout).unwrap();
    assert!(compiled.is_valid(&v));
    assert_eq!(v["search"]["complete"], false);
}

/// A minimal DOT reader: one digraph, balanced clusters, unique node
/// ids of the form `o<order>_g<k>`, and edges between declared nodes.
fn check_dot(text: &str) -> Result<(usize, usize, usize), String> {
    let mut lines = text.lines();
    if lines.next() != Some("digraph hgx {") {
        return Err("header".into());
    }
    let mut depth = 1;
    let mut nodes = BTreeSet::new();
    let mut edges = Vec::new();
    let mut clusters = 0;
    let valid_id = |id: &str| {
        id.strip_prefix('o')
            .and_then(|r| r.split_once("_g"))
            .is_some_and(|(a, b)| {
                !a.is_empty() && !b.is_empty() && a.chars().all(|c| c.is_ascii_digit()) && b.chars().all(|c| c.is_ascii_digit())
            })
    };
    for line in lines {
        let t = line.trim();
        if depth == 0 {
            return Err(format!("content after closing brace: {t}"));
        }
        if t == "}" {
            depth -= 1;
        } else if let Some(rest) = t.strip_prefix("subgraph ") {
            if !rest.starts_with("cluster_") || !rest.ends_with(" {") {
                return Err(format!("subgraph: {t}"));
            }
            clusters += 1;
            depth += 1;
        } else if let Some((lhs, rhs)) = t.split_once(" -> ") {
            let rhs = rhs.trim_end_matches(';');
            let rhs = rhs.split(' ').next().unwrap();
            edges.push((lhs.to_string(), rhs.to_string()));
        } else if t.starts_with("rankdir=") || t.starts_with("node ") || t.starts_with("label=") {
            if !t.ends_with(';') {
                return Err(format!("attribute: {t}"));
            }
        } else if let Some((id, attrs)) = t.split_once(" [") {
            if !valid_id(id) || !attrs.ends_with("];") {
                return Err(format!("node: {t}"));
            }
            if attrs.matches('"').count() - attrs.matches("\\\"").count() != 2 {
                return Err(format!("quoting: {t}"));
            }
            if !nodes.insert(id.to_string()) {
                return Err(format!("duplicate node {id}"));
            }
        } else {
            return Err(format!("unrecognised line: {t}"));
        }
    }
    if depth != 0 {
        return Err("unbalanced braces".into());
    }
    for (a, b) in &edges {
        if !nodes.contains(a) || !nodes.contains(b) {
            return Err(format!("edge {a} -> {b} between undeclared nodes"));
        }
    }
    Ok((nodes.len(), edges.len(), clusters))
}

#[test]
fn dot_output_is_well_formed() {
    for args in all_invocations() {
        if !args.contains(&"dot".to_string()) {
            continue;
        }
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        check_dot(&ok(&args)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
    let out = ok(&["dihedral", "--p", "5", "--format", "dot"]);
    let (_, _, clusters) = check_dot(&out).unwrap();
    assert_eq!(clusters, 1 + 7);
}
