use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn stringlift(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringlift"))
        .args(args)
        .current_dir(dir)
        .env_remove("STRINGLIFT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_then_lift() {
    let dir = tempfile::tempdir().unwrap();
    let out = stringlift(&["generate", "--kind", "path", "--size", "3", "--out", "p3.json"], dir.path());
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("p3.json")).unwrap();
    assert!(text.contains("[0, 1, \"1\"]"));

    let out = stringlift(&["lift", "--net", "p3.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[3].contains(r#""work_node_model":"6","work_string_model":"4""#));
}

#[test]
fn lift_trace_to_file() {
    let dir = tempfile::tempdir().unwrap();
    stringlift(&["generate", "--kind", "grid", "--size", "3", "--length", "1/2", "--out", "g.json"], dir.path());
    let out = stringlift(&["lift", "--net", "g.json", "--w", "2", "--trace", "t.jsonl"], dir.path());
    assert!(out.status.success());
    let trace = fs::read_to_string(dir.path().join("t.jsonl")).unwrap();
    assert_eq!(trace.lines().count(), 6);
    assert!(trace.lines().all(|l| l.starts_with("{\"record\":")));
}

#[test]
fn bfs_variants() {
    let dir = tempfile::tempdir().unwrap();
    stringlift(&["generate", "--kind", "path", "--size", "3", "--out", "p3.json"], dir.path());
    for (variant, total) in [("naive-set", "6"), ("enumerating", "4"), ("marked", "3")] {
        let out = stringlift(&["bfs", "--net", "p3.json", "--variant", variant], dir.path());
        assert!(out.status.success());
        let last = stdout(&out).lines().last().unwrap().to_string();
        assert!(last.contains(&format!(r#""algorithm":"{variant}""#)), "{last}");
        assert!(last.contains(&format!(r#""time_units":"{total}""#)), "{last}");
    }
    let out = stringlift(&["bfs", "--net", "p3.json", "--variant", "naive-set", "--t", "3/2"], dir.path());
    assert!(stdout(&out).contains(r#""time_units":"9""#));
}

#[test]
fn weighted_commands() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("tri.json"),
        r#"{"nodes": 3, "source": 0, "target": 2, "edges": [[0, 1, "1"], [1, 2, "1"], [0, 2, "3"]]}"#,
    )
    .unwrap();
    let out = stringlift(&["dijkstra", "--net", "tri.json"], dir.path());
    assert!(stdout(&out).contains(r#""distance":"2""#));
    let out = stringlift(&["liftoff", "--net", "tri.json"], dir.path());
    assert_eq!(stdout(&out).lines().count(), 3);
    let out = stringlift(&["pull-apart", "--net", "tri.json"], dir.path());
    let text = stdout(&out);
    assert_eq!(text.matches("taut_edge").count(), 2);
    assert!(text.contains(r#""separation":"2""#));
    // non-uniform network cannot be lifted step-wise
    let out = stringlift(&["lift", "--net", "tri.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("bad.json"),
        r#"{"nodes": 2, "source": 0, "target": 1, "edges": [[0, 1, "1/0"]]}"#,
    )
    .unwrap();
    let out = stringlift(&["lift", "--net", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("edges[0][2]"));

    fs::write(
        dir.path().join("loop.json"),
        r#"{"nodes": 2, "source": 0, "target": 1, "edges": [[0, 0, "1"]]}"#,
    )
    .unwrap();
    assert_eq!(stringlift(&["dijkstra", "--net", "loop.json"], dir.path()).status.code(), Some(2));
    assert_eq!(stringlift(&["lift", "--net", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(stringlift(&["bfs", "--net", "x.json"], dir.path()).status.code(), Some(2));
}

#[test]
fn verify_single_network_table() {
    let dir = tempfile::tempdir().unwrap();
    stringlift(&["generate", "--kind", "path", "--size", "3", "--length", "3", "--out", "p3.json"], dir.path());
    let out = stringlift(
        &["verify", "--net", "p3.json", "--w", "2", "--t", "5", "--trace", "report.jsonl"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6/5"));
    assert!(text.contains("true"));
    let record = fs::read_to_string(dir.path().join("report.jsonl")).unwrap();
    assert!(record.starts_with(r#"{"record":"complexity","eq1":"36","eq2":"30","eq3":"20","eq4":"24""#), "{record}");
    assert!(record.contains(r#""correspondence_ok":true"#));
}

#[test]
fn verify_batch_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("ok.json"),
        r#"{"entries": [{"spec": {"kind": "erdos_renyi", "size": 30, "edge_probability": 0.15, "seed": 3}, "repeat": 4},
                        {"spec": {"kind": "geometric", "size": 20, "radius": 0.4, "weighted": true}}]}"#,
    )
    .unwrap();
    let a = stringlift(&["verify", "--batch", "ok.json"], dir.path());
    let b = stringlift(&["verify", "--batch", "ok.json", "--workers", "4"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains(r#""passed": 5"#));

    fs::write(
        dir.path().join("bad.json"),
        r#"{"entries": [{"spec": {"kind": "path", "size": 5}}, {"spec": {"kind": "cycle", "size": 5, "inject_fault": true}}]}"#,
    )
    .unwrap();
    let out = stringlift(&["verify", "--batch", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains(r#""property": "validate""#));
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = |seed: &str, out: &str| {
        Command::new(env!("CARGO_BIN_EXE_stringlift"))
            .args(["generate", "--kind", "erdos-renyi", "--size", "30", "--p", "0.2", "--out", out])
            .env("STRINGLIFT_SEED", seed)
            .current_dir(dir.path())
            .status()
            .unwrap()
    };
    assert!(run("41", "a.json").success());
    assert!(run("41", "b.json").success());
    let a = fs::read_to_string(dir.path().join("a.json")).unwrap();
    assert_eq!(a, fs::read_to_string(dir.path().join("b.json")).unwrap());
    let flag = stringlift(
        &["generate", "--kind", "erdos-renyi", "--size", "30", "--p", "0.2", "--seed", "41", "--out", "c.json"],
        dir.path(),
    );
    assert!(flag.status.success());
    assert_eq!(a, fs::read_to_string(dir.path().join("c.json")).unwrap());
}
