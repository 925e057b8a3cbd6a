use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgedom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn report(out: &Output) -> Value {
    assert_eq!(
        code(out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

struct Files(TempDir);

impl Files {
    fn new() -> Files {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn path_text(n: usize) -> String {
    (1..n).map(|i| format!("v{i} v{}\n", i + 1)).collect()
}

#[test]
fn solve_paths() {
    let f = Files::new();
    let p5 = f.put("p5.txt", &path_text(5));
    let r = report(&run(&["solve", s(&p5)]));
    assert_eq!(r["result"]["gamma_t"], 2);
    assert_eq!(r["result"]["witness"].as_array().unwrap().len(), 2);
    assert_eq!(r["command"]["name"], "solve");
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
    assert!(r["wall_ms"].as_f64().unwrap() >= 0.0);

    let p6 = f.put("p6.txt", &path_text(6));
    let out = run(&["solve", s(&p6), "--root", "v6"]);
    assert!(stderr(&out).contains("gamma_t = 3"));
    let r = report(&out);
    assert_eq!(r["result"]["gamma_t"], 3);
    assert_eq!(r["result"]["root"], "v6");
}

#[test]
fn solve_rejects_bad_input() {
    let f = Files::new();
    let cycle = f.put("c4.txt", "a b\nb c\nc d\nd a\n");
    let out = run(&["solve", s(&cycle)]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("tree"));

    let p4 = f.put("p4.txt", &path_text(4));
    assert_eq!(code(&run(&["solve", s(&p4), "--root", "v2"])), 2);
    assert_eq!(code(&run(&["solve", s(&p4), "--root", "nobody"])), 2);
    let garbled = f.put("bad.txt", "a b\nb c d e\n");
    let out = run(&["solve", s(&garbled)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"));
    assert_eq!(code(&run(&["solve", s(&f.path("missing.txt"))])), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["solve"])), 2);
    assert_eq!(code(&run(&["family"])), 2);
    assert_eq!(code(&run(&["family", "T", "--check", "x.txt"])), 2);
    assert_eq!(code(&run(&["family", "Q"])), 2);
    assert_eq!(code(&run(&["bench", "--sizes", "10,x"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn brute_values_and_cap() {
    let f = Files::new();
    let k2 = f.put("k2.txt", "a b\n");
    let r = report(&run(&["brute", s(&k2), "--total"]));
    assert_eq!(r["result"]["value"], "unbounded");
    assert_eq!(r["result"]["witness"], Value::Null);

    let star = f.put("star.txt", "c a\nc b\nc d\nc e\n");
    let r = report(&run(&["brute", s(&star)]));
    assert_eq!(r["result"]["value"], 1);
    let r = report(&run(&["brute", s(&star), "--total"]));
    assert_eq!(r["result"]["value"], 2);

    let big = f.put("p26.txt", &path_text(26));
    let out = run(&["brute", s(&big)]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("25 edges"));
}

#[test]
fn reduce_small_instances() {
    let f = Files::new();
    let one = f.put("one.cnf", "c one variable\np cnf 1 2\n1 0\n1 -1 0\n");
    let out_path = f.path("g.txt");
    let r = report(&run(&["reduce", s(&one), "--check", "--out", s(&out_path)]));
    let res = &r["result"];
    assert_eq!(res["k"], 6);
    assert_eq!(res["vertices"], 16);
    assert_eq!(res["check"]["agree"], true);
    assert_eq!(res["check"]["satisfiable"], true);
    assert_eq!(res["check"]["gamma_t"], 6);

    let written = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(
        written.lines().count(),
        res["edges"].as_u64().unwrap() as usize
    );
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(f.path("g.txt.json")).unwrap()).unwrap();
    assert_eq!(side["k"], 6);
    assert_eq!(side["vertex_tags"], res["vertex_tags"]);
    // The written graph reads back with the same size.
    let r = report(&run(&["brute", s(&out_path), "--total"]));
    assert_eq!(r["result"]["value"], 6);

    let wide = f.put("wide.cnf", "p cnf 3 4\n1 2 3 0\n1 -2 0\n2 -3 0\n3 -1 0\n");
    let r = report(&run(&["reduce", s(&wide)]));
    assert_eq!(r["result"]["k"], 6 * 3 + 8);
    assert_eq!(r["result"]["homogeneous_clauses"], serde_json::json!([1]));
}

#[test]
fn reduce_rejects_invalid_instances() {
    let f = Files::new();
    let once = f.put("once.cnf", "p cnf 1 1\n1 0\n");
    let out = run(&["reduce", s(&once)]);
    assert_eq!(code(&out), 2);
    let msg = stderr(&out);
    assert!(msg.contains("not a SAT-3 restricted instance"), "{msg}");
    assert!(msg.contains("line"), "{msg}");

    let header = f.put("header.cnf", "1 0\n");
    assert_eq!(code(&run(&["reduce", s(&header)])), 2);
}

#[test]
fn family_generation_and_check() {
    let f = Files::new();
    let tree_path = f.path("t.txt");
    let r = report(&run(&[
        "family",
        "T",
        "--seed",
        "7",
        "--budget",
        "5",
        "--out",
        s(&tree_path),
    ]));
    let res = &r["result"];
    assert_eq!(res["check"]["ok"], true);
    assert_eq!(res["check"]["ratio"], "double");
    assert!(res["trace"].as_array().unwrap().len() <= 5);

    // The written labelled tree classifies the same way.
    let r = report(&run(&["family", "--check", s(&tree_path)]));
    assert_eq!(r["result"]["ratio"], "double");
    assert_eq!(r["result"]["labels_on"], "vertices");
    assert_eq!(r["result"]["observations"], true);

    let r = report(&run(&["family", "Tt", "--seed", "3", "--budget", "0"]));
    assert_eq!(r["result"]["check"]["ratio"], "equal");
    assert!(r["result"]["trace"].as_array().unwrap().is_empty());

    let r = report(&run(&["family", "T", "--budget", "0"]));
    assert_eq!(r["result"]["tree"]["vertices"], 4);
    assert_eq!(
        r["result"]["tree"]["labels"],
        serde_json::json!(["L", "C", "C", "L"])
    );

    let p6 = f.put("p6.txt", &path_text(6));
    let r = report(&run(&["family", "--check", s(&p6)]));
    assert_eq!(r["result"]["ratio"], "neither");
    assert_eq!(r["result"]["labels_on"], Value::Null);
}

#[test]
fn family_check_rejects_bad_labels() {
    let f = Files::new();
    let unknown = f.put("u.txt", "a b\nb c\nc d\nv a X\n");
    assert_eq!(code(&run(&["family", "--check", s(&unknown)])), 2);
    let partial = f.put("p.txt", "a b\nb c\nc d\nv a L\n");
    assert_eq!(code(&run(&["family", "--check", s(&partial)])), 2);
    let mixed = f.put("m.txt", "a b\nv a L\nv b L\ne a b S\n");
    assert_eq!(code(&run(&["family", "--check", s(&mixed)])), 2);
    let cycle = f.put("c.txt", "a b\nb c\nc a\n");
    assert_eq!(code(&run(&["family", "--check", s(&cycle)])), 2);

    // Complete labels that break the label rules are reported, not rejected.
    let wrong = f.put("w.txt", "a b\nb c\nc d\nv a C\nv b L\nv c L\nv d C\n");
    let r = report(&run(&["family", "--check", s(&wrong)]));
    assert_eq!(r["result"]["observations"], false);
    assert!(r["result"]["violation"].is_string());
}

#[test]
fn verify_sets() {
    let f = Files::new();
    let p5 = f.put("p5.txt", &path_text(5));
    let good = f.put("good.txt", "v2 v3\nv3 v4\n");
    let r = report(&run(&["verify", s(&p5), s(&good), "--total"]));
    assert_eq!(r["result"]["dominating"], true);
    assert_eq!(r["result"]["minimum"], true);

    let one = f.put("one.txt", "v3 v2\n");
    let r = report(&run(&["verify", s(&p5), s(&one), "--total"]));
    assert_eq!(r["result"]["dominating"], false);
    let r = report(&run(&["verify", s(&p5), s(&one)]));
    assert_eq!(r["result"]["dominating"], false);

    let stranger = f.put("x.txt", "v1 v5\n");
    assert_eq!(code(&run(&["verify", s(&p5), s(&stranger)])), 2);
}

#[test]
fn payloads_are_deterministic() {
    let f = Files::new();
    let p6 = f.put("p6.txt", &path_text(6));
    let cases: [Vec<&str>; 3] = [
        vec!["family", "Tt", "--seed", "11", "--budget", "8"],
        vec!["solve", s(&p6)],
        vec!["brute", s(&p6), "--total"],
    ];
    for args in &cases {
        let a = report(&run(args));
        let b = report(&run(args));
        for key in ["command", "input_digest", "result"] {
            assert_eq!(a[key].to_string(), b[key].to_string(), "{args:?} {key}");
        }
    }
    let a = report(&run(&["family", "Tt", "--seed", "11", "--budget", "8"]));
    let b = report(&run(&["family", "Tt", "--seed", "12", "--budget", "8"]));
    assert_ne!(a["input_digest"], b["input_digest"]);
}

#[test]
fn bench_rows() {
    let r = report(&run(&["bench"]));
    assert_eq!(r["result"]["csv"], "size,ns,ns_per_edge\n");
    assert!(r["result"]["rows"].as_array().unwrap().is_empty());

    let f = Files::new();
    let csv_path = f.path("b.csv");
    let r = report(&run(&[
        "bench",
        "--sizes",
        "50",
        "--seed",
        "4",
        "--out",
        s(&csv_path),
    ]));
    assert_eq!(r["result"]["rows"].as_array().unwrap().len(), 1);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.lines().nth(1).unwrap().starts_with("50,"));

    assert_eq!(code(&run(&["bench", "--sizes", "100,10"])), 2);
    assert_eq!(code(&run(&["bench", "--sizes", "0"])), 2);
}
