use std::path::PathBuf;
use std::process::{Command, Output};

fn exlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exlab"))
        .args(args)
        .env_remove("EXLAB_BUDGET_MS")
        .output()
        .expect("spawn exlab")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

/// Drops the `wall_ms` line, the only part of a text report that varies.
fn stable(report: &str) -> String {
    report.lines().filter(|l| !l.starts_with("wall_ms=")).collect::<Vec<_>>().join("\n")
}

#[test]
fn plane_two_is_fano() {
    let o = exlab(&["plane", "--q", "2"]);
    assert_eq!(code(&o), 0);
    let golden = include_str!("data/fano.txt");
    assert_eq!(stdout(&o), golden);
    assert!(stderr(&o).contains("verify.plane=pass"));
}

#[test]
fn partition_complete_seven_three() {
    let o = exlab(&["partition", "complete", "--n", "7", "--k", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[7], "c 7 1088");
    for part in &lines[..7] {
        assert!(part.split_whitespace().count() <= 3);
    }
}

#[test]
fn verify_names_first_uncovered_edge() {
    // complement of a perfect matching on 8 vertices
    let mut edges = Vec::new();
    for u in 1..=8 {
        for v in u + 1..=8 {
            if !(u % 2 == 1 && v == u + 1) {
                edges.push(format!("{u} {v}"));
            }
        }
    }
    let graph = scratch("cm8.txt", &format!("p 8 {}\n{}\n", edges.len(), edges.join("\n")));
    let matching = scratch("m8.txt", "p 8 4\n1 2\n3 4\n5 6\n7 8\n");

    let o = exlab(&["partition", "forest", "--graph", matching.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let good = scratch("cm8.part", &stdout(&o));
    let ok = exlab(&["verify", "--graph", graph.to_str().unwrap(), "--partition", good.to_str().unwrap()]);
    assert_eq!(code(&ok), 0);
    assert_eq!(stdout(&ok), "ok\n");

    // drop the first part and fix the trailer count
    let text = stdout(&o);
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let dropped = lines.remove(0);
    let last = lines.len() - 1;
    let bound = lines[last].split_whitespace().nth(2).unwrap().to_string();
    lines[last] = format!("c {} {bound}", lines.len() - 1);
    let bad = scratch("cm8-bad.part", &(lines.join("\n") + "\n"));
    let o = exlab(&["verify", "--graph", graph.to_str().unwrap(), "--partition", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let ids: Vec<&str> = dropped.split_whitespace().collect();
    assert_eq!(stdout(&o), format!("edge {}-{} uncovered\n", ids[0], ids[1]));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&exlab(&["plane", "--q", "2", "--bogus"])), 64);
    assert_eq!(code(&exlab(&["nosuchcommand"])), 64);
    assert_eq!(code(&exlab(&["verify", "--graph", "x.txt"])), 64);
    assert_eq!(code(&exlab(&["--help"])), 0);
}

#[test]
fn input_errors_exit_1() {
    assert_eq!(code(&exlab(&["starforest", "--graph", "/nonexistent/graph.txt"])), 1);
    assert_eq!(code(&exlab(&["plane", "--q", "6"])), 1);
    let bad = scratch("bad-header.txt", "p 3 5\n1 2\n");
    assert_eq!(code(&exlab(&["ramsey", "--target", bad.to_str().unwrap(), "--cap", "5"])), 1);
}

#[test]
fn ramsey_of_triangle() {
    let k3 = scratch("k3.txt", "p 3 3\n1 2\n2 3\n1 3\n");
    let o = exlab(&["ramsey", "--target", k3.to_str().unwrap(), "--cap", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "r=6\n");
    let o = exlab(&["ramsey", "--target", k3.to_str().unwrap(), "--cap", "5"]);
    assert_eq!(stdout(&o), "unknown(5)\n");
}

#[test]
fn output_independent_of_jobs() {
    let path = scratch("p4.txt", "p 4 3\n1 2\n2 3\n3 4\n");
    let p = path.to_str().unwrap();
    let cases: [&[&str]; 3] = [
        &["hilbert", "experiment", "--n", "512", "--delta", "0.3", "--trials", "6", "--seed", "11"],
        &["online", "--target", p, "--painter", "random", "--seed", "5"],
        &["ramsey", "--target", p, "--cap", "6"],
    ];
    for args in cases {
        let runs: Vec<Output> = ["1", "3"]
            .iter()
            .map(|j| {
                let mut a = args.to_vec();
                a.extend(["--jobs", j]);
                exlab(&a)
            })
            .collect();
        assert_eq!(code(&runs[0]), 0, "{args:?}");
        assert_eq!(runs[0].stdout, runs[1].stdout, "{args:?}");
        assert_eq!(stable(&stderr(&runs[0])), stable(&stderr(&runs[1])), "{args:?}");
    }
}

#[test]
fn json_reports_need_a_seed_for_random_runs() {
    let o = exlab(&["hilbert", "experiment", "--n", "256", "--trials", "2", "--json"]);
    assert_eq!(code(&o), 64);
    let o = exlab(&["hilbert", "experiment", "--n", "256", "--trials", "2", "--json", "--seed", "0"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "hilbert experiment");
    assert_eq!(v["seed"], 0);
    assert!(v["output"].as_str().unwrap().starts_with("trial\tdim\n0\t"));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);

    let p3 = scratch("p3.txt", "p 3 2\n1 2\n2 3\n");
    let o = exlab(&["online", "--target", p3.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 64);
    // deterministic painters need no seed
    let o = exlab(&["online", "--target", p3.to_str().unwrap(), "--painter", "fixed", "--json"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn transcripts_replay_through_verify() {
    let p3 = scratch("p3-replay.txt", "p 3 2\n1 2\n2 3\n");
    let o = exlab(&["online", "--target", p3.to_str().unwrap(), "--painter", "greedy"]);
    assert_eq!(code(&o), 0);
    let tr = scratch("p3-replay.tr", &stdout(&o));
    let v = exlab(&["verify", "--target", p3.to_str().unwrap(), "--transcript", tr.to_str().unwrap()]);
    assert_eq!(code(&v), 0);
    assert_eq!(stdout(&v), "ok\n");
}

#[test]
fn hilbert_subcommands() {
    let o = exlab(&["hilbert", "sigma", "--set", "1,2,4"]);
    assert_eq!(stdout(&o), "0 1 2 3 4 5 6 7\n");
    let o = exlab(&["hilbert", "cube", "--set", "0,1,2,3,4,5,6,7", "--d", "3"]);
    assert_eq!(stdout(&o), "H(0; 1,2,3)\n");
    let o = exlab(&["hilbert", "cube", "--set", "0,1,3", "--d", "2"]);
    assert_eq!(stdout(&o), "absent\n");
    let o = exlab(&["hilbert", "count", "--n", "10", "--d", "3", "--bound", "7"]);
    assert_eq!(stdout(&o), "20\n");
}

#[test]
fn budget_env_is_read() {
    let o = Command::new(env!("CARGO_BIN_EXE_exlab"))
        .args(["hilbert", "cube", "--set", "0,1,2,3", "--dmax", "3", "--json"])
        .env("EXLAB_BUDGET_MS", "5000")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(code(&exlab(&["hilbert", "cube", "--set", "1,2", "--d", "1", "--budget-ms", "x"])), 64);
}
