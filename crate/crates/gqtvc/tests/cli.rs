use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gqtvc"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gqtvc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn code(args: &[&str]) -> i32 {
    bin().args(args).output().unwrap().status.code().unwrap()
}

fn report(args: &[&str], out: &PathBuf) -> (i32, Value) {
    let status = bin().args(args).arg("--json-out").arg(out).output().unwrap().status;
    let text = std::fs::read_to_string(out).unwrap();
    (status.code().unwrap(), serde_json::from_str(&text).unwrap())
}

#[test]
fn exit_codes_follow_verdicts() {
    assert_eq!(code(&["check-tvc", "--construct", "w2", "--t", "5"]), 0);
    assert_eq!(code(&["check-isoregular", "--construct", "w2", "--k", "3"]), 1);
    assert_eq!(code(&["check-isoregular", "--construct", "q5_2", "--k", "3"]), 0);
    assert_eq!(code(&["check-srg", "--construct", "t2star", "--dual"]), 0);
    assert_eq!(code(&["find-distinguisher", "--construct", "w2", "--t", "5", "--k", "2"]), 0);
    assert_eq!(code(&["verify-formula", "--construct", "w2", "--formula", "all"]), 0);
}

#[test]
fn budget_exhaustion_is_inconclusive() {
    let c = code(&["check-tvc", "--construct", "t2star", "--dual", "--t", "5", "--budget-seconds", "0.000001"]);
    assert_eq!(c, 2);
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(code(&[]), 3);
    assert_eq!(code(&["check-tvc", "--construct", "nope", "--t", "5"]), 3);
    assert_eq!(code(&["check-tvc", "--t", "5"]), 3);
    assert_eq!(code(&["check-tvc", "--construct", "w2", "--t", "12"]), 3);
    assert_eq!(code(&["check-tvc", "--construct", "w2", "--graph6", "x.g6", "--t", "5"]), 3);
    assert_eq!(code(&["check-tvc", "--graph6", "/nonexistent/file.g6", "--t", "5"]), 3);
    assert_eq!(code(&["check-tvc", "--construct", "w2", "--t", "5", "--budget-seconds", "-1"]), 3);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let cases: [&[&str]; 3] = [
        &["check-tvc", "--construct", "q5_2", "--t", "6"],
        &["find-distinguisher", "--construct", "t2star", "--dual", "--t", "6", "--k", "2"],
        &["k44-census", "--construct", "w3", "--full"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let a = scratch(&format!("t1-{i}.json"));
        let b = scratch(&format!("t4-{i}.json"));
        let (ca, mut ra) = report(&[args, &["--threads", "1"][..]].concat(), &a);
        let (cb, mut rb) = report(&[args, &["--threads", "4"][..]].concat(), &b);
        assert_eq!(ca, cb, "{args:?}");
        assert_eq!(ra["settings"]["threads"], 1);
        assert_eq!(rb["settings"]["threads"], 4);
        ra["settings"]["threads"] = Value::Null;
        rb["settings"]["threads"] = Value::Null;
        assert_eq!(ra, rb, "{args:?}");
    }
}

#[test]
fn same_run_writes_identical_bytes() {
    let a = scratch("same-a.json");
    let b = scratch("same-b.json");
    let args = ["check-tvc", "--construct", "w3", "--t", "5", "--mode", "reduced"];
    report(&args, &a);
    report(&args, &b);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn report_shape() {
    let out = scratch("shape.json");
    let (c, r) =
        report(&["check-tvc", "--construct", "t2star", "--dual", "--t", "6", "--mode", "reduced", "--k", "2"], &out);
    assert_eq!(c, 1);
    assert_eq!(r["command"], "check-tvc");
    assert_eq!(r["input"]["kind"], "construct");
    assert_eq!(r["input"]["dual"], true);
    assert_eq!(r["graph"]["order"], 96);
    assert_eq!(r["graph"]["edges"], 960);
    assert_eq!(r["verdict"], "fail");
    assert_eq!(r["result"]["status"], "violated");
    let w = &r["result"]["witness"];
    assert_ne!(w["first"]["count"], w["second"]["count"]);
}

#[test]
fn graph6_and_incidence_inputs() {
    let g6 = scratch("w2.g6");
    assert_eq!(code(&["export-graph6", "--construct", "w2", "--out", g6.to_str().unwrap()]), 0);
    let out = scratch("w2-from-g6.json");
    let (c, r) = report(&["check-srg", "--graph6", g6.to_str().unwrap()], &out);
    assert_eq!(c, 0);
    assert_eq!(r["result"]["srg"], serde_json::json!({ "v": 15, "k": 6, "lambda": 1, "mu": 3 }));

    let inc = scratch("t2.inc");
    assert_eq!(code(&["construct", "--construct", "t2star", "--incidence-out", inc.to_str().unwrap()]), 0);
    let out = scratch("t2-dual.json");
    let (c, r) = report(&["check-srg", "--incidence", inc.to_str().unwrap(), "--dual"], &out);
    assert_eq!(c, 0);
    assert_eq!(r["graph"]["order"], 96);

    let bad = scratch("bad.g6");
    std::fs::write(&bad, "not graph6 \u{1}\n").unwrap();
    assert_eq!(code(&["check-srg", "--graph6", bad.to_str().unwrap()]), 3);
}

#[test]
fn count_type_matches_library() {
    use gqtvc_core::geometry::{build_symplectic_gq, point_graph};
    use gqtvc_core::tvc::{count_type_anchored, GraphType};
    use gqtvc_core::Graph;

    // Triangle xyz plus a pendant w on z.
    let base = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    let g6 = gqtvc::graph6::encode(&base);
    let w2 = point_graph(&build_symplectic_gq(2).unwrap());
    let (x, y) = (0..15).find(|&y| w2.has_edge(0, y)).map(|y| (0, y)).unwrap();
    let want = count_type_anchored(&w2, &GraphType::new(base).unwrap(), x, y).unwrap();
    assert!(want > 0);
    let out = scratch("count.json");
    let pair = format!("{x},{y}");
    let (c, r) = report(&["count-type", "--construct", "w2", "--type", &g6, "--pair", &pair], &out);
    assert_eq!(c, 0);
    assert_eq!(r["result"]["count"], want);
    // Vertex-transitive and edge-transitive: constant over all pairs.
    let (c, r) = report(&["count-type", "--construct", "w2", "--type", &g6], &out);
    assert_eq!(c, 0);
    assert_eq!(r["result"]["constant"], true);
}
