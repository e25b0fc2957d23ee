//! End-to-end tests of the command-line binary: exit-code contract,
//! deterministic outputs, and round trips between subcommands.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_netrobust"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"][..], &["gen", "--help"][..]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, stderr(&out));
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [&["definitely-not-a-subcommand"][..], &["gen"][..], &[][..]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{:?}", args);
    }
}

#[test]
fn missing_input_file_exits_two_and_names_it() {
    let out = run(&["apriori", "/nonexistent/net.edg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("/nonexistent/net.edg"),
        "error should name the missing file, got: {}",
        stderr(&out)
    );
}

#[test]
fn invalid_parameter_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.edg");
    // Mean degree >= N is rejected by the generator.
    let out = run(&["gen", "--model", "er", "--n", "5", "--k", "10", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn gen_is_byte_identical_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let gen = |name: &str, seed: &str| {
        let path = dir.path().join(name);
        let out = run(&[
            "gen", "--model", "ba", "--n", "150", "--k", "6", "--seed", seed,
            "-o", path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        std::fs::read(path).unwrap()
    };
    assert_eq!(gen("a.edg", "9"), gen("b.edg", "9"));
    assert_ne!(gen("c.edg", "9"), gen("d.edg", "10"));
}

#[test]
fn apriori_reports_all_indicators_for_k4() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.edg");
    let out = run(&["gen", "--canonical", "FUL", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let out = run(&["apriori", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ls_ns_exact"], "16");
    assert!((v["as_sr"].as_f64().unwrap() - 3.0).abs() < 1e-8);
    assert!((v["ls_ac"].as_f64().unwrap() - 4.0).abs() < 1e-8);
    // Every run embeds a reproducibility manifest.
    assert!(v["manifest"]["command"].is_string());
    assert!(v["manifest"]["inputs"].is_object() || v["manifest"]["inputs"].is_array());
}

#[test]
fn attack_trace_has_one_row_per_step() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("net.edg");
    run(&["gen", "--model", "er", "--n", "40", "--k", "4", "-o", net.to_str().unwrap()]);
    let csv = dir.path().join("trace.csv");
    let out = run(&[
        "attack", "--strategy", "mdta", "-o", csv.to_str().unwrap(), net.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "i,delta,n_L,n_NCC,n_D,cnp_exact,cnp_sq");
    // Samples 0..=40: the pre-attack state plus one row per removal.
    assert_eq!(lines.count(), 41);
}

#[test]
fn robustness_json_round_trips_measures() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("net.edg");
    run(&["gen", "--model", "sw-ws", "--n", "60", "--k", "6", "-o", net.to_str().unwrap()]);
    let out = run(&[
        "robustness", "--strategy", "mdta", "--measures", "r1,r3,r9,r15",
        "--scheme", "cd,td", net.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let m = &v["measures"];
    for key in ["r1", "r3", "r9", "r15"] {
        assert!(m[key]["cd"].is_number(), "missing cd for {}: {}", key, v);
        assert!(m[key]["td"].is_number(), "missing td for {}: {}", key, v);
    }
    // The complementary pair sums to 1 in both schemes.
    let sum = m["r3"]["cd"].as_f64().unwrap() + m["r9"]["cd"].as_f64().unwrap();
    assert!((sum - 1.0).abs() < 1e-9, "r3 + r9 = {}", sum);
    assert!(v["threshold"]["t"].is_number());
}

#[test]
fn threshold_agrees_between_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("net.edg");
    run(&["gen", "--model", "er", "--n", "80", "--k", "5", "-o", net.to_str().unwrap()]);
    let out = run(&["threshold", "--strategy", "mdta", net.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let th: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let t1 = th["t"].as_u64().unwrap();

    let out = run(&[
        "robustness", "--strategy", "mdta", "--measures", "r1", "--scheme", "td",
        net.to_str().unwrap(),
    ]);
    let rb: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rb["threshold"]["t"].as_u64().unwrap(), t1);
}

#[test]
fn compare_reproduces_exhaustive_rank_row() {
    let out = run(&[
        "compare", "--nets", "canonical4-undirected", "--strategies", "exa",
        "--measures", "r1", "--ranks",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let rank_row = text
        .lines()
        .find(|l| l.starts_with("exa,r1,rank"))
        .unwrap_or_else(|| panic!("no rank row in output:\n{}", text));
    // Columns: FUL, LOP, STR, CTS, CHA, ISO.
    assert_eq!(rank_row, "exa,r1,rank,1,2,4.5,3,4.5,6");
}

#[test]
fn optimize_writes_improved_network_and_log() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("net.edg");
    run(&["gen", "--model", "er", "--n", "50", "--k", "4", "--seed", "3", "-o", net.to_str().unwrap()]);
    let best = dir.path().join("best.edg");
    let log = dir.path().join("log.csv");
    let out = run(&[
        "optimize", "--iters", "150", "--seed", "1", "-o", best.to_str().unwrap(),
        "--log", log.to_str().unwrap(), net.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(summary["best"].as_f64().unwrap() >= summary["initial"].as_f64().unwrap());
    assert!(best.exists() && log.exists());

    // The rewired output is a loadable graph with the same N and M.
    let orig = netrobust::Graph::from_edge_list_file(Path::new(net.to_str().unwrap())).unwrap();
    let opt = netrobust::Graph::from_edge_list_file(Path::new(best.to_str().unwrap())).unwrap();
    assert_eq!(orig.node_count(), opt.node_count());
    assert_eq!(orig.edge_count(), opt.edge_count());
}

#[test]
fn reproduce_tables_desk_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("tables");
    let out = run(&["reproduce-tables", "--scale", "desk", "-o", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    for name in ["table4.csv", "table3.csv", "table2.csv"] {
        let path = out_dir.join(name);
        assert!(path.exists(), "missing {}", name);
        assert!(std::fs::read_to_string(path).unwrap().lines().count() > 1);
    }
}
