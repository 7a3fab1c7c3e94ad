//! End-to-end tests of the `netcomp` binary: subcommand behavior, output
//! formats, reproducibility in deterministic mode and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_netcomp")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(binary())
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_success(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!(
            "netcomp-cli-{tag}-{}-{}",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .unwrap()
                .as_nanos()
        ));
        std::fs::create_dir_all(&dir).unwrap();
        TempDir(dir)
    }

    fn path(&self) -> &Path {
        &self.0
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        std::fs::remove_dir_all(&self.0).ok();
    }
}

const FAST_EMBED: &[&str] = &[
    "--dim",
    "8",
    "--walks",
    "2",
    "--walk-length",
    "10",
    "--epochs",
    "2",
    "--realizations",
    "2",
    "--deterministic",
];

#[test]
fn generate_writes_edge_list_and_sidecar() {
    let dir = TempDir::new("gen");
    let out = run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "1000", "--k", "10", "--p", "0.3", "--seed", "7", "--out", "ws.edges"],
    );
    let report = assert_success(&out);
    assert_eq!(report["edges"], 5000);
    assert_eq!(report["spec"]["model"], "WS");
    assert_eq!(report["spec"]["N"], 1000);

    let listing = std::fs::read_to_string(dir.path().join("ws.edges")).unwrap();
    assert_eq!(listing.lines().count(), 5001); // header plus 5000 edges
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("ws.edges.spec.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["seed"], 7);

    // byte-identical regeneration from the same spec
    let _ = run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "1000", "--k", "10", "--p", "0.3", "--seed", "7", "--out", "ws2.edges"],
    );
    assert_eq!(
        std::fs::read(dir.path().join("ws.edges")).unwrap(),
        std::fs::read(dir.path().join("ws2.edges")).unwrap()
    );

    // all degrees equal for the plain ring lattice
    let out = run_in(
        dir.path(),
        &["generate", "--model", "kregular", "--n", "1000", "--k", "10", "--out", "ring.edges"],
    );
    let report = assert_success(&out);
    assert_eq!(report["edges"], 5000);
}

#[test]
fn compare_self_is_zero_for_deterministic_measures() {
    let dir = TempDir::new("cmp-self");
    run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "80", "--k", "6", "--p", "0.2", "--seed", "1", "--out", "g.edges"],
    );
    for measure in ["dsp", "dc"] {
        let out = run_in(dir.path(), &["compare", "g.edges", "g.edges", "--measure", measure]);
        let report = assert_success(&out);
        assert_eq!(report["value"], 0.0, "{measure}");
        assert_eq!(report["kind"], "comparison");
        assert_eq!(report["graph_a"], "g");
    }
}

#[test]
fn compare_all_measures_stay_in_range() {
    let dir = TempDir::new("cmp-range");
    run_in(
        dir.path(),
        &["generate", "--model", "kregular", "--n", "60", "--k", "6", "--out", "a.edges"],
    );
    run_in(
        dir.path(),
        &["generate", "--model", "ba", "--n", "60", "--m", "3", "--seed", "2", "--out", "b.edges"],
    );
    for measure in ["dne", "dsp", "dc", "dm"] {
        let mut args = vec!["compare", "a.edges", "b.edges", "--measure", measure];
        args.extend_from_slice(FAST_EMBED);
        let out = run_in(dir.path(), &args);
        let report = assert_success(&out);
        let value = report["value"].as_f64().unwrap();
        assert!(value.is_finite() && (0.0..=1.0).contains(&value), "{measure}: {value}");
    }
}

#[test]
fn compare_is_byte_reproducible_in_deterministic_mode() {
    let dir = TempDir::new("cmp-repro");
    run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "50", "--k", "4", "--p", "0.3", "--seed", "3", "--out", "g.edges"],
    );
    run_in(
        dir.path(),
        &["generate", "--model", "ba", "--n", "50", "--m", "2", "--seed", "4", "--out", "h.edges"],
    );
    let mut args = vec!["compare", "g.edges", "h.edges", "--measure", "dne", "--seed", "11"];
    args.extend_from_slice(FAST_EMBED);
    let first = run_in(dir.path(), &args);
    let second = run_in(dir.path(), &args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "identical bytes expected");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = TempDir::new("config");
    run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "40", "--k", "4", "--p", "0.1", "--seed", "5", "--out", "g.edges"],
    );
    std::fs::write(
        dir.path().join("cfg.json"),
        r#"{"measure":"dsp","w1":0.4,"w2":0.4,"w3":0.2}"#,
    )
    .unwrap();
    let out = run_in(dir.path(), &["compare", "g.edges", "g.edges", "--config", "cfg.json"]);
    let report = assert_success(&out);
    assert_eq!(report["measure"], "dsp");
    assert_eq!(report["params"]["w3"], 0.2);

    let out = run_in(
        dir.path(),
        &["compare", "g.edges", "g.edges", "--config", "cfg.json", "--w2", "0.5", "--w3", "0.1"],
    );
    let report = assert_success(&out);
    assert_eq!(report["params"]["w1"], 0.4); // from config
    assert_eq!(report["params"]["w2"], 0.5); // flag wins
    assert_eq!(report["params"]["w3"], 0.1);
}

#[test]
fn sweep_emits_symmetric_round_trippable_csv() {
    let dir = TempDir::new("sweep");
    let mut args = vec![
        "sweep", "--model", "ws", "--n", "40", "--k", "4", "--grid", "0.1,0.9",
        "--measure", "dne", "--seed", "5", "--out-dir", "out",
    ];
    args.extend_from_slice(FAST_EMBED);
    let out = run_in(dir.path(), &args);
    let report = assert_success(&out);
    assert_eq!(report["labels"][0], "p=0.1");

    let (labels, matrix) =
        netcomp::experiments::read_matrix_csv(&dir.path().join("out/sweep_mean.csv")).unwrap();
    assert_eq!(labels, vec!["p=0.1", "p=0.9"]);
    assert_eq!(matrix.len(), 2);
    assert_eq!(matrix[0][1], matrix[1][0], "symmetric matrix");
    for (i, row) in matrix.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let meta = report["mean"][i][j].as_f64().unwrap();
            assert_eq!(*v, meta, "CSV round-trips the exact value");
        }
    }

    // deterministic reruns produce identical artifact bytes
    let before = std::fs::read(dir.path().join("out/sweep_mean.csv")).unwrap();
    let out = run_in(dir.path(), &args);
    assert!(out.status.success());
    let after = std::fs::read(dir.path().join("out/sweep_mean.csv")).unwrap();
    assert_eq!(before, after);
}

#[test]
fn sweep_single_point_grid_gives_noise_floor() {
    let dir = TempDir::new("sweep1");
    let mut args = vec![
        "sweep", "--model", "ba", "--n", "40", "--grid", "2", "--measure", "dne", "--seed", "2",
    ];
    args.extend_from_slice(FAST_EMBED);
    let out = run_in(dir.path(), &args);
    let report = assert_success(&out);
    let value = report["mean"][0][0].as_f64().unwrap();
    assert!(value.is_finite() && (0.0..=1.0).contains(&value));
    assert!(value < 0.5, "self-dissimilarity noise floor unexpectedly large: {value}");
}

#[test]
fn nullmodels_curves_and_randomize_mode() {
    let dir = TempDir::new("null");
    run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "60", "--k", "6", "--p", "0.1", "--seed", "1", "--out", "g.edges"],
    );

    // randomize-only mode: edge list with identical degree sequence
    let out = run_in(
        dir.path(),
        &["nullmodels", "--input", "g.edges", "--dk", "2.0", "--out", "g_dk2.edges", "--seed", "4"],
    );
    let report = assert_success(&out);
    assert_eq!(report["order"], "2.0");
    let original = netcomp::graph::read_edge_list_path(&dir.path().join("g.edges")).unwrap();
    let randomized = netcomp::graph::read_edge_list_path(&dir.path().join("g_dk2.edges")).unwrap();
    assert_eq!(original.graph.degree_sequence(), randomized.graph.degree_sequence());

    // curves mode with a small grid
    let mut args = vec![
        "nullmodels", "--input", "g.edges", "--orders", "1.0,2.5", "--lambda-grid", "0,1",
        "--seed", "9", "--out-dir", "out",
    ];
    args.extend_from_slice(FAST_EMBED);
    let out = run_in(dir.path(), &args);
    let report = assert_success(&out);
    assert_eq!(report["orders"], serde_json::json!(["1.0", "2.5"]));
    let (header, rows) =
        netcomp::experiments::read_table_csv(&dir.path().join("out/nullmodels.csv")).unwrap();
    assert_eq!(header[0], "lambda");
    assert_eq!(header.len(), 5); // lambda + (mean, std) per order
    assert_eq!(rows.len(), 2);

    // empty order list is an input error
    let out = run_in(dir.path(), &["nullmodels", "--input", "g.edges", "--orders", ""]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn perturb_edge_counts_follow_the_grid() {
    let dir = TempDir::new("perturb");
    run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "100", "--k", "10", "--p", "0.2", "--seed", "3", "--out", "g.edges"],
    );
    // |E| = 500; deletions of 10%..50% leave 450..250 edges
    let mut args = vec![
        "perturb", "--input", "g.edges", "--f-grid", "-0.5,-0.3,-0.1,0,0.1",
        "--measure", "dne", "--seed", "8", "--out-dir", "out",
    ];
    args.extend_from_slice(FAST_EMBED);
    let out = run_in(dir.path(), &args);
    let report = assert_success(&out);
    assert_eq!(
        report["edge_counts"],
        serde_json::json!([250, 350, 450, 500, 550])
    );
    // f = 0 compares the graph against itself: only embedding noise remains
    let baseline = report["mean"][3].as_f64().unwrap();
    assert!(baseline.is_finite() && baseline < 0.5, "noise baseline {baseline}");
    let (header, rows) =
        netcomp::experiments::read_table_csv(&dir.path().join("out/perturb.csv")).unwrap();
    assert_eq!(header, vec!["f", "mean", "std", "edges"]);
    assert_eq!(rows.len(), 5);
}

#[test]
fn stats_reports_reference_metrics() {
    let dir = TempDir::new("stats");
    // complete graph on 5 nodes
    let mut text = String::from("# N=5\n");
    for u in 0..5 {
        for v in (u + 1)..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    std::fs::write(dir.path().join("k5.edges"), text).unwrap();
    let out = run_in(dir.path(), &["stats", "--input", "k5.edges"]);
    let report = assert_success(&out);
    assert_eq!(report["average_degree"], 4.0);
    assert_eq!(report["average_path_length"], 1.0);
    assert_eq!(report["diameter"], 1);
    assert_eq!(report["modularity"], 0.0);
}

#[test]
fn correlate_handles_collinear_and_generated_corpora() {
    let dir = TempDir::new("corr");
    let results = dir.path().join("results");
    std::fs::create_dir_all(&results).unwrap();

    // perfectly collinear synthetic input: r = 1 against dsp
    for (i, v) in [0.1, 0.2, 0.3, 0.4].iter().enumerate() {
        let comparison = |measure: &str, value: f64| {
            serde_json::json!({
                "kind": "comparison",
                "graph_a": format!("g{i}"),
                "graph_b": format!("h{i}"),
                "measure": measure,
                "value": value,
            })
        };
        std::fs::write(
            results.join(format!("c{i}_dne.json")),
            comparison("dne", *v).to_string(),
        )
        .unwrap();
        std::fs::write(
            results.join(format!("c{i}_dsp.json")),
            comparison("dsp", 2.0 * v).to_string(),
        )
        .unwrap();
        for (label, avl) in [(format!("g{i}"), 1.0 + v), (format!("h{i}"), 1.0)] {
            std::fs::write(
                results.join(format!("{label}.stats.json")),
                serde_json::json!({
                    "kind": "stats",
                    "label": label,
                    "average_path_length": avl,
                    "link_density": 0.5 - v / 4.0,
                    "modularity": v * v,
                })
                .to_string(),
            )
            .unwrap();
        }
    }
    let out = run_in(dir.path(), &["correlate", "--dir", "results"]);
    let report = assert_success(&out);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    let dsp_entry = entries.iter().find(|e| e["against"] == "dsp").unwrap();
    assert_eq!(dsp_entry["r"], 1.0);
    for entry in entries {
        assert!(entry["r"].as_f64().unwrap().is_finite());
        assert!(entry["p"].as_f64().unwrap().is_finite());
    }

    // too few pairs is an input error
    let sparse = dir.path().join("sparse");
    std::fs::create_dir_all(&sparse).unwrap();
    let out = run_in(dir.path(), &["correlate", "--dir", "sparse"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn correlate_over_a_generated_corpus() {
    let dir = TempDir::new("corr-gen");
    std::fs::create_dir_all(dir.path().join("results")).unwrap();

    // four structurally distinct graphs
    let specs: [&[&str]; 4] = [
        &["--model", "ws", "--n", "50", "--k", "4", "--p", "0.05"],
        &["--model", "ws", "--n", "50", "--k", "8", "--p", "0.6"],
        &["--model", "ba", "--n", "50", "--m", "2"],
        &["--model", "ba", "--n", "50", "--m", "5"],
    ];
    for (i, spec) in specs.iter().enumerate() {
        let name = format!("g{i}.edges");
        let mut args = vec!["generate"];
        args.extend_from_slice(spec);
        let seed = format!("{}", i + 1);
        args.extend_from_slice(&["--seed", &seed, "--out", &name]);
        assert_success(&run_in(dir.path(), &args));
        let stats_out = format!("results/g{i}.stats.json");
        assert_success(&run_in(dir.path(), &["stats", "--input", &name, "--out", &stats_out]));
    }
    for a in 0..4 {
        for b in (a + 1)..4 {
            for measure in ["dne", "dsp"] {
                let fa = format!("g{a}.edges");
                let fb = format!("g{b}.edges");
                let out_file = format!("results/c{a}{b}_{measure}.json");
                let mut args = vec![
                    "compare", &fa, &fb, "--measure", measure, "--seed", "7", "--out", &out_file,
                ];
                args.extend_from_slice(FAST_EMBED);
                assert_success(&run_in(dir.path(), &args));
            }
        }
    }
    let report = assert_success(&run_in(dir.path(), &["correlate", "--dir", "results"]));
    assert_eq!(report["pair_count"], 6);
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    for entry in entries {
        assert!(entry["r"].as_f64().unwrap().is_finite());
        assert!(entry["p"].as_f64().unwrap().is_finite());
        assert_eq!(entry["points"], 6);
    }
}

#[test]
fn exit_codes_distinguish_input_and_numeric_failures() {
    let dir = TempDir::new("exit");
    // missing file: input error
    let out = run_in(dir.path(), &["compare", "missing.edges", "missing.edges", "--measure", "dsp"]);
    assert_eq!(out.status.code(), Some(2));

    // invalid generator parameters: input error
    let out = run_in(
        dir.path(),
        &["generate", "--model", "ws", "--n", "10", "--k", "3", "--p", "0.1", "--out", "x.edges"],
    );
    assert_eq!(out.status.code(), Some(2));

    // dense-size guard on the communicability measure: numeric failure
    run_in(
        dir.path(),
        &["generate", "--model", "ba", "--n", "5001", "--m", "1", "--seed", "1", "--out", "big.edges"],
    );
    let out = run_in(dir.path(), &["compare", "big.edges", "big.edges", "--measure", "dc"]);
    assert_eq!(out.status.code(), Some(3));

    // malformed edge list names the line
    std::fs::write(dir.path().join("bad.edges"), "0 1\nbroken\n").unwrap();
    let out = run_in(dir.path(), &["stats", "--input", "bad.edges"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
