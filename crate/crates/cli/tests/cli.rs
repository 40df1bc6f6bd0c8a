//! End-to-end tests of the command-line surface, run against the bundled
//! example graphs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_surface-flows"))
}

fn graphs_dir() -> PathBuf {
    // workspace root = two levels up from the cli crate
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("graphs")
}

fn graph(name: &str) -> String {
    graphs_dir().join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn first_line(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

#[test]
fn faces_reports_bouquet_genus() {
    assert_eq!(first_line(&["faces", &graph("bouquet2.json")]), "faces: 1, genus: 1");
    assert_eq!(first_line(&["faces", &graph("loop.json")]), "faces: 2, genus: 0");
    assert_eq!(first_line(&["faces", &graph("bouquet4.json")]), "faces: 1, genus: 2");
}

#[test]
fn count_flows_formula_fixture() {
    let out = first_line(&[
        "count-flows",
        &graph("bouquet2.json"),
        "--group",
        "symmetric:3",
        "--nowhere-identity",
        "--method",
        "formula",
    ]);
    assert_eq!(out, "7");
}

#[test]
fn partition_brute_fixture() {
    let out = first_line(&[
        "partition",
        &graph("loop.json"),
        "--group",
        "cyclic:2",
        "--class-function",
        "regular",
        "--method",
        "brute",
    ]);
    assert_eq!(out, "4");
}

#[test]
fn brute_and_closed_agree_on_bundled_graphs() {
    let names = [
        "loop.json",
        "digon.json",
        "theta-planar.json",
        "theta-twisted.json",
        "k4.json",
        "bouquet0.json",
        "bouquet2.json",
        "bouquet4.json",
        "dumbbell.json",
    ];
    for name in names {
        let path = graph(name);
        for group in ["cyclic:3", "symmetric:3"] {
            let brute = first_line(&[
                "count-flows", &path, "--group", group, "--method", "brute",
            ]);
            let closed = first_line(&[
                "count-flows", &path, "--group", group, "--method", "closed",
            ]);
            assert_eq!(brute, closed, "{name} {group}");
            let nb = first_line(&[
                "count-flows", &path, "--group", group, "--nowhere-identity",
                "--method", "brute",
            ]);
            let nf = first_line(&[
                "count-flows", &path, "--group", group, "--nowhere-identity",
                "--method", "formula",
            ]);
            assert_eq!(nb, nf, "{name} {group} nowhere-identity");
            let pb = first_line(&[
                "partition", &path, "--group", group, "--class-function", "regular",
                "--method", "brute",
            ]);
            let pc = first_line(&[
                "partition", &path, "--group", group, "--class-function", "regular",
                "--method", "closed",
            ]);
            assert_eq!(pb, pc, "{name} {group} partition");
        }
    }
}

#[test]
fn frobenius_fixture() {
    let out = first_line(&[
        "frobenius", "--group", "symmetric:3", "--class", "0", "--genus", "1",
        "--method", "formula",
    ]);
    assert_eq!(out, "18");
    let brute = first_line(&[
        "frobenius", "--group", "symmetric:3", "--class", "0", "--genus", "1",
        "--method", "brute",
    ]);
    assert_eq!(brute, "18");
}

#[test]
fn group_show_json_structure() {
    let text = stdout(&["group", "show", "quaternion", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["order"], 8);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 5);
    let chars = doc["characters"].as_array().unwrap();
    assert_eq!(chars.len(), 5);
    assert_eq!(chars[0].as_array().unwrap().len(), 5);
    // complex values are [re, im] pairs
    assert!(chars[0][0].as_array().unwrap().len() == 2);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["group", "show", "product:cyclic:2,cyclic:3", "--json"],
        vec!["dual", &*Box::leak(graph("k4.json").into_boxed_str())],
        vec![
            "duality", "verify",
            &*Box::leak(graph("theta-planar.json").into_boxed_str()),
            "--group", "symmetric:3", "--json",
        ],
    ] {
        let a = stdout(&args);
        let b = stdout(&args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn dual_document_round_trips_through_parser() {
    let text = stdout(&["dual", &graph("theta-planar.json")]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let graph_doc = serde_json::to_string(&doc["graph"]).unwrap();
    // dual of planar theta: 3 vertices (faces), 3 edges
    let reparsed = surface_flows_core::graph::parse_graph(&graph_doc).unwrap();
    assert_eq!(reparsed.vertex_count(), 3);
    assert_eq!(reparsed.edge_count(), 3);
    assert_eq!(reparsed.genus().unwrap(), 0);
}

#[test]
fn cover_and_tension_check() {
    let dir = std::env::temp_dir().join("surface-flows-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let labels = dir.join("labels.json");
    std::fs::write(&labels, r#"{"group": "cyclic:2", "a1": 1, "b1": 1}"#).unwrap();
    let labels = labels.to_string_lossy().into_owned();

    let check = stdout(&["tension", "check", &graph("bouquet2.json"), "--labels", &labels]);
    assert!(check.contains("flow: true"), "{check}");
    assert!(check.contains("local-tension: true"), "{check}");
    assert!(check.contains("global-tension: false"), "{check}");

    let cover = stdout(&["cover", &graph("bouquet2.json"), "--labels", &labels]);
    let doc: serde_json::Value = serde_json::from_str(&cover).unwrap();
    assert_eq!(doc["sheets"].as_object().unwrap().len(), 2);
    let cover_graph = serde_json::to_string(&doc["graph"]).unwrap();
    let reparsed = surface_flows_core::graph::parse_graph(&cover_graph).unwrap();
    assert_eq!(reparsed.vertex_count(), 2);
    assert_eq!(reparsed.edge_count(), 4);
}

#[test]
fn duality_verify_passes_on_bundled_planar_and_toroidal_graphs() {
    for (name, group) in [
        ("theta-planar.json", "cyclic:3"),
        ("k4.json", "cyclic:4"),
        ("bouquet2.json", "cyclic:2"),
        ("bouquet2.json", "symmetric:3"),
        ("theta-twisted.json", "symmetric:3"),
    ] {
        let out = run(&["duality", "verify", &graph(name), "--group", group]);
        assert!(
            out.status.success(),
            "{name}/{group}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn exit_codes() {
    // usage error -> 2
    let usage = run(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
    // domain error (malformed group) -> 1
    let domain = run(&[
        "count-flows", &graph("loop.json"), "--group", "nosuch:3",
    ]);
    assert_eq!(domain.status.code(), Some(1));
    // domain error (missing file) -> 1
    let missing = run(&["faces", "no-such-file.json"]);
    assert_eq!(missing.status.code(), Some(1));
    // budget exceeded -> 1
    let budget = run(&[
        "count-flows", &graph("k4.json"), "--group", "quaternion",
        "--method", "brute", "--budget", "10",
    ]);
    assert_eq!(budget.status.code(), Some(1));
}

#[test]
fn bundled_graphs_match_library_corpus() {
    use surface_flows_core::corpus;
    let pairs: Vec<(&str, surface_flows_core::graph::EmbeddedGraph)> = vec![
        ("loop.json", corpus::loop_graph()),
        ("digon.json", corpus::digon()),
        ("theta-planar.json", corpus::theta_planar()),
        ("theta-twisted.json", corpus::theta_twisted()),
        ("k4.json", corpus::k4_planar()),
        ("bouquet0.json", corpus::bouquet(0)),
        ("bouquet2.json", corpus::bouquet(1)),
        ("bouquet4.json", corpus::bouquet(2)),
        ("dumbbell.json", corpus::dumbbell()),
    ];
    for (file, expected) in pairs {
        let text = std::fs::read_to_string(graphs_dir().join(file)).unwrap();
        let parsed = surface_flows_core::graph::parse_graph(&text).unwrap();
        assert!(parsed.same_graph(&expected), "{file} drifted from the corpus builder");
    }
}
