//! End-to-end runs of the `twoplane` binary: output text, file handling,
//! and the exit-code contract (0 ok, 2 unusable input, 3 bad embedding,
//! 4 too deep, 6 over a size cap).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use twoplane_cli::document::{GraphDocument, IdKey};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twoplane"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary must spawn")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout must be UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code (signal?)")
}

#[test]
fn layers_reports_the_octahedron_decomposition() {
    let out = run(&["layers", fixture("octahedron.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out), "k=2\nL1: 0 1 2\nL2: 3 4 5\n");
}

#[test]
fn gen_reproduces_every_committed_fixture_byte_for_byte() {
    for (spec, file) in [
        (vec!["gen", "octahedron"], "octahedron.json"),
        (vec!["gen", "k4"], "k4.json"),
        (vec!["gen", "hexagon"], "hexagon.json"),
        (vec!["gen", "nested"], "nested.json"),
    ] {
        let out = run(&spec);
        assert_eq!(code(&out), 0);
        let committed = std::fs::read(fixture(file)).expect("fixture must exist");
        assert_eq!(out.stdout, committed, "{file} drifted");
    }
}

#[test]
fn forests_partitions_and_replays_the_octahedron() {
    let trace_path = tmp("octahedron-trace.json");
    let out = run(&[
        "forests",
        fixture("octahedron.json").to_str().unwrap(),
        "--validate",
        "--trace",
        trace_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("sizes: 3/3"));
    assert!(text.contains("replay=ok steps=4"));
    assert!(text.ends_with("valid=true\n"));
    let trace = std::fs::read_to_string(&trace_path).unwrap();
    assert!(trace.contains("degree_four"));
    assert!(trace.contains("hash_before"));
}

#[test]
fn outerplane_meets_the_bound_on_the_octahedron() {
    let out = run(&["outerplane", fixture("octahedron.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("kept: 2 3 4 5"));
    assert!(text.contains("size=4 bound=4 deleted=2"));
}

#[test]
fn k_pairwise_accepts_the_four_layer_drawing() {
    let out = run(&[
        "outerplane",
        fixture("nested.json").to_str().unwrap(),
        "--k-pairwise",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("size=8 bound=8"));
    assert!(text.contains("index=1"));
}

#[test]
fn malformed_json_exits_2() {
    let path = tmp("not-json.json");
    std::fs::write(&path, "where is the json").unwrap();
    let out = run(&["layers", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_fields_exit_2() {
    let path = tmp("extra-field.json");
    let mut text = std::fs::read_to_string(fixture("k4.json")).unwrap();
    text = text.replacen(
        "\"format_version\"",
        "\"coordinates\": [],\n  \"format_version\"",
        1,
    );
    std::fs::write(&path, text).unwrap();
    let out = run(&["layers", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn wrong_version_exits_2() {
    let path = tmp("version-9.json");
    let text = std::fs::read_to_string(fixture("k4.json")).unwrap();
    std::fs::write(&path, text.replacen(": 1,", ": 9,", 1)).unwrap();
    let out = run(&["layers", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("format_version"));
}

#[test]
fn corrupt_rotations_exit_3() {
    let path = tmp("asymmetric.json");
    let text = std::fs::read_to_string(fixture("octahedron.json")).unwrap();
    let mut doc = GraphDocument::from_json(&text).unwrap();
    doc.rotations.get_mut(&IdKey(0)).unwrap().retain(|&n| n != 1);
    std::fs::write(&path, doc.to_json()).unwrap();
    let out = run(&["layers", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn too_deep_input_exits_4() {
    for sub in ["forests", "outerplane"] {
        let out = run(&[sub, fixture("nested.json").to_str().unwrap()]);
        assert_eq!(code(&out), 4, "{sub} must refuse a 4-deep drawing");
        assert!(String::from_utf8_lossy(&out.stderr).contains("outerplanarity"));
    }
}

#[test]
fn oracle_over_the_cap_exits_6() {
    let path = tmp("linked-five.json");
    let gen = run(&["gen", "linked", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&gen), 0);
    let out = run(&["oracle", path.to_str().unwrap(), "--outerplane"]);
    assert_eq!(code(&out), 6);
}

#[test]
fn cap_environment_variable_tightens_the_oracle() {
    let out = bin()
        .args(["oracle", fixture("octahedron.json").to_str().unwrap(), "--forest"])
        .env("TWOPLANE_ORACLE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(code(&out), 6);

    let out = bin()
        .args(["oracle", fixture("octahedron.json").to_str().unwrap(), "--forest"])
        .env("TWOPLANE_ORACLE_CAP", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn oracle_cross_checks_the_algorithms_on_the_octahedron() {
    let path = fixture("octahedron.json");
    for (flag, optimum) in [("--forest", 3), ("--outerplane", 4)] {
        let out = run(&["oracle", path.to_str().unwrap(), flag, "--compare"]);
        assert_eq!(code(&out), 0);
        let text = stdout_of(&out);
        assert!(text.contains(&format!("optimum={optimum}")));
        assert!(text.contains("ok=true"));
    }
    let out = run(&["oracle", path.to_str().unwrap(), "--arboricity"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("arboricity optimum=2"));
}

#[test]
fn infeasible_random_spec_exits_2() {
    let out = run(&["gen", "random", "3", "2", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn render_svg_draws_one_polygon_per_face() {
    let out = run(&[
        "render",
        fixture("octahedron.json").to_str().unwrap(),
        "--svg",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).matches("<polygon").count(), 8);
}

#[test]
fn render_dot_lists_each_edge_once() {
    let out = run(&[
        "render",
        fixture("octahedron.json").to_str().unwrap(),
        "--dot",
        "--overlay",
        "forests",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.matches(" -- ").count(), 12);
    assert_eq!(text.matches("style=filled").count(), 6);
}

#[test]
fn render_requires_exactly_one_format() {
    let path = fixture("k4.json");
    let none = run(&["render", path.to_str().unwrap()]);
    assert_eq!(code(&none), 2);
    let both = run(&["render", path.to_str().unwrap(), "--dot", "--svg"]);
    assert_eq!(code(&both), 2);
}

#[test]
fn stdin_is_accepted_for_input() {
    use std::io::Write;
    let mut child = bin()
        .args(["layers", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    let doc = std::fs::read(fixture("k4.json")).unwrap();
    child.stdin.as_mut().unwrap().write_all(&doc).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "k=2\nL1: 0 1 2\nL2: 3\n"
    );
}

#[test]
fn scan_reports_every_instance() {
    let out = run(&[
        "scan", "--count", "6", "--n-max", "9", "--k", "2", "--seed", "11",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("tested=6 skipped=0 violations=0"));
    assert!(text.contains("min ratio:"));
}

#[test]
fn committed_fixtures_round_trip_through_parse_and_serialize() {
    for file in ["octahedron.json", "k4.json", "hexagon.json", "nested.json"] {
        let text = std::fs::read_to_string(fixture(file)).unwrap();
        let doc = GraphDocument::from_json(&text).unwrap();
        let g = doc.to_graph().unwrap();
        assert_eq!(GraphDocument::from_graph(&g).to_json(), text, "{file}");
    }
}
