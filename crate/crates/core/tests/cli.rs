//! End-to-end runs of the `media-draw` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_media-draw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(bytes) = stdin {
        child.stdin.take().unwrap().write_all(bytes).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn generate(family: &str, n: &str) -> Vec<u8> {
    let out = run(&["generate", family, n], None);
    assert!(out.status.success());
    out.stdout
}

#[test]
fn hypercube_six_lattice_drawing() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("q6.svg");
    let out = run(&["draw-lattice", "-", "-o", svg.to_str().unwrap()], Some(&generate("hypercube", "6")));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 64);
    assert_eq!(text.matches("<line").count(), 192);
    assert_eq!(text.matches("<g class=\"class-").count(), 6);
}

#[test]
fn weak_orders_planar_drawing_is_accepted() {
    let out = run(&["draw-planar", "-"], Some(&generate("weak-orders", "3")));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("<circle").count(), 13);
    assert_eq!(text.matches("<line").count(), 18);
}

#[test]
fn permutahedron_is_rejected_with_stage() {
    let out = run(&["draw-planar", "-"], Some(&generate("permutations", "4")));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("rejected at dual_arrangement"), "{err}");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["analyze", "-"], Some(b"medium 1\n")).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file"], None).status.code(), Some(2));
    assert_eq!(run(&["generate", "trees", "3"], None).status.code(), Some(2));
    assert_eq!(run(&["generate", "permutations", "9"], None).status.code(), Some(2));
    let bad = b"medium 1\nstate a 0 0\nstate b 1 1\n";
    let out = run(&["analyze", "-"], Some(bad));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an isometric embedding"));
}

#[test]
fn analyze_and_verify_reports() {
    let out = run(&["analyze", "-"], Some(&generate("weak-orders", "3")));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("states: 13\n"));
    assert!(text.contains("isometric dimension: 6\n"));
    assert!(text.contains("lattice dimension: 3\n"));
    assert!(text.contains("symmetric drawing: yes\n"));
    let out = run(&["verify", "-"], Some(&generate("grid", "3x4")));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS lattice drawing property 5"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn svg_output_is_byte_identical_across_runs() {
    let input = generate("partial-orders", "3");
    let a = run(&["draw-planar", "-"], Some(&input)).stdout;
    let b = run(&["draw-planar", "-"], Some(&input)).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn json_generation_round_trips() {
    let json = run(&["generate", "grid", "2x3", "--format", "json"], None).stdout;
    assert!(json.starts_with(b"{"));
    let out = run(&["analyze", "-"], Some(&json));
    assert!(String::from_utf8(out.stdout).unwrap().contains("states: 6\n"));
}
