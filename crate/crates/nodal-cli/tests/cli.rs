use std::path::PathBuf;
use std::process::{Command, Output};

fn nodal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn verify_segre_row_passes_and_writes_report() {
    let report = scratch("j15.json");
    let o = nodal(&["verify", "--variety", "J15", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("PASS J15.aut-order"));
    assert!(out.contains("PASS J15.transitive"));
    let json = std::fs::read_to_string(report).unwrap();
    assert!(json.starts_with("{\n  \"claims\""));
    assert!(!json.contains("elapsed_ms"));
}

#[test]
fn aut_of_j5b_is_alt5() {
    let o = nodal(&["aut", "--variety", "j5b"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS J5b.aut: Aut(X) has order 60 and is isomorphic to Alt5"));
}

#[test]
fn failing_row_exits_with_one() {
    let o = nodal(&["verify", "--variety", "J5b"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL J5b.nodes"));
}

#[test]
fn sing_on_user_cubic_with_one_node() {
    let input = scratch("one_node.dsl");
    std::fs::write(&input, "# cone over a smooth quadric, perturbed\nx0*(x1^2 + x2^2 + x3^2 + x4^2) + x1^3 + x2^3 + x3^3 + x4^3\n")
        .unwrap();
    let o = nodal(&["sing", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("PASS one_node.singular-locus"));
    assert!(out.contains("PASS one_node.point.0: type of the singular point (1:0:0:0:0)"));
}

#[test]
fn sing_with_listed_points_that_are_wrong_fails() {
    let input = scratch("wrong_point.dsl");
    std::fs::write(&input, "x0*(x1^2 + x2^2 + x3^2 + x4^2) + x1^3 + x2^3 + x3^3 + x4^3\npoint (0:1:0:0:0)\n").unwrap();
    let o = nodal(&["sing", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn symbolic_suites_pass() {
    for cmd in ["pr1", "eliminations"] {
        let o = nodal(&[cmd]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stdout(&o));
    }
}

#[test]
fn catalog_lists_every_entry() {
    let o = nodal(&["catalog", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let tags: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    assert_eq!(tags, ["J15", "J14", "J9a", "J9b", "J5a", "J5b", "F-J11", "F-J9", "F-4NODE"]);
    let o = nodal(&["catalog", "--variety", "F-J9"]);
    assert!(stdout(&o).contains("relations: A + B + C + D = 0"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify"][..],
        &["verify", "--variety", "J99"],
        &["verify", "--variety", "J15", "--all"],
        &["sing"],
        &["frobnicate"],
        &["verify", "--variety", "F-J9"],
    ] {
        let o = nodal(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
