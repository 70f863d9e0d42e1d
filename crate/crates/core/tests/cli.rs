use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn fgtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fgtool")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("fgtool-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn hexagon_quiver_is_infinite_cyclic() {
    let o = fgtool(&["quiver", "pi1", &data("hexagon.qv")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("gens:")).count(), 1);
    assert!(out.contains("invariants: rank 1\ntorsion:\n"), "{out}");
    assert!(out.contains("C2=2 C3=3 C4=4 S3=6"), "{out}");
    assert!(out.contains("group: free of rank 1"), "{out}");
}

#[test]
fn van_kampen_on_the_diamond() {
    let o = fgtool(&["vankampen", &data("diamond.qv"), &data("diamond_left.qv"), &data("diamond_right.qv")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("basepoint:"), "{out}");
    assert!(out.contains("group: trivial"), "{out}");
}

#[test]
fn van_kampen_on_three_loops() {
    let o = fgtool(&["vankampen", &data("hubs.qv"), &data("hubs_q1.qv"), &data("hubs_q2.qv")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("group: free of rank 3"), "{}", stdout(&o));
}

#[test]
fn complexes_report_homology() {
    let o = fgtool(&["complex", "h1", "--close-down", &data("projective_plane.sc")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("h1: rank 0\ntorsion: 2"), "{}", stdout(&o));
    let o = fgtool(&["complex", "pi1", "--close-down", &data("torus.sc")]);
    assert!(stdout(&o).contains("invariants: rank 2\ntorsion:\n"), "{}", stdout(&o));
}

#[test]
fn quiver_completion_round_trips_through_the_parser() {
    let o = fgtool(&["quiver", "complete", &data("square.qv")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let path = scratch("square_c.qv", &stdout(&o));
    let again = fgtool(&["quiver", "complete", &path]);
    assert_eq!(stdout(&again), stdout(&o));
}

#[test]
fn theorem2_check_passes() {
    let o = fgtool(&["check", "theorem2", "--seed", "7", "--count", "25", "--max-size", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).trim_end().ends_with("theorem2: 25/25 PASS"), "{}", stdout(&o));
}

#[test]
fn input_errors_exit_with_one() {
    let missing = fgtool(&["quiver", "pi1", &data("no_such_file.qv")]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).contains("cannot read file"), "{}", stderr(&missing));

    let bad = scratch("loop.qv", "vertex a\narrow x a a\n");
    let o = fgtool(&["quiver", "pi1", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let cyclic = scratch("cyclic.qv", "vertex a\nvertex b\narrow x a b\narrow y b a\n");
    assert_eq!(fgtool(&["quiver", "pi1", &cyclic]).status.code(), Some(1));

    let o = fgtool(&["complex", "h1", &data("torus.sc")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("missing face"), "{}", stderr(&o));

    assert_eq!(fgtool(&["poset", "hh1", "--char", "4", &data("chain.po")]).status.code(), Some(1));
    assert_eq!(fgtool(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn van_kampen_hypothesis_failures_exit_with_one() {
    let o = fgtool(&["vankampen", &data("diamond.qv"), &data("diamond_left.qv"), &data("diamond_left.qv")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cover"), "{}", stderr(&o));
    let o = fgtool(&[
        "vankampen",
        "--basepoint",
        "nowhere",
        &data("diamond.qv"),
        &data("diamond_left.qv"),
        &data("diamond_right.qv"),
    ]);
    assert_eq!(o.status.code(), Some(1));
}
