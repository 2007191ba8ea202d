use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclewidth")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn gen_is_reproducible_and_formats_agree() {
    let a = run(&["gen", "random-cubic:12:5"]);
    let b = run(&["gen", "random-cubic:12", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let gr = stdout(&run(&["gen", "disjoint-cycles:5,3", "--format", "gr"]));
    assert!(gr.starts_with("p tw 8 8\n"));
}

#[test]
fn treewidth_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.g6", &stdout(&run(&["gen", "grid:3x3"])));
    let td = dir.path().join("g.td");
    let o = run(&["tw", &g, "--out", td.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("treewidth 3"));
    assert_eq!(run(&["verify", "td", &g, td.to_str().unwrap()]).status.code(), Some(0));
    let bad = write(dir.path(), "bad.td", "s td 1 9 9\nb 1 1 2 3 4 5 6 7 8\n");
    assert_eq!(run(&["verify", "td", &g, &bad]).status.code(), Some(1));
    let uncovered = write(dir.path(), "u.td", "s td 1 8 9\nb 1 1 2 3 4 5 6 7 8\n");
    assert_eq!(run(&["verify", "td", &g, &uncovered]).status.code(), Some(1));
}

#[test]
fn pack_hit_minor_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k7.g6", &stdout(&run(&["gen", "complete:7"])));

    let pack = run(&["pack", &g, "--ell", "3"]);
    assert_eq!(stdout(&pack).lines().count(), 2);
    let p = write(dir.path(), "p.txt", &stdout(&pack));
    assert!(run(&["verify", "packing", &g, &p, "--ell", "3"]).status.success());

    let hit = run(&["hit", &g, "--ell", "3"]);
    assert_eq!(stdout(&hit).split_whitespace().count(), 5);
    let h = write(dir.path(), "h.txt", &stdout(&hit));
    assert!(run(&["verify", "hitting", &g, &h, "--ell", "3"]).status.success());

    assert!(stdout(&run(&["minor", &g, "--spec", "4,3"])).starts_with("MINOR"));
    assert_eq!(stdout(&run(&["minor", &g, "--spec", "4,4"])), "NONE\n");

    let out = run(&["decompose", &g, "--spec", "3,3"]);
    assert!(stdout(&out).starts_with("MINOR"));
    let c = write(dir.path(), "o.txt", &stdout(&out));
    assert!(run(&["verify", "outcome", &g, &c, "--spec", "3,3"]).status.success());
    assert_eq!(run(&["verify", "outcome", &g, &c, "--spec", "7,7"]).status.code(), Some(1));
}

#[test]
fn witness_and_exit_codes() {
    let o = run(&["witness", "--spec", "3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D~{\n");
    assert_eq!(run(&["witness", "--spec", "6,6"]).status.code(), Some(3));
    assert_eq!(run(&["witness", "--spec", "2,3"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["tw", "/nonexistent/graph"]).status.code(), Some(3));
}

#[test]
fn budget_exhaustion_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.g6", &stdout(&run(&["gen", "complete:9"])));
    assert_eq!(run(&["pack", &g, "--ell", "3", "--budget", "5"]).status.code(), Some(2));
}

#[test]
fn sweep_writes_verifiable_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let o = run(&["sweep", "--corpus", "connected:5", "--ell", "4,5", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * (1 + 1 + 2 + 6 + 21));
    assert!(dir.path().join("rows.certs/row-000000.txt").exists());
    assert!(run(&["verify", "sweep", csv.to_str().unwrap()]).status.success());

    // a forged hitting size must be caught
    let forged = text.replacen(",4,1,1,", ",4,1,2,", 1);
    assert_ne!(forged, text);
    std::fs::write(&csv, forged).unwrap();
    assert_eq!(run(&["verify", "sweep", csv.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn girth_demo_csv() {
    let o = stdout(&run(&["girth-demo", "--sizes", "4", "--seeds", "0"]));
    assert_eq!(o, "n,seed,girth,tw_lower,tw_upper,tw_exact\n4,0,3,3,3,true\n");
}
