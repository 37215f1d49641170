use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-embed")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn cayley_counts_and_exports() {
    let o = run(&["cayley", "Z6", "--gens", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 vertices, 6 edges"));

    let o = run(&["cayley", "Z2xR3", "--gens", "(1,*)", "--export", "edges"]);
    assert_eq!(o.status.code(), Some(0));
    let edges = stdout(&o).lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(edges, 9);

    let o = run(&["cayley", "D3", "--gens", "1", "--export", "dot"]);
    assert!(stdout(&o).contains("graph cayley {"));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["cayley", "Z6", "--gens", "7"]).status.code(), Some(2));
    assert_eq!(run(&["cayley", "Q8", "--gens", "1"]).status.code(), Some(2));
    assert_eq!(run(&["genus", "not-a-graph"]).status.code(), Some(2));
    assert_eq!(run(&["verify-paper", "--only", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn genus_reports() {
    let o = run(&["genus", "K3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exact 1"));

    let o = run(&["genus", "C8"]);
    assert!(stdout(&o).contains("exact 0"));

    let o = run(&["genus", "K6,6", "--effort", "0", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("lower 4 via euler-girth"));
}

#[test]
fn genus_reads_files_and_writes_certificates() {
    let dir = std::env::temp_dir().join(format!("cayley-embed-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("k5.txt");
    let cert = dir.join("k5.rot");
    let list: String = (0..5).flat_map(|u| (u + 1..5).map(move |v| format!("{u} {v}\n"))).collect();
    std::fs::write(&edges, list).unwrap();

    let o = run(&["genus", edges.to_str().unwrap(), "--certificate", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exact 1"));
    let o = run(&["genus", cert.to_str().unwrap()]);
    assert!(stdout(&o).contains("10 edges"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_single_suite() {
    let o = run(&["verify", "--only", "bounds"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[PASS] 4"));

    let o = run(&["verify-paper", "--only", "blowup", "--report", "json"]);
    let text = stdout(&o);
    assert!(text.trim_start().starts_with('['));
    assert!(text.contains("\"passed\": true"));
}

#[test]
fn deterministic_output() {
    let a = run(&["genus", "Z6xR2", "--gens", "(2,*) (3,*)", "--budget", "1000", "--seed", "3"]);
    let b = run(&["genus", "Z6xR2", "--gens", "(2,*) (3,*)", "--budget", "1000", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(3));
    assert_eq!(stdout(&a), stdout(&b));
}
