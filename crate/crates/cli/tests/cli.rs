use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn absx(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_absx"));
    cmd.args(args).env_remove("ABSX_WORKERS");
    cmd
}

fn run(args: &[&str]) -> Output {
    absx(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = absx(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn compute_from_argument_and_stdin() {
    let o = run(&["compute", "Bw"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("abs: 2.1213203436\n"));

    // star on five vertices
    let o = run_with_stdin(&["compute"], "D?{\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("abs: 3.0983866770\n"));
    assert!(text.contains("pendants: 4\n"));
}

#[test]
fn compute_rejects_empty_and_malformed_input() {
    assert_eq!(run_with_stdin(&["compute"], "").status.code(), Some(2));
    assert_eq!(run(&["compute", ""]).status.code(), Some(2));
    let o = run(&["compute", "D?"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid graph6"));
}

#[test]
fn construct_families() {
    let o = run(&["construct", "turan", "--n", "5", "--chi", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("edges: 8\n"));
    assert!(text.contains("abs: 6.6466033426\n"));

    let o = run(&["construct", "kite", "--n", "6", "--p", "2"]);
    assert!(stdout(&o).contains("abs: 6.6805591160\n"));

    let o = run(&["construct", "kite", "--n", "4", "--p", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p <= n - 2"));

    assert_eq!(
        run(&["construct", "wheel", "--n", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes_and_caps() {
    assert_eq!(run(&["verify", "--n", "9..9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "8"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "7..5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorems", "T4"]).status.code(), Some(2));

    let o = run(&["verify", "--theorems", "T1", "--n", "5..6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<_> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(rows, ["T1,5,3", "T1,5,4", "T1,6,3", "T1,6,4", "T1,6,5"]);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true,true,pass")));
}

#[test]
fn out_of_hypothesis_rows_are_informational() {
    let o = run(&["verify", "--theorems", "T1", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with(",info"));
}

#[test]
fn workers_from_environment_and_flag() {
    let o = absx(&["verify", "--theorems", "T2", "--n", "5"])
        .env("ABSX_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = absx(&["verify", "--theorems", "T2", "--n", "5", "--workers", "2"])
        .env("ABSX_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("absx-out-{}.csv", std::process::id()));
    let o = run(&["audit", "--n", "4..7", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("audit.csv"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn audit_empty_range_is_header_only() {
    let o = run(&["audit", "--n", "7..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "family,n,param,case,printed,direct,abs_diff,agree\n"
    );
    assert_eq!(
        run(&["audit", "--cases", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn clique_term_agrees_at_every_kite_case() {
    let o = run(&["audit", "--cases", "pendant-clique-term", "--n", "6..8"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 3 + 4 + 5);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn lemmas_report_failure_status() {
    let o = run(&["lemmas", "--n", "4..5"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("\nf-increasing-x,"));
    assert!(text.contains("\n5,21,80,"));
    assert_eq!(run(&["lemmas", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn golden_tables() {
    assert_eq!(stdout(&run(&["audit", "--n", "4..7"])), golden("audit.csv"));
    assert_eq!(
        stdout(&run(&["verify", "--workers", "1"])),
        golden("verify.csv")
    );
    assert_eq!(
        stdout(&run(&[
            "verify",
            "--theorems",
            "T1",
            "--n",
            "5..6",
            "--format",
            "markdown"
        ])),
        golden("verify_t1.md")
    );
}
