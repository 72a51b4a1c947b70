//! Black-box tests of the `toric-ci` binary: argument handling, text
//! formats, and the exit-code contract.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_toric-ci");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("TORIC_CI_BUDGET")
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(BIN)
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const TWISTED_CUBIC: &str = "2 4\n1 1 1 1\n0 1 2 3\n";

#[test]
fn kernel_of_twisted_cubic() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", TWISTED_CUBIC);
    let out = run(&["kernel", &a]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("codimension 2"), "{text}");
    assert!(text.contains("4 2"), "{text}");
}

#[test]
fn circuits_of_twisted_cubic() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", TWISTED_CUBIC);
    let out = run(&["circuits", &a, "--binomials"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# 4 circuits"), "{text}");
    assert!(text.contains("1 -2 1 0"), "{text}");
    assert!(text.contains("2 -3 0 1"), "{text}");
    // binomial rendering of (1, -2, 1, 0)
    assert!(text.contains("x1*x3 - x2^2"), "{text}");
}

#[test]
fn ci_check_sign_matrix_verdicts() {
    let dir = TempDir::new().unwrap();
    // 2 rows, 3 mixed columns: violation (fewer rows than columns)
    let bad = write(dir.path(), "bad.txt", "+ + -\n- - +\n");
    let out = run(&["ci-check", "--signs", &bad, "--brute-force"]);
    assert_eq!(out.status.code(), Some(10));
    assert!(stdout(&out).contains("mixed witness"));

    // single column is always fine
    let good = write(dir.path(), "good.txt", "+\n-\n0\n");
    let out = run(&["ci-check", "--signs", &good, "--brute-force"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("complete intersection: yes"));
}

#[test]
fn ci_check_basis_and_invalid_basis_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", TWISTED_CUBIC);
    let b = write(dir.path(), "b.txt", "4 2\n1 0\n-2 1\n1 -2\n0 1\n");
    let out = run(&["ci-check", &a, &b]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("lattice index g = 1"));
    assert!(stdout(&out).contains("Laurent equality: yes"));

    // not in the kernel: invalid basis
    let bad = write(dir.path(), "bad.txt", "4 2\n1 0\n0 1\n0 0\n0 0\n");
    let out = run(&["ci-check", &a, &bad]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn search_exit_codes_and_json() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", TWISTED_CUBIC);
    let out = run(&["search", &a, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "found");
    assert!(v["basis"].is_array());
    assert_eq!(v["g"], "1");
    assert_eq!(v["laurent_equal"], true);
    assert!(v["counters"]["circuits"].as_u64().unwrap() == 4);

    // budget of 0 combinations: budget-exceeded, exit 12
    let out = run(&["search", &a, "--budget", "0"]);
    assert_eq!(out.status.code(), Some(12), "{out:?}");

    // same budget through the environment variable
    let out = run_env(&["search", &a], "TORIC_CI_BUDGET", "0");
    assert_eq!(out.status.code(), Some(12), "{out:?}");
    // explicit flag wins over the environment
    let out = run_env(&["search", &a, "--budget", "1000"], "TORIC_CI_BUDGET", "0");
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn search_exhausted_exit_code() {
    // r = 3 cyclic instance at the nonexistence bound: exit 11
    let gen = run(&["gen", "--family", "cyclic", "--m", "11", "--n", "14"]);
    assert_eq!(gen.status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "cyclic.txt", &stdout(&gen));
    let out = run(&["search", &a, "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(11), "{out:?}");
    assert!(stdout(&out).contains("exhausted-none"));
}

#[test]
fn gen_families() {
    let out = run(&["gen", "--family", "curve", "--a", "0,1,3", "--with-basis"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("2 3"), "{text}");
    assert!(text.contains("0 1 3"), "{text}");

    let out = run(&["gen", "--family", "polygon", "--n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("3 10"));

    let out = run(&["gen", "--family", "cyclic", "--m", "3", "--t", "1,2,4,8,16,32"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1 4 16 64 256 1024"));

    // missing parameters are an input error: exit 2
    let out = run(&["gen", "--family", "curve"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_command() {
    let out = run(&["bound", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n >= 22"));

    let out = run(&["bound", "--d", "2", "--n", "22"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("7315") && text.contains("7220") && text.contains('>'), "{text}");

    let out = run(&["bound", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n >= 14"));

    let out = run(&["bound"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let junk = write(dir.path(), "junk.txt", "2 3\n1 1\n");
    let out = run(&["kernel", &junk]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["kernel", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_paper_subset() {
    let out = run(&["verify-paper", "--only", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["id"], "6");
    assert_eq!(v["status"], "PASS");
}

#[test]
fn reads_configuration_from_stdin() {
    use std::io::Write as _;
    use std::process::Stdio;
    let mut child = Command::new(BIN)
        .args(["circuits", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(TWISTED_CUBIC.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("# 4 circuits"));
}
