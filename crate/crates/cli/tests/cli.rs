//! The `iterant` binary: output, JSON and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value as Json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iterant")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn eval_prints_exact_values() {
    let o = run(&["eval", "-g", "C2", "([1,-1]h)^2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-1\n");
    let o = run(&["eval", "-g", "C6", "[1,2,3,4,5,6] S^2"]);
    assert_eq!(stdout(&o), "[1,2,3,4,5,6]S^2\n");
    let o = run(&["eval", "-g", "C2", "1/3"]);
    assert_eq!(stdout(&o), "1/3\n~ 0.333333\n");
}

#[test]
fn eval_json_shape() {
    let o = run(&["--json", "eval", "-g", "pauli", "{X, Y}"]);
    assert_eq!(code(&o), 0);
    let v: Json = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["context"], "pauli");
    assert_eq!(v["order"], 12);
    assert_eq!(v["result"]["exact"], "0");
    assert_eq!(v["result"]["kind"], "scalar");
}

#[test]
fn exit_codes() {
    let parse = run(&["eval", "[x,y"]);
    assert_eq!(code(&parse), 2);
    let err = String::from_utf8(parse.stderr).unwrap();
    assert!(err.contains("1:4"), "{err}");
    assert_eq!(code(&run(&["eval", "-g", "C2", "nope"])), 1);
    assert_eq!(code(&run(&["eval", "-g", "nowhere", "1"])), 2);
    assert_eq!(code(&run(&["verify", "nonsense"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["verify", "quaternions"])), 0);
    assert_eq!(code(&run(&["verify", "su3"])), 1);
}

#[test]
fn parse_errors_in_json() {
    let o = run(&["--json", "eval", "1 + + 2"]);
    assert_eq!(code(&o), 2);
    let v: Json = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["line"], 1);
    assert_eq!(v["error"]["col"], 5);
}

#[test]
fn suites_are_deterministic() {
    for suite in ["core", "matrix-iso", "braids"] {
        let a = run(&["--json", "verify", suite]);
        let b = run(&["--json", "verify", suite]);
        assert_eq!(code(&a), 0, "{suite}");
        assert_eq!(a.stdout, b.stdout, "{suite}");
    }
}

#[test]
fn su3_report_names_its_failures() {
    let o = run(&["verify", "su3"]);
    let text = stdout(&o);
    let fails: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with("FAIL ")).collect();
    assert_eq!(fails.len(), 4, "{text}");
    for needle in ["f156", "f257", "f345", "Y ="] {
        assert!(fails.iter().any(|l| l.contains(needle)), "{needle} in {fails:?}");
    }
}

#[test]
fn decompose_and_matrix() {
    let f = json_file("[[1,4,7],[8,2,5],[6,9,3]]");
    let o = run(&["decompose", "-g", "C3", "-m", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "[1,2,3] + [4,5,6]S + [7,8,9]S^2\n");

    let id = json_file(r#"{"matrix": [[1,0],[0,"1/1"]]}"#);
    assert_eq!(stdout(&run(&["decompose", "-g", "C2", "-m", id.path().to_str().unwrap()])), "1\n");

    let bad = json_file("[[1,2],[3,4]]");
    assert_eq!(code(&run(&["decompose", "-g", "C3", "-m", bad.path().to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["decompose", "-g", "C3", "-m", "/no/such/file.json"])), 2);

    let o = run(&["matrix", "-g", "C2", "[1,2] + [3,4]h"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains('1') && text.contains('4'), "{text}");
}

#[test]
fn cayley_tables() {
    let o = run(&["cayley", "klein4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("klein4 (order 4, degree 4)"), "{text}");
    let o = run(&["--json", "cayley", "C3"]);
    let v: Json = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
    assert_eq!(code(&run(&["cayley", "FB3"])), 2);
}

const MUON: &str = r#"[
  {"name": "nu_mu", "strands": 3, "framing": ["t^1","t^1","t^1"], "word": [[1,1]]},
  {"name": "W-", "strands": 3, "framing": ["t^-1","t^-1","t^-1"], "word": [[2,-1]]},
  {"name": "mu", "strands": 3, "framing": ["1","1","1"], "word": [[1,1],[2,-1]]}
]"#;

#[test]
fn user_defined_particles() {
    let f = json_file(MUON);
    let path = f.path().to_str().unwrap();
    let o = run(&["particles", "define", path]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("defined: nu_mu, W-, mu"));
    let o = run(&["--particles-file", path, "braid", "verify-factorization", "--product", "mu", "--factors", "nu_mu,W-"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&["--particles-file", path, "braid", "verify-factorization", "--product", "mu", "--factors", "W-,nu_mu"]);
    assert_eq!(code(&o), 1);
    assert_eq!(code(&run(&["braid", "mul", "mu"])), 2);
    let dup = json_file(r#"{"name": "e+", "strands": 3, "framing": ["1","1","1"], "word": []}"#);
    assert_eq!(code(&run(&["particles", "define", dup.path().to_str().unwrap()])), 2);
}

#[test]
fn braid_commands() {
    let o = run(&["braid", "mul", "e+", "e-"]);
    assert_eq!((code(&o), stdout(&o)), (0, "[1,1,1]\n".to_string()));
    assert_eq!(code(&run(&["braid", "verify-factorization", "--product", "gamma", "--factors", "e+,e-"])), 0);
    let o = run(&["braid", "embed", "e+"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("rho = [1 + w,1 + w,1 + w]T1 T2"), "{text}");
    assert!(text.contains("su3 = [1 + w,1 + w,1 + w]B"), "{text}");
    let o = run(&["particles", "list"]);
    assert_eq!(stdout(&o), "e+\t[t,t,t]s1 s2^-1\ne-\t[t^-1,t^-1,t^-1]s2 s1^-1\ngamma\t[1,1,1]\n");
}
