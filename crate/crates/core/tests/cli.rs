use std::io::Write;
use std::process::{Command, Stdio};

use cxkit::cli::run;
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cx(args: &[&str]) -> Output {
    cx_stdin(args, "")
}

fn cx_stdin(args: &[&str], stdin: &str) -> Output {
    let mut argv = vec!["cxkit"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(out: &Output) -> Value {
    serde_json::from_str(out.stdout.trim()).unwrap()
}

fn temp_file(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cxkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn reduce_json_for_twisted_a2() {
    let out = cx(&["reduce", "--system", "2A2", "--word", "1 2", "--json"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["final_word"], "2");
    assert_eq!(v["result"]["class"]["min_length"], 1);
    assert_eq!(v["result"]["trace"].as_array().unwrap().len(), 2);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["schema_version", "request", "result"]);
}

#[test]
fn classes_of_g2() {
    let out = cx(&["classes", "--system", "G2", "--json"]);
    assert_eq!(json(&out)["result"]["count"], 6);
    let text = cx(&["classes", "--system", "G2"]);
    assert!(text.stdout.starts_with("6 F-classes"));
}

#[test]
fn components_text_and_evaluation() {
    assert_eq!(cx(&["components", "--system", "2B2", "--word", ""]).stdout, "1 + q^4\n");
    let out = cx(&["components", "--system", "A2", "--tuple", "", "--q", "2"]);
    assert_eq!(out.stdout, "1 + 2*q + 2*q^2 + q^3\nat q = 2: 21\n");
    let out = cx(&["components", "--system", "2A2", "--word", "", "--q-root", "2:1", "--json"]);
    let r = &json(&out)["result"]["root_value"];
    assert_eq!(r["exact_integer"], false);
    assert_eq!(r["rational"], "1");
    assert_eq!(r["irrational"], "2");
}

#[test]
fn every_subcommand_runs() {
    for args in [
        &["system", "--system", "2E6"][..],
        &["minlen", "--system", "B3", "--word", "1 2 3 2 1"],
        &["support", "--system", "2A3", "--tuple", "1 3,2"],
        &["smooth", "--system", "A3", "--word", "2 1 3 2"],
        &["braid-nf", "--system", "A2", "--word", "1 2 1 2"],
        &["system", "--system", "A3", "--twist", "(1 3)"],
    ] {
        let out = cx(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        assert!(!out.stdout.is_empty());
    }
    assert_eq!(cx(&["braid-nf", "--system", "A2", "--word", "1 2 1 2"]).stdout, "[1 2 1] [2]\n");
}

#[test]
fn input_errors_exit_2_with_the_token() {
    let out = cx(&["reduce", "--system", "A2", "--word", "1 x"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("`x`"));
    assert_eq!(out.stderr.lines().count(), 1);
    let out = cx(&["reduce", "--system", "A2", "--word", "1 3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("`3`"));
    let out = cx(&["system", "--system", "H3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("H3"));
    assert_eq!(cx(&["system", "--system", "A3", "--twist", "(1 2)"]).code, 2);
    assert_eq!(cx(&["system", "--system", "2A3", "--twist", "(1 3)"]).code, 2);
    assert_eq!(cx(&["frobnicate"]).code, 2);
}

#[test]
fn guard_exits_3() {
    let out = cx(&["classes", "--system", "E8"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("guard"));
}

#[test]
fn verify_accepts_reduce_output_and_rejects_tampering() {
    let good = cx(&["reduce", "--system", "B2", "--word", "1 2 1 2 1 2 1", "--json"]).stdout;
    let out = cx_stdin(&["verify"], &good);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let two = format!("{good}{good}");
    let path = temp_file("two.json", &two);
    let out = cx(&["verify", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(json(&out)["result"]["reports"].as_array().unwrap().len(), 2);

    let bad = good.replace("\"final_word\":\"2 1 2 1\"", "\"final_word\":\"1 2 1 2\"");
    assert_ne!(bad, good);
    let out = cx_stdin(&["verify"], &bad);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("rejected"));

    let extra = good.replacen("{", "{\"extra\":0,", 1);
    assert_eq!(cx_stdin(&["verify"], &extra).code, 2);
    assert_eq!(cx_stdin(&["verify"], "").code, 2);
}

#[test]
fn batch_isolates_errors() {
    let path = temp_file(
        "batch.txt",
        "# demo\nreduce --system A2 --word '1 2 1'\n\nreduce --system A2 --word '1 9'\nclasses --system 2A2\n",
    );
    let out = cx(&["batch", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let lines: Vec<Value> = out.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["line"], 2);
    assert!(lines[0]["report"].is_object());
    assert_eq!(lines[1]["line"], 4);
    assert_eq!(lines[1]["error"]["exit_code"], 2);
    assert_eq!(lines[2]["line"], 5);

    let empty = temp_file("empty.txt", "");
    let out = cx(&["batch", empty.to_str().unwrap()]);
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
    assert_eq!(cx(&["batch", "/nonexistent/cxkit"]).code, 2);
}

#[test]
fn timing_only_under_flag() {
    let a = cx(&["reduce", "--system", "G2", "--word", "1 2 1 2 1 2 1", "--json"]).stdout;
    assert!(!a.contains("timing"));
    let b = cx(&["reduce", "--system", "G2", "--word", "1 2 1 2 1 2 1", "--json", "--timing"]).stdout;
    assert!(json(&Output { code: 0, stdout: b, stderr: String::new() })["timing"]["elapsed_ms"].is_number());
}

#[test]
fn binary_env_guard_and_pipe() {
    let bin = env!("CARGO_BIN_EXE_cxkit");
    let status = Command::new(bin)
        .args(["system", "--system", "A3"])
        .env("CXKIT_MAX_W", "10")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    let status = Command::new(bin).args(["system", "--system", "A3"]).env("CXKIT_MAX_W", "ten").output().unwrap();
    assert_eq!(status.status.code(), Some(2));

    let reduced = Command::new(bin)
        .args(["--json", "reduce", "--system", "2A3", "--word", "1 2 3 1"])
        .env_remove("CXKIT_MAX_W")
        .output()
        .unwrap();
    assert!(reduced.status.success());
    let mut child = Command::new(bin)
        .args(["verify", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&reduced.stdout).unwrap();
    let done = child.wait_with_output().unwrap();
    assert_eq!(done.status.code(), Some(0));
}
