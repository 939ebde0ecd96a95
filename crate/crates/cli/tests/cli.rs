use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn jahangir(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jahangir"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut input = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        input.write_all(text.as_bytes()).unwrap();
    }
    drop(input);
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad report ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn gen_emits_graph6() {
    let out = jahangir(&["gen", "complete", "3"], None);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["details"]["graph"], "Bw");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&jahangir(&["gen", "star", "0"], None)), 2);
    assert_eq!(code(&jahangir(&["gen", "nosuch", "3"], None)), 2);
    assert_eq!(code(&jahangir(&["frobnicate"], None)), 2);
    assert_eq!(code(&jahangir(&["contains", "path", "3"], Some("B"))), 2);
    assert_eq!(code(&jahangir(&["witness", "1", "10", "6"], None)), 2);
}

#[test]
fn ceilings_exit_3() {
    assert_eq!(
        code(&jahangir(&["enumerate", "11", "--count-only"], None)),
        3
    );
    assert_eq!(code(&jahangir(&["verify", "2", "7", "3"], None)), 3);
}

#[test]
fn contains_reads_stdin() {
    let out = jahangir(&["contains", "path", "3"], Some("Bg\n"));
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["details"]["found"], true);
    let out = jahangir(&["contains", "jahangir", "2"], Some("Bg\n"));
    assert_eq!(code(&out), 2, "host smaller than J_4");
    let k34 = report(&jahangir(&["gen", "complete_bipartite", "3", "4"], None))["details"]["graph"]
        .as_str()
        .unwrap()
        .to_owned();
    let out = jahangir(&["contains", "jahangir", "3"], Some(&k34));
    assert_eq!(report(&out)["details"]["found"], true);
    let out = jahangir(&["contains", "kpaths", "2", "4"], Some(&k34));
    assert_eq!(report(&out)["details"]["found"], false);
}

#[test]
fn enumerate_counts() {
    let r = report(&jahangir(&["enumerate", "5", "--count-only"], None));
    assert_eq!(r["totals"]["classes"], 34);
    let r = report(&jahangir(&["enumerate", "3"], None));
    assert_eq!(r["details"]["graphs"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_exit_codes() {
    let out = jahangir(
        &["verify", "1", "4", "2", "--order", "5", "--shards", "2"],
        None,
    );
    assert_eq!(code(&out), 1);
    let r = report(&out);
    assert!(r["failures"].as_u64().unwrap() >= 1);
    assert_eq!(
        r["failures"].as_u64().unwrap() as usize,
        r["counterexamples"].as_array().unwrap().len()
    );
    let out = jahangir(&["verify", "1", "5", "2"], None);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["details"]["confirmed"], true);
}

#[test]
fn checkpointed_verify_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("run.json");
    let path = file.to_str().unwrap();
    let args = [
        "verify",
        "1",
        "6",
        "2",
        "--order",
        "7",
        "--shards",
        "2",
        "--checkpoint",
        path,
    ];
    let mut stopped = args.to_vec();
    stopped.extend(["--stop-after", "100"]);
    let first = report(&jahangir(&stopped, None));
    assert_eq!(first["details"]["complete"], false);
    assert!(file.exists());
    let done = report(&jahangir(&args, None));
    assert_eq!(done["details"]["complete"], true);
    assert_eq!(done["totals"]["classes"], 1044);
    assert_eq!(done["failures"], 0);
    // A checkpoint from another instance is rejected.
    let other = jahangir(
        &[
            "verify",
            "1",
            "5",
            "2",
            "--order",
            "7",
            "--shards",
            "2",
            "--checkpoint",
            path,
        ],
        None,
    );
    assert_eq!(code(&other), 2);
}

#[test]
fn witness_and_bound() {
    let r = report(&jahangir(&["witness", "1", "7", "3"], None));
    assert_eq!(r["failures"], 0);
    assert_eq!(r["order"], 8);
    let out = jahangir(&["witness", "1", "116", "6"], None);
    assert_eq!(code(&out), 0);
    assert!(report(&out)["details"]["witness"]
        .as_str()
        .unwrap()
        .starts_with("order=120"));
    let p7 = report(&jahangir(&["gen", "path", "7"], None))["details"]["graph"]
        .as_str()
        .unwrap()
        .to_owned();
    let j6 = report(&jahangir(&["gen", "jahangir", "3"], None))["details"]["graph"]
        .as_str()
        .unwrap()
        .to_owned();
    let r = report(&jahangir(&["bound", &p7, &j6], None));
    assert_eq!(r["details"]["bound"], 7);
}

#[test]
fn extract_single_graphs() {
    let empty9 = report(&jahangir(&["gen", "empty", "9"], None))["details"]["graph"]
        .as_str()
        .unwrap()
        .to_owned();
    let out = jahangir(&["extract", "thm1", "7", "3"], Some(&empty9));
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["details"]["trace"]["subcase"], "2.1");
    let out = jahangir(&["extract", "thm2"], Some(&empty9));
    assert_eq!(code(&out), 0);
    let k16 = report(&jahangir(&["gen", "complete", "16"], None))["details"]["graph"]
        .as_str()
        .unwrap()
        .to_owned();
    let out = jahangir(&["extract", "kpaths", "2", "7", "3"], Some(&k16));
    assert_eq!(
        report(&out)["details"]["paths"].as_array().unwrap().len(),
        2
    );
    let c9 = report(&jahangir(&["gen", "cycle", "9"], None))["details"]["graph"]
        .as_str()
        .unwrap()
        .to_owned();
    assert_eq!(
        code(&jahangir(&["extract", "thm1", "7", "3"], Some(&c9))),
        2
    );
}

#[test]
fn sample_is_seeded() {
    let args = [
        "sample",
        "1",
        "4",
        "2",
        "--order",
        "5",
        "--trials",
        "500",
        "--seed",
        "9",
        "--workers",
        "2",
    ];
    let a = report(&jahangir(&args, None));
    let b = report(&jahangir(&args, None));
    assert_eq!(a["counterexamples"], b["counterexamples"]);
    assert_eq!(a["seed"], 9);
}
