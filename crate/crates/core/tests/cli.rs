use crossext::cli::{run, to_json, to_markdown, Command, RunSpec};
use serde_json::Value;
use std::path::PathBuf;
use std::process::Command as Process;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn report(cmd: Command) -> (i32, Value) {
    let out = run(&RunSpec::new(cmd));
    let v: Value = serde_json::from_str(&to_json(&out.document)).unwrap();
    (out.exit_code, v)
}

#[test]
fn matched_pair_verdicts() {
    let (code, v) = report(Command::VerifyMatchedPair { input: data("s3_tables.json") });
    assert_eq!(code, 0);
    assert_eq!(v["status"], "true");
    let (code, v) = report(Command::VerifyMatchedPair { input: data("broken_pair.json") });
    assert_eq!(code, 1);
    assert_eq!(v["status"], "false");
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn factorize_counts_s3_factorizations() {
    let (code, v) = report(Command::Factorize { input: data("s3_group.json") });
    assert_eq!(code, 0);
    // trivial x2, C2 x C3 in either order with three choices of C2
    assert_eq!(v["result"]["count"], 8);
}

#[test]
fn kac_fusion_matches_rep_s3() {
    let (code, v) = report(Command::Kac { input: data("s3_pair.json"), fusion: true });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 6);
    assert_eq!(v["result"]["fusion"]["dims"], serde_json::json!([1, 1, 2]));
}

#[test]
fn equivariantize_and_dual_ring() {
    let (code, v) = report(Command::Equivariantize { input: data("s3_pointed.json") });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["fpdim_squared_sum"], 6);
    let (code, v) = report(Command::DualRing { input: data("s3_pointed.json") });
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rank"], 6);
    assert_eq!(v["result"]["faithful"], true);
    assert_eq!(v["result"]["nilpotency_class"], 1);
}

#[test]
fn nilpotency_of_rep_s3_is_false() {
    let (code, v) = report(Command::Nilpotency { input: data("z_s3_ring.json") });
    assert_eq!(code, 1);
    assert_eq!(v["status"], "false");
    let (code, _) = report(Command::Nilpotency { input: data("zc3_ring.json") });
    assert_eq!(code, 0);
}

#[test]
fn hopf_inputs() {
    for f in ["ks3_hopf.json", "fun_s3_hopf.json", "kac_s3_hopf.json", "kc2_hopf.json"] {
        let (code, v) = report(Command::HopfVerify { input: data(f) });
        assert_eq!(code, 0, "{f}: {v}");
    }
    let (code, _) = report(Command::SubnormalSeries { input: data("s3_chain.json") });
    assert_eq!(code, 0);
    let (code, v) = report(Command::SubnormalSeries { input: data("s3_bad_chain.json") });
    assert_eq!(code, 1);
    assert!(v.to_string().contains("not a subalgebra"));
    let (code, _) = report(Command::SubnormalSeries { input: data("a5_kac_chain.json") });
    assert_eq!(code, 0);
}

#[test]
fn char_sym_and_aut_grading() {
    let (code, v) = report(Command::CharSym { input: data("ks3_hopf.json") });
    assert_eq!(code, 0);
    assert_eq!(v["status"], "true");
    let (code, _) = report(Command::AutGrading { input: data("vect_s3.json") });
    assert_eq!(code, 0);
}

#[test]
fn ring_iso_distinguishes_rings() {
    let (code, _) = report(Command::RingIso { left: data("z_s3_ring.json"), right: data("z_s3_ring.json") });
    assert_eq!(code, 0);
    let (code, v) = report(Command::RingIso { left: data("z_s3_ring.json"), right: data("zc3_ring.json") });
    assert_eq!(code, 1);
    assert_eq!(v["result"]["isomorphic"], false);
}

#[test]
fn missing_and_malformed_inputs_are_errors() {
    let (code, v) = report(Command::Factorize { input: data("no_such_file.json") });
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"degree\": 3, \"generators\": [[0, 0, 1]]}").unwrap();
    let (code, v) = report(Command::Factorize { input: bad.clone() });
    assert_eq!(code, 2);
    assert!(!v["result"]["error"].as_str().unwrap().is_empty());

    std::fs::write(&bad, "{\"degree\": 3,").unwrap();
    let (code, v) = report(Command::Factorize { input: bad });
    assert_eq!(code, 2);
    assert!(v["result"]["error"].as_str().unwrap().contains("line"));
}

#[test]
fn reports_are_deterministic() {
    let spec = RunSpec::new(Command::Kac { input: data("s3_pair.json"), fusion: true });
    let a = to_json(&run(&spec).document);
    let b = to_json(&run(&spec).document);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let sha = v["provenance"]["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(sha.len(), 64);
}

#[test]
fn markdown_rendering() {
    let out = run(&RunSpec::new(Command::Nilpotency { input: data("z_s3_ring.json") }));
    let md = to_markdown(&out.document);
    assert!(md.starts_with("# crossext nilpotency"));
    assert!(md.contains("Status: **false**"));
    assert!(md.contains("## Provenance"));
}

#[test]
fn binary_exit_codes_and_out_file() {
    let exe = env!("CARGO_BIN_EXE_crossext");
    let status = Process::new(exe).arg("verify-matched-pair").arg(data("s3_tables.json")).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&status.stdout).unwrap();
    assert_eq!(v["command"], "verify-matched-pair");

    let status = Process::new(exe).arg("verify-matched-pair").arg(data("broken_pair.json")).output().unwrap();
    assert_eq!(status.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.md");
    let status = Process::new(exe)
        .args(["nilpotency", "--format", "md", "--seed", "7", "--out"])
        .arg(&out)
        .arg(data("zc3_ring.json"))
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let md = std::fs::read_to_string(out).unwrap();
    assert!(md.contains("- seed 7"));

    let status = Process::new(exe).args(["factorize", "--tol-pivot", "-1"]).arg(data("s3_group.json")).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
