use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lsdual").chain(args.iter().copied());
    let code = lsdual::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).expect("valid JSON")
}

#[test]
fn basis_ls_depth_one_weight_three() {
    let (code, out, _) = run(&["basis", "ls", "1", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["dim"], 1);
    let terms: Vec<(String, String)> = v["basis"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["word"].as_str().unwrap().into(), t["coeff"].as_str().unwrap().into()))
        .collect();
    let expected = [("xxz", "1/1"), ("xzx", "-2/1"), ("zxx", "1/1")];
    assert_eq!(terms, expected.map(|(a, b)| (a.to_string(), b.to_string())));
}

#[test]
fn basis_empty_cases() {
    let (code, out, _) = run(&["basis", "dsh", "2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["dim"], 0);
    assert_eq!(json(&out)["basis"], Value::Array(vec![]));
    let (code, out, _) = run(&["basis", "ls", "1", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["dim"], 0);
}

#[test]
fn basis_wr_and_vf_report_quotients() {
    let (_, out, _) = run(&["basis", "wr", "2", "8"]);
    let v = json(&out);
    assert_eq!(v["quotient_dim"], 1);
    assert_eq!(v["dim"].as_u64().unwrap() + 1, 7);
    let (_, out, _) = run(&["basis", "vf", "1", "3"]);
    let v = json(&out);
    assert_eq!((v["dim"].as_u64(), v["quotient_dim"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn basis_rejects_invalid_bidegrees() {
    for args in [&["basis", "dsh", "1", "4"][..], &["basis", "ls", "0", "3"], &["basis", "wr", "3", "2"], &["basis", "nope", "1", "1"]] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn dims_csv_parity_and_depth_one() {
    let (code, out, _) = run(&["dims", "--max-depth", "2", "--max-weight", "8", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,k,ls,D,dsh,vf"));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (m, k): (usize, usize) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        if (m + k) % 2 == 1 {
            assert!(f[2..].iter().all(|x| *x == "0" || *x == "-"), "{line}");
        }
    }
    let (_, out, _) = run(&["dims", "--max-depth", "1", "--max-weight", "5"]);
    let ls: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(ls, ["1", "0", "1", "0", "1"]);
}

#[test]
fn dims_json_matches_csv() {
    let (_, out, _) = run(&["dims", "--max-depth", "2", "--max-weight", "8", "--format", "json"]);
    let rows = json(&out);
    let r = rows.as_array().unwrap().iter().find(|r| r["m"] == 2 && r["k"] == 8).unwrap();
    assert_eq!((r["ls"].as_u64(), r["D"].as_u64(), r["dsh"].as_u64()), (Some(1), Some(1), Some(1)));
    assert!(rows[0]["dsh"].is_null());
}

#[test]
fn dims_rejects_empty_range() {
    assert_eq!(run(&["dims", "--max-depth", "0", "--max-weight", "5"]).0, 2);
    assert_eq!(run(&["dims", "--max-depth", "3", "--max-weight", "2"]).0, 2);
    assert_eq!(run(&["dims", "--max-depth", "x", "--max-weight", "2"]).0, 2);
}

#[test]
fn verify_single_check() {
    let (code, out, _) = run(&["verify", "ihara-closure", "--max-weight", "8", "--no-timing"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["check"], "ihara-closure");
    assert_eq!(v["params"]["max_weight"], 8);
    let results = v["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        assert_eq!(r["status"], "pass");
        assert!(r.get("millis").is_none());
        assert!(r.get("witness").is_none());
    }
}

#[test]
fn verify_reports_timing_unless_suppressed() {
    let (_, out, _) = run(&["verify", "co-ihara-depth1", "--max-weight", "4"]);
    assert!(json(&out)["results"][0]["millis"].is_u64());
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let (code, out, err) = run(&["verify", "no-such-check"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("no-such-check"));
}

#[test]
fn verify_all_small_range_passes() {
    let (code, out, _) = run(&["verify", "all", "--max-weight", "4", "--jobs", "2", "--no-timing"]);
    assert_eq!(code, 0);
    let reports = json(&out);
    assert_eq!(reports.as_array().unwrap().len(), lsdual::verify::check_ids().len());
}

#[test]
fn verify_all_weight_six_fails_only_on_wr_comparison() {
    let (code, out, _) = run(&["verify", "all", "--max-weight", "6", "--no-timing"]);
    assert_eq!(code, 1);
    let failing: Vec<String> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["results"].as_array().unwrap().iter().any(|u| u["status"] == "fail"))
        .map(|r| r["check"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failing, ["cobracket-comparison"]);
}

#[test]
fn failing_report_carries_a_witness() {
    let (code, out, _) = run(&["verify", "cobracket-comparison", "--max-depth", "2", "--max-weight", "5", "--no-timing"]);
    assert_eq!(code, 1);
    let v = json(&out);
    let last = v["results"].as_array().unwrap().last().unwrap().clone();
    assert_eq!((last["m"].as_u64(), last["k"].as_u64()), (Some(2), Some(5)));
    assert_eq!(last["status"], "fail");
    assert_eq!(last["witness"]["element"], "I(2,3)");
    assert_eq!(last["dim_data"]["ww_components_in_sum"], true);
}

#[test]
fn output_is_identical_with_and_without_cache_and_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = run(&["dims", "--max-depth", "3", "--max-weight", "7"]).1;
    let first = run(&["dims", "--max-depth", "3", "--max-weight", "7", "--cache-dir", d]).1;
    let second = run(&["dims", "--max-depth", "3", "--max-weight", "7", "--cache-dir", d, "--jobs", "1"]).1;
    assert_eq!(plain, first);
    assert_eq!(first, second);
    let a = run(&["verify", "hm-duality", "--max-weight", "7", "--no-timing", "--cache-dir", d]).1;
    let b = run(&["verify", "hm-duality", "--max-weight", "7", "--no-timing"]).1;
    assert_eq!(a, b);
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("cache");
    let d = d.to_str().unwrap();
    let (code, out, _) = run(&["cache", "status", "--cache-dir", d]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["count"], 0);
    run(&["dims", "--max-depth", "2", "--max-weight", "5", "--cache-dir", d]);
    let entries = json(&run(&["cache", "status", "--cache-dir", d]).1);
    let names: Vec<&str> = entries["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.starts_with("ls-2-5-")));
    assert!(names.iter().any(|n| n.starts_with("wr-1-3-")));
    let removed = json(&run(&["cache", "clear", "--cache-dir", d]).1)["removed"].as_u64().unwrap();
    assert_eq!(removed, names.len() as u64);
    let (code, out, _) = run(&["cache", "clear", "--cache-dir", d]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["removed"], 0);
}

#[test]
fn binary_uses_environment_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_lsdual");
    let out = Command::new(bin)
        .args(["basis", "ls", "2", "8"])
        .env(lsdual::cache::CACHE_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let status = Command::new(bin)
        .args(["cache", "status"])
        .env(lsdual::cache::CACHE_DIR_ENV, dir.path())
        .output()
        .unwrap();
    assert_eq!(json(&String::from_utf8(status.stdout).unwrap())["count"], 1);
    let bad = Command::new(bin).args(["verify", "no-such-check"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let none = Command::new(bin).args(["cache", "status"]).env_remove(lsdual::cache::CACHE_DIR_ENV).output().unwrap();
    assert_eq!(none.status.code(), Some(2));
}
