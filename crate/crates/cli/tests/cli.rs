use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn knotpair(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_knotpair"));
    cmd.env_remove("KNOTPAIR_DB").env_remove("KNOTPAIR_CACHE");
    match cache {
        Some(dir) => cmd.arg("--cache-dir").arg(dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = knotpair(args, None);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid json")
}

#[test]
fn invariants_trefoil() {
    let s = stdout(&["invariants", "3_1"]);
    assert!(s.contains("delta: 1 - t + t^2\n"), "{s}");
    assert!(s.contains("alpha: 1\n"));
    assert!(s.contains("cbl equals blanchfield: true"));
    assert!(s.contains("verdict: recoverable"));
}

#[test]
fn invariants_7_4_by_flag() {
    let s = stdout(&["invariants", "--knot", "7_4"]);
    assert!(s.contains("alpha: 1\n"), "{s}");
}

#[test]
fn eight_twenty_not_recoverable() {
    let v = json(&["invariants", "8_20"]);
    assert_eq!(v["verdict"]["recoverable"], false);
    assert_eq!(v["alpha"]["classification"], "zero_divisor");
    assert_eq!(v["cor33"], true);
}

#[test]
fn alpha_zero_for_11_73() {
    let v = json(&["alpha", "11_73"]);
    assert_eq!(v["name"], "11n_73");
    assert_eq!(v["alpha"]["value"], "0");
    assert_eq!(v["verdict"]["recoverable"], false);
}

#[test]
fn strict_sign_separates_4_1() {
    assert!(stdout(&["alpha", "4_1"]).contains("-> match (-1)"));
    assert!(stdout(&["--strict-sign", "alpha", "4_1"]).contains("-> mismatch"));
}

#[test]
fn window_flag_accepted() {
    assert!(stdout(&["--window", "64", "alpha", "5_2"]).contains("-> match"));
}

#[test]
fn unknown_knot_fails() {
    let out = knotpair(&["invariants", "99_1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown knot 99_1"));
}

#[test]
fn cache_is_transparent() {
    let dir = TempDir::new().unwrap();
    for args in [
        &["invariants", "6_1"][..],
        &["--format", "json", "alpha", "5_2"],
        &["table1"],
    ] {
        let fresh = knotpair(args, None);
        let first = knotpair(args, Some(dir.path()));
        let cached = knotpair(args, Some(dir.path()));
        assert!(fresh.status.success());
        assert_eq!(fresh.stdout, first.stdout, "{args:?}");
        assert_eq!(first.stdout, cached.stdout, "{args:?}");
    }
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(files, 3);
}

#[test]
fn tables() {
    let t1 = stdout(&["table1"]);
    assert_eq!(
        t1.lines().filter(|l| l.contains(" match (")).count(),
        12,
        "{t1}"
    );
    assert!(t1.contains("12/14 rows match"));
    let t2 = json(&["table2"]);
    let rows = t2.as_array().unwrap();
    assert!(rows
        .iter()
        .any(|r| r["name"] == "11n_73" && r["result"].as_str().unwrap().starts_with("match")));
    assert!(rows.iter().all(|r| r["verdict"] == "not recoverable"));
}

#[test]
fn verify_exit_codes() {
    let ok = knotpair(&["verify", "cor33", "delta", "units"], None);
    assert!(
        ok.status.success(),
        "{}",
        String::from_utf8_lossy(&ok.stdout)
    );
    assert!(String::from_utf8_lossy(&ok.stdout).contains("3 of 3 suites passed"));

    // the printed twist-region form fails, the derived one passes
    let local = knotpair(
        &["verify", "local", "--seed", "7", "--trials", "1000"],
        None,
    );
    assert_eq!(local.status.code(), Some(1));
    let text = String::from_utf8_lossy(&local.stdout);
    assert!(text.contains("[FAILED] twist_region over"));
    assert!(!text.contains("[FAILED] twist_region_derived"));
    assert!(!text.contains("[FAILED] double_delta"));

    let bad = knotpair(&["verify", "nope"], None);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_json_is_deterministic() {
    let a = stdout(&[
        "--format",
        "json",
        "verify",
        "pretzel",
        "--seed",
        "3",
        "--samples",
        "5",
    ]);
    let b = stdout(&[
        "--format",
        "json",
        "verify",
        "pretzel",
        "--seed",
        "3",
        "--samples",
        "5",
    ]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v[0]["checks"].as_array().unwrap().len(), 5);
}

#[test]
fn pretzel_and_torus() {
    let p = stdout(&["pretzel", "1", "1", "1"]);
    assert!(p.contains("delta: 1 - t + t^2"), "{p}");
    assert!(p.contains("cbl equal: true"));
    assert!(p.contains("alpha: -1"));
    let neg = json(&["pretzel", "-3", "5", "1"]);
    assert_eq!(neg["gram_equal"], true);
    assert!(knotpair(&["pretzel", "2", "1", "1"], None).status.code() == Some(2));

    let t = stdout(&["torus", "2", "3"]);
    assert!(t.contains("coefficient: 1 + t"), "{t}");
    assert!(t.contains("(-t) * coefficient"));
    let t = json(&["torus", "3", "4"]);
    assert_eq!(t["calibration_unit"], "-t");
}

#[test]
fn cocycle_trefoil() {
    let s = stdout(&["cocycle", "3_1", "--quandle", "3,2"]);
    assert!(s.contains("diagram 0: 9 colorings"), "{s}");
    assert!(s.contains("diagrams agree: true"));
    let brute = stdout(&["cocycle", "3_1", "--quandle", "3,2", "--brute"]);
    assert_eq!(s, brute);
    let v = json(&[
        "cocycle",
        "--knot",
        "4_1",
        "--quandle",
        "5,2",
        "--psi",
        "product:0",
    ]);
    assert_eq!(v["diagrams"][0], v["diagrams"][1]);
    assert_eq!(
        knotpair(&["cocycle", "3_1", "--quandle", "6,2"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        knotpair(&["cocycle", "3_1", "--quandle", "3"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn import_and_custom_db() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("knots.csv");
    std::fs::write(
        &csv,
        "name,pd_notation,seifert_matrix,alexander_polynomial\n\
         3_1,\"[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\",\"[[-1,1],[0,-1]]\",1-t+t^2\n\
         4_1,\"[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]\",\"[[1,0],[-1,-1]]\",1-3t+t^2\n\
         bad,\"[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]\",\"[[-1,1],[0,-1]]\",\n",
    )
    .unwrap();
    let db = dir.path().join("db.json");
    let out = knotpair(
        &["import", csv.to_str().unwrap(), "-o", db.to_str().unwrap()],
        None,
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("wrote 2 records"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad:"));

    let list = stdout(&["--db", db.to_str().unwrap(), "list"]);
    assert_eq!(list, "3_1\n4_1\n");
    let via_env = Command::new(env!("CARGO_BIN_EXE_knotpair"))
        .env("KNOTPAIR_DB", &db)
        .args(["--no-cache", "invariants", "4_1"])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&via_env.stdout).contains("delta: 1 - 3*t + t^2"));
    let missing = knotpair(&["--db", db.to_str().unwrap(), "alpha", "5_1"], None);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn list_bundled() {
    let v = json(&["list"]);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names.len(), 20);
    assert_eq!(names[0], "3_1");
    assert!(names.contains(&"11n_73"));
}
