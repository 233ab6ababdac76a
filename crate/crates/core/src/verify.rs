//! Verification suites over the knot database and the closed-form families.
//!
//! Each suite yields a list of labeled checks. A check is either required
//! or informational; a suite passes when all its required checks pass.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::db::{Database, KnotData};
use crate::diagram::coloring::diagram_alexander;
use crate::diagram::local::local_suite;
use crate::families::{pretzel_grams, PretzelParams, TorusData, TorusParams};
use crate::laurent::{LaurentPoly, Unit};
use crate::quandle::{
    cocycle_invariant, finite_weight_sum, Bilinear, Cocycle2, Enumeration, FiniteAlexanderQuandle,
};
use crate::quotient::{Class, Modulus, Solve};
use crate::report::{analyze, AnalysisOptions, KnotAnalysis};
use crate::seifert::Normalization;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Table1,
    Table2,
    Cor33,
    Delta,
    Symmetry,
    Pretzel,
    Torus,
    Local,
    Appendix,
    Units,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Table1,
        Suite::Table2,
        Suite::Cor33,
        Suite::Delta,
        Suite::Symmetry,
        Suite::Pretzel,
        Suite::Torus,
        Suite::Local,
        Suite::Appendix,
        Suite::Units,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Cor33 => "cor33",
            Suite::Delta => "delta",
            Suite::Symmetry => "symmetry",
            Suite::Pretzel => "pretzel",
            Suite::Torus => "torus",
            Suite::Local => "local",
            Suite::Appendix => "appendix",
            Suite::Units => "units",
        }
    }

    /// Does the suite read per-knot analyses?
    pub fn needs_analyses(self) -> bool {
        matches!(
            self,
            Suite::Table1 | Suite::Table2 | Suite::Cor33 | Suite::Symmetry
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub required: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            passed,
            required: true,
            detail: detail.into(),
        }
    }

    fn info(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            required: false,
            ..Check::new(label, passed, detail)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.required)
    }

    pub fn required(&self) -> usize {
        self.checks.iter().filter(|c| c.required).count()
    }

    pub fn required_passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.required && c.passed)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.required && !c.passed)
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {}: {}/{} required checks",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.required_passed(),
            self.required()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    pub pretzel_samples: usize,
    pub analysis: AnalysisOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 7,
            trials: 1000,
            pretzel_samples: 20,
            analysis: AnalysisOptions::default(),
        }
    }
}

/// Crossing number read off a knot name such as `7_4` or `12n_57`.
pub fn crossing_number(name: &str) -> Option<u32> {
    let digits: String = name.chars().take_while(char::is_ascii_digit).collect();
    digits.parse().ok()
}

/// Per-knot analysis results, in database order.
pub struct Analyses {
    pub entries: Vec<(String, Result<(KnotData, KnotAnalysis), String>)>,
}

impl Analyses {
    pub fn get(&self, name: &str) -> Option<&Result<(KnotData, KnotAnalysis), String>> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }
}

pub fn analyze_all(db: &Database, options: &AnalysisOptions) -> Analyses {
    let names = db.names();
    let entries = names
        .par_iter()
        .map(|name| {
            let r = db.knot(name).map_err(|e| e.to_string()).and_then(|k| {
                analyze(&k, options)
                    .map(|a| (k, a))
                    .map_err(|e| e.to_string())
            });
            (name.clone(), r)
        })
        .collect();
    Analyses { entries }
}

pub fn run_suite(
    suite: Suite,
    db: &Database,
    analyses: Option<&Analyses>,
    options: &VerifyOptions,
) -> SuiteReport {
    let owned;
    let analyses = match analyses {
        Some(a) => a,
        None if suite.needs_analyses() => {
            owned = analyze_all(db, &options.analysis);
            &owned
        }
        None => {
            owned = Analyses {
                entries: Vec::new(),
            };
            &owned
        }
    };
    let checks = match suite {
        Suite::Table1 => table_rows(
            analyses,
            |n| crossing_number(n).is_some_and(|c| c < 8),
            |_| true,
        ),
        Suite::Table2 => table2(analyses),
        Suite::Cor33 => cor33(analyses),
        Suite::Delta => delta(db),
        Suite::Symmetry => symmetry(analyses),
        Suite::Pretzel => pretzel(options),
        Suite::Torus => torus(),
        Suite::Local => local(options),
        Suite::Appendix => appendix(db),
        Suite::Units => units(),
    };
    SuiteReport { suite, checks }
}

pub fn run_all(db: &Database, options: &VerifyOptions) -> Vec<SuiteReport> {
    let analyses = analyze_all(db, &options.analysis);
    Suite::ALL
        .into_iter()
        .map(|s| run_suite(s, db, Some(&analyses), options))
        .collect()
}

fn alpha_row(name: &str, a: &KnotAnalysis) -> (bool, String) {
    let got = a.alpha().display();
    match (&a.expected_alpha, &a.expected_match) {
        (Some(e), Some(Some(f))) => (true, format!("alpha = {got}, expected {e}, match ({f})")),
        (Some(e), Some(None)) => (false, format!("alpha = {got}, expected {e}, mismatch")),
        _ => (false, format!("{name}: no expected value")),
    }
}

fn table_rows(
    analyses: &Analyses,
    select: impl Fn(&str) -> bool,
    required: impl Fn(&str) -> bool,
) -> Vec<Check> {
    analyses
        .entries
        .iter()
        .filter(|(n, _)| select(n))
        .map(|(name, r)| {
            let (ok, detail) = match r {
                Ok((_, a)) => alpha_row(name, a),
                Err(e) => (false, e.clone()),
            };
            if required(name) {
                Check::new(name.clone(), ok, detail)
            } else {
                Check::info(name.clone(), ok, detail)
            }
        })
        .collect()
}

fn table2(analyses: &Analyses) -> Vec<Check> {
    let required = |n: &str| n == "8_20" || n == "11n_73";
    let mut checks = table_rows(
        analyses,
        |n| crossing_number(n).is_some_and(|c| c >= 8),
        required,
    );
    for (name, r) in &analyses.entries {
        if crossing_number(name).is_none_or(|c| c < 8) {
            continue;
        }
        let (ok, detail) = match r {
            Ok((_, a)) => (
                !a.verdict.recoverable,
                match &a.verdict.witness {
                    Some(w) if !a.verdict.recoverable => format!("not recoverable ({w})"),
                    _ if a.verdict.recoverable => "recoverable".to_string(),
                    _ => "not recoverable".to_string(),
                },
            ),
            Err(e) => (false, e.clone()),
        };
        let label = format!("{name} verdict");
        checks.push(if required(name) {
            Check::new(label, ok, detail)
        } else {
            Check::info(label, ok, detail)
        });
    }
    checks
}

fn cor33(analyses: &Analyses) -> Vec<Check> {
    analyses
        .entries
        .iter()
        .map(|(name, r)| match r {
            Ok((_, a)) => Check::new(
                name.clone(),
                a.cor33_holds(),
                format!("{0}x{0} Gram", a.blanchfield.size()),
            ),
            Err(e) => Check::new(name.clone(), false, e.clone()),
        })
        .collect()
}

fn delta(db: &Database) -> Vec<Check> {
    db.names()
        .par_iter()
        .map(|name| {
            let k = match db.knot(name) {
                Ok(k) => k,
                Err(e) => return Check::new(name.clone(), false, e.to_string()),
            };
            let seifert = k.seifert.modulus().delta().clone();
            let normal = |p: &LaurentPoly| p.normalize().map(|(q, _)| q).ok();
            let at_one = seifert
                .eval_int(1)
                .map(|v| v.numer().magnitude().to_string() == "1" && v.is_integer());
            let mut ok = at_one.unwrap_or(false);
            let mut parts = vec![format!("delta = {seifert}")];
            for (i, d) in k.diagrams().into_iter().enumerate() {
                match diagram_alexander(d) {
                    Ok(dd) => {
                        let same = normal(&dd) == normal(&seifert);
                        ok &= same;
                        parts.push(format!(
                            "diagram {i}: {}",
                            if same { "agrees" } else { "differs" }
                        ));
                    }
                    Err(e) => {
                        ok = false;
                        parts.push(format!("diagram {i}: {e}"));
                    }
                }
            }
            Check::new(name.clone(), ok, parts.join(", "))
        })
        .collect()
}

fn symmetry(analyses: &Analyses) -> Vec<Check> {
    const BOUND: i64 = 4;
    let mut common: Option<BTreeSet<(i8, i64)>> = None;
    let mut checks = Vec::new();
    for (name, r) in &analyses.entries {
        let a = match r {
            Ok((_, a)) => a,
            Err(e) => {
                checks.push(Check::new(name.clone(), false, e.clone()));
                continue;
            }
        };
        let herm: BTreeSet<(i8, i64)> = a
            .blanchfield
            .twist_units(BOUND)
            .into_iter()
            .filter(|u| u.sign > 0)
            .map(|u| (u.sign, u.exp))
            .collect();
        let mut units = herm.clone();
        for side in &a.sides {
            // anti-hermitian for u means hermitian for -u
            let anti: BTreeSet<(i8, i64)> = side
                .weight
                .twist_units(BOUND)
                .into_iter()
                .map(|u| (-u.sign, u.exp))
                .collect();
            units = units.intersection(&anti).copied().collect();
        }
        common = Some(match common {
            None => units.clone(),
            Some(c) => c.intersection(&units).copied().collect(),
        });
        let shown: Vec<String> = units
            .iter()
            .map(|&(s, e)| Unit::new(s, e).to_string())
            .collect();
        checks.push(Check::info(
            name.clone(),
            !units.is_empty(),
            format!("units {{{}}}", shown.join(", ")),
        ));
    }
    let common = common.unwrap_or_default();
    let shown: Vec<String> = common
        .iter()
        .map(|&(s, e)| Unit::new(s, e).to_string())
        .collect();
    checks.insert(
        0,
        Check::new(
            "common unit",
            !common.is_empty(),
            if common.is_empty() {
                "none".to_string()
            } else {
                format!("u in {{{}}}", shown.join(", "))
            },
        ),
    );
    checks
}

/// Random odd triples with entries in `[-9, 9]`.
pub fn pretzel_samples(count: usize, seed: u64) -> Vec<(i64, i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut odd = || 2 * rng.gen_range(-5i64..=4) + 1;
    (0..count).map(|_| (odd(), odd(), odd())).collect()
}

fn pretzel(options: &VerifyOptions) -> Vec<Check> {
    pretzel_samples(options.pretzel_samples, options.seed)
        .par_iter()
        .map(|&(p, q, r)| {
            let label = format!("P({p},{q},{r})");
            let run = || -> Result<(bool, String), String> {
                let d = pretzel_grams(PretzelParams::new(p, q, r).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let gram = d
                    .computed_cbl(Normalization::Symmetric)
                    .map_err(|e| e.to_string())?
                    .entries_equal(&d.cbl);
                let ratio = d.ratio_holds().map_err(|e| e.to_string())?;
                let alpha = d.alpha().map_err(|e| e.to_string())?;
                let alpha_ok = alpha.is_one() || (-alpha.clone()).is_one();
                Ok((
                    gram && ratio && alpha_ok,
                    format!(
                        "delta = {}, gram {}, ratio {}, alpha = {}",
                        d.seifert.modulus().delta(),
                        if gram { "equal" } else { "differs" },
                        if ratio { "holds" } else { "fails" },
                        alpha.display_rep()
                    ),
                ))
            };
            match run() {
                Ok((ok, detail)) => Check::new(label, ok, detail),
                Err(e) => Check::new(label, false, e),
            }
        })
        .collect()
}

fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    (2..=max)
        .flat_map(|m| (m + 1..=max).map(move |n| (m, n)))
        .filter(|&(m, n)| num_integer::gcd(m, n) == 1)
        .collect()
}

fn torus() -> Vec<Check> {
    const DIAGRAMS: [(i64, i64); 5] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)];
    let mut checks: Vec<Check> = coprime_pairs(7)
        .par_iter()
        .map(|&(m, n)| {
            let label = format!("T({m},{n}) coefficient");
            let run = || -> Result<(bool, String), String> {
                let p = TorusParams::new(m, n).map_err(|e| e.to_string())?;
                let modulus = crate::families::torus_delta(&p).map_err(|e| e.to_string())?;
                let c = crate::families::torus_q_coefficient(&p, &modulus)
                    .map_err(|e| e.to_string())?;
                let mut same = true;
                for k in [-1, 1, 2] {
                    let other = crate::families::torus_q_coefficient(&p.shifted(k), &modulus)
                        .map_err(|e| e.to_string())?;
                    same &= other == c;
                }
                Ok((
                    same,
                    format!(
                        "c = {}, Bezout shifts {}",
                        c.display_rep(),
                        if same { "agree" } else { "differ" }
                    ),
                ))
            };
            match run() {
                Ok((ok, d)) => Check::new(label, ok, d),
                Err(e) => Check::new(label, false, e),
            }
        })
        .collect();
    let diagrams: Vec<Check> = DIAGRAMS
        .par_iter()
        .map(|&(m, n)| {
            let label = format!("T({m},{n}) weight");
            let run = || -> Result<(bool, String), String> {
                let t = TorusData::new(TorusParams::new(m, n).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let unit = t.calibration_unit(4).map_err(|e| e.to_string())?;
                let Some(unit) = unit else {
                    return Ok((false, "no calibration unit".into()));
                };
                let c = t.q_coefficient().map_err(|e| e.to_string())?;
                let md = &t.modulus;
                let samples = [(1, 0), (0, 1), (2, -1), (-1, 3)];
                let poly = ["1", "t", "1 - t^2", "2*t^-1 + t"];
                let mut ok = true;
                for (i, &(y1c, d1c)) in samples.iter().enumerate() {
                    for (j, &(y2c, d2c)) in samples.iter().enumerate() {
                        let y1 = md
                            .parse_elem(poly[i])
                            .map_err(|e| e.to_string())?
                            .mul_poly(&LaurentPoly::constant(y1c));
                        let d1 = md.constant(d1c);
                        let y2 = md
                            .parse_elem(poly[j])
                            .map_err(|e| e.to_string())?
                            .mul_poly(&LaurentPoly::constant(y2c));
                        let d2 = md.constant(d2c);
                        let w = t
                            .weight((&y1, &d1), (&y2, &d2))
                            .map_err(|e| e.to_string())?;
                        let expected = (c.clone() * y1.conj() * y2).mul_unit(unit);
                        ok &= w == expected;
                    }
                }
                Ok((
                    ok,
                    format!("weight = ({unit}) * c * conj(y1) * y2 on 16 sample pairs"),
                ))
            };
            match run() {
                Ok((ok, d)) => Check::new(label, ok, d),
                Err(e) => Check::new(label, false, e),
            }
        })
        .collect();
    checks.extend(diagrams);
    checks
}

fn local(options: &VerifyOptions) -> Vec<Check> {
    local_suite(options.trials, options.seed)
        .into_iter()
        .map(|c| {
            let label = format!("{} over Z_{}, t={}", c.name, c.quandle.0, c.quandle.1);
            let mut detail = format!("{}/{} trials", c.trials - c.failures, c.trials);
            if let Some(f) = &c.first_failure {
                detail.push_str(&format!("; first failure {f}"));
            }
            Check::new(label, c.passed(), detail)
        })
        .collect()
}

/// Every `(Z_n, t)` with `n <= max` and `t` a unit.
pub fn small_quandles(max: u64) -> Vec<FiniteAlexanderQuandle> {
    (1..=max)
        .flat_map(|n| (0..n).filter_map(move |t| FiniteAlexanderQuandle::new(n, t).ok()))
        .collect()
}

/// Every `ψ(x, y) = kxy` on `q` satisfying `ψ(tx, ty) = ψ(x, y)`.
pub fn invariant_products(q: &FiniteAlexanderQuandle) -> Vec<Bilinear> {
    (0..q.order())
        .map(|k| Bilinear::product(q.order(), k))
        .filter(|psi| psi.check_invariant(q).is_ok())
        .collect()
}

fn appendix(db: &Database) -> Vec<Check> {
    let quandles = small_quandles(7);
    let mut checks = Vec::new();

    let mut built = 0;
    let mut bad = Vec::new();
    for q in &quandles {
        for psi in invariant_products(q) {
            built += 1;
            match Cocycle2::from_psi(*q, &psi) {
                Ok(phi) => {
                    if let Err(w) = phi.check() {
                        bad.push(format!("Z_{}, t={}: {w:?}", q.order(), q.t()));
                    }
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
    }
    checks.push(Check::new(
        "cocycle identity for phi_psi",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{built} cocycles over {} quandles", quandles.len())
        } else {
            bad.join("; ")
        },
    ));

    let knots: Vec<KnotData> = db
        .names()
        .iter()
        .filter(|n| crossing_number(n).is_some_and(|c| c <= 8))
        .filter_map(|n| db.knot(n).ok())
        .collect();

    let per_knot: Vec<(String, bool, bool, usize)> = knots
        .par_iter()
        .map(|k| {
            let mut invariant_ok = true;
            let mut diagonal_ok = true;
            let mut colorings = 0;
            for q in &quandles {
                for psi in invariant_products(q) {
                    let Ok(phi) = Cocycle2::from_psi(*q, &psi) else {
                        continue;
                    };
                    let mut multisets = Vec::new();
                    for d in k.diagrams() {
                        let cols = q.colorings_linear(d);
                        colorings += cols.len();
                        for c in &cols {
                            diagonal_ok &=
                                phi.evaluate(d, c) == finite_weight_sum(d, &psi, q, q, c, c);
                        }
                        multisets.push(cocycle_invariant(d, &phi, Enumeration::Linear).ok());
                    }
                    invariant_ok &= multisets.iter().all(|m| m.is_some() && *m == multisets[0]);
                }
            }
            (k.name().to_string(), invariant_ok, diagonal_ok, colorings)
        })
        .collect();

    for name in ["3_1", "4_1"] {
        let row = per_knot.iter().find(|r| r.0 == name);
        checks.push(Check::new(
            format!("{name} invariant across diagrams"),
            row.is_some_and(|r| r.1),
            match row {
                Some(_) => "all phi_psi over quandles of order <= 7".to_string(),
                None => "knot missing from database".to_string(),
            },
        ));
    }
    for (name, inv, _, _) in per_knot.iter().filter(|r| r.0 != "3_1" && r.0 != "4_1") {
        checks.push(Check::info(
            format!("{name} invariant across diagrams"),
            *inv,
            String::new(),
        ));
    }
    let diag_ok = per_knot.iter().all(|r| r.2);
    let total: usize = per_knot.iter().map(|r| r.3).sum();
    checks.push(Check::new(
        "I_phi equals diagonal weight sum",
        diag_ok && !per_knot.is_empty(),
        format!("{total} colorings on {} knots", per_knot.len()),
    ));

    let trefoil =
        crate::diagram::KnotDiagram::from_knotinfo(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]);
    let (ok, detail) = match trefoil {
        Ok(d) => {
            let r3 = FiniteAlexanderQuandle::dihedral(3);
            let brute = r3.colorings_brute(&d).map(|c| c.len()).unwrap_or(0);
            let linear = r3.colorings_linear(&d).len();
            (
                brute == 9 && linear == 9,
                format!("brute force {brute}, linear solve {linear}"),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check::new("trefoil over R_3 has 9 colorings", ok, detail));
    checks
}

fn units() -> Vec<Check> {
    let trefoil = Modulus::knot(&LaurentPoly::from_coeffs(0, &[1, -1, 1])).expect("monic");
    let sq = Modulus::general(&LaurentPoly::from_coeffs(0, &[1, -1, 1]).pow(2)).expect("monic");
    let e = |s: &str| trefoil.parse_elem(s).expect("literal");
    let mut checks = Vec::new();

    let one_minus_t = e("1 - t");
    let (ok, detail) = match one_minus_t.invert() {
        Ok(Solve::Solved { x, .. }) => {
            let back = (x.clone() * one_minus_t.clone()).is_one();
            (
                x == e("t") && back,
                format!(
                    "inverse {}, product {}",
                    x.min_representative(),
                    if back { "1" } else { "not 1" }
                ),
            )
        }
        other => (false, format!("{other:?}")),
    };
    checks.push(Check::new("(1 - t)^-1 = t mod t^2 - t + 1", ok, detail));

    let (ok, detail) = match one_minus_t.div_into(&e("1 + t")) {
        Ok(Solve::Solved { x, .. }) => {
            let back = x.clone() * one_minus_t.clone() == e("1 + t");
            (
                x == e("2*t - 1") && back,
                format!("quotient {}", x.min_representative()),
            )
        }
        other => (false, format!("{other:?}")),
    };
    checks.push(Check::new(
        "(1 + t)(1 - t)^-1 = 2t - 1 mod t^2 - t + 1",
        ok,
        detail,
    ));

    let a = sq.parse_elem("t - 1 + t^-1").expect("literal");
    let witness = sq.parse_elem("t - 1 + t^-1").expect("literal");
    let kills = (a.clone() * witness.clone()).is_zero() && !a.is_zero() && !witness.is_zero();
    let class = a.classify();
    checks.push(Check::new(
        "t - 1 + t^-1 is a zero divisor mod (t^2 - t + 1)^2",
        kills && class == Class::ZeroDivisor,
        format!(
            "annihilated by {}, classified {class}",
            witness.display_rep()
        ),
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_crossings() {
        assert_eq!(crossing_number("7_4"), Some(7));
        assert_eq!(crossing_number("12n_57"), Some(12));
        assert_eq!(crossing_number("x"), None);
        assert_eq!("cor33".parse::<Suite>().unwrap(), Suite::Cor33);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn pretzel_samples_are_odd_and_bounded() {
        let s = pretzel_samples(50, 3);
        assert_eq!(s, pretzel_samples(50, 3));
        assert!(s
            .iter()
            .all(|&(p, q, r)| [p, q, r].iter().all(|x| x % 2 != 0 && x.abs() <= 9)));
    }

    #[test]
    fn units_suite() {
        let r = run_suite(
            Suite::Units,
            &Database::empty(),
            None,
            &VerifyOptions::default(),
        );
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn coprime_range() {
        assert_eq!(
            coprime_pairs(5),
            vec![(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]
        );
    }
}
