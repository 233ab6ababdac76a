//! Per-knot pipeline: Δ, both Seifert-side Grams, the weight Gram, `α`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::alpha::{
    alpha_classify, alpha_extract, AlphaError, AlphaOptions, AlphaResult, Extraction, OrbitFactor,
    Verdict,
};
use crate::db::KnotData;
use crate::diagram::{coloring_generators, weight_gram, ColoringError, KnotDiagram};
use crate::gram::{GramError, GramForm, GramReport};
use crate::seifert::{Normalization, SeifertError};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error(transparent)]
    Alpha(#[from] AlphaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnalysisOptions {
    pub alpha: AlphaOptions,
    pub normalization: Normalization,
    /// Window cap for the residue solver; `None` keeps the default.
    pub window: Option<i64>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            alpha: AlphaOptions::default(),
            normalization: Normalization::Symmetric,
            window: None,
        }
    }
}

/// The diagram side for one diagram.
#[derive(Debug, Clone)]
pub struct DiagramSide {
    pub weight: GramForm,
    pub alpha: AlphaResult,
}

#[derive(Debug, Clone)]
pub struct KnotAnalysis {
    pub name: String,
    pub blanchfield: GramForm,
    pub cbl: GramForm,
    pub sides: Vec<DiagramSide>,
    pub verdict: Verdict,
    pub expected_alpha: Option<String>,
    pub expected_match: Option<Option<OrbitFactor>>,
}

impl KnotAnalysis {
    pub fn primary(&self) -> &DiagramSide {
        &self.sides[0]
    }

    pub fn alpha(&self) -> &AlphaResult {
        &self.sides[0].alpha
    }

    /// Do the two Seifert-side Gram matrices agree entrywise?
    pub fn cor33_holds(&self) -> bool {
        self.blanchfield.entries_equal(&self.cbl)
    }

    /// Do all stored diagrams give the same canonical `α`?
    pub fn diagram_independent(&self) -> bool {
        let first = self.sides[0].alpha.value();
        self.sides.iter().all(|s| match (s.alpha.value(), first) {
            (Some(a), Some(b)) => s.alpha.matches(b).is_some() || a == b,
            (None, None) => true,
            _ => false,
        })
    }
}

fn diagram_side(
    data: &KnotData,
    d: &KnotDiagram,
    bl: &GramForm,
    options: &AnalysisOptions,
) -> Result<DiagramSide, ReportError> {
    let m = data.modulus();
    let basis = coloring_generators(d, m)?;
    let weight = weight_gram(d, &basis)?;
    let alpha = alpha_extract(&data.seifert, bl, &basis, &weight, options.alpha)?;
    Ok(DiagramSide { weight, alpha })
}

pub fn analyze(data: &KnotData, options: &AnalysisOptions) -> Result<KnotAnalysis, ReportError> {
    let data = match options.window {
        Some(w) => {
            let mut d = data.clone();
            d.seifert = d.seifert.with_window_cap(w);
            d
        }
        None => data.clone(),
    };
    let blanchfield = data.seifert.blanchfield_gram(options.normalization)?;
    let cbl = data.seifert.cbl_gram(options.normalization)?;
    let sides = data
        .diagrams()
        .into_iter()
        .map(|d| diagram_side(&data, d, &blanchfield, options))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = alpha_classify(&sides[0].alpha);
    let m = data.modulus();
    let expected_match = data
        .expected_alpha
        .as_ref()
        .map(|e| sides[0].alpha.matches(&m.elem(e)));
    Ok(KnotAnalysis {
        name: data.name().to_string(),
        blanchfield,
        cbl,
        sides,
        verdict,
        expected_alpha: data.record.expected_alpha.clone(),
        expected_match,
    })
}

/// Machine-readable summary mirroring the text report.
#[derive(Debug, Clone, Serialize)]
pub struct KnotSummary {
    pub name: String,
    pub delta: String,
    pub blanchfield: GramReport,
    pub cbl: GramReport,
    pub cor33: bool,
    pub weight: GramReport,
    pub alpha: AlphaSummary,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaSummary {
    pub value: String,
    pub raw: Option<String>,
    pub factor: Option<String>,
    pub classification: Option<String>,
    pub self_conjugate: bool,
    pub minimal_forms: usize,
    /// `w_i` whose norms `N_i = w_i * conj(w_i)` span the orbit.
    pub orbit_units: Vec<String>,
    pub extraction: crate::alpha::Extraction,
    pub expected: Option<String>,
    pub expected_match: Option<String>,
    pub diagram_independent: bool,
}

impl KnotAnalysis {
    pub fn summary(&self) -> KnotSummary {
        let a = self.alpha();
        KnotSummary {
            name: self.name.clone(),
            delta: self.blanchfield.modulus().delta().to_string(),
            blanchfield: self.blanchfield.report(),
            cbl: self.cbl.report(),
            cor33: self.cor33_holds(),
            weight: self.primary().weight.report(),
            alpha: AlphaSummary {
                value: a.display(),
                raw: a.raw.as_ref().map(|r| r.display_rep().to_string()),
                factor: a.canonical_factor.as_ref().map(ToString::to_string),
                classification: a.classification.map(|c| c.to_string()),
                self_conjugate: a.self_conjugate,
                minimal_forms: a.minimal_forms,
                orbit_units: a.generators.iter().map(ToString::to_string).collect(),
                extraction: a.extraction.clone(),
                expected: self.expected_alpha.clone(),
                expected_match: self.expected_match.as_ref().map(|m| match m {
                    Some(f) => format!("match ({f})"),
                    None => "mismatch".into(),
                }),
                diagram_independent: self.diagram_independent(),
            },
            verdict: self.verdict.clone(),
        }
    }
}

impl fmt::Display for KnotSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot: {}", self.name)?;
        writeln!(f, "delta: {}", self.delta)?;
        writeln!(f, "blanchfield:")?;
        write!(f, "{}", indent(&self.blanchfield.to_string()))?;
        writeln!(f, "cbl:")?;
        write!(f, "{}", indent(&self.cbl.to_string()))?;
        writeln!(f, "cbl equals blanchfield: {}", self.cor33)?;
        writeln!(f, "weight:")?;
        write!(f, "{}", indent(&self.weight.to_string()))?;
        write!(f, "{}", self.alpha)?;
        let v = &self.verdict;
        writeln!(f, "delta(-1): {} ({})", v.delta_at_minus_one, v.delta_class)?;
        match (&v.witness, v.recoverable) {
            (_, true) => writeln!(f, "verdict: recoverable"),
            (Some(w), false) => writeln!(f, "verdict: not recoverable ({w})"),
            (None, false) => writeln!(f, "verdict: not recoverable"),
        }
    }
}

impl fmt::Display for AlphaSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha: {}", self.value)?;
        if let Some(r) = &self.raw {
            writeln!(f, "alpha raw: {r}")?;
        }
        if let Some(x) = &self.factor {
            writeln!(f, "alpha factor: {x}")?;
        }
        if !self.orbit_units.is_empty() {
            let units: Vec<String> = self
                .orbit_units
                .iter()
                .enumerate()
                .map(|(i, u)| format!("N{} = |{u}|^2", i + 1))
                .collect();
            writeln!(f, "alpha orbit: {}", units.join(", "))?;
        }
        if let Some(c) = &self.classification {
            writeln!(f, "alpha class: {c}")?;
        }
        writeln!(f, "alpha self-conjugate: {}", self.self_conjugate)?;
        if self.minimal_forms > 1 {
            writeln!(f, "alpha minimal forms: {}", self.minimal_forms)?;
        }
        match &self.extraction {
            Extraction::ZeroForm => writeln!(f, "extraction: zero form")?,
            Extraction::Cyclic {
                seifert_generator,
                coloring_generator,
                q_value,
                bl_value,
            } => {
                writeln!(
                    f,
                    "extraction: cyclic x = {seifert_generator:?}, y = {coloring_generator:?}"
                )?;
                writeln!(f, "  Q(y, y) = {q_value}, Bl(x, x) = {bl_value}")?;
            }
            Extraction::Undetermined { reason } => {
                writeln!(f, "extraction: undetermined ({reason})")?
            }
        }
        if let Some(e) = &self.expected {
            writeln!(
                f,
                "expected: {e} -> {}",
                self.expected_match.as_deref().unwrap_or("n/a")
            )?;
        }
        writeln!(f, "diagram independent: {}", self.diagram_independent)
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}
