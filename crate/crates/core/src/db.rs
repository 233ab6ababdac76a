//! Knot records: PD codes, Seifert matrices and expected table values.
//!
//! File format (JSON):
//!
//! ```json
//! { "schema_version": 1,
//!   "knots": [ { "name": "3_1", "pd": "PD[6] X(1,5,2,4,+) ...",
//!                "alt_pd": "PD[8] ...", "seifert": [[-1, 0], [-1, -1]],
//!                "expected_delta": "t^2-t+1", "expected_alpha": "1",
//!                "source": "...", "optional": false } ] }
//! ```
//!
//! `alt_pd`, `expected_delta`, `expected_alpha` and `optional` may be
//! omitted. Records are validated structurally on load; the invariants
//! tying `pd`, `alt_pd`, `seifert` and `expected_delta` together are
//! checked by [`Database::knot`].

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{diagram_alexander, KnotDiagram};
use crate::laurent::LaurentPoly;
use crate::quotient::Modulus;
use crate::seifert::SeifertData;

pub const SCHEMA_VERSION: u32 = 1;

const BUNDLED: &str = include_str!("../data/knots.json");

#[derive(Debug, Error)]
pub enum DbError {
    #[error("line {line}, column {column}: {msg}")]
    Json {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    Version(u32),
    #[error("record {index} ({name}): field `{field}`: {msg}")]
    Field {
        index: usize,
        name: String,
        field: &'static str,
        msg: String,
    },
    #[error("duplicate knot name {0}")]
    Duplicate(String),
    #[error("unknown knot {0}")]
    Unknown(String),
    #[error("{name}: invariant `{invariant}` violated: {detail}")]
    Invariant {
        name: String,
        invariant: &'static str,
        detail: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRecord {
    pub name: String,
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alt_pd: Option<String>,
    pub seifert: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_delta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_alpha: Option<String>,
    #[serde(default)]
    pub source: String,
    /// Skipped rather than failed by table suites when absent.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub optional: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DbFile {
    schema_version: u32,
    #[serde(default)]
    knots: Vec<KnotRecord>,
}

/// A record with every field parsed and every invariant checked.
#[derive(Debug, Clone)]
pub struct KnotData {
    pub record: KnotRecord,
    pub diagram: KnotDiagram,
    pub alt_diagram: Option<KnotDiagram>,
    pub seifert: SeifertData,
    pub expected_delta: Option<LaurentPoly>,
    pub expected_alpha: Option<LaurentPoly>,
}

impl KnotData {
    pub fn name(&self) -> &str {
        &self.record.name
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        self.seifert.modulus()
    }

    /// The stored diagrams, primary first.
    pub fn diagrams(&self) -> Vec<&KnotDiagram> {
        std::iter::once(&self.diagram)
            .chain(self.alt_diagram.as_ref())
            .collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Database {
    records: BTreeMap<String, KnotRecord>,
}

/// Lookup key: lowercase, without `_` and without leading zeros in digit runs.
fn lookup_key(name: &str) -> String {
    let mut out = String::new();
    let mut in_digits = false;
    for c in name.to_lowercase().chars().filter(|c| *c != '_') {
        if c.is_ascii_digit() {
            if c == '0' && !in_digits {
                continue;
            }
            in_digits = true;
        } else {
            in_digits = false;
        }
        out.push(c);
    }
    out
}

fn field_err(index: usize, name: &str, field: &'static str, msg: impl ToString) -> DbError {
    DbError::Field {
        index,
        name: name.to_string(),
        field,
        msg: msg.to_string(),
    }
}

fn check_record(index: usize, r: &KnotRecord) -> Result<(), DbError> {
    let name = r.name.as_str();
    if name.trim().is_empty() {
        return Err(field_err(index, name, "name", "empty"));
    }
    r.pd.parse::<KnotDiagram>()
        .map_err(|e| field_err(index, name, "pd", e))?;
    if let Some(alt) = &r.alt_pd {
        alt.parse::<KnotDiagram>()
            .map_err(|e| field_err(index, name, "alt_pd", e))?;
    }
    let n = r.seifert.len();
    if !n.is_multiple_of(2) || r.seifert.iter().any(|row| row.len() != n) {
        return Err(field_err(
            index,
            name,
            "seifert",
            format!("not a square matrix of even size ({n} rows)"),
        ));
    }
    for (field, s) in [
        ("expected_delta", &r.expected_delta),
        ("expected_alpha", &r.expected_alpha),
    ] {
        if let Some(s) = s {
            s.parse::<LaurentPoly>()
                .map_err(|e| field_err(index, name, field, e))?;
        }
    }
    Ok(())
}

impl Database {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The in-repository knot table.
    pub fn bundled() -> Self {
        Self::from_json(BUNDLED).expect("bundled database is valid")
    }

    pub fn from_json(text: &str) -> Result<Self, DbError> {
        if text.trim().is_empty() {
            return Ok(Self::empty());
        }
        let file: DbFile = serde_json::from_str(text).map_err(|e| DbError::Json {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(DbError::Version(file.schema_version));
        }
        Self::from_records(file.knots)
    }

    pub fn from_records(records: Vec<KnotRecord>) -> Result<Self, DbError> {
        let mut db = Database::empty();
        for (i, r) in records.into_iter().enumerate() {
            check_record(i, &r)?;
            let key = lookup_key(&r.name);
            if db.records.contains_key(&key) {
                return Err(DbError::Duplicate(r.name));
            }
            db.records.insert(key, r);
        }
        Ok(db)
    }

    pub fn load(path: &Path) -> Result<Self, DbError> {
        let text = std::fs::read_to_string(path).map_err(|source| DbError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let file = DbFile {
            schema_version: SCHEMA_VERSION,
            knots: self.records().cloned().collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Records ordered by crossing number, then name.
    pub fn records(&self) -> impl Iterator<Item = &KnotRecord> {
        let mut v: Vec<&KnotRecord> = self.records.values().collect();
        v.sort_by_key(|r| sort_key(&r.name));
        v.into_iter()
    }

    pub fn names(&self) -> Vec<String> {
        self.records().map(|r| r.name.clone()).collect()
    }

    /// Accepts `11_73` for `11n_73` when the match is unique.
    pub fn record(&self, name: &str) -> Result<&KnotRecord, DbError> {
        let key = lookup_key(name);
        if let Some(r) = self.records.get(&key) {
            return Ok(r);
        }
        let mut loose = self
            .records
            .iter()
            .filter(|(k, _)| k.replace(['a', 'n'], "") == key);
        match (loose.next(), loose.next()) {
            (Some((_, r)), None) => Ok(r),
            _ => Err(DbError::Unknown(name.to_string())),
        }
    }

    /// Parses a record and checks its invariants.
    pub fn knot(&self, name: &str) -> Result<KnotData, DbError> {
        validate(self.record(name)?)
    }
}

fn sort_key(name: &str) -> (u32, String, u32) {
    let digits: String = name.chars().take_while(char::is_ascii_digit).collect();
    let rest = &name[digits.len()..];
    let tail: String = rest.chars().filter(char::is_ascii_digit).collect();
    let letters: String = rest.chars().filter(char::is_ascii_alphabetic).collect();
    (
        digits.parse().unwrap_or(u32::MAX),
        letters,
        tail.parse().unwrap_or(0),
    )
}

fn invariant(name: &str, invariant: &'static str, detail: impl ToString) -> DbError {
    DbError::Invariant {
        name: name.to_string(),
        invariant,
        detail: detail.to_string(),
    }
}

/// Δ up to `±t^k`.
fn normalized(p: &LaurentPoly) -> LaurentPoly {
    p.normalize().map(|(q, _)| q).unwrap_or_else(|_| p.clone())
}

pub fn validate(r: &KnotRecord) -> Result<KnotData, DbError> {
    let name = r.name.as_str();
    let diagram: KnotDiagram = r.pd.parse().map_err(|e| invariant(name, "pd parses", e))?;
    let alt_diagram = r
        .alt_pd
        .as_ref()
        .map(|s| s.parse::<KnotDiagram>())
        .transpose()
        .map_err(|e| invariant(name, "alt_pd parses", e))?;
    let seifert = SeifertData::from_rows(&r.seifert)
        .map_err(|e| invariant(name, "seifert is nondegenerate", e))?;
    let delta = seifert.modulus().delta().clone();
    match delta.eval_int(1) {
        Ok(v) if v.numer().magnitude() == v.denom().magnitude() => {}
        _ => return Err(invariant(name, "Δ(1) = ±1", format!("Δ = {delta}"))),
    }
    let expected_delta = r
        .expected_delta
        .as_ref()
        .map(|s| s.parse::<LaurentPoly>())
        .transpose()
        .map_err(|e| invariant(name, "expected_delta parses", e))?;
    if let Some(e) = &expected_delta {
        if normalized(e) != delta {
            return Err(invariant(
                name,
                "seifert Δ matches expected_delta",
                format!("{delta} vs {e}"),
            ));
        }
    }
    for (label, d) in
        std::iter::once(("pd", &diagram)).chain(alt_diagram.as_ref().map(|d| ("alt_pd", d)))
    {
        let dd = diagram_alexander(d).map_err(|e| invariant(name, "diagram Δ computable", e))?;
        if normalized(&dd) != delta {
            let which = if label == "pd" {
                "pd Δ matches seifert Δ"
            } else {
                "alt_pd Δ matches seifert Δ"
            };
            return Err(invariant(name, which, format!("{dd} vs {delta}")));
        }
    }
    let expected_alpha = r
        .expected_alpha
        .as_ref()
        .map(|s| s.parse::<LaurentPoly>())
        .transpose()
        .map_err(|e| invariant(name, "expected_alpha parses", e))?;
    Ok(KnotData {
        record: r.clone(),
        diagram,
        alt_diagram,
        seifert,
        expected_delta,
        expected_alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_loads() {
        let db = Database::bundled();
        assert_eq!(db.len(), 20);
        assert_eq!(db.records().filter(|r| !r.optional).count(), 16);
        assert_eq!(db.names()[0], "3_1");
        assert_eq!(db.record("11_73").unwrap().name, "11n_73");
        assert_eq!(db.record("12n0057").unwrap().name, "12n_57");
        assert!(db.record("9_1").is_err());
    }

    #[test]
    fn empty_and_bad_files() {
        assert!(Database::from_json("").unwrap().is_empty());
        assert!(
            Database::from_json("{\"schema_version\": 1, \"knots\": []}")
                .unwrap()
                .is_empty()
        );
        assert!(matches!(
            Database::from_json("{\"schema_version\": 7}"),
            Err(DbError::Version(7))
        ));
        let dup = r#"{"schema_version": 1, "knots": [
            {"name": "3_1", "pd": "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)", "seifert": [[-1,0],[-1,-1]]},
            {"name": "3_1", "pd": "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)", "seifert": [[-1,0],[-1,-1]]}]}"#;
        assert!(matches!(
            Database::from_json(dup),
            Err(DbError::Duplicate(_))
        ));
        let bad = r#"{"schema_version": 1, "knots": [{"name": "x", "pd": "PD[6] X(1,5,2)", "seifert": []}]}"#;
        assert!(matches!(
            Database::from_json(bad),
            Err(DbError::Field { field: "pd", .. })
        ));
    }

    #[test]
    fn mismatched_delta_is_rejected() {
        let text = r#"{"schema_version": 1, "knots": [
            {"name": "fake", "pd": "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)", "seifert": [[1,1],[0,-1]]}]}"#;
        let db = Database::from_json(text).unwrap();
        let err = db.knot("fake").unwrap_err();
        assert!(
            matches!(
                err,
                DbError::Invariant {
                    invariant: "pd Δ matches seifert Δ",
                    ..
                }
            ),
            "{err}"
        );
    }
}
