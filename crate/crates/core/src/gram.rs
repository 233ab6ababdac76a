//! Gram matrices of sesquilinear pairings valued in `Λ/(Δ)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentPoly, Unit};
use crate::quotient::{Modulus, QElem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GramError {
    #[error("gram matrix is not square: {rows} rows, {labels} labels")]
    Shape { rows: usize, labels: usize },
    #[error("entry ({0}, {1}) has a different modulus")]
    Modulus(usize, usize),
}

/// Declared symmetry `G(j,i) = ±u * conj(G(i,j))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "unit")]
pub enum Symmetry {
    HermitianTwisted(Unit),
    AntihermitianTwisted(Unit),
    None,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symmetry::HermitianTwisted(u) => write!(f, "hermitian_twisted({u})"),
            Symmetry::AntihermitianTwisted(u) => write!(f, "antihermitian_twisted({u})"),
            Symmetry::None => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm {
    modulus: Arc<Modulus>,
    labels: Vec<String>,
    entries: Vec<Vec<QElem>>,
    symmetry: Symmetry,
}

impl GramForm {
    pub fn new(
        modulus: Arc<Modulus>,
        labels: Vec<String>,
        entries: Vec<Vec<QElem>>,
    ) -> Result<Self, GramError> {
        if entries.len() != labels.len() || entries.iter().any(|r| r.len() != labels.len()) {
            return Err(GramError::Shape {
                rows: entries.len(),
                labels: labels.len(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if **e.modulus() != *modulus {
                    return Err(GramError::Modulus(i, j));
                }
            }
        }
        Ok(GramForm {
            modulus,
            labels,
            entries,
            symmetry: Symmetry::None,
        })
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &QElem {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<QElem>] {
        &self.entries
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(QElem::is_zero)
    }

    /// Does `G(j,i) = u * conj(G(i,j))` hold for all `i, j`?
    pub fn twist_holds(&self, u: Unit) -> bool {
        let n = self.size();
        (0..n).all(|i| (i..n).all(|j| self.entries[j][i] == self.entries[i][j].conj().mul_unit(u)))
    }

    /// All units `±t^k`, `|k| <= bound`, for which the twisted identity
    /// holds, ordered by `|k|`, then `k`, then sign.
    pub fn twist_units(&self, bound: i64) -> Vec<Unit> {
        let mut ks: Vec<i64> = (-bound..=bound).collect();
        ks.sort_by_key(|k| (k.abs(), *k));
        ks.into_iter()
            .flat_map(|k| [Unit::new(1, k), Unit::new(-1, k)])
            .filter(|u| self.twist_holds(*u))
            .collect()
    }

    /// Finds the first hermitian twist within `bound` and records it.
    pub fn detect_hermitian(mut self, bound: i64) -> Self {
        self.symmetry = self
            .twist_units(bound)
            .into_iter()
            .find(|u| u.sign > 0)
            .map_or(Symmetry::None, Symmetry::HermitianTwisted);
        self
    }

    /// Finds the first anti-hermitian twist within `bound` and records it.
    pub fn detect_antihermitian(mut self, bound: i64) -> Self {
        self.symmetry = self
            .twist_units(bound)
            .into_iter()
            .find(|u| u.sign < 0)
            .map(|u| Symmetry::AntihermitianTwisted(Unit::new(1, u.exp)))
            .unwrap_or(Symmetry::None);
        self
    }

    pub fn is_hermitian_twisted(&self, u: Unit) -> bool {
        self.twist_holds(u)
    }

    pub fn is_antihermitian_twisted(&self, u: Unit) -> bool {
        self.twist_holds(Unit::new(-u.sign, u.exp))
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &QElem) -> GramForm {
        GramForm {
            modulus: Arc::clone(&self.modulus),
            labels: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|e| e * c).collect())
                .collect(),
            symmetry: Symmetry::None,
        }
    }

    /// Gram matrix on new generators `y_k = sum_i T(i,k) x_i`:
    /// `G'(k,l) = sum conj(T(i,k)) G(i,j) T(j,l)`.
    pub fn change_basis(&self, t: &[Vec<QElem>], labels: Vec<String>) -> GramForm {
        let n = self.size();
        let m = labels.len();
        let mut out = vec![vec![self.modulus.zero(); m]; m];
        for (k, row) in out.iter_mut().enumerate() {
            for (l, cell) in row.iter_mut().enumerate() {
                let mut acc = self.modulus.zero();
                for i in 0..n {
                    let ci = t[i][k].conj();
                    for j in 0..n {
                        acc = acc + &ci * &self.entries[i][j] * &t[j][l];
                    }
                }
                *cell = acc;
            }
        }
        GramForm {
            modulus: Arc::clone(&self.modulus),
            labels,
            entries: out,
            symmetry: Symmetry::None,
        }
    }

    pub fn entries_equal(&self, other: &GramForm) -> bool {
        self.size() == other.size() && self.entries.iter().zip(&other.entries).all(|(a, b)| a == b)
    }

    /// Printable form with canonical representatives.
    pub fn report(&self) -> GramReport {
        GramReport {
            modulus: self.modulus.delta().clone(),
            generators: self.labels.clone(),
            symmetry: self.symmetry,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(QElem::display_rep).collect())
                .collect(),
        }
    }
}

/// Serializable snapshot of a Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub modulus: LaurentPoly,
    pub generators: Vec<String>,
    pub symmetry: Symmetry,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl fmt::Display for GramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "modulus: {}", self.modulus)?;
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        writeln!(f, "symmetry: {}", self.symmetry)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(" | "))?;
        }
        Ok(())
    }
}

impl fmt::Display for GramForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.report().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_detection() {
        let m = Modulus::knot(&"t^2 - t + 1".parse().unwrap()).unwrap();
        let g = GramForm::new(
            Arc::clone(&m),
            vec!["e1".into()],
            vec![vec![m.parse_elem("-t").unwrap()]],
        )
        .unwrap();
        assert!(g.is_hermitian_twisted(Unit::new(1, 2)));
        assert!(!g.is_hermitian_twisted(Unit::ONE));
        let g = g.detect_hermitian(4);
        assert_eq!(g.symmetry(), Symmetry::HermitianTwisted(Unit::new(1, 2)));
        let bad = GramForm::new(Arc::clone(&m), vec!["a".into()], vec![]);
        assert!(bad.is_err());
    }
}
