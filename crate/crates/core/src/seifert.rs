//! Seifert matrices: Alexander polynomial, the Blanchfield Gram matrix on
//! the standard generators of `coker(tV - V')`, the cohomological Gram
//! matrix on the adjugate kernel generators, and the map `κ`.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gram::{GramError, GramForm};
use crate::laurent::{LaurentPoly, Unit};
use crate::linalg::{IntMatrix, LinalgError, PolyMatrix};
use crate::quotient::{Modulus, QElem, QuotientError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("Seifert matrix must be square of even size, got {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("det(tV - V') vanishes")]
    ZeroDeterminant,
    #[error("expected a vector of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("column {0}: exact division by the modulus failed")]
    KernelBroken(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Gram(#[from] GramError),
}

/// Which representative of `Δ` converts `Q(t)/Λ` values into `Λ/(Δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Divide by `det(tV - V')` as computed.
    Raw,
    /// Divide by the self-conjugate associate of `Δ` with value `+1` at
    /// `t = 1`; the resulting Gram matrices are hermitian with trivial twist.
    #[default]
    Symmetric,
}

#[derive(Debug, Clone)]
pub struct SeifertData {
    v: IntMatrix,
    genus: usize,
    presentation: PolyMatrix,
    modulus: Arc<Modulus>,
    det: LaurentPoly,
    /// `det(tV - V') = det_unit * Δ`.
    det_unit: Unit,
    adjugate: PolyMatrix,
}

/// `tV - V'`.
pub fn presentation_matrix(v: &IntMatrix) -> PolyMatrix {
    let n = v.rows();
    let mut m = PolyMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let p = LaurentPoly::monomial(v.get(i, j).clone(), 1)
                - LaurentPoly::from(v.get(j, i).clone());
            m.set(i, j, p);
        }
    }
    m
}

/// Normalized Alexander polynomial of a Seifert matrix, as a knot modulus.
pub fn alexander_from_seifert(v: &IntMatrix) -> Result<Arc<Modulus>, SeifertError> {
    Ok(SeifertData::new(v)?.modulus)
}

impl SeifertData {
    pub fn new(v: &IntMatrix) -> Result<Self, SeifertError> {
        if v.rows() != v.cols() || !v.rows().is_multiple_of(2) {
            return Err(SeifertError::BadShape {
                rows: v.rows(),
                cols: v.cols(),
            });
        }
        let presentation = presentation_matrix(v);
        let det = presentation.det()?;
        if det.is_zero() {
            return Err(SeifertError::ZeroDeterminant);
        }
        let (_, u) = det.normalize().expect("nonzero");
        let modulus = Modulus::knot(&det)?;
        let adjugate = presentation.adjugate()?;
        Ok(SeifertData {
            v: v.clone(),
            genus: v.rows() / 2,
            presentation,
            modulus,
            det,
            det_unit: u.inverse(),
            adjugate,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, SeifertError> {
        Self::new(&IntMatrix::from_rows(rows)?)
    }

    /// Same data with a different solver window on the modulus.
    pub fn with_window_cap(mut self, cap: i64) -> Self {
        self.modulus = self.modulus.with_window_cap(cap);
        self
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn presentation(&self) -> &PolyMatrix {
        &self.presentation
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    pub fn det(&self) -> &LaurentPoly {
        &self.det
    }

    pub fn det_unit(&self) -> Unit {
        self.det_unit
    }

    pub fn adjugate(&self) -> &PolyMatrix {
        &self.adjugate
    }

    pub fn size(&self) -> usize {
        self.v.rows()
    }

    /// The representative of `Δ` used as denominator.
    pub fn delta_rep(&self, norm: Normalization) -> LaurentPoly {
        match norm {
            Normalization::Raw => self.det.clone(),
            Normalization::Symmetric => {
                let half = self.modulus.degree() / 2;
                let d = self.modulus.delta().shift(-half);
                if d.eval_int(1).is_ok_and(|v| v < BigRational::zero()) {
                    -d
                } else {
                    d
                }
            }
        }
    }

    /// `det(tV - V') / delta_rep`, a unit `±t^k`.
    fn denominator_ratio(&self, norm: Normalization) -> LaurentPoly {
        self.det
            .div_exact(&self.delta_rep(norm))
            .expect("nonzero")
            .expect("associates")
    }

    fn labels(&self, prefix: &str) -> Vec<String> {
        (1..=self.size()).map(|i| format!("{prefix}{i}")).collect()
    }

    /// Gram matrix of the Blanchfield pairing on `e_1..e_2g`:
    /// `(1 - t) adj(tV - V')_ij` rescaled by `det / delta_rep`.
    pub fn blanchfield_gram(&self, norm: Normalization) -> Result<GramForm, SeifertError> {
        let m = &self.modulus;
        let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
        let ratio = self.denominator_ratio(norm);
        let scale = ratio.as_unit().expect("associate of Δ").inverse().to_poly();
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| m.elem(&(&(&one_minus_t * self.adjugate.get(i, j)) * &scale)))
                    .collect()
            })
            .collect();
        let g = GramForm::new(Arc::clone(m), self.labels("e"), entries)?;
        Ok(g.detect_hermitian(2 * self.genus as i64 + m.degree()))
    }

    /// Cohomological pairing of two kernel vectors: lift `x`, apply
    /// `tV - V'`, divide by `Δ` exactly, pair with conjugation on the first
    /// slot and multiply by `1 - t`. Fails if `x` is not in the kernel.
    pub fn cbl_pair(
        &self,
        x: &[LaurentPoly],
        y: &[LaurentPoly],
        norm: Normalization,
    ) -> Result<QElem, SeifertError> {
        let n = self.size();
        for v in [x, y] {
            if v.len() != n {
                return Err(SeifertError::Dimension {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let delta = self.delta_rep(norm);
        let image = self.presentation.mul_vec(x)?;
        let quotients = image
            .iter()
            .enumerate()
            .map(|(i, e)| {
                e.div_exact(&delta)
                    .ok()
                    .flatten()
                    .ok_or(SeifertError::KernelBroken(i))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let pairing: LaurentPoly = quotients.iter().zip(y).map(|(a, b)| &a.bar() * b).sum();
        Ok(self
            .modulus
            .elem(&(&LaurentPoly::from_coeffs(0, &[1, -1]) * &pairing)))
    }

    /// Is `(tV - V') x ≡ 0 mod Δ`?
    pub fn in_kernel(&self, x: &[LaurentPoly]) -> bool {
        x.len() == self.size()
            && self
                .presentation
                .mul_vec(x)
                .is_ok_and(|img| img.iter().all(|e| self.modulus.elem(e).is_zero()))
    }

    /// Gram matrix of [`SeifertData::cbl_pair`] on the adjugate columns
    /// `κ(e_j)`.
    pub fn cbl_gram(&self, norm: Normalization) -> Result<GramForm, SeifertError> {
        let m = &self.modulus;
        let n = self.size();
        let kernel: Vec<Vec<LaurentPoly>> = (0..n).map(|j| self.adjugate.column(j)).collect();
        let entries = kernel
            .iter()
            .map(|x| {
                kernel
                    .iter()
                    .map(|y| self.cbl_pair(x, y, norm))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let g = GramForm::new(Arc::clone(m), self.labels("k"), entries)?;
        Ok(g.detect_hermitian(2 * self.genus as i64 + m.degree()))
    }

    /// `v ↦ adj(tV - V') v` modulo `Δ`, with the kernel membership check.
    pub fn kappa_apply(&self, v: &[QElem]) -> Result<Vec<QElem>, SeifertError> {
        let n = self.size();
        if v.len() != n {
            return Err(SeifertError::Dimension {
                expected: n,
                got: v.len(),
            });
        }
        let m = &self.modulus;
        let out: Vec<QElem> = (0..n)
            .map(|i| {
                (0..n).fold(m.zero(), |acc, j| {
                    acc + v[j].mul_poly(self.adjugate.get(i, j))
                })
            })
            .collect();
        for i in 0..n {
            let row = (0..n).fold(m.zero(), |acc, j| {
                acc + out[j].mul_poly(self.presentation.get(i, j))
            });
            if !row.is_zero() {
                return Err(SeifertError::KernelBroken(i));
            }
        }
        Ok(out)
    }

    /// Presentation matrix reduced modulo `Δ`, as residues.
    pub fn presentation_mod(&self) -> Vec<Vec<QElem>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.modulus.elem(self.presentation.get(i, j)))
                    .collect()
            })
            .collect()
    }

    /// Does `z` generate `coker(tV - V')`? True iff the entries of
    /// `adj(tV - V') z` generate the unit ideal of `Λ/(Δ)`; tested through
    /// single entries being units or an explicit combination found by the
    /// windowed solver.
    pub fn generates_cokernel(&self, z: &[LaurentPoly]) -> bool {
        let m = &self.modulus;
        let n = self.size();
        let image: Vec<LaurentPoly> = (0..n)
            .map(|i| (0..n).map(|j| self.adjugate.get(i, j) * &z[j]).sum())
            .collect();
        image.iter().any(|e| m.is_unit_exact(e))
    }

    /// Integer Seifert matrix congruent by `P`: `P' V P`.
    pub fn congruent(&self, p: &IntMatrix) -> Result<SeifertData, SeifertError> {
        let v2 = p.transpose().mul(&self.v)?.mul(p)?;
        SeifertData::new(&v2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::Symmetry;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn alexander_examples() {
        let tre = IntMatrix::from_rows(&[[-1i64, 1], [0, -1]]).unwrap();
        assert_eq!(
            alexander_from_seifert(&tre).unwrap().delta(),
            &p("t^2 - t + 1")
        );
        let fig8 = IntMatrix::from_rows(&[[1i64, 1], [0, -1]]).unwrap();
        assert_eq!(
            alexander_from_seifert(&fig8).unwrap().delta(),
            &p("t^2 - 3*t + 1")
        );
        let pretzel = IntMatrix::from_rows(&[[1i64, 1], [0, 1]]).unwrap();
        assert_eq!(
            alexander_from_seifert(&pretzel).unwrap().delta(),
            &p("t^2 - t + 1")
        );
        let odd = IntMatrix::from_rows(&[[1i64]]).unwrap();
        assert!(matches!(
            SeifertData::new(&odd),
            Err(SeifertError::BadShape { .. })
        ));
        let degenerate = IntMatrix::from_rows(&[[0i64, 0], [0, 0]]).unwrap();
        assert!(matches!(
            SeifertData::new(&degenerate),
            Err(SeifertError::ZeroDeterminant)
        ));
    }

    #[test]
    fn trefoil_grams() {
        let s = SeifertData::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
        let raw = s.blanchfield_gram(Normalization::Raw).unwrap();
        assert_eq!(raw.get(0, 0), &s.modulus().parse_elem("-t").unwrap());
        assert!(raw.is_hermitian_twisted(Unit::new(1, 2)));
        let sym = s.blanchfield_gram(Normalization::Symmetric).unwrap();
        assert_eq!(sym.get(0, 0), &s.modulus().constant(-1));
        assert_eq!(sym.symmetry(), Symmetry::HermitianTwisted(Unit::ONE));
        for norm in [Normalization::Raw, Normalization::Symmetric] {
            let b = s.blanchfield_gram(norm).unwrap();
            let c = s.cbl_gram(norm).unwrap();
            assert!(b.entries_equal(&c));
        }
        assert_eq!(
            s.cbl_gram(Normalization::Raw).unwrap().get(0, 0),
            &s.modulus().parse_elem("-t").unwrap()
        );
    }

    #[test]
    fn kappa_examples() {
        let s = SeifertData::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
        let m = s.modulus();
        let k = s.kappa_apply(&[m.one(), m.zero()]).unwrap();
        assert_eq!(k, vec![m.parse_elem("1 - t").unwrap(), m.one()]);
        let z = s.kappa_apply(&[m.zero(), m.zero()]).unwrap();
        assert!(z.iter().all(QElem::is_zero));
        assert!(s.kappa_apply(&[m.one()]).is_err());
    }

    #[test]
    fn unknot_is_empty() {
        let s = SeifertData::new(&IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!(s.modulus().degree(), 0);
        assert_eq!(
            s.blanchfield_gram(Normalization::Symmetric).unwrap().size(),
            0
        );
        assert_eq!(s.cbl_gram(Normalization::Symmetric).unwrap().size(), 0);
    }
}
