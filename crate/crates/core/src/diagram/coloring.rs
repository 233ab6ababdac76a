//! Colorings by the Alexander quandle `Λ/(Δ)` with `a ◁ b = t(a - b) + b`.

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use super::pd::KnotDiagram;
use crate::laurent::LaurentPoly;
use crate::linalg::{LinalgError, PolyMatrix};
use crate::quotient::{Modulus, QElem, QuotientError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("det of the reduced coloring matrix is {found}, not an associate of {expected}")]
    ModulusMismatch {
        found: LaurentPoly,
        expected: LaurentPoly,
    },
    #[error("generator {generator} violates the relation at crossing {crossing}")]
    Relation { generator: usize, crossing: usize },
    #[error("pinned arc {arc} or dropped crossing {crossing} out of range")]
    Choice { arc: usize, crossing: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

/// Crossing-by-arc matrix of `t C(α) + (1 - t) C(β) - C(γ)`.
pub fn relation_matrix(d: &KnotDiagram) -> PolyMatrix {
    let t = LaurentPoly::t();
    let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
    let mut m = PolyMatrix::zeros(d.num_crossings(), d.num_arcs());
    for (i, c) in d.crossings().iter().enumerate() {
        for (arc, coeff) in [
            (c.alpha(), &t),
            (c.beta(), &one_minus_t),
            (c.gamma(), &-LaurentPoly::one()),
        ] {
            let v = m.get(i, arc) + coeff;
            m.set(i, arc, v);
        }
    }
    m
}

/// Relation matrix without one crossing row and one arc column.
pub fn reduced_matrix(d: &KnotDiagram, crossing: usize, arc: usize) -> PolyMatrix {
    let full = relation_matrix(d);
    if d.num_crossings() == 0 {
        return PolyMatrix::zeros(0, 0);
    }
    full.minor(crossing, arc)
}

/// Normalized Alexander polynomial as the determinant of the reduced
/// coloring matrix.
pub fn diagram_alexander(d: &KnotDiagram) -> Result<LaurentPoly, LinalgError> {
    let det = reduced_matrix(d, 0, 0).det()?;
    Ok(det.normalize().map(|(p, _)| p).unwrap_or(det))
}

/// Does the arc coloring `c` satisfy every crossing relation? Returns the
/// first failing crossing.
pub fn first_violation(d: &KnotDiagram, c: &[QElem]) -> Option<usize> {
    d.crossings().iter().position(|x| {
        let lhs = (&c[x.alpha()] - &c[x.beta()]).mul_poly(&LaurentPoly::t()) + &c[x.beta()];
        lhs != c[x.gamma()]
    })
}

pub fn is_coloring(d: &KnotDiagram, c: &[QElem]) -> bool {
    first_violation(d, c).is_none()
}

pub fn monochromatic(d: &KnotDiagram, value: &QElem) -> Vec<QElem> {
    vec![value.clone(); d.num_arcs()]
}

/// Generators of the reduced coloring module: adjugate columns of the
/// reduced matrix, with the pinned arc colored 0.
#[derive(Debug, Clone)]
pub struct ColoringBasis {
    modulus: Arc<Modulus>,
    labels: Vec<String>,
    generators: Vec<Vec<QElem>>,
    deleted_arc: Option<usize>,
    dropped_crossing: Option<usize>,
}

impl ColoringBasis {
    /// Explicit generators, each checked against every crossing relation.
    pub fn from_generators(
        d: &KnotDiagram,
        modulus: &Arc<Modulus>,
        labels: Vec<String>,
        generators: Vec<Vec<QElem>>,
    ) -> Result<Self, ColoringError> {
        for (k, g) in generators.iter().enumerate() {
            if let Some(crossing) = first_violation(d, g) {
                return Err(ColoringError::Relation {
                    generator: k,
                    crossing,
                });
            }
        }
        Ok(ColoringBasis {
            modulus: Arc::clone(modulus),
            labels,
            generators,
            deleted_arc: None,
            dropped_crossing: None,
        })
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Vec<QElem>] {
        &self.generators
    }

    /// Arc pinned to 0, for adjugate bases.
    pub fn deleted_arc(&self) -> Option<usize> {
        self.deleted_arc
    }

    pub fn dropped_crossing(&self) -> Option<usize> {
        self.dropped_crossing
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// `Σ c_k g_k`.
    pub fn combine(&self, coeffs: &[QElem]) -> Vec<QElem> {
        let arcs = self.generators.first().map_or(0, Vec::len);
        (0..arcs)
            .map(|a| {
                self.generators
                    .iter()
                    .zip(coeffs)
                    .fold(self.modulus.zero(), |acc, (g, c)| acc + &g[a] * c)
            })
            .collect()
    }
}

/// Generators with the lowest-label choices: crossing 0 dropped, arc 0 pinned.
pub fn coloring_generators(
    d: &KnotDiagram,
    m: &Arc<Modulus>,
) -> Result<ColoringBasis, ColoringError> {
    coloring_generators_with(d, m, 0, 0)
}

pub fn coloring_generators_with(
    d: &KnotDiagram,
    m: &Arc<Modulus>,
    crossing: usize,
    arc: usize,
) -> Result<ColoringBasis, ColoringError> {
    let n = d.num_crossings();
    if n == 0 {
        let det = LaurentPoly::one();
        if !m.delta().is_one() {
            return Err(ColoringError::ModulusMismatch {
                found: det,
                expected: m.delta().clone(),
            });
        }
        return Ok(ColoringBasis {
            modulus: Arc::clone(m),
            labels: Vec::new(),
            generators: Vec::new(),
            deleted_arc: None,
            dropped_crossing: None,
        });
    }
    if crossing >= n || arc >= d.num_arcs() {
        return Err(ColoringError::Choice { arc, crossing });
    }
    let reduced = reduced_matrix(d, crossing, arc);
    let det = reduced.det()?;
    let associate = det
        .normalize()
        .map(|(p, _)| p)
        .unwrap_or_else(|_| det.clone());
    if &associate != m.delta() {
        return Err(ColoringError::ModulusMismatch {
            found: det,
            expected: m.delta().clone(),
        });
    }
    let adj = reduced.adjugate()?;
    let mut labels = Vec::new();
    let mut generators = Vec::new();
    for j in 0..adj.cols() {
        let col = adj.column(j);
        let mut g: Vec<QElem> = col.iter().map(|p| m.elem(p)).collect();
        g.insert(arc, m.zero());
        if g.iter().all(QElem::is_zero) {
            continue;
        }
        labels.push(format!("g{}", j + 1));
        generators.push(g);
    }
    let bad = generators
        .par_iter()
        .enumerate()
        .find_map_first(|(k, g)| first_violation(d, g).map(|c| (k, c)));
    if let Some((generator, crossing)) = bad {
        return Err(ColoringError::Relation {
            generator,
            crossing,
        });
    }
    Ok(ColoringBasis {
        modulus: Arc::clone(m),
        labels,
        generators,
        deleted_arc: Some(arc),
        dropped_crossing: Some(crossing),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::pd::BraidClosure;

    fn trefoil() -> KnotDiagram {
        KnotDiagram::from_knotinfo(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap()
    }

    #[test]
    fn trefoil_alexander_and_generators() {
        let d = trefoil();
        let delta = diagram_alexander(&d).unwrap();
        assert_eq!(delta.to_string(), "1 - t + t^2");
        let m = Modulus::knot(&delta).unwrap();
        let basis = coloring_generators(&d, &m).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(basis.generators().iter().all(|g| is_coloring(&d, g)));
        assert!(is_coloring(
            &d,
            &monochromatic(&d, &m.parse_elem("2 + t").unwrap())
        ));
        let wrong = Modulus::knot(&"1 - 3t + t^2".parse().unwrap()).unwrap();
        assert!(matches!(
            coloring_generators(&d, &wrong),
            Err(ColoringError::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn figure_eight_braid() {
        let d = BraidClosure::new(&[1, -2, 1, -2]).unwrap().diagram;
        assert_eq!(diagram_alexander(&d).unwrap().to_string(), "1 - 3*t + t^2");
    }

    #[test]
    fn unknot_has_empty_basis() {
        let m = Modulus::knot(&LaurentPoly::one()).unwrap();
        let b = coloring_generators(&KnotDiagram::unknot(), &m).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn other_choices_give_colorings() {
        let d = trefoil();
        let m = Modulus::knot(&diagram_alexander(&d).unwrap()).unwrap();
        for c in 0..3 {
            for a in 0..3 {
                let b = coloring_generators_with(&d, &m, c, a).unwrap();
                assert!(b
                    .generators()
                    .iter()
                    .all(|g| is_coloring(&d, g) && g[a].is_zero()));
            }
        }
    }
}
