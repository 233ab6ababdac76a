//! The weight-sum pairing
//! `Q(C, C') = Σ_τ ε_τ ψ(C(α_τ) - C(β_τ), C'(β_τ)(1 - t^{-1}))`
//! with `ψ(x, y) = x̄ y`.

use std::sync::Arc;

use super::coloring::ColoringBasis;
use super::pd::KnotDiagram;
use crate::gram::{GramError, GramForm};
use crate::laurent::LaurentPoly;
use crate::quotient::QElem;

pub fn weight_sum(d: &KnotDiagram, c1: &[QElem], c2: &[QElem]) -> QElem {
    let m = c1.first().or(c2.first()).map(|e| Arc::clone(e.modulus()));
    let Some(m) = m else {
        panic!("weight_sum needs at least one arc color");
    };
    let one_minus_tinv = LaurentPoly::from_coeffs(-1, &[-1, 1]);
    let total = d.crossings().iter().fold(m.zero(), |acc, x| {
        let left = (&c1[x.alpha()] - &c1[x.beta()]).conj();
        let term = &left * &c2[x.beta()];
        if x.sign > 0 {
            acc + term
        } else {
            acc - term
        }
    });
    total.mul_poly(&one_minus_tinv)
}

/// Gram matrix of the weight sum on the basis generators, with the
/// anti-hermitian twist detected.
pub fn weight_gram(d: &KnotDiagram, basis: &ColoringBasis) -> Result<GramForm, GramError> {
    let g = basis.generators();
    let entries = g
        .iter()
        .map(|a| g.iter().map(|b| weight_sum(d, a, b)).collect())
        .collect();
    let form = GramForm::new(
        Arc::clone(basis.modulus()),
        basis.labels().to_vec(),
        entries,
    )?;
    let bound = 2 * basis.modulus().degree() + 2;
    Ok(form.detect_antihermitian(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::coloring::{coloring_generators, diagram_alexander, monochromatic};
    use crate::gram::Symmetry;
    use crate::laurent::Unit;
    use crate::quotient::Modulus;

    #[test]
    fn trefoil_weight_gram() {
        let d = KnotDiagram::from_knotinfo(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        let m = Modulus::knot(&diagram_alexander(&d).unwrap()).unwrap();
        let basis = coloring_generators(&d, &m).unwrap();
        let g = weight_gram(&d, &basis).unwrap();
        assert!(matches!(g.symmetry(), Symmetry::AntihermitianTwisted(_)));
        let mono = monochromatic(&d, &m.parse_elem("1 + 2t").unwrap());
        for gen in basis.generators() {
            assert!(weight_sum(&d, &mono, gen).is_zero());
            assert!(weight_sum(&d, gen, &mono).is_zero());
        }
        let a = &basis.generators()[0];
        let ta: Vec<QElem> = a.iter().map(|x| x.mul_unit(Unit::new(1, 1))).collect();
        let tinv: Vec<QElem> = a.iter().map(|x| x.mul_unit(Unit::new(1, -1))).collect();
        let q = weight_sum(&d, a, a);
        assert_eq!(weight_sum(&d, &ta, a), q.mul_unit(Unit::new(1, -1)));
        assert_eq!(weight_sum(&d, a, &tinv), q.mul_unit(Unit::new(1, -1)));
    }
}
