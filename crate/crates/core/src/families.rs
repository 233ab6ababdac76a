//! Closed forms for pretzel knots `P(p, q, r)` and torus knots `T(m, n)`.
//!
//! Pretzel: with `p = 2ℓ + 1`, `q = 2m + 1`, `r = 2n + 1` the Alexander
//! module is generated by
//! `v = ((1 + m + n)(t - 1), t + mt - m)` and `w = (mt - 1 - m, (1 + ℓ + m)(t - 1))`,
//! with cohomological Gram `(1 - t^{-1}) K` and weight Gram `(1 + t^{-1}) K`
//! for the core matrix
//!
//! ```text
//! K = [ (1 - t)(1 + m + n)   -1 - m + mt        ]
//!     [ -m + t + mt          (1 - t)(1 + m + ℓ) ]
//! ```
//!
//! Torus: `Δ = (t^{mn} - 1)(t - 1) / ((t^m - 1)(t^n - 1))`; the weight
//! pairing on the colorings `c_k = (1 + u + ... + u^{k-2}) y + δ`,
//! `u = t^{an}`, is `c ȳ₁ y₂` with `c (1 - t^{bm})(1 - t^{an}) = nm(1 - t^{-1})`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{
    weight_sum, BraidClosure, ColoringBasis, ColoringError, DiagramError, KnotDiagram,
};
use crate::gram::{GramError, GramForm};
use crate::laurent::{LaurentPoly, Unit};
use crate::quotient::{Modulus, QElem, QuotientError, Solve};
use crate::seifert::{Normalization, SeifertData, SeifertError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("pretzel parameters must be odd, got ({0}, {1}, {2})")]
    EvenPretzel(i64, i64, i64),
    #[error("torus parameters must be coprime and at least 2, got ({0}, {1})")]
    BadTorus(i64, i64),
    #[error("a = {a}, b = {b} do not satisfy a*{n} + b*{m} = 1")]
    Bezout { m: i64, n: i64, a: i64, b: i64 },
    #[error("closed-form Alexander polynomial {closed} disagrees with det(tV - V') = {seifert}")]
    DeltaMismatch {
        closed: LaurentPoly,
        seifert: LaurentPoly,
    },
    #[error("closed-form generator {0} is not in the kernel of tV - V' mod Δ")]
    NotInKernel(&'static str),
    #[error("division by {divisor} has no solution modulo Δ")]
    NoQuotient { divisor: String },
    #[error("division by {divisor} not found within window {window}")]
    Window { divisor: String, window: i64 },
    #[error("braid propagation does not close up at strand {0}")]
    Propagation(usize),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn lin(c0: i64, c1: i64) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, &[c0, c1])
}

fn divide(divisor: &QElem, target: &QElem) -> Result<QElem, FamilyError> {
    match divisor.div_into(target)? {
        Solve::Solved { x, .. } => Ok(x),
        Solve::NoSolution => Err(FamilyError::NoQuotient {
            divisor: divisor.to_string(),
        }),
        Solve::Undetermined { window } => Err(FamilyError::Window {
            divisor: divisor.to_string(),
            window,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PretzelParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub l: i64,
    pub m: i64,
    pub n: i64,
}

impl PretzelParams {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self, FamilyError> {
        if [p, q, r].iter().any(|x| x.rem_euclid(2) != 1) {
            return Err(FamilyError::EvenPretzel(p, q, r));
        }
        Ok(PretzelParams {
            p,
            q,
            r,
            l: (p - 1) / 2,
            m: (q - 1) / 2,
            n: (r - 1) / 2,
        })
    }

    /// `½ [[p + q, q + 1], [q - 1, q + r]]`.
    pub fn seifert_rows(&self) -> Vec<Vec<i64>> {
        let (p, q, r) = (self.p, self.q, self.r);
        vec![
            vec![(p + q) / 2, (q + 1) / 2],
            vec![(q - 1) / 2, (q + r) / 2],
        ]
    }

    /// `J Vᵀ J` with `J = diag(1, -1)`: the congruent matrix whose kernel
    /// contains `v` and `w`.
    pub fn kernel_seifert_rows(&self) -> Vec<Vec<i64>> {
        let (p, q, r) = (self.p, self.q, self.r);
        vec![
            vec![(p + q) / 2, -(q - 1) / 2],
            vec![-(q + 1) / 2, (q + r) / 2],
        ]
    }

    /// `((pq + qr + rp)(t - 1)² + (t + 1)²) / 4`.
    pub fn delta(&self) -> LaurentPoly {
        let s = self.p * self.q + self.q * self.r + self.r * self.p;
        let num = &lin(-1, 1).pow(2).scale(&BigInt::from(s)) + &lin(1, 1).pow(2);
        num.div_scalar_exact(&BigInt::from(4))
            .expect("odd parameters give integral coefficients")
    }

    pub fn generators(&self) -> [Vec<LaurentPoly>; 2] {
        let (l, m, n) = (self.l, self.m, self.n);
        [
            vec![lin(-(1 + m + n), 1 + m + n), lin(-m, 1 + m)],
            vec![lin(-1 - m, m), lin(-(1 + l + m), 1 + l + m)],
        ]
    }

    pub fn core(&self) -> [[LaurentPoly; 2]; 2] {
        let (l, m, n) = (self.l, self.m, self.n);
        [
            [lin(1 + m + n, -(1 + m + n)), lin(-1 - m, m)],
            [lin(-m, 1 + m), lin(1 + m + l, -(1 + m + l))],
        ]
    }
}

#[derive(Debug, Clone)]
pub struct PretzelData {
    pub params: PretzelParams,
    /// From the matrix in [`PretzelParams::seifert_rows`].
    pub seifert: SeifertData,
    /// From [`PretzelParams::kernel_seifert_rows`].
    pub kernel_seifert: SeifertData,
    /// Closed cohomological Gram on `(v, w)`.
    pub cbl: GramForm,
    /// Closed weight Gram on `(v, w)`.
    pub q: GramForm,
}

fn closed_gram(
    m: &Arc<Modulus>,
    core: &[[LaurentPoly; 2]; 2],
    prefactor: &LaurentPoly,
) -> Result<GramForm, GramError> {
    let entries = core
        .iter()
        .map(|row| row.iter().map(|k| m.elem(&(prefactor * k))).collect())
        .collect();
    GramForm::new(Arc::clone(m), vec!["v".into(), "w".into()], entries)
}

pub fn pretzel_grams(params: PretzelParams) -> Result<PretzelData, FamilyError> {
    let seifert = SeifertData::from_rows(&params.seifert_rows())?;
    let kernel_seifert = SeifertData::from_rows(&params.kernel_seifert_rows())?;
    let closed = params.delta();
    let normalized = closed
        .normalize()
        .map(|(p, _)| p)
        .unwrap_or_else(|_| closed.clone());
    for s in [&seifert, &kernel_seifert] {
        if s.modulus().delta() != &normalized {
            return Err(FamilyError::DeltaMismatch {
                closed,
                seifert: s.det().clone(),
            });
        }
    }
    let [v, w] = params.generators();
    for (name, x) in [("v", &v), ("w", &w)] {
        if !kernel_seifert.in_kernel(x) {
            return Err(FamilyError::NotInKernel(name));
        }
    }
    let m = Arc::clone(seifert.modulus());
    let core = params.core();
    let cbl = closed_gram(&m, &core, &LaurentPoly::from_coeffs(-1, &[-1, 1]))?;
    let q = closed_gram(&m, &core, &LaurentPoly::from_coeffs(-1, &[1, 1]))?;
    Ok(PretzelData {
        params,
        seifert,
        kernel_seifert,
        cbl,
        q,
    })
}

impl PretzelData {
    /// Generators `(v, -w)` matched with the closed Gram basis.
    pub fn identified_generators(&self) -> [Vec<LaurentPoly>; 2] {
        let [v, w] = self.params.generators();
        [v, w.iter().map(|x| -x).collect()]
    }

    /// Gram of the cohomological pairing of `kernel_seifert` on the
    /// identified generators.
    pub fn computed_cbl(&self, norm: Normalization) -> Result<GramForm, FamilyError> {
        let g = self.identified_generators();
        let entries = g
            .iter()
            .map(|x| {
                g.iter()
                    .map(|y| self.kernel_seifert.cbl_pair(x, y, norm))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GramForm::new(
            Arc::clone(self.seifert.modulus()),
            vec!["v".into(), "w".into()],
            entries,
        )?)
    }

    /// `(1 + t^{-1}) / (1 - t^{-1})` in `Λ/(Δ)`.
    pub fn ratio(&self) -> Result<QElem, FamilyError> {
        let m = self.seifert.modulus();
        divide(
            &m.elem(&LaurentPoly::from_coeffs(-1, &[-1, 1])),
            &m.elem(&LaurentPoly::from_coeffs(-1, &[1, 1])),
        )
    }

    /// Does `q = ratio · cbl` hold entrywise?
    pub fn ratio_holds(&self) -> Result<bool, FamilyError> {
        let r = self.ratio()?;
        Ok(self.cbl.scale(&r).entries_equal(&self.q))
    }

    /// `α` with `q = α (1 + t)/(1 - t) cbl`.
    pub fn alpha(&self) -> Result<QElem, FamilyError> {
        let m = self.seifert.modulus();
        let target = self.ratio()?.mul_poly(&lin(1, -1));
        divide(&m.elem(&lin(1, 1)), &target)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TorusParams {
    pub m: i64,
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl TorusParams {
    /// Chooses the Bézout pair returned by the extended Euclidean algorithm.
    pub fn new(m: i64, n: i64) -> Result<Self, FamilyError> {
        if m < 2 || n < 2 || m.gcd(&n) != 1 {
            return Err(FamilyError::BadTorus(m, n));
        }
        let e = n.extended_gcd(&m);
        Self::with_bezout(m, n, e.x, e.y)
    }

    pub fn with_bezout(m: i64, n: i64, a: i64, b: i64) -> Result<Self, FamilyError> {
        if m < 2 || n < 2 || m.gcd(&n) != 1 {
            return Err(FamilyError::BadTorus(m, n));
        }
        if a * n + b * m != 1 {
            return Err(FamilyError::Bezout { m, n, a, b });
        }
        Ok(TorusParams { m, n, a, b })
    }

    /// The pair `(a + km, b - kn)`.
    pub fn shifted(&self, k: i64) -> Self {
        TorusParams {
            a: self.a + k * self.m,
            b: self.b - k * self.n,
            ..*self
        }
    }
}

fn t_pow_minus_one(k: i64) -> LaurentPoly {
    &LaurentPoly::t_pow(k) - &LaurentPoly::one()
}

pub fn torus_delta(params: &TorusParams) -> Result<Arc<Modulus>, FamilyError> {
    let (m, n) = (params.m, params.n);
    let num = &t_pow_minus_one(m * n) * &t_pow_minus_one(1);
    let den = &t_pow_minus_one(m) * &t_pow_minus_one(n);
    let delta = num
        .div_exact(&den)
        .ok()
        .flatten()
        .ok_or(FamilyError::BadTorus(m, n))?;
    Ok(Modulus::knot(&delta)?)
}

/// `c` with `c (1 - t^{bm})(1 - t^{an}) = nm(1 - t^{-1})`.
pub fn torus_q_coefficient(
    params: &TorusParams,
    modulus: &Arc<Modulus>,
) -> Result<QElem, FamilyError> {
    let divisor =
        &(-t_pow_minus_one(params.b * params.m)) * &(-t_pow_minus_one(params.a * params.n));
    let target = LaurentPoly::from_coeffs(-1, &[-1, 1]).scale(&BigInt::from(params.n * params.m));
    divide(&modulus.elem(&divisor), &modulus.elem(&target))
}

/// Propagates strand colors down a braid and reads off arc colors.
/// Returns `None` if the colors at the bottom differ from those at the top.
pub fn braid_coloring(braid: &BraidClosure, top: &[QElem]) -> Result<Vec<QElem>, FamilyError> {
    let d = &braid.diagram;
    let m = top
        .first()
        .map(|c| Arc::clone(c.modulus()))
        .ok_or(FamilyError::Propagation(0))?;
    let t_inv = LaurentPoly::t_pow(-1);
    let t = LaurentPoly::t();
    let mut arcs: Vec<Option<QElem>> = vec![None; d.num_arcs()];
    let mut assign = |edge: usize, c: &QElem| -> Result<(), FamilyError> {
        let slot = &mut arcs[d.arc_of_edge(edge)];
        match slot {
            Some(old) if old != c => Err(FamilyError::Propagation(edge)),
            _ => {
                *slot = Some(c.clone());
                Ok(())
            }
        }
    };
    for (&e, c) in braid.top_edges.iter().zip(top) {
        assign(e, c)?;
    }
    let mut x = top.to_vec();
    for (j, &g) in braid.word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        let (xi, xj) = (x[i].clone(), x[i + 1].clone());
        if g > 0 {
            x[i] = (&xj - &xi).mul_poly(&t_inv) + &xi;
            x[i + 1] = xi;
        } else {
            x[i + 1] = (&xi - &xj).mul_poly(&t) + &xj;
            x[i] = xj;
        }
        let (ei, ej) = braid.outgoing_edges(j);
        assign(ei, &x[i])?;
        assign(ej, &x[i + 1])?;
    }
    if let Some(k) = (0..top.len()).find(|&k| x[k] != top[k]) {
        return Err(FamilyError::Propagation(k));
    }
    Ok(arcs
        .into_iter()
        .map(|c| c.unwrap_or_else(|| m.zero()))
        .collect())
}

/// Torus diagram, `Δ`, and the coloring for given `(y, δ)`.
#[derive(Debug, Clone)]
pub struct TorusData {
    pub params: TorusParams,
    pub braid: BraidClosure,
    pub modulus: Arc<Modulus>,
}

impl TorusData {
    pub fn new(params: TorusParams) -> Result<Self, FamilyError> {
        let braid = BraidClosure::torus(params.m as usize, params.n as usize)?;
        let modulus = torus_delta(&params)?;
        Ok(TorusData {
            params,
            braid,
            modulus,
        })
    }

    pub fn diagram(&self) -> &KnotDiagram {
        &self.braid.diagram
    }

    /// Top colors `c_k = (1 + u + ... + u^{k-2}) y + δ`, `u = t^{an}`.
    pub fn top_colors(&self, y: &QElem, delta: &QElem) -> Vec<QElem> {
        let u = LaurentPoly::t_pow(self.params.a * self.params.n);
        let mut geometric = LaurentPoly::zero();
        let mut power = LaurentPoly::one();
        (0..self.params.m)
            .map(|_| {
                let c = y.mul_poly(&geometric) + delta;
                geometric += &power;
                power = &power * &u;
                c
            })
            .collect()
    }

    pub fn coloring(&self, y: &QElem, delta: &QElem) -> Result<Vec<QElem>, FamilyError> {
        let c = braid_coloring(&self.braid, &self.top_colors(y, delta))?;
        if let Some(crossing) = crate::diagram::coloring::first_violation(self.diagram(), &c) {
            return Err(ColoringError::Relation {
                generator: 0,
                crossing,
            }
            .into());
        }
        Ok(c)
    }

    /// The colorings for `(y, δ) = (1, 0)` and `(0, 1)`.
    pub fn coloring_generators(&self) -> Result<ColoringBasis, FamilyError> {
        let m = &self.modulus;
        let gens = vec![
            self.coloring(&m.one(), &m.zero())?,
            self.coloring(&m.zero(), &m.one())?,
        ];
        Ok(ColoringBasis::from_generators(
            self.diagram(),
            m,
            vec!["y".into(), "delta".into()],
            gens,
        )?)
    }

    pub fn q_coefficient(&self) -> Result<QElem, FamilyError> {
        torus_q_coefficient(&self.params, &self.modulus)
    }

    /// Weight sum of the colorings for `(y₁, δ₁)` and `(y₂, δ₂)`.
    pub fn weight(
        &self,
        (y1, d1): (&QElem, &QElem),
        (y2, d2): (&QElem, &QElem),
    ) -> Result<QElem, FamilyError> {
        let c1 = self.coloring(y1, d1)?;
        let c2 = self.coloring(y2, d2)?;
        Ok(weight_sum(self.diagram(), &c1, &c2))
    }

    /// The unit `±t^k` of least `|k| ≤ bound` with `weight(1, 0; 1, 0) = u c`.
    pub fn calibration_unit(&self, bound: i64) -> Result<Option<Unit>, FamilyError> {
        let one = self.modulus.one();
        let zero = self.modulus.zero();
        let w = self.weight((&one, &zero), (&one, &zero))?;
        let c = self.q_coefficient()?;
        Ok((0..=bound)
            .flat_map(|k| [k, -k])
            .flat_map(|k| [Unit::new(1, k), Unit::new(-1, k)])
            .find(|&u| c.mul_unit(u) == w))
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn pretzel_one_one_one() {
        let d = pretzel_grams(PretzelParams::new(1, 1, 1).unwrap()).unwrap();
        assert_eq!(d.seifert.modulus().delta(), &p("1 - t + t^2"));
        let core = d.params.core();
        assert_eq!(core[0][0], p("1 - t"));
        assert_eq!(core[0][1], p("-1"));
        assert_eq!(core[1][0], p("t"));
        assert!(d
            .computed_cbl(Normalization::Symmetric)
            .unwrap()
            .entries_equal(&d.cbl));
        assert!(d.ratio_holds().unwrap());
        assert_eq!(d.alpha().unwrap(), d.seifert.modulus().constant(-1));
    }

    #[test]
    fn pretzel_delta_matches_seifert() {
        for (a, b, c) in [(3, 5, 7), (-3, 5, 1), (1, -1, 3), (-9, 7, -5)] {
            let d = pretzel_grams(PretzelParams::new(a, b, c).unwrap()).unwrap();
            assert!(
                d.computed_cbl(Normalization::Symmetric)
                    .unwrap()
                    .entries_equal(&d.cbl),
                "{a} {b} {c}"
            );
        }
        assert!(PretzelParams::new(2, 1, 1).is_err());
    }

    #[test]
    fn torus_deltas() {
        let d = |m, n| {
            torus_delta(&TorusParams::new(m, n).unwrap())
                .unwrap()
                .delta()
                .clone()
        };
        assert_eq!(d(2, 3), p("1 - t + t^2"));
        assert_eq!(d(2, 5), p("1 - t + t^2 - t^3 + t^4"));
        let d34 = d(3, 4);
        assert_eq!(d34.span(), Some(6));
        assert!(d34.eval_int(1).unwrap().is_one());
    }

    #[test]
    fn torus_coefficient_trefoil() {
        let params = TorusParams::with_bezout(2, 3, 1, -1).unwrap();
        let m = torus_delta(&params).unwrap();
        assert_eq!(
            torus_q_coefficient(&params, &m).unwrap(),
            m.parse_elem("1 + t").unwrap()
        );
        let other = torus_q_coefficient(&params.shifted(1), &m).unwrap();
        assert_eq!(other, m.parse_elem("1 + t").unwrap());
    }

    #[test]
    fn torus_colorings() {
        for (a, b) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
            let data = TorusData::new(TorusParams::new(a, b).unwrap()).unwrap();
            let basis = data.coloring_generators().unwrap();
            let mono = &basis.generators()[1];
            assert!(mono.iter().all(QElem::is_one));
            let unit = data.calibration_unit(20).unwrap();
            assert!(unit.is_some(), "T({a},{b})");
        }
    }
}
