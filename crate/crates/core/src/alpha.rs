//! The constant `α` with `Q(κx, κy) = α (1 + t)/(1 - t) Bl(x, y)`.
//!
//! For a cyclic Alexander module, a generator `x` of `coker(tV - V')` and
//! a generating coloring `y` give `α' = Q(y, y)(1 - t) / ((1 + t) Bl(x, x))`,
//! which is `α` up to a norm `w w̄` of a unit `w`. The orbit searched is
//! `±t^k N^j α'` with `N = (1 - t)(1 - t^{-1})`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::ColoringBasis;
use crate::gram::GramForm;
use crate::laurent::{LaurentPoly, Unit};
use crate::quotient::{Class, Modulus, QElem, QuotientError, Solve};
use crate::seifert::SeifertData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphaError {
    #[error("Seifert and diagram moduli differ: {0} vs {1}")]
    Modulus(LaurentPoly, LaurentPoly),
    #[error("Blanchfield Gram has {bl} rows but the Seifert matrix has size {seifert}")]
    Shape { bl: usize, seifert: usize },
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlphaOptions {
    /// Compare signs exactly instead of up to `±1`.
    pub strict_sign: bool,
    /// Bound on `|k|` in `t^k`; `None` means `2 deg Δ`.
    pub unit_bound: Option<i64>,
    /// Bound on `Σ |e_i|` in `Π N_i^{e_i}`.
    pub norm_depth: i64,
    /// Number of norm generators searched for.
    pub norm_generators: usize,
}

impl Default for AlphaOptions {
    fn default() -> Self {
        AlphaOptions {
            strict_sign: false,
            unit_bound: None,
            norm_depth: 4,
            norm_generators: 3,
        }
    }
}

/// How the raw value was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Extraction {
    /// The weight Gram vanishes, so `α = 0` for any basis matching.
    ZeroForm,
    /// Single-generator reduction.
    Cyclic {
        /// Coefficients of `x` in `e_1..e_2g`.
        seifert_generator: Vec<i64>,
        /// Coefficients of `y` in the coloring generators.
        coloring_generator: Vec<i64>,
        q_value: String,
        bl_value: String,
    },
    /// No generator pair found; the module may not be cyclic.
    Undetermined { reason: String },
}

/// An orbit element `sign · t^exp · Π N_i^{norms_i} · α'`, with `N_i` the
/// norm of the `i`-th generator in [`AlphaResult::generators`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitFactor {
    pub sign: i8,
    pub exp: i64,
    pub norms: Vec<i64>,
}

impl std::fmt::Display for OrbitFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", Unit::new(self.sign, self.exp))?;
        for (i, e) in self.norms.iter().enumerate().filter(|(_, e)| **e != 0) {
            write!(f, " * N{}^{}", i + 1, e)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct AlphaResult {
    pub modulus: Arc<Modulus>,
    pub extraction: Extraction,
    /// `α'` before canonicalization.
    pub raw: Option<QElem>,
    /// Print-minimal self-conjugate element of the orbit.
    pub canonical: Option<QElem>,
    pub canonical_factor: Option<OrbitFactor>,
    /// Number of distinct self-conjugate minimal forms (sign ignored).
    pub minimal_forms: usize,
    pub classification: Option<Class>,
    pub self_conjugate: bool,
    /// Units whose norms span the searched orbit.
    pub generators: Vec<LaurentPoly>,
    options: AlphaOptions,
    bases: Vec<(Vec<i64>, QElem)>,
}

impl AlphaResult {
    /// The value shown in reports: canonical form, else the raw value.
    pub fn value(&self) -> Option<&QElem> {
        self.canonical.as_ref().or(self.raw.as_ref())
    }

    pub fn display(&self) -> String {
        match self.value() {
            Some(v) => v.display_rep().to_string(),
            None => "undetermined".into(),
        }
    }

    /// `α' Π N_i^{e_i}` for the searched exponent vectors.
    pub fn orbit_bases(&self) -> &[(Vec<i64>, QElem)] {
        &self.bases
    }

    /// The first orbit element equal to `expected`, honoring the sign mode.
    pub fn matches(&self, expected: &QElem) -> Option<OrbitFactor> {
        let bound = self.options.unit_bound.unwrap_or(2 * self.modulus.degree());
        let signs: &[i8] = if self.options.strict_sign {
            &[1]
        } else {
            &[1, -1]
        };
        self.bases.iter().find_map(|(e, b)| {
            (0..=bound).flat_map(|k| [k, -k]).find_map(|k| {
                signs.iter().find_map(|&sign| {
                    (b.mul_unit(Unit::new(sign, k)) == *expected).then(|| OrbitFactor {
                        sign,
                        exp: k,
                        norms: e.clone(),
                    })
                })
            })
        })
    }

    pub fn options(&self) -> AlphaOptions {
        self.options
    }
}

/// Nonzero coefficient vectors with entries in `{-1, 0, 1}` and at most
/// two nonzero entries, unit vectors first.
fn small_combinations(n: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            for s in [1, -1] {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = s;
                out.push(v);
            }
        }
    }
    out
}

fn quadratic(g: &GramForm, c: &[i64]) -> QElem {
    let m = g.modulus();
    let mut acc = m.zero();
    for (i, ci) in c.iter().enumerate().filter(|(_, c)| **c != 0) {
        for (j, cj) in c.iter().enumerate().filter(|(_, c)| **c != 0) {
            acc = acc + g.get(i, j).mul_poly(&LaurentPoly::constant(ci * cj));
        }
    }
    acc
}

fn seifert_generator(seifert: &SeifertData, bl: &GramForm) -> Option<(Vec<i64>, QElem)> {
    small_combinations(seifert.size())
        .into_iter()
        .find_map(|c| {
            let z: Vec<LaurentPoly> = c.iter().map(|&x| LaurentPoly::constant(x)).collect();
            seifert.generates_cokernel(&z).then(|| {
                let b = quadratic(bl, &c);
                (c, b)
            })
        })
}

fn coloring_generator(basis: &ColoringBasis, qg: &GramForm) -> Option<(Vec<i64>, QElem)> {
    let m = basis.modulus();
    small_combinations(basis.len()).into_iter().find_map(|c| {
        let coeffs: Vec<QElem> = c.iter().map(|&x| m.constant(x)).collect();
        let y = basis.combine(&coeffs);
        y.iter().any(|e| m.is_unit_exact(e.rep())).then(|| {
            let q = quadratic(qg, &c);
            (c, q)
        })
    })
}

/// `α` from the Blanchfield Gram on `e_1..e_2g` and the weight Gram on
/// the coloring generators.
pub fn alpha_extract(
    seifert: &SeifertData,
    bl: &GramForm,
    basis: &ColoringBasis,
    qg: &GramForm,
    options: AlphaOptions,
) -> Result<AlphaResult, AlphaError> {
    let m = Arc::clone(seifert.modulus());
    if **qg.modulus() != *m {
        return Err(AlphaError::Modulus(
            m.delta().clone(),
            qg.modulus().delta().clone(),
        ));
    }
    if bl.size() != seifert.size() {
        return Err(AlphaError::Shape {
            bl: bl.size(),
            seifert: seifert.size(),
        });
    }
    let (extraction, raw) = if qg.is_zero() {
        (Extraction::ZeroForm, Some(m.zero()))
    } else {
        match (
            seifert_generator(seifert, bl),
            coloring_generator(basis, qg),
        ) {
            (Some((x, b)), Some((y, q))) => {
                let one_plus_t = m.elem(&LaurentPoly::from_coeffs(0, &[1, 1]));
                let denom = &b * &one_plus_t;
                let target = q.mul_poly(&LaurentPoly::from_coeffs(0, &[1, -1]));
                let extraction = Extraction::Cyclic {
                    seifert_generator: x,
                    coloring_generator: y,
                    q_value: q.display_rep().to_string(),
                    bl_value: b.display_rep().to_string(),
                };
                match denom.div_into(&target)? {
                    Solve::Solved { x, .. } => (extraction, Some(x)),
                    Solve::NoSolution => (
                        Extraction::Undetermined {
                            reason: format!("(1 + t) * {b} does not divide {q}"),
                        },
                        None,
                    ),
                    Solve::Undetermined { window } => (
                        Extraction::Undetermined {
                            reason: format!("division not found within window {window}"),
                        },
                        None,
                    ),
                }
            }
            (None, _) => (
                Extraction::Undetermined {
                    reason: "no generator of coker(tV - V') found".into(),
                },
                None,
            ),
            (_, None) => (
                Extraction::Undetermined {
                    reason: "no generating coloring found".into(),
                },
                None,
            ),
        }
    };
    Ok(canonicalize(m, extraction, raw, options))
}

/// Units `w` whose norms `w w̄` generate the searched part of the orbit:
/// `1 - t` first, then self-conjugate `t + t^{-1} - c`, then short
/// polynomials, skipping norms already reachable from earlier ones.
pub fn norm_generators(m: &Arc<Modulus>, max: usize) -> Vec<(LaurentPoly, QElem, QElem)> {
    let mut candidates = vec![LaurentPoly::from_coeffs(0, &[1, -1])];
    for c in 0..=4i64 {
        for c in [c, -c] {
            candidates.push(LaurentPoly::from_coeffs(-1, &[1, -c, 1]));
        }
    }
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            for c in -2..=2i64 {
                if b != 0 || c != 0 {
                    candidates.push(LaurentPoly::from_coeffs(0, &[a, b, c]));
                }
            }
        }
    }
    let bound = 2 * m.degree();
    let mut out: Vec<(LaurentPoly, QElem, QElem)> = Vec::new();
    for w in candidates {
        if out.len() >= max {
            break;
        }
        if w.is_zero() || w.as_unit().is_some() || !m.is_unit_exact(&w) {
            continue;
        }
        let e = m.elem(&w);
        let norm = &e * &e.conj();
        if norm.is_one() {
            continue;
        }
        let gens: Vec<(QElem, QElem)> =
            out.iter().map(|(_, n, i)| (n.clone(), i.clone())).collect();
        let reachable = norm_products(m, &gens, 2).iter().any(|(_, p)| {
            (-bound..=bound).any(|k| {
                [1i8, -1]
                    .iter()
                    .any(|&s| p.mul_unit(Unit::new(s, k)) == norm)
            })
        });
        if reachable {
            continue;
        }
        let Some(inv) = norm.invert().ok().and_then(Solve::into_solution) else {
            continue;
        };
        out.push((w, norm, inv));
    }
    out
}

/// All products `Π N_i^{e_i}` with `Σ |e_i| <= depth`, by increasing depth.
fn norm_products(m: &Arc<Modulus>, gens: &[(QElem, QElem)], depth: i64) -> Vec<(Vec<i64>, QElem)> {
    let mut out = vec![(vec![0; gens.len()], m.one())];
    let mut frontier = out.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for (e, v) in &frontier {
            for (i, (n, inv)) in gens.iter().enumerate() {
                for (step, f) in [(1i64, n), (-1, inv)] {
                    if e[i] * step < 0 {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2[i] += step;
                    if out
                        .iter()
                        .chain(&next)
                        .any(|(x, _): &(Vec<i64>, QElem)| *x == e2)
                    {
                        continue;
                    }
                    next.push((e2, v * f));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Orbit search and canonical form for a known raw value.
pub fn canonicalize(
    m: Arc<Modulus>,
    extraction: Extraction,
    raw: Option<QElem>,
    options: AlphaOptions,
) -> AlphaResult {
    let mut result = AlphaResult {
        modulus: Arc::clone(&m),
        extraction,
        raw: raw.clone(),
        canonical: None,
        canonical_factor: None,
        minimal_forms: 0,
        classification: None,
        self_conjugate: false,
        options,
        generators: Vec::new(),
        bases: Vec::new(),
    };
    let Some(raw) = raw else { return result };
    let bound = options.unit_bound.unwrap_or(2 * m.degree());
    let gens = norm_generators(&m, options.norm_generators);
    result.generators = gens.iter().map(|(w, ..)| w.clone()).collect();
    let pairs: Vec<(QElem, QElem)> = gens.into_iter().map(|(_, n, i)| (n, i)).collect();
    result.bases = norm_products(&m, &pairs, options.norm_depth)
        .into_iter()
        .map(|(e, p)| (e, &raw * &p))
        .collect();

    let mut best: Option<(Key, OrbitFactor, QElem)> = None;
    let mut forms: Vec<LaurentPoly> = Vec::new();
    for (e, b) in &result.bases {
        let conj = b.conj();
        let Some(k) = (0..=bound)
            .flat_map(|k| [k, -k])
            .find(|&k| conj == b.mul_unit(Unit::new(1, 2 * k)))
        else {
            continue;
        };
        let base = b.mul_unit(Unit::new(1, k));
        let Some(rep) = base.symmetric_representative() else {
            continue;
        };
        for sign in [1i8, -1] {
            if options.strict_sign && sign < 0 {
                continue;
            }
            let f = OrbitFactor {
                sign,
                exp: k,
                norms: e.clone(),
            };
            let r = if sign < 0 { -&rep } else { rep.clone() };
            let key = key(&r, &f);
            if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
                best = Some((key, f, base.mul_unit(Unit::new(sign, 0))));
            }
        }
        let unsigned = if rep.highest_coeff().is_some_and(|c| c.is_negative()) {
            -rep
        } else {
            rep
        };
        if !forms.contains(&unsigned) {
            forms.push(unsigned);
        }
    }
    if let Some(((width, l1, ..), _, _)) = &best {
        let (width, l1) = (*width, l1.clone());
        result.minimal_forms = forms
            .iter()
            .filter(|p| p.width() == width && p.l1_norm() == l1)
            .count();
    }
    let chosen = best.map(|(_, f, e)| (f, e));
    let value = chosen.as_ref().map_or(&raw, |(_, e)| e);
    result.classification = Some(value.classify());
    result.self_conjugate = value.is_self_conjugate();
    if let Some((f, e)) = chosen {
        result.canonical_factor = Some(f);
        result.canonical = Some(e);
    }
    result
}

type Key = (i64, BigInt, i64, usize, i64, i8);

fn key(rep: &LaurentPoly, f: &OrbitFactor) -> Key {
    let depth = f.norms.iter().map(|e| e.abs()).sum();
    (
        rep.width(),
        rep.l1_norm(),
        depth,
        rep.num_terms(),
        f.exp.abs(),
        -f.sign,
    )
}

/// Recoverability of the Blanchfield pairing from `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub recoverable: bool,
    pub alpha_class: Option<Class>,
    #[serde(serialize_with = "as_string")]
    pub delta_at_minus_one: BigInt,
    pub delta_class: Class,
    pub witness: Option<String>,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn regular(c: Class) -> bool {
    matches!(c, Class::Unit | Class::RegularNonunit)
}

pub fn alpha_classify(res: &AlphaResult) -> Verdict {
    let m = &res.modulus;
    let at = m
        .delta()
        .eval_int(-1)
        .map(|v| v.to_integer())
        .unwrap_or_else(|_| BigInt::zero());
    let delta_class = if m.delta().is_one() {
        Class::Zero
    } else {
        m.elem(&LaurentPoly::constant(at.clone())).classify()
    };
    let alpha_class = res.classification;
    let witness = match alpha_class {
        None => Some("α undetermined".to_string()),
        Some(c) if !regular(c) => Some(format!("α = {} is {c}", res.display())),
        _ if m.delta().is_one() => None,
        _ if !regular(delta_class) => Some(format!("Δ(-1) = {at} is {delta_class}")),
        _ => None,
    };
    let recoverable = witness.is_none();
    Verdict {
        recoverable,
        alpha_class,
        delta_at_minus_one: at,
        delta_class,
        witness,
    }
}

/// `N = (1 - t)(1 - t^{-1})`, whose powers make up the orbit.
pub fn norm_element(m: &Arc<Modulus>) -> QElem {
    m.elem(&LaurentPoly::from_coeffs(-1, &[-1, 2, -1]))
}

/// `(1 + t)(1 - t)^{-1}` in `Λ/(Δ)`.
pub fn cayley_factor(m: &Arc<Modulus>) -> Result<Solve, QuotientError> {
    let one_minus_t = m.elem(&LaurentPoly::from_coeffs(0, &[1, -1]));
    one_minus_t.div_into(&m.elem(&LaurentPoly::from_coeffs(0, &[1, 1])))
}
