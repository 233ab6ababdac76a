//! The quotient ring `Λ/(Δ)` for a primitive Laurent polynomial `Δ`.
//!
//! Residues keep non-canonical integer representatives; equality is exact
//! divisibility by `Δ`. Inversion and division solve an integer linear
//! system over a bounded exponent window, and report when the window is
//! exhausted rather than claiming there is no solution.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Unit};
use crate::linalg::{solve_rational, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("modulus {0} is not primitive")]
    NotPrimitive(String),
    #[error("modulus {0} has delta(1) = {1}, expected +1 or -1")]
    NotKnotModulus(String, String),
    #[error("modulus {0} is not reciprocal, conjugation is undefined")]
    NotReciprocal(String),
    #[error("residues belong to different moduli: {0} and {1}")]
    ModulusMismatch(String, String),
    #[error("cannot invert the zero residue")]
    ZeroInput,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("malformed residue `{0}`: expected `<poly> mod <poly>`")]
    Malformed(String),
}

/// The principal modulus `Δ`, stored normalized.
#[derive(Debug, Clone)]
pub struct Modulus {
    delta: LaurentPoly,
    degree: i64,
    conj_twist: Option<Unit>,
    knot: bool,
    window_cap: i64,
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta
    }
}

impl Eq for Modulus {}

impl Modulus {
    /// A knot modulus: normalized, primitive, reciprocal, `Δ(1) = ±1`.
    pub fn knot(delta: &LaurentPoly) -> Result<Arc<Modulus>, QuotientError> {
        Self::build(delta, true)
    }

    /// Any primitive modulus; conjugation is available only if `Δ` is
    /// reciprocal.
    pub fn general(delta: &LaurentPoly) -> Result<Arc<Modulus>, QuotientError> {
        Self::build(delta, false)
    }

    fn build(delta: &LaurentPoly, knot: bool) -> Result<Arc<Modulus>, QuotientError> {
        if delta.is_zero() {
            return Err(QuotientError::ZeroModulus);
        }
        let (delta, _) = delta.normalize()?;
        if !delta.is_primitive() {
            return Err(QuotientError::NotPrimitive(delta.to_string()));
        }
        let degree = delta.span().unwrap();
        let conj_twist = [1i8, -1]
            .into_iter()
            .map(|s| Unit::new(s, degree))
            .find(|u| delta.bar().mul_unit(*u) == delta);
        if knot {
            let at1 = delta.eval_int(1)?;
            if at1.abs() != BigRational::one() {
                return Err(QuotientError::NotKnotModulus(
                    delta.to_string(),
                    at1.to_string(),
                ));
            }
            if conj_twist.is_none() {
                return Err(QuotientError::NotReciprocal(delta.to_string()));
            }
        }
        Ok(Arc::new(Modulus {
            delta,
            degree,
            conj_twist,
            knot,
            window_cap: 8 * degree.max(1),
        }))
    }

    /// Copy with a different maximal solver window.
    pub fn with_window_cap(&self, cap: i64) -> Arc<Modulus> {
        let mut m = self.clone();
        m.window_cap = cap.max(1);
        Arc::new(m)
    }

    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn conj_twist(&self) -> Option<Unit> {
        self.conj_twist
    }

    pub fn is_knot(&self) -> bool {
        self.knot
    }

    pub fn window_cap(&self) -> i64 {
        self.window_cap
    }

    /// Shrinks a representative from both ends wherever the extreme
    /// coefficient is divisible by the matching coefficient of `Δ`.
    pub fn reduce(&self, p: &LaurentPoly) -> LaurentPoly {
        let mut r = p.clone();
        if self.degree == 0 {
            return LaurentPoly::zero();
        }
        let lead = self.delta.highest_coeff().unwrap().clone();
        let low = self.delta.lowest_coeff().unwrap().clone();
        loop {
            let Some(span) = r.span() else { return r };
            if span < self.degree {
                return r;
            }
            let hi = r.max_exp().unwrap();
            let (q, rem) = r.coeff(hi).div_rem(&lead);
            if rem.is_zero() {
                r -= &self.delta.shift(hi - self.degree).scale(&q);
                continue;
            }
            let lo = r.min_exp().unwrap();
            let (q, rem) = r.coeff(lo).div_rem(&low);
            if rem.is_zero() {
                r -= &self.delta.shift(lo).scale(&q);
                continue;
            }
            return r;
        }
    }

    pub fn elem(self: &Arc<Self>, p: &LaurentPoly) -> QElem {
        QElem {
            rep: self.reduce(p),
            modulus: Arc::clone(self),
        }
    }

    pub fn parse_elem(self: &Arc<Self>, s: &str) -> Result<QElem, QuotientError> {
        Ok(self.elem(&s.parse()?))
    }

    pub fn zero(self: &Arc<Self>) -> QElem {
        self.elem(&LaurentPoly::zero())
    }

    pub fn one(self: &Arc<Self>) -> QElem {
        self.elem(&LaurentPoly::one())
    }

    pub fn t(self: &Arc<Self>) -> QElem {
        self.elem(&LaurentPoly::t())
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> QElem {
        self.elem(&LaurentPoly::constant(c))
    }

    /// Coordinates of `p` in `Q[t]/(Δ)` on the basis `1, t, .., t^(d-1)`.
    pub fn rational_coords(&self, p: &LaurentPoly) -> Vec<BigRational> {
        let d = self.degree as usize;
        let mut out = vec![BigRational::zero(); d];
        if d == 0 || p.is_zero() {
            return out;
        }
        let lo = p.min_exp().unwrap().min(0);
        // remainder of the ordinary polynomial t^-lo * p
        let shifted = p.shift(-lo);
        let (_, dense) = shifted.to_dense();
        let off = shifted.min_exp().unwrap() as usize;
        let mut work: Vec<BigRational> = std::iter::repeat_n(BigRational::zero(), off)
            .chain(dense.into_iter().map(BigRational::from_integer))
            .collect();
        let delta: Vec<BigRational> = self
            .delta
            .to_dense()
            .1
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let lead = delta[d].clone();
        while work.len() > d {
            let top = work.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let f = &top / &lead;
            let base = work.len() - d;
            for (i, c) in delta.iter().take(d).enumerate() {
                work[base + i] -= &f * c;
            }
        }
        for (i, c) in work.into_iter().enumerate() {
            out[i] = c;
        }
        // multiply back by t^lo
        for _ in 0..(-lo) {
            out = self.coords_div_t(&out, &delta);
        }
        out
    }

    /// Coordinates of `v / t`.
    fn coords_div_t(&self, v: &[BigRational], delta: &[BigRational]) -> Vec<BigRational> {
        let d = v.len();
        // t^-1 = -(c1 + c2 t + .. + cd t^(d-1)) / c0
        let c0 = &delta[0];
        let mut out: Vec<BigRational> = v[1..].to_vec();
        out.push(BigRational::zero());
        if !v[0].is_zero() {
            let f = &v[0] / c0;
            for i in 0..d {
                out[i] -= &f * &delta[i + 1];
            }
        }
        out
    }

    /// The unique rational polynomial with support in `[0, d)` congruent to
    /// `p`, if it has integer coefficients.
    fn integral_rep(&self, coords: &[BigRational]) -> Option<LaurentPoly> {
        if coords.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            coords
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.to_integer())),
        ))
    }

    /// Exact decision whether `p` is a unit modulo `Δ`.
    pub fn is_unit_exact(&self, p: &LaurentPoly) -> bool {
        if self.degree == 0 {
            return true;
        }
        if p.is_zero() {
            return false;
        }
        let a = p.normalize().unwrap().0;
        let res = resultant(&a, &self.delta);
        if res.is_zero() {
            return false;
        }
        coprime_mod(&dense(&a), &dense(&self.delta), &res.abs())
    }
}

fn dense(p: &LaurentPoly) -> Vec<BigInt> {
    p.to_dense().1
}

/// Resultant of two ordinary polynomials via the Sylvester determinant.
fn resultant(a: &LaurentPoly, b: &LaurentPoly) -> BigInt {
    let a = dense(a);
    let b = dense(b);
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut s = IntMatrix::zeros(size, size);
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            s.set(i, i + j, c.clone());
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            s.set(n + i, i + j, c.clone());
        }
    }
    s.det().expect("square")
}

/// For every prime `p | r`, are `a` and `b` coprime in `F_p[t, t^-1]`?
/// Runs Euclid over `Z/r`, splitting `r` whenever a non-invertible
/// extreme coefficient appears.
fn coprime_mod(a: &[BigInt], b: &[BigInt], r: &BigInt) -> bool {
    if r.is_one() {
        return true;
    }
    let reduce = |v: &[BigInt]| -> Vec<BigInt> { v.iter().map(|c| c.mod_floor(r)).collect() };
    let mut a = reduce(a);
    let mut b = reduce(b);
    loop {
        for which in 0..2 {
            let v = if which == 0 { &mut a } else { &mut b };
            if let Strip::Split(g) = strip(v, r) {
                let h = r / &g;
                return coprime_mod(&a, &b, &g) && coprime_mod(&a, &b, &h);
            }
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.is_empty() {
            // gcd is a
            return a.len() == 1;
        }
        if b.len() == 1 {
            return true;
        }
        // a mod b with invertible leading coefficient of b
        let inv = mod_inverse(b.last().unwrap(), r).expect("checked invertible");
        while a.len() >= b.len() && !a.is_empty() {
            let f = (a.last().unwrap() * &inv).mod_floor(r);
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[shift + i] = (&a[shift + i] - &f * c).mod_floor(r);
            }
            debug_assert!(a.last().unwrap().is_zero());
            a.pop();
            while a.last().is_some_and(Zero::is_zero) {
                a.pop();
            }
        }
    }
}

enum Strip {
    Ok,
    Split(BigInt),
}

/// Drops zero extreme coefficients; requires the remaining extremes to be
/// invertible modulo `r`, or returns a proper factor of `r`.
fn strip(v: &mut Vec<BigInt>, r: &BigInt) -> Strip {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let lead_zeros = v.iter().take_while(|c| c.is_zero()).count();
    v.drain(..lead_zeros);
    if v.is_empty() {
        return Strip::Ok;
    }
    for c in [v.first().unwrap(), v.last().unwrap()] {
        let g = c.gcd(r);
        if !g.is_one() {
            return Strip::Split(g);
        }
    }
    Strip::Ok
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Classification of a residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    Zero,
    Unit,
    ZeroDivisor,
    RegularNonunit,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Zero => "zero",
            Class::Unit => "unit",
            Class::ZeroDivisor => "zero_divisor",
            Class::RegularNonunit => "regular_nonunit",
        })
    }
}

/// Result of a windowed solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    /// A solution, with a flag telling whether it is unique in `Λ/(Δ)`.
    Solved { x: QElem, unique: bool },
    /// No solution exists at all.
    NoSolution,
    /// No integer solution was found with exponents in `[-window, window]`.
    Undetermined { window: i64 },
}

impl Solve {
    pub fn solution(&self) -> Option<&QElem> {
        match self {
            Solve::Solved { x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn into_solution(self) -> Option<QElem> {
        match self {
            Solve::Solved { x, .. } => Some(x),
            _ => None,
        }
    }
}

/// A residue class in `Λ/(Δ)`.
#[derive(Clone)]
pub struct QElem {
    rep: LaurentPoly,
    modulus: Arc<Modulus>,
}

impl QElem {
    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    fn same_modulus(&self, other: &QElem) -> Result<(), QuotientError> {
        if Arc::ptr_eq(&self.modulus, &other.modulus) || *self.modulus == *other.modulus {
            Ok(())
        } else {
            Err(QuotientError::ModulusMismatch(
                self.modulus.delta.to_string(),
                other.modulus.delta.to_string(),
            ))
        }
    }

    fn with_rep(&self, p: LaurentPoly) -> QElem {
        QElem {
            rep: self.modulus.reduce(&p),
            modulus: Arc::clone(&self.modulus),
        }
    }

    pub fn try_equal(&self, other: &QElem) -> Result<bool, QuotientError> {
        self.same_modulus(other)?;
        Ok((&self.rep - &other.rep)
            .div_exact(&self.modulus.delta)?
            .is_some())
    }

    pub fn try_add(&self, other: &QElem) -> Result<QElem, QuotientError> {
        self.same_modulus(other)?;
        Ok(self.with_rep(&self.rep + &other.rep))
    }

    pub fn try_sub(&self, other: &QElem) -> Result<QElem, QuotientError> {
        self.same_modulus(other)?;
        Ok(self.with_rep(&self.rep - &other.rep))
    }

    pub fn try_mul(&self, other: &QElem) -> Result<QElem, QuotientError> {
        self.same_modulus(other)?;
        Ok(self.with_rep(&self.rep * &other.rep))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> QElem {
        self.with_rep(&self.rep * p)
    }

    pub fn mul_unit(&self, u: Unit) -> QElem {
        self.with_rep(self.rep.mul_unit(u))
    }

    pub fn pow(&self, n: u32) -> QElem {
        let mut acc = self.modulus.one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.modulus.delta.divides(&self.rep)
    }

    pub fn is_one(&self) -> bool {
        self.modulus
            .delta
            .divides(&(&self.rep - &LaurentPoly::one()))
    }

    /// Class of the conjugate representative. Panics for non-reciprocal
    /// moduli; use [`QElem::try_conj`] to handle that case.
    pub fn conj(&self) -> QElem {
        self.try_conj()
            .expect("conjugation on a reciprocal modulus")
    }

    pub fn try_conj(&self) -> Result<QElem, QuotientError> {
        if self.modulus.conj_twist.is_none() {
            return Err(QuotientError::NotReciprocal(self.modulus.delta.to_string()));
        }
        Ok(self.with_rep(self.rep.bar()))
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.try_conj().is_ok_and(|c| c == *self)
    }

    /// Multiplicative inverse via the windowed solver.
    pub fn invert(&self) -> Result<Solve, QuotientError> {
        if self.modulus.degree == 0 {
            return Ok(Solve::Solved {
                x: self.modulus.zero(),
                unique: true,
            });
        }
        if self.is_zero() {
            return Err(QuotientError::ZeroInput);
        }
        if !self.modulus.is_unit_exact(&self.rep) {
            return Ok(Solve::NoSolution);
        }
        Ok(self.windowed_solve(&self.modulus.one()))
    }

    /// Solves `self * x = a`.
    pub fn div_into(&self, a: &QElem) -> Result<Solve, QuotientError> {
        self.same_modulus(a)?;
        let m = &self.modulus;
        if m.degree == 0 {
            return Ok(Solve::Solved {
                x: m.zero(),
                unique: true,
            });
        }
        if self.is_zero() {
            return Ok(if a.is_zero() {
                Solve::Solved {
                    x: m.zero(),
                    unique: false,
                }
            } else {
                Solve::NoSolution
            });
        }
        let g = LaurentPoly::gcd_rational(&self.rep, &m.delta);
        let unique = g.span() == Some(0);
        if !g.divides(&a.rep) {
            return Ok(Solve::NoSolution);
        }
        if a.is_zero() {
            return Ok(Solve::Solved {
                x: m.zero(),
                unique,
            });
        }
        Ok(match self.windowed_solve(a) {
            Solve::Solved { x, .. } => Solve::Solved { x, unique },
            other => other,
        })
    }

    /// Integer solve of `self * x ≡ a` with `x` supported in a symmetric
    /// window that doubles from `2d` up to the modulus cap. Uses the
    /// rational coordinates of `Q[t]/(Δ)`; Gauss's lemma turns a rational
    /// multiple of the primitive `Δ` into an integral one.
    fn windowed_solve(&self, a: &QElem) -> Solve {
        let m = &self.modulus;
        let cap = m.window_cap;
        let mut w = (2 * m.degree).max(1).min(cap);
        loop {
            if let Some(x) = self.solve_in_window(a, w) {
                let x = m.elem(&x);
                debug_assert!((&x * self) == *a);
                return Solve::Solved { x, unique: true };
            }
            if w >= cap {
                return Solve::Undetermined { window: w };
            }
            w = (2 * w).min(cap);
        }
    }

    fn solve_in_window(&self, a: &QElem, w: i64) -> Option<LaurentPoly> {
        let m = &self.modulus;
        let d = m.degree as usize;
        let cols: Vec<Vec<BigRational>> = (-w..=w)
            .map(|k| m.rational_coords(&self.rep.shift(k)))
            .collect();
        let rhs = m.rational_coords(&a.rep);
        let ncols = cols.len();
        let mut mat = IntMatrix::zeros(d, ncols);
        let mut b = vec![BigInt::zero(); d];
        for i in 0..d {
            let mut l = rhs[i].denom().clone();
            for c in &cols {
                l = l.lcm(c[i].denom());
            }
            let lr = BigRational::from_integer(l);
            for (j, c) in cols.iter().enumerate() {
                mat.set(i, j, (&c[i] * &lr).to_integer());
            }
            b[i] = (&rhs[i] * &lr).to_integer();
        }
        let sol = mat.solve(&b).ok()??;
        Some(LaurentPoly::from_terms(
            sol.particular
                .into_iter()
                .enumerate()
                .map(|(j, c)| (j as i64 - w, c)),
        ))
    }

    pub fn classify(&self) -> Class {
        if self.is_zero() {
            Class::Zero
        } else if self.modulus.is_unit_exact(&self.rep) {
            Class::Unit
        } else if LaurentPoly::gcd_rational(&self.rep, &self.modulus.delta).span() != Some(0) {
            Class::ZeroDivisor
        } else {
            Class::RegularNonunit
        }
    }

    /// Representative with the shortest support among those supported in
    /// some `[k, k + d)` with `|k| <= window`, then fewest terms, then
    /// smallest coefficients; falls back to the stored representative.
    pub fn min_representative(&self) -> LaurentPoly {
        let m = &self.modulus;
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let w = m.window_cap;
        let mut best: Option<LaurentPoly> = None;
        for k in -w..=w {
            let coords = m.rational_coords(&self.rep.shift(-k));
            let Some(r) = m.integral_rep(&coords) else {
                continue;
            };
            let r = r.shift(k);
            if best.as_ref().is_none_or(|b| rep_key(&r) < rep_key(b)) {
                best = Some(r);
            }
        }
        match best {
            Some(b) if rep_key(&b) <= rep_key(&self.rep) => b,
            _ => self.rep.clone(),
        }
    }

    /// For a self-conjugate residue of a knot modulus of degree `2m`, the
    /// representative of the form `c0 + sum c_j (t^j + t^-j)`, `j < m`,
    /// when its coefficients are integral.
    pub fn symmetric_representative(&self) -> Option<LaurentPoly> {
        let m = &self.modulus;
        if m.degree % 2 != 0 || !self.is_self_conjugate() {
            return None;
        }
        let half = (m.degree / 2).max(1);
        let basis: Vec<LaurentPoly> = (0..half)
            .map(|j| {
                if j == 0 {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::t_pow(j) + LaurentPoly::t_pow(-j)
                }
            })
            .collect();
        let coords: Vec<Vec<BigRational>> = basis.iter().map(|b| m.rational_coords(b)).collect();
        let rhs = m.rational_coords(&self.rep);
        let d = m.degree as usize;
        let a: Vec<Vec<BigRational>> = (0..d)
            .map(|i| coords.iter().map(|c| c[i].clone()).collect())
            .collect();
        let x = solve_rational(&a, &rhs)?;
        if x.iter().any(|c| !c.is_integer()) {
            return None;
        }
        let out: LaurentPoly = basis
            .iter()
            .zip(&x)
            .map(|(b, c)| b.scale(&c.to_integer()))
            .sum();
        debug_assert!(m.delta.divides(&(&out - &self.rep)));
        Some(out)
    }

    /// Preferred printed representative: symmetric when available,
    /// otherwise the minimal one.
    pub fn display_rep(&self) -> LaurentPoly {
        self.symmetric_representative()
            .unwrap_or_else(|| self.min_representative())
    }
}

fn rep_key(p: &LaurentPoly) -> (i64, usize, BigInt, i64) {
    (
        p.width(),
        p.num_terms(),
        p.l1_norm(),
        p.min_exp().map_or(0, |e| e.abs()),
    )
}

impl PartialEq for QElem {
    fn eq(&self, other: &Self) -> bool {
        self.try_equal(other).unwrap_or(false)
    }
}

impl Eq for QElem {}

impl fmt::Debug for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QElem({} mod {})", self.rep, self.modulus.delta)
    }
}

impl fmt::Display for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.display_rep(), self.modulus.delta)
    }
}

/// Parses `<poly> mod <delta>` against a general modulus.
impl FromStr for QElem {
    type Err = QuotientError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (rep, delta) = s
            .split_once(" mod ")
            .ok_or_else(|| QuotientError::Malformed(s.to_string()))?;
        let m = Modulus::general(&delta.parse()?)?;
        m.parse_elem(rep)
    }
}

macro_rules! q_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a QElem> for &QElem {
            type Output = QElem;
            fn $m(self, rhs: &'a QElem) -> QElem {
                self.$f(rhs).expect("residues over the same modulus")
            }
        }
        impl $tr<QElem> for QElem {
            type Output = QElem;
            fn $m(self, rhs: QElem) -> QElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QElem> for QElem {
            type Output = QElem;
            fn $m(self, rhs: &'a QElem) -> QElem {
                (&self).$m(rhs)
            }
        }
    };
}

q_binop!(Add, add, try_add);
q_binop!(Sub, sub, try_sub);
q_binop!(Mul, mul, try_mul);

impl Neg for &QElem {
    type Output = QElem;
    fn neg(self) -> QElem {
        self.with_rep(-&self.rep)
    }
}

impl Neg for QElem {
    type Output = QElem;
    fn neg(self) -> QElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn knot(s: &str) -> Arc<Modulus> {
        Modulus::knot(&p(s)).unwrap()
    }

    #[test]
    fn construction() {
        let m = knot("t^2 - t + 1");
        assert_eq!(m.degree(), 2);
        assert_eq!(m.conj_twist(), Some(Unit::new(1, 2)));
        assert!(Modulus::knot(&p("t^2 + 1")).is_err());
        assert!(Modulus::knot(&p("2*t - 2")).is_err());
        assert!(Modulus::general(&p("t - 2"))
            .unwrap()
            .conj_twist()
            .is_none());
        let m = knot("-t^-1 + 1 - t");
        assert_eq!(m.delta(), &p("t^2 - t + 1"));
    }

    #[test]
    fn equality_examples() {
        let m = knot("t^2 - t + 1");
        assert_eq!(
            m.parse_elem("t^-1").unwrap(),
            m.parse_elem("1 - t").unwrap()
        );
        let a = m.parse_elem("3*t^5 - 2").unwrap();
        assert_eq!(a, a.clone());
        assert_ne!(m.t(), m.one());
        let other = knot("t^2 - 3*t + 1");
        assert!(m.one().try_equal(&other.one()).is_err());
    }

    #[test]
    fn invert_examples() {
        let m = knot("t^2 - t + 1");
        let x = m.parse_elem("1 - t").unwrap().invert().unwrap();
        assert_eq!(x.solution(), Some(&m.t()));
        for d in ["t^2 - t + 1", "2*t^2 - 3*t + 2", "t^4 - t^3 + t^2 - t + 1"] {
            let m = knot(d);
            assert_eq!(m.one().invert().unwrap().solution(), Some(&m.one()));
        }
        assert_eq!(
            m.parse_elem("1 + t").unwrap().invert().unwrap(),
            Solve::NoSolution
        );
        assert_eq!(m.zero().invert(), Err(QuotientError::ZeroInput));
    }

    #[test]
    fn non_monic_inverse() {
        let m = knot("2*t^2 - 3*t + 2");
        let a = m.parse_elem("1 - t").unwrap();
        let inv = a.invert().unwrap().into_solution().unwrap();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn div_examples() {
        let m = knot("t^2 - t + 1");
        let s = m
            .parse_elem("1 + t")
            .unwrap()
            .div_into(&m.parse_elem("3*t").unwrap())
            .unwrap();
        match s {
            Solve::Solved { x, unique } => {
                assert_eq!(x, m.parse_elem("1 + t").unwrap());
                assert!(unique);
            }
            other => panic!("{other:?}"),
        }
        let s = m.parse_elem("1 - t").unwrap().div_into(&m.one()).unwrap();
        assert_eq!(
            s,
            Solve::Solved {
                x: m.t(),
                unique: true
            }
        );
        let sq = knot("t^4 - 2*t^3 + 3*t^2 - 2*t + 1");
        let zd = sq.parse_elem("t - 1 + t^-1").unwrap();
        assert_eq!(
            zd.div_into(&sq.zero()).unwrap(),
            Solve::Solved {
                x: sq.zero(),
                unique: false
            }
        );
        assert_eq!(zd.div_into(&sq.one()).unwrap(), Solve::NoSolution);
    }

    #[test]
    fn classify_examples() {
        let sq = knot("(t^2 - t + 1)^2");
        assert_eq!(
            sq.parse_elem("t - 1 + t^-1").unwrap().classify(),
            Class::ZeroDivisor
        );
        let m = knot("t^2 - t + 1");
        assert_eq!(m.parse_elem("1 - t").unwrap().classify(), Class::Unit);
        assert_eq!(
            m.parse_elem("1 + t").unwrap().classify(),
            Class::RegularNonunit
        );
        assert_eq!(m.parse_elem("t^2 - t + 1").unwrap().classify(), Class::Zero);
        let c5 = knot("t^4 - t^3 + t^2 - t + 1");
        assert_eq!(
            c5.parse_elem("t^-1 + 2 + t").unwrap().classify(),
            Class::RegularNonunit
        );
        let m72 = knot("3*t^2 - 5*t + 3");
        assert_eq!(m72.constant(3).classify(), Class::Unit);
        assert_eq!(m72.constant(2).classify(), Class::RegularNonunit);
    }

    #[test]
    fn conj_examples() {
        let m = knot("t^2 - t + 1");
        assert_eq!(m.t().conj(), m.parse_elem("1 - t").unwrap());
        assert_eq!(m.constant(7).conj(), m.constant(7));
        let a = m.parse_elem("3*t^4 - t + 5").unwrap();
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn representatives() {
        let m = knot("t^4 - 3*t^3 + 3*t^2 - 3*t + 1");
        let a = m.parse_elem("3*t^-1 - 7 + 3*t").unwrap();
        let shifted = a
            .mul_poly(&p("t^4 - 3*t^3 + 3*t^2 - 3*t + 1 + 1"))
            .mul_unit(Unit::new(1, 0));
        assert_eq!(
            shifted.symmetric_representative(),
            Some(p("3*t^-1 - 7 + 3*t"))
        );
        let m = knot("t^2 - t + 1");
        assert_eq!(m.parse_elem("t^4").unwrap().min_representative(), p("-t"));
        assert_eq!(
            m.parse_elem("t^4").unwrap().to_string(),
            "-t mod 1 - t + t^2"
        );
        let r: QElem = "t^4 mod t^2 - t + 1".parse().unwrap();
        assert_eq!(r, m.parse_elem("-t").unwrap());
    }
}
