//! Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! Elements of `Z[t, t^-1]` are stored as a sparse map from exponent to
//! nonzero coefficient. The text form is the one used throughout the crate:
//! ascending exponents, `c*t^k` terms, unit coefficients omitted except on
//! the constant term, e.g. `3*t^-1 - 7 + 3*t`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("the zero polynomial has no normal form")]
    NormalizeZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot evaluate at zero: negative exponents present")]
    EvalAtZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A unit `sign * t^exp` of the Laurent ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unit {
    pub sign: i8,
    pub exp: i64,
}

impl Unit {
    pub const ONE: Unit = Unit { sign: 1, exp: 0 };

    pub fn new(sign: i8, exp: i64) -> Self {
        assert!(sign == 1 || sign == -1, "unit sign must be +1 or -1");
        Unit { sign, exp }
    }

    pub fn inverse(self) -> Self {
        Unit {
            sign: self.sign,
            exp: -self.exp,
        }
    }

    pub fn mul(self, other: Unit) -> Unit {
        Unit {
            sign: self.sign * other.sign,
            exp: self.exp + other.exp,
        }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(BigInt::from(self.sign), self.exp)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// Builds `sum coeffs[i] * t^(lowest + i)`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(lowest: i64, coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (lowest + i as i64, c.clone().into())),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Returns the unit `±t^k` if this polynomial is one.
    pub fn as_unit(&self) -> Option<Unit> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (&k, c) = self.coeffs.iter().next()?;
        if c.is_one() {
            Some(Unit::new(1, k))
        } else if (-c).is_one() {
            Some(Unit::new(-1, k))
        } else {
            None
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, or `None` for zero. For a polynomial with nonzero
    /// constant term this is its ordinary degree.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next()
    }

    pub fn highest_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn mul_unit(&self, u: Unit) -> Self {
        let p = self.shift(u.exp);
        if u.sign < 0 {
            -p
        } else {
            p
        }
    }

    /// The involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.bar()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.insert(*e, q);
        }
        Some(LaurentPoly { coeffs: out })
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    /// Returns `(a * u, u)` where the unit `u = ±t^k` makes the lowest
    /// exponent zero and the lowest coefficient positive.
    pub fn normalize(&self) -> Result<(LaurentPoly, Unit), LaurentError> {
        let lo = self.min_exp().ok_or(LaurentError::NormalizeZero)?;
        let sign = if self.lowest_coeff().is_some_and(|c| c.is_negative()) {
            -1
        } else {
            1
        };
        let u = Unit::new(sign, -lo);
        Ok((self.mul_unit(u), u))
    }

    /// Returns `Some(q)` with `self = d * q` when `d` divides `self` in
    /// `Z[t, t^-1]`, `None` otherwise.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<Option<LaurentPoly>, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        // Long division from the top on the t-stripped polynomials. The
        // quotient coefficients are forced, so a non-integral step means the
        // quotient is not in Z[t, t^-1].
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let d_lead = d.highest_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        loop {
            let Some(r_hi) = rem.max_exp() else { break };
            let r_lo = rem.min_exp().unwrap();
            if r_hi - r_lo < d_hi - d_lo {
                break;
            }
            let (q, r) = rem.coeffs[&r_hi].div_rem(&d_lead);
            if !r.is_zero() {
                return Ok(None);
            }
            let shift = r_hi - d_hi;
            for (e, c) in &d.coeffs {
                rem.add_term(e + shift, &(-(c * &q)));
            }
            quot.insert(shift, q);
        }
        if rem.is_zero() {
            Ok(Some(LaurentPoly { coeffs: quot }))
        } else {
            Ok(None)
        }
    }

    pub fn divides(&self, a: &LaurentPoly) -> bool {
        matches!(a.div_exact(self), Ok(Some(_)))
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, LaurentError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() {
            if self.min_exp().unwrap() < 0 {
                return Err(LaurentError::EvalAtZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), (-*e) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    pub fn eval_int(&self, x: i64) -> Result<BigRational, LaurentError> {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Coefficients from the lowest exponent upward, with that exponent.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, (lo..=hi).map(|k| self.coeff(k)).collect()),
            _ => (0, Vec::new()),
        }
    }

    /// Greatest common divisor over the rationals, returned as a primitive
    /// integer polynomial with lowest exponent 0 and positive lowest
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd_rational(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() && b.is_zero() {
            return LaurentPoly::zero();
        }
        if a.is_zero() {
            return b.primitive_part().normalize().unwrap().0;
        }
        if b.is_zero() {
            return a.primitive_part().normalize().unwrap().0;
        }
        let mut x = a.primitive_part().normalize().unwrap().0;
        let mut y = b.primitive_part().normalize().unwrap().0;
        if x.span() < y.span() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = pseudo_rem(&x, &y);
            x = y;
            y = if r.is_zero() {
                r
            } else {
                r.primitive_part().normalize().unwrap().0
            };
        }
        x.primitive_part().normalize().unwrap().0
    }

    /// Number of exponents in `[min, max]`, used to rank representatives.
    pub fn width(&self) -> i64 {
        self.span().map_or(0, |s| s + 1)
    }

    /// Sum of absolute values of coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Pseudo-remainder of ordinary polynomials with nonzero constant terms
/// (lowest exponent 0).
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let b_hi = b.max_exp().unwrap();
    let b_lead = b.highest_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(r_hi) = r.max_exp() {
        if r_hi < b_hi {
            break;
        }
        let c = r.coeffs[&r_hi].clone();
        r = r.scale(&b_lead) - b.shift(r_hi - b_hi).scale(&c);
    }
    // strip common t powers; gcd over Q ignores units
    match r.min_exp() {
        Some(lo) => r.shift(-lo),
        None => r,
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            if *e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for deterministic tie-breaking: by exponent/coefficient
/// sequence.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.iter().cmp(other.coeffs.iter())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, &(-c));
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Parsing

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Accepts the printed grammar plus the looser forms found in published
    /// tables: implicit multiplication, parentheses, `t^{-1}` braces and
    /// nonnegative integer powers of parenthesised factors.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> LaurentError {
        LaurentError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == b'(' || c == b't' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<LaurentPoly, LaurentError> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                let k = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                Ok(LaurentPoly::t_pow(k))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let k = self.exponent()?;
                    if k < 0 {
                        if let Some(u) = inner.as_unit() {
                            return Ok(u.inverse().to_poly().pow((-k) as u32));
                        }
                        return Err(self.err("negative power of a non-unit"));
                    }
                    return Ok(inner.pow(k as u32));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(LaurentPoly::constant(n))
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let n = self.integer()?;
        let n: i64 = n
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        Ok(if neg { -n } else { n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("1 - t") * p("t"), p("t - t^2"));
        assert_eq!(p("t^2 - t + 1") * p("t^2 + t + 1"), p("t^4 + t^2 + 1"));
        let a = p("3*t^-2 - t + 7");
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("t^2 - t + 1").bar(), p("t^-2 - t^-1 + 1"));
        assert!(LaurentPoly::zero().bar().is_zero());
        let sym = p("2*t^2 - 3*t + 2");
        assert_eq!(sym.bar().normalize().unwrap().0, sym);
    }

    #[test]
    fn normalize_examples() {
        let (n, u) = p("-t^-1 + 1 - t").normalize().unwrap();
        assert_eq!(n, p("t^2 - t + 1"));
        assert_eq!(u, Unit::new(-1, 1));
        let (n, u) = p("t^2 - 3*t + 1").normalize().unwrap();
        assert_eq!(n, p("t^2 - 3*t + 1"));
        assert_eq!(u, Unit::ONE);
        let (n, u) = p("5*t^7").normalize().unwrap();
        assert_eq!(n, p("5"));
        assert_eq!(u, Unit::new(1, -7));
        assert_eq!(
            LaurentPoly::zero().normalize(),
            Err(LaurentError::NormalizeZero)
        );
    }

    #[test]
    fn div_exact_examples() {
        let d = p("t^2 - t + 1");
        assert_eq!(
            p("t^4 + t^2 + 1").div_exact(&d).unwrap(),
            Some(p("t^2 + t + 1"))
        );
        assert_eq!(d.div_exact(&d).unwrap(), Some(LaurentPoly::one()));
        assert_eq!(p("t + 1").div_exact(&d).unwrap(), None);
        assert_eq!(
            d.div_exact(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
        // Laurent shifts on both sides
        let a = &p("t^-3 + 2*t^-1") * &d;
        assert_eq!(a.div_exact(&d.shift(-5)).unwrap(), Some(p("t^2 + 2*t^4")));
        // rational but not integral quotient
        assert_eq!(p("t + 1").div_exact(&p("2*t + 2")).unwrap(), None);
    }

    #[test]
    fn eval_examples() {
        let d = p("t^2 - t + 1");
        assert_eq!(d.eval_int(1).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(d.eval_int(-1).unwrap(), BigRational::from_integer(3.into()));
        assert!(LaurentPoly::zero().eval_int(5).unwrap().is_zero());
        assert_eq!(p("t^-1").eval_int(0), Err(LaurentError::EvalAtZero));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            p("t^-1 + t").eval(&half).unwrap(),
            BigRational::new(5.into(), 2.into())
        );
    }

    #[test]
    fn print_grammar() {
        assert_eq!(p("3*t^-1 - 7 + 3*t").to_string(), "3*t^-1 - 7 + 3*t");
        assert_eq!(p("t - 1 + t^-1").to_string(), "t^-1 - 1 + t");
        assert_eq!(p("-t^2").to_string(), "-t^2");
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parses_table_forms() {
        assert_eq!(p("3t^{-1} - 7 + 3t"), p("3*t^-1 - 7 + 3*t"));
        assert_eq!(p("(-3 + 2 t) (-2 + 3 t^{-1})"), p("-9*t^-1 + 12 - 4*t"));
        assert_eq!(p("2(2t^{-1} - 3 + 2t)"), p("4*t^-1 - 6 + 4*t"));
        assert_eq!(p("(t^2-t+1 )^2"), p("t^4 - 2*t^3 + 3*t^2 - 2*t + 1"));
        assert_eq!(
            p("4 (-2 + t) (2 t^{-1} - 3 + 2 t)"),
            p("-16*t^-1 + 32 - 28*t + 8*t^2")
        );
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("(t".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn rational_gcd() {
        let a = p("t^2 - t + 1");
        let b = &a * &p("2*t + 3");
        let c = &a * &p("t - 5");
        assert_eq!(LaurentPoly::gcd_rational(&b, &c), a);
        assert!(LaurentPoly::gcd_rational(&p("t + 1"), &a).is_one());
        assert_eq!(
            LaurentPoly::gcd_rational(&p("4*t^-2 + 4*t^-1"), &p("3 + 3*t")),
            p("1 + t")
        );
    }

    #[test]
    fn units() {
        assert_eq!(p("-t^3").as_unit(), Some(Unit::new(-1, 3)));
        assert_eq!(p("2").as_unit(), None);
        let u = Unit::new(-1, 2);
        assert!((&u.to_poly() * &u.inverse().to_poly()).is_one());
    }
}
