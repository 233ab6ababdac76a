//! Finite Alexander quandles `Z_n` with `x ◁ y = t(x - y) + y`, quandle
//! 2-cocycles, the cocycle invariant, and the group `G_X`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::KnotDiagram;
use crate::linalg::IntMatrix;

/// Largest search space for brute-force coloring enumeration.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("t = {t} is not a unit modulo {n}")]
    NotUnit { n: u64, t: u64 },
    #[error("{what} table has {got} entries, expected {expected}")]
    TableSize {
        what: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("psi is not additive at ({0}, {1})")]
    NotBilinear(u64, u64),
    #[error("psi(tx, ty) != psi(x, y) at ({0}, {1})")]
    NotInvariant(u64, u64),
    #[error("brute force over {0} assignments exceeds the limit")]
    TooLarge(u128),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteAlexanderQuandle {
    n: u64,
    t: u64,
    t_inv: u64,
}

impl FiniteAlexanderQuandle {
    pub fn new(n: u64, t: u64) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::ZeroModulus);
        }
        let t = t % n;
        let e = (t as i64).extended_gcd(&(n as i64));
        if e.gcd != 1 && n > 1 {
            return Err(QuandleError::NotUnit { n, t });
        }
        let t_inv = e.x.rem_euclid(n as i64) as u64;
        Ok(FiniteAlexanderQuandle { n, t, t_inv })
    }

    /// The dihedral quandle `R_n`.
    pub fn dihedral(n: u64) -> Self {
        Self::new(n, n.saturating_sub(1)).expect("n - 1 is a unit")
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn t_inv(&self) -> u64 {
        self.t_inv
    }

    /// Same set with `t` replaced by `t^{-1}`.
    pub fn conjugate(&self) -> Self {
        FiniteAlexanderQuandle {
            n: self.n,
            t: self.t_inv,
            t_inv: self.t,
        }
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.n
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.n - y % self.n) % self.n
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.n as u128) as u64
    }

    pub fn neg(&self, x: u64) -> u64 {
        self.sub(0, x)
    }

    pub fn op(&self, x: u64, y: u64) -> u64 {
        self.add(self.mul(self.t, self.sub(x, y)), y)
    }

    pub fn op_inv(&self, x: u64, y: u64) -> u64 {
        self.add(self.mul(self.t_inv, self.sub(x, y)), y)
    }

    /// Idempotence, right invertibility and self-distributivity, checked
    /// exhaustively.
    pub fn check_axioms(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| self.op(x, x) == x)
            && (0..n).all(|x| (0..n).all(|y| self.op(self.op_inv(x, y), y) == x))
            && (0..n).into_par_iter().all(|x| {
                (0..n).all(|y| {
                    (0..n)
                        .all(|z| self.op(self.op(x, y), z) == self.op(self.op(x, z), self.op(y, z)))
                })
            })
    }

    pub fn is_coloring(&self, d: &KnotDiagram, c: &[u64]) -> bool {
        d.crossings()
            .iter()
            .all(|x| self.op(c[x.alpha()], c[x.beta()]) == c[x.gamma()])
    }

    /// All colorings by exhaustive search.
    pub fn colorings_brute(&self, d: &KnotDiagram) -> Result<Vec<Vec<u64>>, QuandleError> {
        let arcs = d.num_arcs() as u32;
        let total = (self.n as u128).pow(arcs);
        if total > BRUTE_FORCE_LIMIT as u128 {
            return Err(QuandleError::TooLarge(total));
        }
        let total = total as u64;
        let mut out: Vec<Vec<u64>> = (0..total)
            .into_par_iter()
            .filter_map(|mut code| {
                let mut c = vec![0; arcs as usize];
                for slot in &mut c {
                    *slot = code % self.n;
                    code /= self.n;
                }
                self.is_coloring(d, &c).then_some(c)
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// All colorings as solutions of the linear crossing system over `Z_n`,
    /// through the Smith form of the integer relation matrix.
    pub fn colorings_linear(&self, d: &KnotDiagram) -> Vec<Vec<u64>> {
        let n = self.n;
        let arcs = d.num_arcs();
        let ni = n as i64;
        let mut rows = vec![vec![0i64; arcs]; d.num_crossings()];
        for (row, x) in rows.iter_mut().zip(d.crossings()) {
            row[x.alpha()] += self.t as i64;
            row[x.beta()] += 1 - self.t as i64;
            row[x.gamma()] -= 1;
        }
        if rows.is_empty() {
            return (0..n).map(|c| vec![c; arcs]).collect();
        }
        let m = IntMatrix::from_rows(&rows).expect("rectangular");
        let snf = m.smith_normal_form();
        // z_i ranges over multiples of n / gcd(d_i, n); free beyond the diagonal
        let steps: Vec<u64> = (0..arcs)
            .map(|i| match snf.diagonal.get(i) {
                Some(di) if !di.is_zero() => {
                    let g = di.gcd(&BigInt::from(ni)).to_u64().expect("small");
                    n / g
                }
                _ => 1,
            })
            .collect();
        let v: Vec<Vec<u64>> = (0..arcs)
            .map(|i| {
                (0..arcs)
                    .map(|j| {
                        snf.v
                            .get(i, j)
                            .mod_floor(&BigInt::from(ni))
                            .to_u64()
                            .expect("small")
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut z = vec![0u64; arcs];
        loop {
            let x: Vec<u64> = (0..arcs)
                .map(|i| (0..arcs).fold(0, |acc, j| self.add(acc, self.mul(v[i][j], z[j]))))
                .collect();
            out.push(x);
            let mut k = 0;
            loop {
                if k == arcs {
                    out.sort();
                    out.dedup();
                    return out;
                }
                z[k] += steps[k];
                if z[k] < n {
                    break;
                }
                z[k] = 0;
                k += 1;
            }
        }
    }
}

/// An additive map `Z_n × Z_n -> Z_m` given by its full table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bilinear {
    n: u64,
    target: u64,
    table: Vec<u64>,
}

impl Bilinear {
    pub fn from_table(n: u64, target: u64, table: Vec<u64>) -> Result<Self, QuandleError> {
        let expected = (n * n) as usize;
        if table.len() != expected {
            return Err(QuandleError::TableSize {
                what: "psi",
                got: table.len(),
                expected,
            });
        }
        let b = Bilinear { n, target, table };
        for x in 0..n {
            for y in 0..n {
                let xy = (x + y) % n;
                for z in 0..n {
                    if b.eval(xy, z) != (b.eval(x, z) + b.eval(y, z)) % target
                        || b.eval(z, xy) != (b.eval(z, x) + b.eval(z, y)) % target
                    {
                        return Err(QuandleError::NotBilinear(x, y));
                    }
                }
            }
        }
        Ok(b)
    }

    /// `(x, y) ↦ k x y` into `Z_n`.
    pub fn product(n: u64, k: u64) -> Self {
        let table = (0..n * n)
            .map(|i| (k % n) * (i / n) % n * (i % n) % n)
            .collect();
        Bilinear {
            n,
            target: n,
            table,
        }
    }

    pub fn zero(n: u64) -> Self {
        Bilinear {
            n,
            target: n.max(1),
            table: vec![0; (n * n) as usize],
        }
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn eval(&self, x: u64, y: u64) -> u64 {
        self.table[(x * self.n + y) as usize]
    }

    /// `ψ(tx, ty) = ψ(x, y)` for all `x, y`.
    pub fn check_invariant(&self, q: &FiniteAlexanderQuandle) -> Result<(), QuandleError> {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.eval(q.mul(q.t(), x), q.mul(q.t(), y)) != self.eval(x, y) {
                    return Err(QuandleError::NotInvariant(x, y));
                }
            }
        }
        Ok(())
    }
}

/// A map `φ: X × X -> Z_m` given by its table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    quandle: FiniteAlexanderQuandle,
    target: u64,
    table: Vec<u64>,
}

/// First failure of the cocycle conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CocycleWitness {
    Diagonal(u64),
    Triple(u64, u64, u64),
}

impl Cocycle2 {
    pub fn from_table(
        q: FiniteAlexanderQuandle,
        target: u64,
        table: Vec<u64>,
    ) -> Result<Self, QuandleError> {
        let expected = (q.order() * q.order()) as usize;
        if table.len() != expected {
            return Err(QuandleError::TableSize {
                what: "phi",
                got: table.len(),
                expected,
            });
        }
        Ok(Cocycle2 {
            quandle: q,
            target,
            table: table.into_iter().map(|v| v % target).collect(),
        })
    }

    pub fn zero(q: FiniteAlexanderQuandle) -> Self {
        Cocycle2 {
            quandle: q,
            target: q.order(),
            table: vec![0; (q.order() * q.order()) as usize],
        }
    }

    pub fn quandle(&self) -> &FiniteAlexanderQuandle {
        &self.quandle
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn eval(&self, x: u64, y: u64) -> u64 {
        self.table[(x * self.quandle.order() + y) as usize]
    }

    /// `φ(x,y) + φ(x◁y, z) = φ(x,z) + φ(x◁z, y◁z)` and `φ(x,x) = 0`,
    /// exhaustively.
    pub fn check(&self) -> Result<(), CocycleWitness> {
        let q = &self.quandle;
        let n = q.order();
        let m = self.target;
        if let Some(x) = (0..n).find(|&x| self.eval(x, x) != 0) {
            return Err(CocycleWitness::Diagonal(x));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = self.eval(x, y) + self.eval(q.op(x, y), z) + 2 * m
                        - self.eval(x, z)
                        - self.eval(q.op(x, z), q.op(y, z));
                    if !v.is_multiple_of(m) {
                        return Err(CocycleWitness::Triple(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    /// `φ_ψ(x, y) = ψ(x - y, y - y t^{-1})`.
    pub fn from_psi(q: FiniteAlexanderQuandle, psi: &Bilinear) -> Result<Self, QuandleError> {
        psi.check_invariant(&q)?;
        let n = q.order();
        let table = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                psi.eval(q.sub(x, y), q.sub(y, q.mul(y, q.t_inv())))
            })
            .collect();
        Ok(Cocycle2 {
            quandle: q,
            target: psi.target(),
            table,
        })
    }

    /// `Σ_τ ε_τ φ(C(α_τ), C(β_τ))`.
    pub fn evaluate(&self, d: &KnotDiagram, c: &[u64]) -> u64 {
        let m = self.target as i64;
        let s: i64 = d
            .crossings()
            .iter()
            .map(|x| i64::from(x.sign) * self.eval(c[x.alpha()], c[x.beta()]) as i64)
            .sum();
        s.rem_euclid(m) as u64
    }
}

/// How colorings are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    Linear,
    BruteForce,
}

/// The multiset `{I_Φ(C)}` over all colorings, as value -> multiplicity.
pub fn cocycle_invariant(
    d: &KnotDiagram,
    phi: &Cocycle2,
    how: Enumeration,
) -> Result<BTreeMap<u64, usize>, QuandleError> {
    let colorings = match how {
        Enumeration::Linear => phi.quandle().colorings_linear(d),
        Enumeration::BruteForce => phi.quandle().colorings_brute(d)?,
    };
    let mut out = BTreeMap::new();
    for c in &colorings {
        *out.entry(phi.evaluate(d, c)).or_insert(0) += 1;
    }
    Ok(out)
}

/// `Σ_τ ε_τ ψ(C(α) - C(β), C'(β)(1 - t^{-1}))` over a finite quandle, where
/// `C'` is a coloring by `c2_quandle`.
pub fn finite_weight_sum(
    d: &KnotDiagram,
    psi: &Bilinear,
    c1_quandle: &FiniteAlexanderQuandle,
    c2_quandle: &FiniteAlexanderQuandle,
    c1: &[u64],
    c2: &[u64],
) -> u64 {
    let m = psi.target() as i64;
    let s: i64 = d
        .crossings()
        .iter()
        .map(|x| {
            let left = c1_quandle.sub(c1[x.alpha()], c1[x.beta()]);
            let b = c2[x.beta()];
            let right = c2_quandle.sub(b, c2_quandle.mul(b, c2_quandle.t_inv()));
            i64::from(x.sign) * psi.eval(left, right) as i64
        })
        .sum();
    s.rem_euclid(m) as u64
}

/// Invariant factors of `G_X = X ⊗ X / (x ⊗ y - ty ⊗ x)`, computed from the
/// full presentation on the symbols `x ⊗ y`.
pub fn quandle_h2(q: &FiniteAlexanderQuandle) -> Vec<BigInt> {
    let n = q.order();
    let gens = (n * n) as usize;
    let idx = |x: u64, y: u64| (x * n + y) as usize;
    let mut rels: Vec<Vec<i64>> = Vec::new();
    let mut push = |terms: &[(usize, i64)]| {
        let mut r = vec![0i64; gens];
        for &(i, c) in terms {
            r[i] += c;
        }
        if r.iter().any(|&c| c != 0) {
            rels.push(r);
        }
    };
    for x in 0..n {
        for y in 0..n {
            // additivity in each slot follows from the step x -> x + 1
            push(&[
                (idx(q.add(x, 1), y), 1),
                (idx(x, y), -1),
                (idx(1 % n, y), -1),
            ]);
            push(&[
                (idx(y, q.add(x, 1)), 1),
                (idx(y, x), -1),
                (idx(y, 1 % n), -1),
            ]);
            push(&[(idx(x, y), 1), (idx(q.mul(q.t(), y), x), -1)]);
        }
    }
    if rels.is_empty() {
        return vec![BigInt::zero(); gens];
    }
    // columns are relations
    let mut m = IntMatrix::zeros(gens, rels.len());
    for (j, r) in rels.iter().enumerate() {
        for (i, &c) in r.iter().enumerate() {
            if c != 0 {
                m.set(i, j, BigInt::from(c));
            }
        }
    }
    m.smith_normal_form().cokernel_factors(gens)
}

/// `G_X ≅ Z_gcd(n, 1 - t)`, as invariant factors.
pub fn quandle_h2_closed_form(q: &FiniteAlexanderQuandle) -> Vec<BigInt> {
    let g = (q.order() as i64).gcd(&(1 - q.t() as i64));
    if g == 1 {
        Vec::new()
    } else {
        vec![BigInt::from(g)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> KnotDiagram {
        KnotDiagram::from_knotinfo(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap()
    }

    #[test]
    fn quandle_axioms_and_units() {
        assert!(FiniteAlexanderQuandle::new(5, 2).unwrap().check_axioms());
        assert!(FiniteAlexanderQuandle::new(6, 2).is_err());
        assert!(FiniteAlexanderQuandle::new(0, 1).is_err());
        assert_eq!(FiniteAlexanderQuandle::new(7, 3).unwrap().t_inv(), 5);
    }

    #[test]
    fn trefoil_r3_colorings() {
        let q = FiniteAlexanderQuandle::dihedral(3);
        let d = trefoil();
        let brute = q.colorings_brute(&d).unwrap();
        assert_eq!(brute.len(), 9);
        assert_eq!(q.colorings_linear(&d), brute);
    }

    #[test]
    fn cocycles() {
        let q = FiniteAlexanderQuandle::dihedral(3);
        assert!(Cocycle2::zero(q).check().is_ok());
        let phi = Cocycle2::from_psi(q, &Bilinear::product(3, 1)).unwrap();
        assert!(phi.check().is_ok());
        assert!((0..3).all(|x| phi.eval(x, x) == 0));
        let bad = Cocycle2::from_table(q, 3, vec![0, 1, 2, 2, 0, 1, 0, 0, 0]).unwrap();
        assert!(bad.check().is_err());
        let z5 = FiniteAlexanderQuandle::new(5, 2).unwrap();
        assert!(matches!(
            Cocycle2::from_psi(z5, &Bilinear::product(5, 1)),
            Err(QuandleError::NotInvariant(..))
        ));
    }

    #[test]
    fn h2_routes_agree() {
        for (n, t) in [
            (1, 0),
            (2, 1),
            (3, 2),
            (4, 3),
            (5, 2),
            (5, 4),
            (7, 3),
            (6, 5),
        ] {
            let q = FiniteAlexanderQuandle::new(n, t).unwrap();
            assert_eq!(quandle_h2(&q), quandle_h2_closed_form(&q), "Z_{n}, t={t}");
        }
    }
}
