//! Randomized checks of two local weight-sum identities on explicit small
//! tangles over finite Alexander quandles.
//!
//! Colorings `C` take values in `X = (Z_n, t)` and colorings `C'` in the
//! conjugate quandle `X' = (Z_n, t^{-1})`, so that `ψ(x, y) = xy` into
//! `A = (Z_n, t)` satisfies `ψ(tx, y) = tψ(x, y) = ψ(x, t^{-1}y)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::pd::Crossing;
use crate::quandle::{Bilinear, FiniteAlexanderQuandle};

/// Crossings over a fixed set of arcs with no closure condition.
#[derive(Debug, Clone)]
pub struct Tangle {
    pub arcs: usize,
    pub crossings: Vec<Crossing>,
}

fn cr(under_in: usize, under_out: usize, over: usize, sign: i8) -> Crossing {
    Crossing {
        over,
        under_in,
        under_out,
        sign,
    }
}

impl Tangle {
    pub fn is_coloring(&self, q: &FiniteAlexanderQuandle, c: &[u64]) -> bool {
        self.crossings
            .iter()
            .all(|x| q.op(c[x.alpha()], c[x.beta()]) == c[x.gamma()])
    }

    /// Weight sum of `C` in `X` against `C'` in the conjugate quandle.
    pub fn weight_sum(
        &self,
        q: &FiniteAlexanderQuandle,
        psi: &Bilinear,
        c1: &[u64],
        c2: &[u64],
    ) -> u64 {
        let m = psi.target() as i64;
        let s: i64 = self
            .crossings
            .iter()
            .map(|x| {
                let left = q.sub(c1[x.alpha()], c1[x.beta()]);
                let right = q.mul(q.sub(1, q.t()), c2[x.beta()]);
                i64::from(x.sign) * psi.eval(left, right) as i64
            })
            .sum();
        s.rem_euclid(m) as u64
    }

    /// Two vertical strands, oriented oppositely, each passing under two
    /// horizontal strands that are also oriented oppositely.
    ///
    /// Arcs: `0 = a` and `3 = b` on top of the vertical strands, `1, 4`
    /// between the horizontal strands, `2 = u` and `5 = v` at the bottom,
    /// `6 = d` the upper horizontal strand (pointing right) and `7 = c` the
    /// lower one (pointing left).
    pub fn double_delta() -> Tangle {
        Tangle {
            arcs: 8,
            crossings: vec![
                cr(0, 1, 6, -1),
                cr(1, 2, 7, 1),
                cr(5, 4, 7, -1),
                cr(4, 3, 6, 1),
            ],
        }
    }

    /// Coloring from boundary colors `a, b, c, d` in `q`.
    pub fn double_delta_coloring(
        q: &FiniteAlexanderQuandle,
        a: u64,
        b: u64,
        c: u64,
        d: u64,
    ) -> Vec<u64> {
        let a1 = q.op(a, d);
        let u = q.op_inv(a1, c);
        let b1 = q.op(b, d);
        let v = q.op_inv(b1, c);
        vec![a, a1, u, b, b1, v, d, c]
    }

    /// A twist region with `2N + 1` negative crossings between two
    /// oppositely oriented strands. Arcs `0..=N+1` are `α_0..α_{N+1}`, arcs
    /// `N+2..=2N+2` are `β_0..β_N`; crossing `2k` lies under `β_k` and
    /// takes `α_k` to `α_{k+1}`, crossing `2k+1` lies under `α_{k+1}` and
    /// takes `β_{k+1}` to `β_k`.
    pub fn twist(n: usize) -> Tangle {
        let alpha = |k: usize| k;
        let beta = |k: usize| n + 2 + k;
        let mut crossings = Vec::with_capacity(2 * n + 1);
        for k in 0..=n {
            crossings.push(cr(alpha(k), alpha(k + 1), beta(k), -1));
            if k < n {
                crossings.push(cr(beta(k + 1), beta(k), alpha(k + 1), -1));
            }
        }
        Tangle {
            arcs: 2 * n + 3,
            crossings,
        }
    }

    /// `α_k ↦ a + k(1 - t)(y - x) + x`, `β_k ↦ a + k(1 - t)(y - x) + y`.
    pub fn twist_coloring(
        q: &FiniteAlexanderQuandle,
        n: usize,
        a: u64,
        x: u64,
        y: u64,
    ) -> Vec<u64> {
        let step = q.mul(q.sub(1, q.t()), q.sub(y, x));
        let base = |k: usize| q.add(a, q.mul(k as u64 % q.order(), step));
        let mut c: Vec<u64> = (0..=n + 1).map(|k| q.add(base(k), x)).collect();
        c.extend((0..=n).map(|k| q.add(base(k), y)));
        c
    }
}

/// Pass/fail counts of one randomized identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalCheck {
    pub name: String,
    pub quandle: (u64, u64),
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl LocalCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    check: LocalCheck,
}

impl Tally {
    fn new(name: &str, q: &FiniteAlexanderQuandle, trials: usize) -> Self {
        Tally {
            check: LocalCheck {
                name: name.into(),
                quandle: (q.order(), q.t()),
                trials,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.check.failures += 1;
            if self.check.first_failure.is_none() {
                self.check.first_failure = Some(detail());
            }
        }
    }
}

/// Four-crossing fragment: the weight sum equals `ψ((1 - t)(a - b), c' - d')`.
pub fn check_double_delta(q: &FiniteAlexanderQuandle, trials: usize, seed: u64) -> LocalCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let qc = q.conjugate();
    let psi = Bilinear::product(q.order(), 1);
    let tangle = Tangle::double_delta();
    let mut tally = Tally::new("double_delta", q, trials);
    let n = q.order();
    for _ in 0..trials {
        let [a, b, c, d, a2, b2, c2, d2]: [u64; 8] = std::array::from_fn(|_| rng.gen_range(0..n));
        let col1 = Tangle::double_delta_coloring(q, a, b, c, d);
        let col2 = Tangle::double_delta_coloring(&qc, a2, b2, c2, d2);
        let colored = tangle.is_coloring(q, &col1) && tangle.is_coloring(&qc, &col2);
        let lhs = tangle.weight_sum(q, &psi, &col1, &col2);
        let rhs = psi.eval(q.mul(q.sub(1, q.t()), q.sub(a, b)), q.sub(c2, d2));
        tally.record(colored && lhs == rhs, || {
            format!("a={a} b={b} c={c} d={d} c'={c2} d'={d2}: crossing sum {lhs}, formula {rhs}")
        });
    }
    tally.check
}

/// Which closed form the twist-region weight sum is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistFormula {
    /// `-ψ(x₁ - y₁, ((a₂ + y₂) + N(x₂ - y₂))(1 - t^{-1}))`.
    Printed,
    /// `-ψ(x₁ - y₁, ((a₂ + y₂) - N(x₂ - y₂))(1 - t^{-1}))`.
    Derived,
}

pub fn twist_closed_form(
    q: &FiniteAlexanderQuandle,
    formula: TwistFormula,
    n: usize,
    (x1, y1): (u64, u64),
    (a2, x2, y2): (u64, u64, u64),
) -> u64 {
    let psi = Bilinear::product(q.order(), 1);
    let nn = q.mul(n as u64 % q.order(), q.sub(x2, y2));
    let inner = match formula {
        TwistFormula::Printed => q.add(q.add(a2, y2), nn),
        TwistFormula::Derived => q.sub(q.add(a2, y2), nn),
    };
    q.neg(psi.eval(q.sub(x1, y1), q.mul(inner, q.sub(1, q.t()))))
}

/// `(2N + 1)`-twist with `N` drawn from `0..=max_n` per trial.
pub fn check_twist(
    q: &FiniteAlexanderQuandle,
    formula: TwistFormula,
    max_n: usize,
    trials: usize,
    seed: u64,
) -> LocalCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let qc = q.conjugate();
    let psi = Bilinear::product(q.order(), 1);
    let name = match formula {
        TwistFormula::Printed => "twist_region",
        TwistFormula::Derived => "twist_region_derived",
    };
    let mut tally = Tally::new(name, q, trials);
    let order = q.order();
    for _ in 0..trials {
        let n = rng.gen_range(0..=max_n);
        let [a1, x1, y1, a2, x2, y2]: [u64; 6] = std::array::from_fn(|_| rng.gen_range(0..order));
        let tangle = Tangle::twist(n);
        let col1 = Tangle::twist_coloring(q, n, a1, x1, y1);
        let col2 = Tangle::twist_coloring(&qc, n, a2, x2, y2);
        let colored = tangle.is_coloring(q, &col1) && tangle.is_coloring(&qc, &col2);
        let lhs = tangle.weight_sum(q, &psi, &col1, &col2);
        let rhs = twist_closed_form(q, formula, n, (x1, y1), (a2, x2, y2));
        tally.record(colored && lhs == rhs, || {
            format!("N={n} a1={a1} x1={x1} y1={y1} a2={a2} x2={x2} y2={y2}: crossing sum {lhs}, formula {rhs}")
        });
    }
    tally.check
}

/// The full suite on the standard quandles `Z_5, t = 2` and `Z_7, t = 3`.
pub fn local_suite(trials: usize, seed: u64) -> Vec<LocalCheck> {
    let mut out = Vec::new();
    for (i, (n, t)) in [(5u64, 2u64), (7, 3)].into_iter().enumerate() {
        let q = FiniteAlexanderQuandle::new(n, t).expect("unit");
        let s = seed.wrapping_add(i as u64 * 1000);
        out.push(check_double_delta(&q, trials, s));
        out.push(check_twist(&q, TwistFormula::Printed, 5, trials, s + 1));
        out.push(check_twist(&q, TwistFormula::Derived, 5, trials, s + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fragment_with_equal_verticals_is_zero() {
        let q = FiniteAlexanderQuandle::new(5, 2).unwrap();
        let qc = q.conjugate();
        let psi = Bilinear::product(5, 1);
        let t = Tangle::double_delta();
        let c1 = Tangle::double_delta_coloring(&q, 3, 3, 1, 4);
        let c2 = Tangle::double_delta_coloring(&qc, 0, 2, 4, 1);
        assert_eq!(t.weight_sum(&q, &psi, &c1, &c2), 0);
    }

    #[test]
    fn single_crossing_twist() {
        let q = FiniteAlexanderQuandle::new(7, 3).unwrap();
        let t = Tangle::twist(0);
        assert_eq!(t.crossings.len(), 1);
        for f in [TwistFormula::Printed, TwistFormula::Derived] {
            assert!(check_twist(&q, f, 0, 200, 1).passed());
        }
    }

    #[test]
    fn double_delta_identity() {
        for (n, t) in [(5, 2), (7, 3), (11, 7)] {
            let q = FiniteAlexanderQuandle::new(n, t).unwrap();
            assert!(check_double_delta(&q, 300, 9).passed());
        }
    }
}
