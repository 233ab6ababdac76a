//! Oriented knot diagrams in PD notation.
//!
//! Text format: `PD[E] X(a,b,c,d,s) X(...) ...` where `E` is the number of
//! edges (twice the crossing count). Edges are numbered `1..=E` along the
//! orientation. Each tuple lists the four edges at a crossing
//! counterclockwise, starting from the incoming under-edge `a`; the
//! under-strand runs `a -> c` with `c = a + 1 (mod E)`, and `s` is the
//! crossing sign, `+` or `-`. The unknot is `PD[0]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed PD text at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("edge {edge} is outside the declared range 1..={declared}")]
    Undeclared { edge: usize, declared: usize },
    #[error("declared {declared} edges but found {crossings} crossings")]
    EdgeCount { declared: usize, crossings: usize },
    #[error("edge {edge} appears {count} times, expected 2")]
    EdgeMultiplicity { edge: usize, count: usize },
    #[error("crossing {0}: under-strand does not continue to the next edge")]
    Walk(usize),
    #[error("crossing {0}: over-strand edges are not consecutive")]
    OverStrand(usize),
    #[error("crossing {0}: declared sign contradicts the over-strand direction")]
    Sign(usize),
    #[error("arc consistency failed: {0}")]
    Arcs(String),
    #[error("braid closure is not a knot: {0}")]
    Braid(String),
}

/// One PD tuple with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCrossing {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub sign: i8,
}

/// A crossing in arc terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

impl Crossing {
    /// The under-arc `α` with `C(α) ◁ C(β) = C(γ)`: the outgoing under-arc
    /// at a positive crossing, the incoming one at a negative crossing.
    pub fn alpha(&self) -> usize {
        if self.sign > 0 {
            self.under_out
        } else {
            self.under_in
        }
    }

    pub fn beta(&self) -> usize {
        self.over
    }

    pub fn gamma(&self) -> usize {
        if self.sign > 0 {
            self.under_in
        } else {
            self.under_out
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotDiagram {
    edges: usize,
    pd: Vec<PdCrossing>,
    edge_arc: Vec<usize>,
    arcs: usize,
    crossings: Vec<Crossing>,
}

fn succ(e: usize, edges: usize) -> usize {
    e % edges + 1
}

impl KnotDiagram {
    pub fn unknot() -> Self {
        KnotDiagram {
            edges: 0,
            pd: Vec::new(),
            edge_arc: Vec::new(),
            arcs: 1,
            crossings: Vec::new(),
        }
    }

    /// Validates the tuples and computes arcs.
    pub fn new(edges: usize, pd: Vec<PdCrossing>) -> Result<Self, DiagramError> {
        if edges != 2 * pd.len() {
            return Err(DiagramError::EdgeCount {
                declared: edges,
                crossings: pd.len(),
            });
        }
        if pd.is_empty() {
            return Ok(Self::unknot());
        }
        let mut count = vec![0usize; edges + 1];
        for x in &pd {
            for e in [x.a, x.b, x.c, x.d] {
                if e == 0 || e > edges {
                    return Err(DiagramError::Undeclared {
                        edge: e,
                        declared: edges,
                    });
                }
                count[e] += 1;
            }
        }
        if let Some(edge) = (1..=edges).find(|&e| count[e] != 2) {
            return Err(DiagramError::EdgeMultiplicity {
                edge,
                count: count[edge],
            });
        }
        for (i, x) in pd.iter().enumerate() {
            if x.c != succ(x.a, edges) {
                return Err(DiagramError::Walk(i));
            }
            let pos = x.b == succ(x.d, edges);
            let neg = x.d == succ(x.b, edges);
            if !pos && !neg {
                return Err(DiagramError::OverStrand(i));
            }
            if x.sign.abs() != 1 || (pos != neg && pos != (x.sign > 0)) {
                return Err(DiagramError::Sign(i));
            }
        }

        // Arcs start at outgoing under-edges.
        let mut starts: Vec<usize> = pd.iter().map(|x| x.c).collect();
        starts.sort_unstable();
        starts.dedup();
        if starts.len() != pd.len() {
            return Err(DiagramError::Arcs("an edge leaves two under-passes".into()));
        }
        let arcs = starts.len();
        let mut edge_arc = vec![0; edges + 1];
        let mut current = arcs - 1;
        let mut next = 0;
        for (e, slot) in edge_arc.iter_mut().enumerate().skip(1) {
            if next < arcs && starts[next] == e {
                current = next;
                next += 1;
            }
            *slot = current;
        }
        let crossings: Vec<Crossing> = pd
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if edge_arc[x.b] != edge_arc[x.d] {
                    return Err(DiagramError::Arcs(format!(
                        "crossing {i}: over-edges on different arcs"
                    )));
                }
                Ok(Crossing {
                    over: edge_arc[x.b],
                    under_in: edge_arc[x.a],
                    under_out: edge_arc[x.c],
                    sign: x.sign,
                })
            })
            .collect::<Result<_, _>>()?;
        if crossings.iter().any(|c| c.under_in == c.under_out) {
            return Err(DiagramError::Arcs("under-arcs coincide".into()));
        }
        Ok(KnotDiagram {
            edges,
            pd,
            edge_arc,
            arcs,
            crossings,
        })
    }

    /// From unsigned KnotInfo quadruples; signs follow the over-strand
    /// direction. A single-crossing diagram is read as positive.
    pub fn from_knotinfo(quads: &[[usize; 4]]) -> Result<Self, DiagramError> {
        let edges = 2 * quads.len();
        let pd = quads
            .iter()
            .map(|&[a, b, c, d]| {
                let sign = if edges > 0 && b == succ(d, edges) {
                    1
                } else {
                    -1
                };
                PdCrossing { a, b, c, d, sign }
            })
            .collect();
        Self::new(edges, pd)
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn pd(&self) -> &[PdCrossing] {
        &self.pd
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Arc carrying edge `e` (1-based).
    pub fn arc_of_edge(&self, e: usize) -> usize {
        if self.edges == 0 {
            0
        } else {
            self.edge_arc[e]
        }
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    /// Mirror image: every crossing changes over/under and sign.
    pub fn mirror(&self) -> KnotDiagram {
        let pd = self
            .pd
            .iter()
            .map(|x| {
                if x.sign > 0 {
                    PdCrossing {
                        a: x.d,
                        b: x.a,
                        c: x.b,
                        d: x.c,
                        sign: -1,
                    }
                } else {
                    PdCrossing {
                        a: x.b,
                        b: x.c,
                        c: x.d,
                        d: x.a,
                        sign: 1,
                    }
                }
            })
            .collect();
        KnotDiagram::new(self.edges, pd).expect("mirror of a valid diagram")
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[{}]", self.edges)?;
        for x in &self.pd {
            let s = if x.sign > 0 { '+' } else { '-' };
            write!(f, " X({},{},{},{},{})", x.a, x.b, x.c, x.d, s)?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> DiagramError {
        DiagramError::Malformed {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| DiagramError::Malformed {
                pos: start,
                msg: "expected a number".into(),
            })
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.s.len()
    }
}

impl FromStr for KnotDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor {
            s: s.as_bytes(),
            pos: 0,
        };
        cur.expect(b'P')?;
        cur.expect(b'D')?;
        cur.expect(b'[')?;
        let edges = cur.number()?;
        cur.expect(b']')?;
        let mut pd = Vec::new();
        while !cur.at_end() {
            cur.expect(b'X')?;
            cur.expect(b'(')?;
            let mut e = [0; 4];
            for slot in &mut e {
                *slot = cur.number()?;
                cur.expect(b',')?;
            }
            cur.skip_ws();
            let sign = match cur.s.get(cur.pos) {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Err(cur.err("expected '+' or '-'")),
            };
            cur.pos += 1;
            cur.expect(b')')?;
            pd.push(PdCrossing {
                a: e[0],
                b: e[1],
                c: e[2],
                d: e[3],
                sign,
            });
        }
        KnotDiagram::new(edges, pd)
    }
}

/// Closure of a braid, with the edges on top of each strand position.
#[derive(Debug, Clone)]
pub struct BraidClosure {
    pub diagram: KnotDiagram,
    pub word: Vec<i64>,
    pub top_edges: Vec<usize>,
}

impl BraidClosure {
    /// Closure of a braid word in the generators `±i` for `σ_i^{±1}`.
    pub fn new(word: &[i64]) -> Result<Self, DiagramError> {
        if word.contains(&0) {
            return Err(DiagramError::Braid("generator 0".into()));
        }
        let strands = word
            .iter()
            .map(|g| g.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
            + 1;
        let mut fresh = 0usize;
        let mut new_edge = || {
            fresh += 1;
            fresh
        };
        let start: Vec<usize> = (0..strands).map(|_| new_edge()).collect();
        let mut cur = start.clone();
        let mut raw = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (cur[i], cur[i + 1]);
            let (c, d) = (new_edge(), new_edge());
            raw.push(if g > 0 { [b, c, d, a] } else { [a, b, c, d] });
            cur[i] = d;
            cur[i + 1] = c;
        }
        let ident: BTreeMap<usize, usize> =
            cur.iter().copied().zip(start.iter().copied()).collect();
        for x in &mut raw {
            for e in x.iter_mut() {
                if let Some(&s) = ident.get(e) {
                    *e = s;
                }
            }
        }
        if word.is_empty() {
            if strands == 1 {
                return Ok(BraidClosure {
                    diagram: KnotDiagram::unknot(),
                    word: Vec::new(),
                    top_edges: vec![0],
                });
            }
            return Err(DiagramError::Braid("empty word".into()));
        }
        let mut next = BTreeMap::new();
        for (&g, x) in word.iter().zip(&raw) {
            next.insert(x[0], x[2]);
            if g > 0 {
                next.insert(x[3], x[1]);
            } else {
                next.insert(x[1], x[3]);
            }
        }
        let mut order = BTreeMap::new();
        let mut e = raw[0][0];
        while !order.contains_key(&e) {
            order.insert(e, order.len() + 1);
            e = *next
                .get(&e)
                .ok_or_else(|| DiagramError::Braid("open strand".into()))?;
        }
        if order.len() != 2 * word.len() {
            return Err(DiagramError::Braid(format!(
                "closure has more than one component ({} of {} edges reached)",
                order.len(),
                2 * word.len()
            )));
        }
        let pd: Vec<PdCrossing> = word
            .iter()
            .zip(&raw)
            .map(|(&g, x)| PdCrossing {
                a: order[&x[0]],
                b: order[&x[1]],
                c: order[&x[2]],
                d: order[&x[3]],
                sign: if g > 0 { 1 } else { -1 },
            })
            .collect();
        let top_edges = start.iter().map(|s| order[s]).collect();
        Ok(BraidClosure {
            diagram: KnotDiagram::new(2 * word.len(), pd)?,
            word: word.to_vec(),
            top_edges,
        })
    }

    /// `T(m, n)` as the closure of `(σ_1 ⋯ σ_{m-1})^n` on `m` strands.
    pub fn torus(m: usize, n: usize) -> Result<Self, DiagramError> {
        let word: Vec<i64> = (0..n).flat_map(|_| 1..m as i64).collect();
        Self::new(&word)
    }

    /// Edges leaving crossing `j` at strand positions `i` and `i + 1`.
    pub fn outgoing_edges(&self, j: usize) -> (usize, usize) {
        let x = self.diagram.pd()[j];
        if self.word[j] > 0 {
            (x.c, x.b)
        } else {
            (x.d, x.c)
        }
    }

    /// Arcs on top of each strand position.
    pub fn top_arcs(&self) -> Vec<usize> {
        self.top_edges
            .iter()
            .map(|&e| self.diagram.arc_of_edge(e))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: [[usize; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];

    #[test]
    fn trefoil_from_knotinfo() {
        let d = KnotDiagram::from_knotinfo(&TREFOIL).unwrap();
        assert_eq!(d.num_arcs(), 3);
        assert_eq!(d.num_crossings(), 3);
        assert!(d.crossings().iter().all(|c| c.sign == 1));
        assert_eq!(
            d.to_string(),
            "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)"
        );
    }

    #[test]
    fn text_round_trip() {
        let text = "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)";
        let d: KnotDiagram = text.parse().unwrap();
        assert_eq!(d.to_string(), text);
        let loose: KnotDiagram = " PD [ 6 ]X( 1,5 ,2,4,+)\n X(3,1,4,6,+)X(5,3,6,2,+) "
            .parse()
            .unwrap();
        assert_eq!(loose, d);
        let m = d.mirror();
        assert!(m.crossings().iter().all(|c| c.sign == -1));
        assert_eq!(m.to_string().parse::<KnotDiagram>().unwrap(), m);
    }

    #[test]
    fn unknot_and_errors() {
        let u: KnotDiagram = "PD[0]".parse().unwrap();
        assert_eq!(u.num_arcs(), 1);
        assert_eq!(u.num_crossings(), 0);
        assert_eq!(u.to_string(), "PD[0]");
        assert!(matches!(
            "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,7,+)".parse::<KnotDiagram>(),
            Err(DiagramError::Undeclared { edge: 7, .. })
        ));
        assert!("PD[6] X(1,5,2,4,-) X(3,1,4,6,+) X(5,3,6,2,+)"
            .parse::<KnotDiagram>()
            .is_err());
        assert!("PD[4] X(1,5,2,4,+)".parse::<KnotDiagram>().is_err());
        assert!("PD[6] X(1,5,2,4)".parse::<KnotDiagram>().is_err());
    }

    #[test]
    fn braid_closures() {
        let t = BraidClosure::new(&[1, 1, 1]).unwrap();
        assert_eq!(t.diagram.num_crossings(), 3);
        assert!(t.diagram.crossings().iter().all(|c| c.sign == 1));
        let f = BraidClosure::new(&[1, -2, 1, -2]).unwrap();
        assert_eq!(f.diagram.writhe(), 0);
        assert!(BraidClosure::new(&[1, 1]).is_err());
        let t34 = BraidClosure::torus(3, 4).unwrap();
        assert_eq!(t34.diagram.num_crossings(), 8);
        assert_eq!(t34.top_arcs().len(), 3);
    }
}
