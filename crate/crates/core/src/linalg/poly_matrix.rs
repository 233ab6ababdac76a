//! Matrices over the Laurent ring with fraction-free determinant and
//! adjugate.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::LinalgError;
use crate::laurent::LaurentPoly;

/// Above this size the adjugate switches from cofactors to fraction-free
/// Gauss-Jordan elimination.
pub const COFACTOR_LIMIT: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(LinalgError::Ragged);
            }
            data.extend(r);
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Parses rows of Laurent polynomial strings.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self, LinalgError> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<LaurentPoly>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(LinalgError::Parse)?;
        Self::from_rows(parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        self.map(|e| e * s)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<Self, LinalgError> {
        self.check_same(other)?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<Self, LinalgError> {
        self.check_same(other)?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn check_same(&self, other: &PolyMatrix) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Removes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row index in `from..rows` of the best pivot in column `k`: shortest
    /// support, then fewest terms, then smallest row index.
    fn pivot_row(&self, k: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&i| !self.get(i, k).is_zero())
            .min_by_key(|&i| (self.get(i, k).width(), self.get(i, k).num_terms(), i))
    }

    /// Exact determinant by Bareiss elimination.
    pub fn det(&self) -> Result<LaurentPoly, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut prev = LaurentPoly::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = a.pivot_row(k, k) else {
                return Ok(LaurentPoly::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, exact(&num, &prev)?);
                }
                a.set(i, k, LaurentPoly::zero());
            }
            prev = a.get(k, k).clone();
        }
        Ok(if n == 0 {
            LaurentPoly::one()
        } else if negate {
            -prev
        } else {
            prev
        })
    }

    /// Transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Result<PolyMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let adj = if self.rows <= COFACTOR_LIMIT {
            self.adjugate_cofactor()?
        } else {
            self.adjugate_gauss_jordan()?
        };
        #[cfg(debug_assertions)]
        {
            let det = self.det()?;
            let prod = self.mul(&adj)?;
            debug_assert_eq!(prod, PolyMatrix::identity(self.rows).scale(&det));
        }
        Ok(adj)
    }

    pub fn adjugate_cofactor(&self) -> Result<PolyMatrix, LinalgError> {
        let n = self.rows;
        if n == 0 {
            return Ok(PolyMatrix::zeros(0, 0));
        }
        if n == 1 {
            return Ok(PolyMatrix::identity(1));
        }
        let entries: Vec<LaurentPoly> = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                // adj(i, j) = (-1)^(i+j) det(minor(j, i))
                let d = self.minor(j, i).det()?;
                Ok(if (i + j) % 2 == 1 { -d } else { d })
            })
            .collect::<Result<_, LinalgError>>()?;
        Ok(PolyMatrix {
            rows: n,
            cols: n,
            data: entries,
        })
    }

    /// Fraction-free Gauss-Jordan on `[M | I]`; the right block ends as
    /// `D * M^-1` with `D = ±det M`.
    pub fn adjugate_gauss_jordan(&self) -> Result<PolyMatrix, LinalgError> {
        let n = self.rows;
        let mut aug = PolyMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, LaurentPoly::one());
        }
        let mut prev = LaurentPoly::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = aug.pivot_row(k, k) else {
                return self.adjugate_cofactor();
            };
            if p != k {
                aug.swap_rows(p, k);
                negate = !negate;
            }
            let pivot_row: Vec<LaurentPoly> = aug.row(k).to_vec();
            let pkk = pivot_row[k].clone();
            let rows: Vec<(usize, Vec<LaurentPoly>)> = (0..n)
                .into_par_iter()
                .filter(|&i| i != k)
                .map(|i| {
                    let row = aug.row(i);
                    let aik = &row[k];
                    let new_row = (0..2 * n)
                        .map(|j| {
                            if j == k {
                                return Ok(LaurentPoly::zero());
                            }
                            let num = &pkk * &row[j] - aik * &pivot_row[j];
                            exact(&num, &prev)
                        })
                        .collect::<Result<Vec<_>, LinalgError>>()?;
                    Ok((i, new_row))
                })
                .collect::<Result<_, LinalgError>>()?;
            for (i, r) in rows {
                for (j, v) in r.into_iter().enumerate() {
                    aug.set(i, j, v);
                }
            }
            prev = pkk;
        }
        // rows other than the last still carry their own pivot scale; the
        // final pivot equals the diagonal everywhere
        let mut out = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = aug.get(i, n + j).clone();
                out.set(i, j, if negate { -v } else { v });
            }
        }
        Ok(out)
    }

    /// Integer coefficient matrix of a constant polynomial matrix.
    pub fn from_int_rows(rows: &[Vec<BigInt>]) -> Self {
        let data: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .map(|r| r.iter().map(|c| LaurentPoly::from(c.clone())).collect())
            .collect();
        Self::from_rows(data).expect("rectangular input")
    }
}

fn exact(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, LinalgError> {
    num.div_exact(den)
        .map_err(|_| LinalgError::InexactDivision)?
        .ok_or(LinalgError::InexactDivision)
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
