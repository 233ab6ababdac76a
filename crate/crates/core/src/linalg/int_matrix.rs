//! Dense matrices over arbitrary-precision integers with column Hermite
//! reduction, exact solving, integer kernels and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<R, C>(rows: &[R]) -> Result<Self, LinalgError>
    where
        R: AsRef<[C]>,
        C: Into<BigInt> + Clone,
    {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != ncols {
                return Err(LinalgError::Ragged);
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn diagonal<C: Into<BigInt> + Clone>(diag: &[C]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
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

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
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

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut prev = BigInt::one();
        let mut sign = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&p| !a.get(p, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        Ok(if sign { -prev } else { prev })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Replaces columns `(a, b)` by `(p*a + q*b, r*a + s*b)`.
    fn combine_cols(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, p * &x + q * &y);
            self.set(i, b, r * &x + s * &y);
        }
    }

    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, p * &x + q * &y);
            self.set(b, j, r * &x + s * &y);
        }
    }

    /// Column Hermite form: returns `(h, u, pivots)` with `self * u = h`,
    /// `u` unimodular and `h` in column echelon form. `pivots[k] = (row, col)`
    /// for the k-th pivot; pivot entries are positive and entries to their
    /// left are reduced into `[0, pivot)`.
    pub fn column_hermite(&self) -> (IntMatrix, IntMatrix, Vec<(usize, usize)>) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.cols);
        let mut pivots = Vec::new();
        let mut c = 0;
        for i in 0..self.rows {
            if c == self.cols {
                break;
            }
            for j in c + 1..self.cols {
                if h.get(i, j).is_zero() {
                    continue;
                }
                if h.get(i, c).is_zero() {
                    h.swap_cols(c, j);
                    u.swap_cols(c, j);
                    continue;
                }
                let x = h.get(i, c).clone();
                let y = h.get(i, j).clone();
                let e = x.extended_gcd(&y);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let a = &x / &g;
                let b = &y / &g;
                let nb = -b;
                h.combine_cols(c, j, &s, &t, &nb, &a);
                u.combine_cols(c, j, &s, &t, &nb, &a);
            }
            if h.get(i, c).is_zero() {
                continue;
            }
            if h.get(i, c).is_negative() {
                let m1 = -BigInt::one();
                h.scale_col(c, &m1);
                u.scale_col(c, &m1);
            }
            let piv = h.get(i, c).clone();
            for k in 0..c {
                let q = h.get(i, k).div_floor(&piv);
                if !q.is_zero() {
                    let nq = -q;
                    h.add_col_multiple(k, c, &nq);
                    u.add_col_multiple(k, c, &nq);
                }
            }
            pivots.push((i, c));
            c += 1;
        }
        (h, u, pivots)
    }

    fn scale_col(&mut self, j: usize, s: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, j) * s;
            self.set(i, j, v);
        }
    }

    /// `col[dst] += s * col[src]`.
    fn add_col_multiple(&mut self, dst: usize, src: usize, s: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + s * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, s: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + s * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// Integer solution of `self * x = b`, together with a kernel basis.
    /// Returns `None` when no integer solution exists.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<IntSolution>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (b.len(), 1),
            });
        }
        let (h, u, pivots) = self.column_hermite();
        let mut y = vec![BigInt::zero(); self.cols];
        let mut next = 0;
        for i in 0..self.rows {
            let mut acc = b[i].clone();
            for (c, yc) in y.iter().enumerate().take(next) {
                acc -= h.get(i, c) * yc;
            }
            if next < pivots.len() && pivots[next].0 == i {
                let (q, r) = acc.div_rem(h.get(i, next));
                if !r.is_zero() {
                    return Ok(None);
                }
                y[next] = q;
                next += 1;
            } else if !acc.is_zero() {
                return Ok(None);
            }
        }
        let x = u.mul_vec(&y)?;
        let kernel = (pivots.len()..self.cols).map(|j| u.column(j)).collect();
        Ok(Some(IntSolution {
            particular: x,
            kernel: reduce_lattice_basis(kernel),
        }))
    }

    /// Basis of the integer kernel `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let (_, u, pivots) = self.column_hermite();
        let basis = (pivots.len()..self.cols).map(|j| u.column(j)).collect();
        reduce_lattice_basis(basis)
    }

    pub fn rank(&self) -> usize {
        self.column_hermite().2.len()
    }

    /// Smith normal form `u * self * v = d` with unimodular `u`, `v`.
    pub fn smith_normal_form(&self) -> SmithForm {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut k = 0;
        while k < n {
            // smallest nonzero entry in the remaining block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..self.rows {
                for j in k..self.cols {
                    let e = d.get(i, j);
                    if !e.is_zero() && best.is_none_or(|(bi, bj)| e.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);
            loop {
                let mut dirty = false;
                for i in k + 1..self.rows {
                    if d.get(i, k).is_zero() {
                        continue;
                    }
                    let x = d.get(k, k).clone();
                    let y = d.get(i, k).clone();
                    if y.is_multiple_of(&x) {
                        let f = -(&y / &x);
                        d.add_row_multiple(i, k, &f);
                        u.add_row_multiple(i, k, &f);
                        continue;
                    }
                    let e = x.extended_gcd(&y);
                    let a = &x / &e.gcd;
                    let b = &y / &e.gcd;
                    let nb = -b;
                    d.combine_rows(k, i, &e.x, &e.y, &nb, &a);
                    u.combine_rows(k, i, &e.x, &e.y, &nb, &a);
                    dirty = true;
                }
                for j in k + 1..self.cols {
                    if d.get(k, j).is_zero() {
                        continue;
                    }
                    let x = d.get(k, k).clone();
                    let y = d.get(k, j).clone();
                    if y.is_multiple_of(&x) {
                        let f = -(&y / &x);
                        d.add_col_multiple(j, k, &f);
                        v.add_col_multiple(j, k, &f);
                        continue;
                    }
                    let e = x.extended_gcd(&y);
                    let a = &x / &e.gcd;
                    let b = &y / &e.gcd;
                    let nb = -b;
                    d.combine_cols(k, j, &e.x, &e.y, &nb, &a);
                    v.combine_cols(k, j, &e.x, &e.y, &nb, &a);
                    dirty = true;
                }
                if dirty {
                    continue;
                }
                // divisibility: fold any entry not divisible by the pivot into row k
                let piv = d.get(k, k).clone();
                let bad = (k + 1..self.rows)
                    .find(|&i| (k + 1..self.cols).any(|j| !d.get(i, j).is_multiple_of(&piv)));
                match bad {
                    Some(i) => {
                        let one = BigInt::one();
                        d.add_row_multiple(k, i, &one);
                        u.add_row_multiple(k, i, &one);
                    }
                    None => break,
                }
            }
            if d.get(k, k).is_negative() {
                let m1 = -BigInt::one();
                for j in 0..self.cols {
                    let x = -d.get(k, j);
                    d.set(k, j, x);
                }
                for j in 0..self.rows {
                    let x = u.get(k, j) * &m1;
                    u.set(k, j, x);
                }
            }
            k += 1;
        }
        let diagonal = (0..n).map(|i| d.get(i, i).clone()).collect();
        SmithForm { diagonal, u, v }
    }
}

/// Reduces a lattice basis to row Hermite form, dropping zero vectors.
fn reduce_lattice_basis(basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if basis.is_empty() {
        return basis;
    }
    // column Hermite of the matrix whose columns are the basis vectors
    let n = basis[0].len();
    let mut m = IntMatrix::zeros(n, basis.len());
    for (j, v) in basis.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    let (h, _, pivots) = m.column_hermite();
    (0..pivots.len()).map(|j| h.column(j)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSolution {
    pub particular: Vec<BigInt>,
    pub kernel: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Invariant factors, nonnegative, each dividing the next; trailing
    /// zeros for rank deficiency.
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nontrivial invariant factors of the cokernel `Z^rows / image`,
    /// zeros standing for free summands.
    pub fn cokernel_factors(&self, rows: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self
            .diagonal
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
        out.extend(std::iter::repeat_n(
            BigInt::zero(),
            rows.saturating_sub(self.diagonal.len()),
        ));
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntMatrix{:?}",
            self.to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(m(&[&[2, -2]]).kernel(), vec![v(&[1, 1])]);
        assert!(IntMatrix::identity(3).kernel().is_empty());
        assert_eq!(m(&[&[6, 4], &[3, 2]]).kernel(), vec![v(&[2, -3])]);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(
            IntMatrix::diagonal(&[2, 3]).smith_normal_form().diagonal,
            v(&[1, 6])
        );
        assert_eq!(
            IntMatrix::zeros(2, 3).smith_normal_form().diagonal,
            v(&[0, 0])
        );
        assert_eq!(
            IntMatrix::diagonal(&[2, 2]).smith_normal_form().diagonal,
            v(&[2, 2])
        );
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = a.smith_normal_form();
        assert_eq!(s.diagonal, v(&[2, 6, 12]));
        let d = s.u.mul(&a).unwrap().mul(&s.v).unwrap();
        assert_eq!(d, IntMatrix::diagonal(&[2, 6, 12]));
        assert!(s.u.det().unwrap().abs().is_one());
        assert!(s.v.det().unwrap().abs().is_one());
    }

    #[test]
    fn solve_examples() {
        let a = m(&[&[1, -1], &[1, 2]]);
        // a - b = 1, a + 2b = 0 has no integer solution
        assert_eq!(a.solve(&v(&[1, 0])).unwrap(), None);
        let s = a.solve(&v(&[3, 0])).unwrap().unwrap();
        assert_eq!(s.particular, v(&[2, -1]));
        assert!(s.kernel.is_empty());
        let b = m(&[&[2, 4, 6]]);
        let s = b.solve(&v(&[10])).unwrap().unwrap();
        assert_eq!(b.mul_vec(&s.particular).unwrap(), v(&[10]));
        assert_eq!(s.kernel.len(), 2);
        assert_eq!(b.solve(&v(&[3])).unwrap(), None);
    }

    #[test]
    fn det_examples() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[2, 3], &[4, 5]]).det().unwrap(), BigInt::from(-2));
        assert!(IntMatrix::zeros(2, 3).det().is_err());
    }
}
