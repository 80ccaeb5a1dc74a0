//! Dense exact matrices over a [`StarField`].
//!
//! Elimination only ever multiplies rows on the left, so right-module
//! solution sets `{x : Ax = b}` are preserved even over the quaternions.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::StarField;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<D> {
    rows: usize,
    cols: usize,
    data: Vec<D>,
}

impl<D: fmt::Debug> fmt::Debug for Matrix<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

impl<D> std::ops::Index<(usize, usize)> for Matrix<D> {
    type Output = D;
    fn index(&self, (r, c): (usize, usize)) -> &D {
        &self.data[r * self.cols + c]
    }
}

impl<D> std::ops::IndexMut<(usize, usize)> for Matrix<D> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut D {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of row reduction: the reduced matrix and its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<D> {
    pub reduced: Matrix<D>,
    pub pivots: Vec<usize>,
}

impl<D: StarField> Matrix<D> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> D) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| D::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { D::one() } else { D::zero() })
    }

    /// Builds from rows; `cols` is needed to shape matrices with no rows.
    pub fn from_rows(rows: Vec<Vec<D>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::shape(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<D>]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn column_vector(v: Vec<D>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[D] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<D> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<D>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(StarField::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = &self[(r, c)];
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn map(&self, f: impl Fn(&D) -> D) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, rhs: &Matrix<D>) -> Result<Matrix<D>> {
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<D> = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, rhs: &Matrix<D>, f: impl Fn(&D, &D) -> D) -> Result<Matrix<D>> {
        if self.shape() != rhs.shape() {
            return Err(Error::shape(format!(
                "entrywise operation on {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, rhs: &Matrix<D>) -> Result<Matrix<D>> {
        self.zip(rhs, |a, b| a.add(b))
    }

    pub fn sub(&self, rhs: &Matrix<D>) -> Result<Matrix<D>> {
        self.zip(rhs, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Matrix<D> {
        self.map(|a| a.neg())
    }

    /// Plain conjugate transpose, ignoring any weights.
    pub fn conj_transpose(&self) -> Matrix<D> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].star())
    }

    pub fn hstack(&self, rhs: &Matrix<D>) -> Result<Matrix<D>> {
        if self.rows != rhs.rows {
            return Err(Error::shape("hstack needs equal row counts"));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        }))
    }

    pub fn vstack(&self, rhs: &Matrix<D>) -> Result<Matrix<D>> {
        if self.cols != rhs.cols {
            return Err(Error::shape("vstack needs equal column counts"));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix { rows: self.rows + rhs.rows, cols: self.cols, data })
    }

    pub fn block_diag(&self, rhs: &Matrix<D>) -> Matrix<D> {
        Matrix::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |r, c| match (r < self.rows, c < self.cols) {
            (true, true) => self[(r, c)].clone(),
            (false, false) => rhs[(r - self.rows, c - self.cols)].clone(),
            _ => D::zero(),
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix<D> {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self[(rows.start + r, cols.start + c)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<D> {
        Matrix::from_fn(idx.len(), self.cols, |r, c| self[(idx[r], c)].clone())
    }

    /// Reduced row echelon form, pivoting on the first nonzero entry of each
    /// column among the first `limit` columns.
    pub fn rref_limited(&self, limit: usize) -> Rref<D> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit.min(self.cols) {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for c in col..m.cols {
                m[(row, c)] = inv.mul(&m[(row, c)]);
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if !m[(row, c)].is_zero() {
                        m[(r, c)] = m[(r, c)].sub(&factor.mul(&m[(row, c)]));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rref(&self) -> Rref<D> {
        self.rref_limited(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right nullspace `{x : Ax = 0}`, one vector per free
    /// column, with a one in that free slot.
    pub fn nullspace(&self) -> Vec<Vec<D>> {
        let Rref { reduced, pivots } = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![D::zero(); self.cols];
            v[free] = D::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = reduced[(r, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · X = rhs`, returning one solution (free variables zero).
    pub fn solve_right(&self, rhs: &Matrix<D>) -> Option<Matrix<D>> {
        assert_eq!(self.rows, rhs.rows, "solve_right shape");
        let aug = self.hstack(rhs).expect("same rows");
        let Rref { reduced, pivots } = aug.rref_limited(self.cols);
        for r in pivots.len()..self.rows {
            if (self.cols..aug.cols).any(|c| !reduced[(r, c)].is_zero()) {
                return None;
            }
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(pc, c)] = reduced[(r, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    /// Solves `Y · self = rhs` by solving the conjugate-transposed system.
    pub fn solve_left(&self, rhs: &Matrix<D>) -> Option<Matrix<D>> {
        self.conj_transpose().solve_right(&rhs.conj_transpose()).map(|z| z.conj_transpose())
    }

    pub fn inverse(&self) -> Option<Matrix<D>> {
        if !self.is_square() {
            return None;
        }
        let aug = self.hstack(&Matrix::identity(self.rows)).expect("square");
        let Rref { reduced, pivots } = aug.rref_limited(self.cols);
        if pivots.len() != self.rows {
            return None;
        }
        Some(reduced.submatrix(0..self.rows, self.cols..2 * self.cols))
    }
}
