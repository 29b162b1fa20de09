//! Dense matrices over the Gaussian rationals with exact row reduction.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for k in 0..n {
            *m.at_mut(k, k) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(r, c) += &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply shape mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.at(r, c);
                if !a.is_zero() {
                    out[r] += &(a * x);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero();
        for k in 0..self.rows {
            t += self.at(k, k);
        }
        t
    }

    /// Trace of `self * rhs` without forming the product.
    pub fn trace_of_product(&self, rhs: &Matrix) -> Scalar {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.rows, rhs.cols);
        let mut t = Scalar::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.at(c, r);
                if !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        t
    }

    pub fn pow_is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return true;
        }
        let mut p = self.clone();
        let mut e = 1usize;
        while e < n {
            if p.is_zero() {
                return true;
            }
            p = p.matmul(&p);
            e *= 2;
        }
        p.is_zero()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (rank, _) = aug.rref_in_place();
        if rank != n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| aug.at(r, c + n).clone()))
    }

    /// Flattens the matrix row-major into one coordinate vector.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vec<Scalar>) -> Matrix {
        assert_eq!(rows * cols, v.len());
        Matrix {
            rows,
            cols,
            entries: v,
        }
    }

    /// In-place Gauss-Jordan reduction. Returns the rank and pivot columns.
    /// The pivot rule is deterministic (first nonzero entry in column
    /// order), so equal inputs yield equal outputs.
    pub fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    let tmp = self.at(p, c).clone();
                    *self.at_mut(p, c) = self.at(row, c).clone();
                    *self.at_mut(row, c) = tmp;
                }
            }
            let inv = self.at(row, col).inv().expect("pivot nonzero");
            for c in col..self.cols {
                if !self.at(row, c).is_zero() {
                    let v = self.at(row, c) * &inv;
                    *self.at_mut(row, c) = v;
                }
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    if self.at(row, c).is_zero() {
                        continue;
                    }
                    let delta = &factor * self.at(row, c);
                    *self.at_mut(r, c) -= &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (row, pivots)
    }

    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let (rank, _) = m.rref_in_place();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().0
    }

    /// Solves `A x = b`; free variables are set to zero, so the solution
    /// choice is deterministic. Returns `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "solve shape mismatch");
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (_, pivots) = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Exact null space, in canonical subspace form.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let (_, pivots) = m.rref_in_place();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (&col, row) in pivots.iter().zip(0..) {
                v[col] = -m.at(row, free).clone();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.cols, basis)
    }

    /// Exact column space as a subspace of the target coordinates.
    pub fn image(&self) -> Subspace {
        let rows: Vec<Vec<Scalar>> = (0..self.cols).map(|c| self.col_vec(c)).collect();
        Subspace::from_rows(self.rows, rows)
    }

    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.to_string()).collect())
            .collect()
    }

    pub fn from_text_rows(rows: &[Vec<String>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidData("ragged matrix rows".into()));
        }
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            for cell in row {
                entries.push(cell.parse()?);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries,
        })
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|e| e.is_zero())
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * k).collect()
}

pub fn vec_to_text(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|e| e.to_string()).collect()
}
