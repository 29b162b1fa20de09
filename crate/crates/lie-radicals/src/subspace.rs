//! Linear subspaces of a fixed ambient coordinate space, kept in a
//! canonical reduced-echelon basis so that two values compare equal
//! exactly when they are the same subspace.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Reduced row-echelon basis: strictly increasing pivot columns, unit
    /// pivots, zeros above and below each pivot. No zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for row in &rows {
            assert_eq!(row.len(), ambient, "row length differs from ambient");
        }
        let mut m = Matrix::from_rows(rows);
        if m.rows == 0 {
            return Subspace::zero(ambient);
        }
        let (rank, pivots) = m.rref_in_place();
        let basis = Matrix::from_fn(rank, ambient, |r, c| m.at(r, c).clone());
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn line(ambient: usize, v: Vec<Scalar>) -> Self {
        Subspace::from_rows(ambient, vec![v])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, r: usize) -> &[Scalar] {
        self.basis.row(r)
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.dim()).map(|r| self.basis.row(r))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates without a pivot; the canonical complement of
    /// this subspace is spanned by the corresponding unit vectors.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut taken = vec![false; self.ambient];
        for &p in &self.pivots {
            taken[p] = true;
        }
        (0..self.ambient).filter(|&c| !taken[c]).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Adds one vector to the span, keeping the reduced echelon form.
    /// Returns whether the dimension grew. Cost is linear in the current
    /// rank times the ambient dimension.
    pub fn insert_row(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("leading entry nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // clear the new pivot column in the existing rows
        let mut rows: Vec<Vec<Scalar>> = self.basis_rows().map(|r| r.to_vec()).collect();
        for row in rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    row[j] -= &(&c * x);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        rows.insert(at, v);
        self.pivots.insert(at, p);
        self.basis = Matrix::from_rows(rows);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for row in other.basis_rows() {
            out.insert_row(row);
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (u, v) = (self.dim(), other.dim());
        if u == 0 || v == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // Coefficient pairs (a, b) with a^T U = b^T V give the intersection.
        let m = Matrix::from_fn(self.ambient, u + v, |r, c| {
            if c < u {
                self.basis.at(c, r).clone()
            } else {
                -other.basis.at(c - u, r).clone()
            }
        });
        let k = m.kernel();
        let rows: Vec<Vec<Scalar>> = k
            .basis_rows()
            .map(|coeff| {
                let mut vec = vec![Scalar::zero(); self.ambient];
                for (i, a) in coeff[..u].iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (c, x) in self.basis.row(i).iter().enumerate() {
                        if !x.is_zero() {
                            vec[c] += &(a * x);
                        }
                    }
                }
                vec
            })
            .collect();
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    /// Residue of `x` after eliminating this subspace's pivot coordinates;
    /// zero exactly when `x` is a member.
    pub fn reduce(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.ambient);
        let mut y = x.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if y[p].is_zero() {
                continue;
            }
            let c = y[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    y[j] -= &(&c * b);
                }
            }
        }
        y
    }

    pub fn member(&self, x: &[Scalar]) -> bool {
        self.reduce(x).iter().all(|e| e.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis_rows().all(|row| self.member(row)))
    }

    /// Coordinates of a member in the echelon basis; `None` if not a member.
    pub fn coords(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.member(x) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| x[p].clone()).collect())
    }

    /// Expands coordinates in the echelon basis back to ambient form.
    pub fn expand(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] += &(c * b);
                }
            }
        }
        out
    }

    /// Deterministic complement of `self` inside `sup`: the rows of `sup`
    /// that extend the echelon span, in order.
    pub fn complement_within(&self, sup: &Subspace) -> Result<Subspace> {
        self.check_ambient(sup)?;
        let mut acc: Vec<Vec<Scalar>> = self.basis_rows().map(|r| r.to_vec()).collect();
        let mut picked = Vec::new();
        let mut current = self.clone();
        for row in sup.basis_rows() {
            if current.member(row) {
                continue;
            }
            acc.push(row.to_vec());
            picked.push(row.to_vec());
            current = Subspace::from_rows(self.ambient, acc.clone());
        }
        Ok(Subspace::from_rows(self.ambient, picked))
    }

    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        self.basis.to_text_rows()
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as G;

    fn s(t: &str) -> G {
        t.parse().unwrap()
    }

    fn sp(ambient: usize, rows: &[&[&str]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|c| s(c)).collect())
                .collect(),
        )
    }

    #[test]
    fn axis_lattice() {
        let u = sp(2, &[&["1", "0"]]);
        let v = sp(2, &[&["0", "1"]]);
        assert!(u.sum(&v).unwrap().is_full());
        assert!(u.intersect(&v).unwrap().is_zero());
    }

    #[test]
    fn contained_intersection() {
        let u = sp(2, &[&["1", "1"]]);
        let v = Subspace::full(2);
        assert_eq!(u.intersect(&v).unwrap(), u);
        assert!(v.contains(&u).unwrap());
        assert!(!u.contains(&v).unwrap());
    }

    #[test]
    fn canonical_equality() {
        // Same plane described by two different spanning sets.
        let u = sp(3, &[&["1", "1", "0"], &["0", "2", "0"]]);
        let v = sp(3, &[&["1", "0", "0"], &["3", "1", "0"]]);
        assert_eq!(u, v);
        assert_eq!(u.sum(&v).unwrap(), u);
    }

    #[test]
    fn sum_commutes_as_values() {
        let u = sp(3, &[&["1", "i", "0"]]);
        let v = sp(3, &[&["0", "1", "2"]]);
        assert_eq!(u.sum(&v).unwrap(), v.sum(&u).unwrap());
    }

    #[test]
    fn dimension_formula_brute_force() {
        // dim U + dim V = dim(U+V) + dim(U/\V) checked against plain rank
        // computations on stacked generator matrices.
        let cases = vec![
            (
                sp(5, &[&["1", "0", "2", "0", "0"], &["0", "1", "0", "0", "1"]]),
                sp(5, &[&["1", "1", "2", "0", "1"], &["0", "0", "0", "1", "0"]]),
            ),
            (
                sp(5, &[&["1", "i", "0", "0", "0"]]),
                sp(5, &[&["i", "-1", "0", "0", "0"], &["0", "0", "1", "0", "0"]]),
            ),
        ];
        for (u, v) in cases {
            let sum = u.sum(&v).unwrap();
            let inter = u.intersect(&v).unwrap();
            assert_eq!(u.dim() + v.dim(), sum.dim() + inter.dim());
            let mut stacked: Vec<Vec<G>> = u.basis_rows().map(|r| r.to_vec()).collect();
            stacked.extend(v.basis_rows().map(|r| r.to_vec()));
            assert_eq!(Matrix::from_rows(stacked).rank(), sum.dim());
        }
    }

    #[test]
    fn member_and_coords_roundtrip() {
        let u = sp(3, &[&["1", "0", "i"], &["0", "1", "2"]]);
        let x = vec![s("2"), s("-1"), s("-2+2*i")];
        assert!(u.member(&x));
        let c = u.coords(&x).unwrap();
        assert_eq!(u.expand(&c), x);
        assert!(!u.member(&[s("0"), s("0"), s("1")]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(2);
        let v = Subspace::full(3);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
        assert!(u.contains(&v).is_err());
    }

    #[test]
    fn complement_within_full() {
        let u = sp(3, &[&["0", "1", "0"]]);
        let c = u.complement_within(&Subspace::full(3)).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(u.intersect(&c).unwrap().is_zero());
        assert!(u.sum(&c).unwrap().is_full());
    }
}
