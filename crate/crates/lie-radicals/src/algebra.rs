//! Finite-dimensional Lie algebras presented by structure constants over
//! the Gaussian rationals, with bracket calculus on subspaces.

use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, vec_to_text, Matrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// A Lie algebra given by its structure-constant tensor: `c[i][j]` is the
/// coordinate vector of the bracket of basis vectors `i` and `j`.
/// Construction validates antisymmetry and the Jacobi identity
/// exhaustively, so a value of this type is always an actual Lie algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    dim: usize,
    labels: Vec<String>,
    c: Vec<Vec<Vec<Scalar>>>,
}

impl LieAlgebra {
    /// Builds and validates an algebra from a bracket table. Entries may
    /// be given for either orientation of a pair; missing pairs are zero
    /// and the other orientation is inferred by antisymmetry.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        labels: Vec<String>,
        table: Vec<(usize, usize, Vec<Scalar>)>,
    ) -> Result<Self> {
        if labels.len() != dim {
            return Err(Error::InvalidData(format!(
                "{} labels for dimension {}",
                labels.len(),
                dim
            )));
        }
        let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        let mut seen = vec![vec![false; dim]; dim];
        for (i, j, v) in table {
            if i >= dim || j >= dim || v.len() != dim {
                return Err(Error::InvalidData(format!(
                    "bracket entry [{i},{j}] out of range for dimension {dim}"
                )));
            }
            if i == j {
                if !vec_is_zero(&v) {
                    return Err(Error::InvalidData(format!(
                        "nonzero bracket [{i},{i}] violates antisymmetry"
                    )));
                }
                continue;
            }
            if seen[i][j] {
                return Err(Error::InvalidData(format!(
                    "duplicate bracket entry [{i},{j}]"
                )));
            }
            if seen[j][i] {
                let expected: Vec<Scalar> = c[j][i].iter().map(|x| -x).collect();
                if expected != v {
                    return Err(Error::InconsistentEntry { i, j });
                }
            }
            seen[i][j] = true;
            c[i][j] = v.clone();
            if !seen[j][i] {
                c[j][i] = v.iter().map(|x| -x).collect();
            }
        }
        let alg = LieAlgebra {
            name: name.into(),
            dim,
            labels,
            c,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Constructor for tensors that are valid by construction (quotients,
    /// induced algebras, products). Still validates, so internal plumbing
    /// cannot silently produce a non-Lie table.
    pub(crate) fn from_tensor(
        name: impl Into<String>,
        labels: Vec<String>,
        c: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let dim = labels.len();
        let alg = LieAlgebra {
            name: name.into(),
            dim,
            labels,
            c,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            if !vec_is_zero(&self.c[i][i]) {
                return Err(Error::InvalidData(format!(
                    "nonzero bracket [{i},{i}] violates antisymmetry"
                )));
            }
            for j in (i + 1)..d {
                for k in 0..d {
                    let sum = &self.c[i][j][k] + &self.c[j][i][k];
                    if !sum.is_zero() {
                        return Err(Error::InvalidData(format!(
                            "antisymmetry fails at [{i},{j}] coordinate {k}"
                        )));
                    }
                }
            }
        }
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let mut residual = self.bracket(&self.c[i][j], &self.unit(k));
                    let t2 = self.bracket(&self.c[j][k], &self.unit(i));
                    let t3 = self.bracket(&self.c[k][i], &self.unit(j));
                    for r in 0..d {
                        residual[r] += &t2[r];
                        residual[r] += &t3[r];
                    }
                    if !vec_is_zero(&residual) {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            residual: vec_to_text(&residual),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &[Scalar] {
        &self.c[i][j]
    }

    pub fn unit(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[k] = Scalar::one();
        v
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.dim)
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.c[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    /// The adjoint operator of `x` as a matrix acting on coordinates.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| {
            let mut v = Scalar::zero();
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() && !self.c[i][c][r].is_zero() {
                    v += &(xi * &self.c[i][c][r]);
                }
            }
            v
        })
    }

    pub fn ad_basis(&self, k: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.c[k][c][r].clone())
    }

    fn check_space(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Span of all brackets `[u, v]` over basis vectors of the inputs.
    pub fn bracket_spaces(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_space(u)?;
        self.check_space(v)?;
        let mut rows = Vec::with_capacity(u.dim() * v.dim());
        for x in u.basis_rows() {
            for y in v.basis_rows() {
                let b = self.bracket(x, y);
                if !vec_is_zero(&b) {
                    rows.push(b);
                }
            }
        }
        Ok(Subspace::from_rows(self.dim, rows))
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        self.bracket_spaces(&self.whole(), &self.whole())
            .expect("whole space matches ambient")
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        let b = self.bracket_spaces(u, u)?;
        u.contains(&b)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        let b = self.bracket_spaces(&self.whole(), u)?;
        u.contains(&b)
    }

    pub fn is_abelian_space(&self, u: &Subspace) -> Result<bool> {
        Ok(self.bracket_spaces(u, u)?.is_zero())
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_subalgebra().is_zero()
    }

    /// Basis of the full derivation space: all matrices `D` with
    /// `D[x,y] = [Dx,y] + [x,Dy]`, found by one linear solve in the
    /// `dim^2` matrix entries.
    pub fn derivation_space(&self) -> Vec<Matrix> {
        let d = self.dim;
        if d == 0 {
            return Vec::new();
        }
        let unknowns = d * d;
        let mut rows = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                for r in 0..d {
                    let mut row = vec![Scalar::zero(); unknowns];
                    // D applied to [b_i, b_j], coordinate r.
                    for k in 0..d {
                        if !self.c[i][j][k].is_zero() {
                            row[r * d + k] += &self.c[i][j][k];
                        }
                    }
                    // minus [D b_i, b_j] and [b_i, D b_j].
                    for s in 0..d {
                        if !self.c[s][j][r].is_zero() {
                            row[s * d + i] -= &self.c[s][j][r];
                        }
                        if !self.c[i][s][r].is_zero() {
                            row[s * d + j] -= &self.c[i][s][r];
                        }
                    }
                    if !vec_is_zero(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let system = if rows.is_empty() {
            Matrix::zero(1, unknowns)
        } else {
            Matrix::from_rows(rows)
        };
        system
            .kernel()
            .basis_rows()
            .map(|flat| Matrix::from_vector(d, d, flat.to_vec()))
            .collect()
    }

    /// An ideal is characteristic when it is invariant under every
    /// derivation, not only the inner ones.
    pub fn is_characteristic(&self, u: &Subspace) -> Result<bool> {
        self.check_space(u)?;
        if !self.is_ideal(u)? {
            return Ok(false);
        }
        for der in self.derivation_space() {
            for row in u.basis_rows() {
                if !u.member(&der.apply(row)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn generated_closure(
        &self,
        seed: &[Vec<Scalar>],
        step: impl Fn(&LieAlgebra, &Subspace) -> Result<Subspace>,
    ) -> Result<Subspace> {
        let mut current = Subspace::from_rows(self.dim, seed.to_vec());
        loop {
            let grown = current.sum(&step(self, &current)?)?;
            if grown.dim() == current.dim() {
                return Ok(current);
            }
            current = grown;
        }
    }

    /// Least subalgebra containing the given vectors.
    pub fn generated_subalgebra(&self, seed: &[Vec<Scalar>]) -> Result<Subspace> {
        self.generated_closure(seed, |alg, u| alg.bracket_spaces(u, u))
    }

    /// Least ideal containing the given vectors.
    pub fn generated_ideal(&self, seed: &[Vec<Scalar>]) -> Result<Subspace> {
        self.generated_closure(seed, |alg, u| alg.bracket_spaces(&alg.whole(), u))
    }

    /// Kernel of `x -> ad(x)`.
    pub fn centre(&self) -> Subspace {
        self.centralizer(&self.whole())
            .expect("whole space matches ambient")
    }

    /// All `a` with `[a, u] = 0` for every `u` in the given subspace.
    pub fn centralizer(&self, u: &Subspace) -> Result<Subspace> {
        self.check_space(u)?;
        let d = self.dim;
        if u.is_zero() || d == 0 {
            return Ok(self.whole());
        }
        let mut rows = Vec::new();
        for y in u.basis_rows() {
            // [x, y] = 0 gives d linear conditions on x.
            for r in 0..d {
                let mut row = vec![Scalar::zero(); d];
                for i in 0..d {
                    let mut v = Scalar::zero();
                    for (j, yj) in y.iter().enumerate() {
                        if !yj.is_zero() && !self.c[i][j][r].is_zero() {
                            v += &(yj * &self.c[i][j][r]);
                        }
                    }
                    row[i] = v;
                }
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Ok(self.whole());
        }
        Ok(Matrix::from_rows(rows).kernel())
    }

    /// Killing form matrix: `k[i][j] = trace(ad b_i . ad b_j)`.
    pub fn killing_form(&self) -> Matrix {
        let d = self.dim;
        let ads: Vec<Matrix> = (0..d).map(|k| self.ad_basis(k)).collect();
        let mut k = Matrix::zero(d, d);
        for i in 0..d {
            for j in i..d {
                let t = ads[i].trace_of_product(&ads[j]);
                *k.at_mut(i, j) = t.clone();
                *k.at_mut(j, i) = t;
            }
        }
        k
    }

    pub fn killing_is_nondegenerate(&self) -> bool {
        self.killing_form().rank() == self.dim
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra({:?}, dim {})", self.name, self.dim)
    }
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|k| format!("b{k}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::GaussianRational as G;

    fn s(t: &str) -> G {
        t.parse().unwrap()
    }

    fn heis() -> LieAlgebra {
        catalog::build("heisenberg3", &[]).unwrap()
    }

    fn sl2() -> LieAlgebra {
        catalog::build("sl", &[2]).unwrap()
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<LieAlgebra>();
        assert_send_sync::<Subspace>();
        assert_send_sync::<Matrix>();
        assert_send_sync::<crate::combinators::Preradical>();
    }

    #[test]
    fn heisenberg_is_valid() {
        let h = heis();
        assert_eq!(h.dim(), 3);
        // [x, y] = z
        assert_eq!(h.bracket(&h.unit(0), &h.unit(1)), h.unit(2));
    }

    #[test]
    fn abelian_from_empty_table() {
        let a = LieAlgebra::new("ab3", 3, default_labels(3), vec![]).unwrap();
        assert!(a.is_abelian());
    }

    #[test]
    fn jacobi_violation_is_reported_with_residual() {
        // [x,y]=z, [x,z]=y, [y,z]=y: the (x,y,z) Jacobi sum is
        // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 + [y,x] + [-y,y] = -z.
        let labels = vec!["x".into(), "y".into(), "z".into()];
        let table = vec![
            (0, 1, vec![s("0"), s("0"), s("1")]),
            (0, 2, vec![s("0"), s("1"), s("0")]),
            (1, 2, vec![s("0"), s("1"), s("0")]),
        ];
        match LieAlgebra::new("bad", 3, labels, table) {
            Err(Error::JacobiViolation { i, j, k, residual }) => {
                assert_eq!((i, j, k), (0, 1, 2));
                assert_eq!(residual, vec!["0", "0", "-1"]);
            }
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_pair_is_rejected() {
        let table = vec![
            (0, 1, vec![s("0"), s("0"), s("1")]),
            (1, 0, vec![s("0"), s("0"), s("1")]),
        ];
        let got = LieAlgebra::new("bad", 3, default_labels(3), table);
        assert!(matches!(got, Err(Error::InconsistentEntry { i: 1, j: 0 })));
    }

    #[test]
    fn bracket_spaces_examples() {
        let h = heis();
        let derived = h.derived_subalgebra();
        assert_eq!(derived.dim(), 1);
        assert!(derived.member(&h.unit(2)));

        let a = LieAlgebra::new("ab2", 2, default_labels(2), vec![]).unwrap();
        assert!(a.derived_subalgebra().is_zero());

        assert!(sl2().derived_subalgebra().is_full());
    }

    #[test]
    fn centre_examples() {
        let h = heis();
        let z = h.centre();
        assert_eq!(z.dim(), 1);
        assert!(z.member(&h.unit(2)));
        assert!(sl2().centre().is_zero());
        let a = LieAlgebra::new("ab4", 4, default_labels(4), vec![]).unwrap();
        assert!(a.centre().is_full());
    }

    #[test]
    fn subalgebra_vs_ideal_in_sl2() {
        // span{e} is a subalgebra but not an ideal: [f,e] = -h lies outside.
        let l = sl2();
        let e = Subspace::line(3, l.unit(1));
        assert!(l.is_subalgebra(&e).unwrap());
        assert!(!l.is_ideal(&e).unwrap());
    }

    #[test]
    fn characteristic_examples() {
        let h = heis();
        let z = h.centre();
        assert!(h.is_ideal(&z).unwrap());
        assert!(h.is_characteristic(&z).unwrap());

        // In an abelian algebra every line is an ideal but only {0} and the
        // whole algebra are derivation-invariant.
        let a = LieAlgebra::new("ab2", 2, default_labels(2), vec![]).unwrap();
        let line = Subspace::line(2, a.unit(0));
        assert!(a.is_ideal(&line).unwrap());
        assert!(!a.is_characteristic(&line).unwrap());
        assert!(a.is_characteristic(&a.whole()).unwrap());
        assert!(a.is_characteristic(&a.zero_subspace()).unwrap());
    }

    #[test]
    fn perfect_ideal_is_characteristic() {
        // [J, J] = J forces derivation invariance; check on sl2 inside gl2.
        let g = catalog::build("gl", &[2]).unwrap();
        let sl = g.derived_subalgebra();
        assert_eq!(g.bracket_spaces(&sl, &sl).unwrap(), sl);
        assert!(g.is_characteristic(&sl).unwrap());
    }

    #[test]
    fn generated_subalgebra_and_ideal() {
        let l = sl2();
        // e and f generate all of sl2 since [e,f] = h.
        let gen = l
            .generated_subalgebra(&[l.unit(1), l.unit(2)])
            .unwrap();
        assert!(gen.is_full());
        assert!(l.generated_subalgebra(&[]).unwrap().is_zero());

        let h = heis();
        let ideal = h.generated_ideal(&[h.unit(0)]).unwrap();
        assert_eq!(ideal.dim(), 2);
        assert!(ideal.member(&h.unit(2)));
    }

    #[test]
    fn killing_form_values() {
        // For sl2 with basis (h, e, f), ad h has eigenvalues 0, 2, -2.
        let k = sl2().killing_form();
        assert_eq!(*k.at(0, 0), s("8"));
        assert_eq!(k.rank(), 3);

        assert!(heis().killing_form().is_zero());
        let a = LieAlgebra::new("ab2", 2, default_labels(2), vec![]).unwrap();
        assert!(a.killing_form().is_zero());
    }

    #[test]
    fn ad_is_a_derivation_homomorphism() {
        // ad([a,b]) = ad(a)ad(b) - ad(b)ad(a) on all basis pairs.
        for l in [heis(), sl2()] {
            for i in 0..l.dim() {
                for j in 0..l.dim() {
                    let lhs = l.ad(&l.bracket(&l.unit(i), &l.unit(j)));
                    let (a, b) = (l.ad_basis(i), l.ad_basis(j));
                    let rhs = a.matmul(&b).sub(&b.matmul(&a));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn characteristic_preimage_of_characteristic_is_characteristic() {
        // Pull a characteristic ideal of a quotient back through the
        // projection of a characteristic ideal: still characteristic.
        let t3 = catalog::build("t", &[3]).unwrap();
        let e13 = Subspace::line(6, t3.unit(t3.labels().iter().position(|l| l == "e13").unwrap()));
        assert!(t3.is_characteristic(&e13).unwrap());
        let (q, _, sect) = crate::products::quotient(&t3, &e13).unwrap();
        let upstairs = q.derived_subalgebra();
        assert!(q.is_characteristic(&upstairs).unwrap());
        let mut pre = e13.clone();
        for row in upstairs.basis_rows() {
            pre.insert_row(&sect.apply(row));
        }
        assert!(t3.is_characteristic(&pre).unwrap());
    }

    #[test]
    fn centralizer_of_centre_is_whole() {
        let h = heis();
        let z = h.centre();
        assert!(h.centralizer(&z).unwrap().is_full());
        // Centralizer of span{e} in borel2 is span{e} itself.
        let b = catalog::build("borel2", &[]).unwrap();
        let e = Subspace::line(2, b.unit(1));
        assert_eq!(b.centralizer(&e).unwrap(), e);
    }
}
