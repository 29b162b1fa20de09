//! Quotients, induced algebras on subalgebras, and direct/semidirect
//! products. Every constructor revalidates the resulting tensor and the
//! claimed homomorphism properties.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{vec_sub, vec_to_text, Matrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Quotient by a verified ideal. The quotient basis is the set of
/// non-pivot ambient coordinates of the ideal's echelon basis, which makes
/// reports reproducible. Returns the quotient algebra, the projection and
/// a linear section with `projection . section = identity`.
pub fn quotient(l: &LieAlgebra, ideal: &Subspace) -> Result<(LieAlgebra, Matrix, Matrix)> {
    if !l.is_ideal(ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let d = l.dim();
    let free = ideal.non_pivots();
    let q = free.len();

    // projection: reduce modulo the ideal, then read off free coordinates.
    let mut proj = Matrix::zero(q, d);
    for k in 0..d {
        let reduced = ideal.reduce(&l.unit(k));
        for (r, &col) in free.iter().enumerate() {
            *proj.at_mut(r, k) = reduced[col].clone();
        }
    }
    // section: free coordinate r comes back as the ambient unit vector.
    let mut sect = Matrix::zero(d, q);
    for (r, &col) in free.iter().enumerate() {
        *sect.at_mut(col, r) = Scalar::one();
    }

    let apply_proj = |x: &[Scalar]| proj.apply(x);
    let mut c = vec![vec![vec![Scalar::zero(); q]; q]; q];
    for a in 0..q {
        for b in 0..q {
            let br = l.bracket(&sect.col_vec(a), &sect.col_vec(b));
            c[a][b] = apply_proj(&br);
        }
    }
    let labels = free.iter().map(|&k| format!("[{}]", l.labels()[k])).collect();
    let qalg = LieAlgebra::from_tensor(format!("{}/ideal", l.name), labels, c)?;

    // projection must be a Lie homomorphism and section a right inverse.
    for i in 0..d {
        for j in 0..d {
            let lhs = apply_proj(&l.bracket(&l.unit(i), &l.unit(j)));
            let rhs = qalg.bracket(&apply_proj(&l.unit(i)), &apply_proj(&l.unit(j)));
            if lhs != rhs {
                return Err(Error::cert(
                    "quotient",
                    format!("projection not a homomorphism at ({i},{j})"),
                ));
            }
        }
    }
    for r in 0..q {
        let mut e = vec![Scalar::zero(); q];
        e[r] = Scalar::one();
        if apply_proj(&sect.apply(&e)) != e {
            return Err(Error::cert("quotient", "section is not a right inverse"));
        }
    }
    Ok((qalg, proj, sect))
}

/// The algebra structure induced on a verified subalgebra, together with
/// the inclusion map from subalgebra coordinates to ambient coordinates.
pub fn induced_algebra(l: &LieAlgebra, sub: &Subspace) -> Result<(LieAlgebra, Matrix)> {
    if !l.is_subalgebra(sub)? {
        return Err(Error::NotASubalgebra);
    }
    let m = sub.dim();
    let mut c = vec![vec![vec![Scalar::zero(); m]; m]; m];
    for a in 0..m {
        for b in 0..m {
            let br = l.bracket(sub.basis_row(a), sub.basis_row(b));
            c[a][b] = sub
                .coords(&br)
                .ok_or_else(|| Error::cert("induced_algebra", "bracket escapes the subalgebra"))?;
        }
    }
    let labels = (0..m).map(|k| format!("u{k}")).collect();
    let alg = LieAlgebra::from_tensor(format!("{}|sub", l.name), labels, c)?;
    let incl = Matrix::from_fn(l.dim(), m, |r, col| sub.basis_row(col)[r].clone());
    Ok((alg, incl))
}

/// Block-diagonal direct product; each factor embeds as an ideal.
pub fn direct_product(name: impl Into<String>, factors: &[LieAlgebra]) -> Result<LieAlgebra> {
    let dim: usize = factors.iter().map(|f| f.dim()).sum();
    let mut labels = Vec::with_capacity(dim);
    for (idx, f) in factors.iter().enumerate() {
        for lab in f.labels() {
            labels.push(if factors.len() > 1 {
                format!("{lab}.{idx}")
            } else {
                lab.clone()
            });
        }
    }
    let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    let mut offset = 0;
    for f in factors {
        let d = f.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    c[offset + i][offset + j][offset + k] = f.structure_constant(i, j)[k].clone();
                }
            }
        }
        offset += d;
    }
    LieAlgebra::from_tensor(name, labels, c)
}

/// Offsets of each factor inside a direct product built by `direct_product`.
pub fn factor_blocks(factors: &[LieAlgebra]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for f in factors {
        out.push((offset, f.dim()));
        offset += f.dim();
    }
    out
}

/// Builds an algebra from a linearly independent family of square
/// matrices closed under commutators, expressing each commutator back in
/// the family's span.
pub fn algebra_from_matrices(
    name: impl Into<String>,
    labels: Vec<String>,
    mats: &[Matrix],
) -> Result<LieAlgebra> {
    let dim = mats.len();
    if dim == 0 {
        return LieAlgebra::new(name, 0, vec![], vec![]);
    }
    let flat = Matrix::from_fn(mats[0].rows * mats[0].cols, dim, |r, c| {
        mats[c].vectorize()[r].clone()
    });
    let mut table = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let comm = mats[i].matmul(&mats[j]).sub(&mats[j].matmul(&mats[i]));
            let coords = flat.solve(&comm.vectorize()).ok_or_else(|| {
                Error::InvalidData("matrix family not closed under commutators".into())
            })?;
            table.push((i, j, coords));
        }
    }
    LieAlgebra::new(name, dim, labels, table)
}

/// The same algebra presented in a new basis: column `k` of `t` is the
/// new basis vector `k` in old coordinates.
pub fn change_basis(l: &LieAlgebra, t: &Matrix) -> Result<LieAlgebra> {
    let d = l.dim();
    if t.rows != d || t.cols != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: t.rows,
        });
    }
    let inv = t
        .inverse()
        .ok_or_else(|| Error::InvalidData("basis change matrix is singular".into()))?;
    let mut c = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            c[i][j] = inv.apply(&l.bracket(&t.col_vec(i), &t.col_vec(j)));
        }
    }
    LieAlgebra::from_tensor(
        format!("{}'", l.name),
        (0..d).map(|k| format!("c{k}")).collect(),
        c,
    )
}

/// Semidirect product of `l1` acting on `l0` through `phi`, one matrix on
/// `l0` per basis vector of `l1`. Verifies that each `phi` value is a
/// derivation of `l0` and that `phi` is a Lie homomorphism, then builds
/// the bracket
/// `[(a;x),(b;y)] = ([a,b]; phi(a)y - phi(b)x + [x,y])`
/// and re-verifies that `l0` embeds as an ideal with quotient `l1`.
pub fn semidirect_product(
    name: impl Into<String>,
    l1: &LieAlgebra,
    l0: &LieAlgebra,
    phi: &[Matrix],
) -> Result<LieAlgebra> {
    let (d1, d0) = (l1.dim(), l0.dim());
    if phi.len() != d1 {
        return Err(Error::InvalidData(format!(
            "phi has {} matrices for a {}-dimensional acting algebra",
            phi.len(),
            d1
        )));
    }
    for (idx, m) in phi.iter().enumerate() {
        if m.rows != d0 || m.cols != d0 {
            return Err(Error::InvalidData(format!(
                "phi[{idx}] is {}x{}, expected {d0}x{d0}",
                m.rows, m.cols
            )));
        }
        // Derivation law D[x,y] = [Dx,y] + [x,Dy] on all basis pairs of l0.
        for i in 0..d0 {
            for j in 0..d0 {
                let lhs = m.apply(l0.structure_constant(i, j));
                let rhs = vec_sub(
                    &l0.bracket(&m.col_vec(i), &l0.unit(j)),
                    &l0.bracket(&m.col_vec(j), &l0.unit(i)),
                );
                if lhs != rhs {
                    return Err(Error::NotADerivation(idx));
                }
            }
        }
    }
    let phi_of = |a: &[Scalar]| -> Matrix {
        let mut m = Matrix::zero(d0, d0);
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                m = m.add(&phi[i].scale(ai));
            }
        }
        m
    };
    // phi must be a homomorphism into the derivations of l0.
    for i in 0..d1 {
        for j in (i + 1)..d1 {
            let lhs = phi_of(l1.structure_constant(i, j));
            let rhs = phi[i].matmul(&phi[j]).sub(&phi[j].matmul(&phi[i]));
            let delta = lhs.sub(&rhs);
            if !delta.is_zero() {
                return Err(Error::NotAHomomorphism {
                    i,
                    j,
                    residual: vec_to_text(&delta.vectorize()),
                });
            }
        }
    }

    let dim = d1 + d0;
    let mut labels: Vec<String> = l1.labels().to_vec();
    labels.extend(l0.labels().iter().cloned());
    let mut c = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for i in 0..d1 {
        for j in 0..d1 {
            for k in 0..d1 {
                c[i][j][k] = l1.structure_constant(i, j)[k].clone();
            }
        }
    }
    for i in 0..d1 {
        for y in 0..d0 {
            let img = phi[i].col_vec(y);
            for k in 0..d0 {
                c[i][d1 + y][d1 + k] = img[k].clone();
                c[d1 + y][i][d1 + k] = -img[k].clone();
            }
        }
    }
    for x in 0..d0 {
        for y in 0..d0 {
            for k in 0..d0 {
                c[d1 + x][d1 + y][d1 + k] = l0.structure_constant(x, y)[k].clone();
            }
        }
    }
    let alg = LieAlgebra::from_tensor(name, labels, c)?;

    // The acted factor must embed as an ideal with quotient matching l1 on
    // the chosen basis.
    let embedded = Subspace::from_rows(
        dim,
        (0..d0).map(|k| alg.unit(d1 + k)).collect::<Vec<_>>(),
    );
    if !alg.is_ideal(&embedded)? {
        return Err(Error::cert("semidirect_product", "acted factor is not an ideal"));
    }
    let (q, proj, _) = quotient(&alg, &embedded)?;
    if q.dim() != d1 {
        return Err(Error::cert("semidirect_product", "quotient dimension mismatch"));
    }
    for i in 0..d1 {
        for j in 0..d1 {
            let qc = q.bracket(&proj.apply(&alg.unit(i)), &proj.apply(&alg.unit(j)));
            let expected = proj.apply(&{
                let mut v = vec![Scalar::zero(); dim];
                for (k, x) in l1.structure_constant(i, j).iter().enumerate() {
                    v[k] = x.clone();
                }
                v
            });
            if qc != expected {
                return Err(Error::cert(
                    "semidirect_product",
                    "quotient by the acted factor does not match the acting algebra",
                ));
            }
        }
    }
    Ok(alg)
}
