//! Associative enveloping algebras of operator families and the
//! trace-form radical used to decide module semisimplicity without any
//! polynomial factoring.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// A composition-closed span of operators on an `space_dim`-dimensional
/// coordinate space. `span` lives in the vectorized operator space of
/// dimension `space_dim^2`; `ops` is the matching matrix basis.
pub struct OperatorAlgebra {
    pub space_dim: usize,
    pub gens: Vec<Matrix>,
    pub ops: Vec<Matrix>,
    pub span: Subspace,
    closed: bool,
}

impl OperatorAlgebra {
    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Recomputes the closure certificate by brute force over all pairs.
    pub fn verify_closure(&self) -> bool {
        self.ops.iter().all(|a| {
            self.ops
                .iter()
                .all(|b| self.span.member(&a.matmul(b).vectorize()))
        })
    }
}

/// Smallest composition-closed operator span containing the generators.
/// Fixed-point iteration: every accepted element is a word in the
/// generators and each is multiplied by every generator on both sides, so
/// the resulting span is the associative algebra they generate.
pub fn enveloping_algebra(space_dim: usize, gens: &[Matrix]) -> OperatorAlgebra {
    for g in gens {
        assert_eq!((g.rows, g.cols), (space_dim, space_dim), "generator shape");
    }
    let amb = space_dim * space_dim;
    let mut span = Subspace::zero(amb);
    let mut ops: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = Vec::new();
    let push = |m: Matrix, span: &mut Subspace, ops: &mut Vec<Matrix>, queue: &mut Vec<Matrix>| {
        if !span.insert_row(&m.vectorize()) {
            return;
        }
        ops.push(m.clone());
        queue.push(m);
    };
    let live: Vec<&Matrix> = gens.iter().filter(|g| !g.is_zero()).collect();
    for g in &live {
        push((*g).clone(), &mut span, &mut ops, &mut queue);
    }
    while let Some(m) = queue.pop() {
        for g in &live {
            push(m.matmul(g), &mut span, &mut ops, &mut queue);
            push(g.matmul(&m), &mut span, &mut ops, &mut queue);
        }
    }
    OperatorAlgebra {
        space_dim,
        gens: gens.to_vec(),
        ops,
        span,
        closed: true,
    }
}

/// Radical of the operator algebra by the trace form: the set of `a` with
/// `trace(a b) = 0` for every `b` in the algebra. In characteristic zero
/// this kernel is exactly the nilpotent radical, which the certificate
/// re-checks by powering every returned basis operator.
pub fn assoc_radical(alg: &OperatorAlgebra) -> Result<Vec<Matrix>> {
    let m = alg.dim();
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut gram = Matrix::zero(m, m);
    for a in 0..m {
        for b in a..m {
            let t = alg.ops[a].trace_of_product(&alg.ops[b]);
            *gram.at_mut(a, b) = t.clone();
            *gram.at_mut(b, a) = t;
        }
    }
    let kernel = gram.kernel();
    let mut out = Vec::with_capacity(kernel.dim());
    for coeff in kernel.basis_rows() {
        let mut op = Matrix::zero(alg.space_dim, alg.space_dim);
        for (k, c) in coeff.iter().enumerate() {
            if !c.is_zero() {
                op = op.add(&alg.ops[k].scale(c));
            }
        }
        if !op.pow_is_nilpotent() {
            return Err(Error::cert(
                "assoc_radical",
                "trace-form kernel contains a non-nilpotent operator",
            ));
        }
        out.push(op);
    }
    Ok(out)
}

/// Restriction of an ambient operator to an invariant subspace, expressed
/// in the subspace's echelon coordinates.
pub fn restrict_operator(op: &Matrix, v: &Subspace) -> Result<Matrix> {
    let m = v.dim();
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    for row in v.basis_rows() {
        let image = op.apply(row);
        let coords = v.coords(&image).ok_or(Error::NotInvariant)?;
        cols.push(coords);
    }
    Ok(Matrix::from_fn(m, m, |r, c| cols[c][r].clone()))
}

/// The enveloping algebra of the adjoint action of `l` on an invariant
/// subspace `v`, in `v`-coordinates.
pub fn ad_envelope_on(l: &LieAlgebra, v: &Subspace) -> Result<OperatorAlgebra> {
    let mut gens = Vec::new();
    for k in 0..l.dim() {
        let restricted = restrict_operator(&l.ad_basis(k), v)?;
        if !restricted.is_zero() {
            gens.push(restricted);
        }
    }
    Ok(enveloping_algebra(v.dim(), &gens))
}

/// A module over `l` (an ad-invariant subspace) is semisimple exactly
/// when the trace-form radical of its enveloping algebra vanishes. The
/// test is stable under extension of the base field, so a positive answer
/// here is a positive answer over the complex numbers.
pub fn module_is_semisimple(l: &LieAlgebra, v: &Subspace) -> Result<bool> {
    let env = ad_envelope_on(l, v)?;
    Ok(assoc_radical(&env)?.is_empty())
}

/// Burnside test: the action is absolutely irreducible exactly when the
/// enveloping algebra is the full operator algebra of the space.
pub fn module_is_abs_irreducible(l: &LieAlgebra, v: &Subspace) -> Result<bool> {
    if v.dim() == 0 {
        return Ok(false);
    }
    let env = ad_envelope_on(l, v)?;
    Ok(env.dim() == v.dim() * v.dim())
}
