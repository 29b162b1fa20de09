//! Exact splitting of algebras and modules along generalized eigenspaces
//! of centroid or commutant operators. Eigenvalues are searched only
//! inside the base field, by enumerating Gaussian-integer divisors of the
//! minimal polynomial's ends; when the search is exhausted without a full
//! split, the partial decomposition is returned as such.

use crate::algebra::LieAlgebra;
use crate::error::Result;
use crate::matrix::{vec_is_zero, Matrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use num::{BigInt, BigRational, Integer, One, Zero};

/// Monic minimal polynomial of a square matrix, as coefficients
/// `c[0] + c[1] t + ... + c[deg] t^deg` with `c[deg] = 1`.
pub fn minimal_polynomial(t: &Matrix) -> Vec<Scalar> {
    let m = t.rows;
    if m == 0 {
        return vec![Scalar::one()];
    }
    let mut power = Matrix::identity(m);
    let mut stacked: Vec<Vec<Scalar>> = Vec::new();
    loop {
        let target = power.matmul(t);
        // Solve for target as a combination of the powers collected so far.
        stacked.push(power.vectorize());
        let cols = stacked.len();
        let system = Matrix::from_fn(m * m, cols, |r, c| stacked[c][r].clone());
        if let Some(x) = system.solve(&target.vectorize()) {
            let mut coeffs: Vec<Scalar> = x.iter().map(|a| -a).collect();
            coeffs.push(Scalar::one());
            return coeffs;
        }
        power = target;
    }
}

pub fn poly_eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Divides `p` by `t - root` (exactly; the caller guarantees the root).
pub fn poly_deflate(p: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let deg = p.len() - 1;
    let mut out = vec![Scalar::zero(); deg];
    let mut carry = Scalar::zero();
    for k in (0..deg).rev() {
        carry = &p[k + 1] + &(&carry * root);
        out[k] = carry.clone();
    }
    out
}

fn gaussian_mul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gaussian_norm(a: &(BigInt, BigInt)) -> BigInt {
    &a.0 * &a.0 + &a.1 * &a.1
}

/// Exact division in the Gaussian integers; `None` if it does not divide.
fn gaussian_div(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> Option<(BigInt, BigInt)> {
    let n = gaussian_norm(b);
    if n.is_zero() {
        return None;
    }
    let conj = (b.0.clone(), -b.1.clone());
    let prod = gaussian_mul(a, &conj);
    if (&prod.0 % &n).is_zero() && (&prod.1 % &n).is_zero() {
        Some((&prod.0 / &n, &prod.1 / &n))
    } else {
        None
    }
}

const DIVISOR_CAP: usize = 4096;
const NORM_CAP_BITS: u64 = 48;

/// All divisors of a nonzero Gaussian integer up to units, by factoring
/// its norm. `None` when the norm is too large to factor cheaply.
fn gaussian_divisors(g: &(BigInt, BigInt)) -> Option<Vec<(BigInt, BigInt)>> {
    let norm = gaussian_norm(g);
    if norm.bits() > NORM_CAP_BITS {
        return None;
    }
    let mut n: u64 = norm.to_string().parse().ok()?;
    let mut rational_primes = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            rational_primes.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        rational_primes.push((n, 1));
    }

    // Gaussian primes above each rational prime dividing the norm.
    let mut gaussian_primes: Vec<(BigInt, BigInt)> = Vec::new();
    for &(p, _) in &rational_primes {
        if p == 2 {
            gaussian_primes.push((BigInt::one(), BigInt::one()));
        } else if p % 4 == 3 {
            gaussian_primes.push((BigInt::from(p), BigInt::zero()));
        } else {
            let mut a = 1u64;
            loop {
                let rest = p - a * a;
                let b = (rest as f64).sqrt() as u64;
                for bb in b.saturating_sub(1)..=b + 1 {
                    if a * a + bb * bb == p {
                        gaussian_primes.push((BigInt::from(a), BigInt::from(bb)));
                        gaussian_primes.push((BigInt::from(a), -BigInt::from(bb)));
                    }
                }
                if gaussian_primes
                    .iter()
                    .any(|q| gaussian_norm(q) == BigInt::from(p))
                {
                    break;
                }
                a += 1;
            }
        }
    }

    // Trial-divide g by the Gaussian primes to get its exact factorization.
    let mut rest = g.clone();
    let mut factors: Vec<((BigInt, BigInt), u32)> = Vec::new();
    for q in gaussian_primes {
        let mut e = 0u32;
        while let Some(next) = gaussian_div(&rest, &q) {
            rest = next;
            e += 1;
        }
        if e > 0 {
            factors.push((q, e));
        }
    }
    let mut divisors: Vec<(BigInt, BigInt)> = vec![(BigInt::one(), BigInt::zero())];
    for (q, e) in factors {
        let mut grown = Vec::new();
        for d in &divisors {
            let mut acc = d.clone();
            grown.push(acc.clone());
            for _ in 0..e {
                acc = gaussian_mul(&acc, &q);
                grown.push(acc.clone());
            }
        }
        divisors = grown;
        if divisors.len() > DIVISOR_CAP {
            return None;
        }
    }
    Some(divisors)
}

/// Distinct roots of a monic polynomial that lie in the Gaussian
/// rationals. `None` when divisor enumeration was capped; `Some` lists
/// every base-field root (the search is complete when it returns).
pub fn gaussian_rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut p = poly.to_vec();
    let mut roots = Vec::new();
    // Deflate zero roots first.
    while p.len() > 1 && p[0].is_zero() {
        if !roots.contains(&Scalar::zero()) {
            roots.push(Scalar::zero());
        }
        p = poly_deflate(&p, &Scalar::zero());
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    // Clear denominators: q(u) = den^(n-1) p(u/den) is monic over Z[i]
    // after scaling by the lcm of all coefficient denominators.
    let mut den = BigInt::one();
    for c in &p {
        den = den.lcm(c.re.denom());
        den = den.lcm(c.im.denom());
    }
    let deg = p.len() - 1;
    let scaled: Vec<(BigInt, BigInt)> = p
        .iter()
        .enumerate()
        .map(|(k, c)| {
            // coefficient of u^k picks up den^(deg - k)
            let mut f = BigInt::one();
            for _ in 0..(deg - k) {
                f = f * &den;
            }
            let re = (&c.re * BigRational::from_integer(f.clone())).to_integer();
            let im = (&c.im * BigRational::from_integer(f)).to_integer();
            (re, im)
        })
        .collect();
    let constant = &scaled[0];
    if constant.0.is_zero() && constant.1.is_zero() {
        // should not happen after deflation, but stay safe
        return Some(roots);
    }
    let divisors = gaussian_divisors(constant)?;
    let den_rat = BigRational::from_integer(den);
    let units = [
        Scalar::from_parts(1, 0),
        Scalar::from_parts(-1, 0),
        Scalar::from_parts(0, 1),
        Scalar::from_parts(0, -1),
    ];
    for d in divisors {
        for u in &units {
            let cand_int = Scalar::new(
                BigRational::from_integer(d.0.clone()),
                BigRational::from_integer(d.1.clone()),
            );
            let cand_int = &cand_int * u;
            let cand = Scalar::new(&cand_int.re / &den_rat, &cand_int.im / &den_rat);
            if roots.contains(&cand) {
                continue;
            }
            if poly_eval(&p, &cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    Some(roots)
}

/// Splits the coordinate space along the generalized eigenspaces of `t`
/// for its base-field eigenvalues, with one residual kernel piece when
/// the minimal polynomial has a factor without base-field roots.
/// Returns `None` if fewer than two pieces arise.
pub fn split_by_operator(t: &Matrix) -> Option<Vec<Subspace>> {
    let m = t.rows;
    let minpoly = minimal_polynomial(t);
    let roots = gaussian_rational_roots(&minpoly)?;
    if roots.is_empty() {
        return None;
    }
    let mut pieces = Vec::new();
    let mut residual = minpoly.clone();
    for root in &roots {
        let mut shifted = t.clone();
        for k in 0..m {
            *shifted.at_mut(k, k) -= root;
        }
        let mut power = shifted.clone();
        for _ in 1..m {
            power = power.matmul(&shifted);
        }
        let ker = power.kernel();
        if !ker.is_zero() {
            pieces.push(ker);
        }
        while poly_eval(&residual, root).is_zero() && residual.len() > 1 {
            residual = poly_deflate(&residual, root);
        }
    }
    if residual.len() > 1 {
        // Kernel of the rootless factor evaluated at t.
        let mut acc = Matrix::zero(m, m);
        let mut power = Matrix::identity(m);
        for c in &residual {
            if !c.is_zero() {
                acc = acc.add(&power.scale(c));
            }
            power = power.matmul(t);
        }
        let ker = acc.kernel();
        if !ker.is_zero() {
            pieces.push(ker);
        }
    }
    let total: usize = pieces.iter().map(|p| p.dim()).sum();
    if total != m || pieces.len() < 2 {
        return None;
    }
    Some(pieces)
}

/// Two-sided centroid: all `T` with `T[x,y] = [Tx,y] = [x,Ty]`. Either
/// condition, quantified over all pairs, says exactly that `T` commutes
/// with every adjoint operator, so the centroid is the commutant of the
/// adjoint family. Generalized eigenspaces of centroid elements are
/// ideals with pairwise zero brackets, which the summand splitters rely
/// on.
pub fn centroid(l: &LieAlgebra) -> Vec<Matrix> {
    let ads: Vec<Matrix> = (0..l.dim())
        .map(|k| l.ad_basis(k))
        .filter(|m| !m.is_zero())
        .collect();
    commutant(l.dim(), &ads)
}

/// Commutant of a family of operators on an `m`-dimensional space: the
/// joint kernel of `T -> T op - op T`, one sparse constraint row per
/// operator and matrix position.
pub fn commutant(m: usize, ops: &[Matrix]) -> Vec<Matrix> {
    let unknowns = m * m;
    let identity_basis = || {
        (0..unknowns)
            .map(|k| {
                let mut v = vec![Scalar::zero(); unknowns];
                v[k] = Scalar::one();
                Matrix::from_vector(m, m, v)
            })
            .collect()
    };
    if ops.is_empty() {
        return identity_basis();
    }
    let mut rows = Vec::new();
    for op in ops {
        for a in 0..m {
            for b in 0..m {
                // (T op - op T)[a][b] = 0
                let mut row = vec![Scalar::zero(); unknowns];
                for k in 0..m {
                    let c = op.at(k, b);
                    if !c.is_zero() {
                        row[a * m + k] += c;
                    }
                    let c = op.at(a, k);
                    if !c.is_zero() {
                        row[k * m + b] -= c;
                    }
                }
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return identity_basis();
    }
    Matrix::from_rows(rows)
        .kernel()
        .basis_rows()
        .map(|flat| Matrix::from_vector(m, m, flat.to_vec()))
        .collect()
}

/// Candidate operators to try when hunting for a splitting element:
/// basis members, pairwise sums, and a few fixed small combinations.
pub fn splitting_candidates(basis: &[Matrix]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = basis.to_vec();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            out.push(basis[i].add(&basis[j]));
        }
        if out.len() > 64 {
            break;
        }
    }
    let weights = [2i64, 3, 5, 7, 11, 13];
    for shift in 0..3usize {
        if basis.is_empty() {
            break;
        }
        let mut acc = Matrix::zero(basis[0].rows, basis[0].cols);
        for (k, b) in basis.iter().enumerate() {
            let w = Scalar::from_int(weights[(k + shift) % weights.len()]);
            acc = acc.add(&b.scale(&w));
        }
        out.push(acc);
    }
    out
}

/// Splits an ambient-subspace piece of `l` into ideal direct summands by
/// centroid eigenspaces, recursively. The boolean is false when some
/// piece might still be decomposable but no base-field split was found:
/// a piece is certified indecomposable when its centroid modulo the
/// trace-form radical is one-dimensional, because every idempotent lifts
/// from that quotient.
pub fn split_ideal_summands(l: &LieAlgebra, piece: &Subspace) -> Result<(Vec<Subspace>, bool)> {
    if piece.is_zero() {
        return Ok((Vec::new(), true));
    }
    if piece.dim() == 1 {
        return Ok((vec![piece.clone()], true));
    }
    let (alg, _) = crate::products::induced_algebra(l, piece)?;
    if alg.is_abelian() {
        // Maximal split: one line per echelon basis row.
        let lines = piece
            .basis_rows()
            .map(|r| Subspace::line(l.dim(), r.to_vec()))
            .collect();
        return Ok((lines, true));
    }
    let cent = centroid(&alg);
    if cent.len() <= 1 {
        return Ok((vec![piece.clone()], true));
    }
    for t in splitting_candidates(&cent) {
        if let Some(parts) = split_by_operator(&t) {
            let mut pieces = Vec::new();
            let mut complete = true;
            for part in parts {
                let ambient_rows: Vec<Vec<Scalar>> =
                    part.basis_rows().map(|row| piece.expand(row)).collect();
                let sub = Subspace::from_rows(l.dim(), ambient_rows);
                let (inner, ok) = split_ideal_summands(l, &sub)?;
                complete &= ok;
                pieces.extend(inner);
            }
            return Ok((pieces, complete));
        }
    }
    let certified = centroid_has_only_trivial_idempotents(alg.dim(), &cent)?;
    Ok((vec![piece.clone()], certified))
}

/// The centroid is an associative operator algebra containing the
/// identity; its idempotents are all trivial exactly when the quotient by
/// the trace-form radical is the scalars.
fn centroid_has_only_trivial_idempotents(dim: usize, cent: &[Matrix]) -> Result<bool> {
    let env = crate::envelope::enveloping_algebra(dim, cent);
    let radical = crate::envelope::assoc_radical(&env)?;
    Ok(env.dim() - radical.len() == 1)
}

/// Splits a module (given by its restricted operators) into invariant
/// pieces along commutant eigenspaces. Pieces are in module coordinates.
pub fn split_module(m: usize, ops: &[Matrix]) -> (Vec<Subspace>, bool) {
    if m == 0 {
        return (Vec::new(), true);
    }
    let comm = commutant(m, ops);
    if comm.len() <= 1 {
        // commutant is the scalars: absolutely irreducible
        return (vec![Subspace::full(m)], true);
    }
    for t in splitting_candidates(&comm) {
        if let Some(parts) = split_by_operator(&t) {
            let mut pieces = Vec::new();
            let mut complete = true;
            for part in parts {
                let restricted: Result<Vec<Matrix>> = ops
                    .iter()
                    .map(|op| crate::envelope::restrict_operator(op, &part))
                    .collect();
                let Ok(restricted) = restricted else {
                    return (vec![Subspace::full(m)], false);
                };
                let (inner, ok) = split_module(part.dim(), &restricted);
                complete &= ok;
                for sub in inner {
                    let rows: Vec<Vec<Scalar>> =
                        sub.basis_rows().map(|row| part.expand(row)).collect();
                    pieces.push(Subspace::from_rows(m, rows));
                }
            }
            return (pieces, complete);
        }
    }
    (vec![Subspace::full(m)], false)
}
