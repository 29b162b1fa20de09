//! Levi decomposition by iterated linear lifting modulo the derived
//! series of the solvable radical, and the largest semisimple ideal.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{vec_sub, Matrix};
use crate::products::{induced_algebra, quotient};
use crate::radicals::solvable_radical;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// A verified splitting of the algebra into a semisimple subalgebra and
/// its solvable radical.
#[derive(Clone, Debug)]
pub struct LeviWitness {
    pub levi: Subspace,
    pub radical: Subspace,
}

impl LeviWitness {
    /// Re-runs the full invariant checklist against the algebra.
    pub fn verify(&self, l: &LieAlgebra) -> Result<()> {
        if !l.is_subalgebra(&self.levi)? {
            return Err(Error::cert("levi", "levi part is not a subalgebra"));
        }
        if !self.levi.intersect(&self.radical)?.is_zero() {
            return Err(Error::cert("levi", "levi part meets the radical"));
        }
        if self.levi.sum(&self.radical)?.dim() != l.dim() {
            return Err(Error::cert("levi", "parts do not span"));
        }
        if !self.levi.is_zero() {
            let (s, _) = induced_algebra(l, &self.levi)?;
            if !s.killing_is_nondegenerate() {
                return Err(Error::cert("levi", "levi part is not semisimple"));
            }
        }
        Ok(())
    }
}

/// Lifts a complement of an abelian radical to a subalgebra: one linear
/// solve for the correction terms, consistent because the obstruction is
/// a coboundary for a semisimple quotient.
fn lift_over_abelian_radical(l: &LieAlgebra, rad: &Subspace) -> Result<Subspace> {
    let d = l.dim();
    let free = rad.non_pivots();
    let q = free.len();
    let r = rad.dim();
    if q == 0 {
        return Ok(l.zero_subspace());
    }
    let (qalg, proj, _) = quotient(l, rad)?;
    let lift_basis: Vec<Vec<Scalar>> = free.iter().map(|&k| l.unit(k)).collect();

    // Unknown corrections gamma[a] in rad-coordinates, one per lift basis
    // vector. Equations per pair a < b:
    //   [la + ga, lb + gb] = sum_c mu_c (lc + gc)
    // with mu the quotient bracket; gamma terms enter linearly because
    // the radical is abelian.
    let unknowns = q * r;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for a in 0..q {
        for b in (a + 1)..q {
            let mu = qalg.bracket(&proj.apply(&lift_basis[a]), &proj.apply(&lift_basis[b]));
            // defect = sum_c mu_c l_c - [l_a, l_b]  (a radical member)
            let mut defect = vec![Scalar::zero(); d];
            for (c, m) in mu.iter().enumerate() {
                if !m.is_zero() {
                    for (j, x) in lift_basis[c].iter().enumerate() {
                        if !x.is_zero() {
                            defect[j] += &(m * x);
                        }
                    }
                }
            }
            let defect = vec_sub(&defect, &l.bracket(&lift_basis[a], &lift_basis[b]));
            let defect_coords = rad
                .coords(&defect)
                .ok_or_else(|| Error::cert("levi", "bracket defect escapes the radical"))?;

            // row block: [l_a, gamma_b] - [l_b, gamma_a] - sum_c mu_c gamma_c
            for out in 0..r {
                let mut row = vec![Scalar::zero(); unknowns];
                for t in 0..r {
                    let br_a = l.bracket(&lift_basis[a], rad.basis_row(t));
                    let ca = rad.coords(&br_a).ok_or(Error::NotAnIdeal)?;
                    row[b * r + t] += &ca[out];
                    let br_b = l.bracket(&lift_basis[b], rad.basis_row(t));
                    let cb = rad.coords(&br_b).ok_or(Error::NotAnIdeal)?;
                    row[a * r + t] -= &cb[out];
                }
                for c in 0..q {
                    if !mu[c].is_zero() {
                        row[c * r + out] -= &mu[c];
                    }
                }
                rows.push(row);
                rhs.push(defect_coords[out].clone());
            }
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::from_rows(d, lift_basis));
    }
    let system = Matrix::from_rows(rows);
    let gamma = system
        .solve(&rhs)
        .ok_or_else(|| Error::cert("levi", "lifting system inconsistent"))?;
    let rows: Vec<Vec<Scalar>> = (0..q)
        .map(|a| {
            let coords: Vec<Scalar> = gamma[a * r..(a + 1) * r].to_vec();
            let corr = rad.expand(&coords);
            lift_basis[a]
                .iter()
                .zip(&corr)
                .map(|(x, y)| x + y)
                .collect()
        })
        .collect();
    Ok(Subspace::from_rows(d, rows))
}

/// Levi decomposition: a semisimple complement of the solvable radical,
/// found by lifting along the derived series of the radical. Every
/// invariant of the witness is re-verified before returning.
pub fn levi_decomposition(l: &LieAlgebra) -> Result<LeviWitness> {
    let rad = solvable_radical(l)?;
    let levi = levi_complement(l, &rad)?;
    let witness = LeviWitness {
        levi,
        radical: rad,
    };
    witness.verify(l)?;
    Ok(witness)
}

fn levi_complement(l: &LieAlgebra, rad: &Subspace) -> Result<Subspace> {
    if rad.is_zero() {
        return Ok(l.whole());
    }
    if rad.is_full() {
        return Ok(l.zero_subspace());
    }
    let derived_rad = l.bracket_spaces(rad, rad)?;
    if derived_rad.is_zero() {
        return lift_over_abelian_radical(l, rad);
    }
    // Reduce modulo [rad, rad]: the quotient has an abelian radical; pull
    // the complement back and recurse inside the preimage, whose radical
    // is [rad, rad] with strictly smaller derived length.
    let (qalg, proj, sect) = quotient(l, &derived_rad)?;
    let rad_image = {
        let rows: Vec<Vec<Scalar>> = rad.basis_rows().map(|row| proj.apply(row)).collect();
        Subspace::from_rows(qalg.dim(), rows)
    };
    let upstairs = lift_over_abelian_radical(&qalg, &rad_image)?;
    let mut pre_rows: Vec<Vec<Scalar>> =
        upstairs.basis_rows().map(|row| sect.apply(row)).collect();
    pre_rows.extend(derived_rad.basis_rows().map(|r| r.to_vec()));
    let preimage = Subspace::from_rows(l.dim(), pre_rows);
    let (p_alg, incl) = induced_algebra(l, &preimage)?;
    let inner_rad = {
        // the radical of the preimage is [rad, rad]
        let rows: Vec<Vec<Scalar>> = derived_rad
            .basis_rows()
            .map(|row| {
                preimage
                    .coords(row)
                    .expect("derived radical lies in the preimage")
            })
            .collect();
        Subspace::from_rows(p_alg.dim(), rows)
    };
    let inner_levi = levi_complement(&p_alg, &inner_rad)?;
    let rows: Vec<Vec<Scalar>> = inner_levi
        .basis_rows()
        .map(|row| incl.apply(row))
        .collect();
    Ok(Subspace::from_rows(l.dim(), rows))
}

/// The largest semisimple ideal: the derived subalgebra of the
/// centralizer of the solvable radical. Certified to be an ideal with
/// nondegenerate Killing form meeting the radical trivially.
pub fn largest_semisimple_ideal(l: &LieAlgebra) -> Result<Subspace> {
    let rad = solvable_radical(l)?;
    let m = l.centralizer(&rad)?;
    let s = l.bracket_spaces(&m, &m)?;
    if !l.is_ideal(&s)? {
        return Err(Error::cert("largest_semisimple_ideal", "result not an ideal"));
    }
    if !s.is_zero() {
        let (alg, _) = induced_algebra(l, &s)?;
        if !alg.killing_is_nondegenerate() {
            return Err(Error::cert(
                "largest_semisimple_ideal",
                "induced Killing form degenerate",
            ));
        }
    }
    if !s.intersect(&rad)?.is_zero() {
        return Err(Error::cert(
            "largest_semisimple_ideal",
            "result meets the solvable radical",
        ));
    }
    Ok(s)
}
