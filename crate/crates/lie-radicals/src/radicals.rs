//! Classical and maximal-subalgebra radicals: the solvable radical, the
//! nilradical, the Jacobson and Frattini ideals, the perfect core of the
//! derived and lower central series, and the index pair that measures how
//! many passes each ideal needs to vanish.
//!
//! Every radical here returns a certified answer: the certificate is
//! re-checked on each call and a breach is an error, never a value.

use crate::algebra::LieAlgebra;
use crate::envelope::{ad_envelope_on, assoc_radical, enveloping_algebra};
use crate::error::{Error, Result};
use crate::matrix::{vec_is_zero, Matrix};
use crate::products::{induced_algebra, quotient};
use crate::scalar::Scalar;
use crate::series::{derived_series, lower_central_series, solvability_index_of, subspace_is_nilpotent};
use crate::subspace::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest solvable ideal, computed as the Killing-orthogonal complement
/// of the derived subalgebra. The certificate checks that the result is a
/// solvable ideal and that the quotient has nondegenerate Killing form.
pub fn solvable_radical(l: &LieAlgebra) -> Result<Subspace> {
    let d = l.dim();
    let derived = l.derived_subalgebra();
    let rad = if derived.is_zero() {
        l.whole()
    } else {
        let killing = l.killing_form();
        let rows: Vec<Vec<Scalar>> = derived
            .basis_rows()
            .map(|y| {
                (0..d)
                    .map(|j| {
                        let mut v = Scalar::zero();
                        for (k, yk) in y.iter().enumerate() {
                            if !yk.is_zero() && !killing.at(j, k).is_zero() {
                                v += &(yk * killing.at(j, k));
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows).kernel()
    };

    if !l.is_ideal(&rad)? {
        return Err(Error::cert("solvable_radical", "result is not an ideal"));
    }
    if solvability_index_of(l, &rad)?.is_none() {
        return Err(Error::cert("solvable_radical", "result is not solvable"));
    }
    if !rad.is_full() {
        let (q, _, _) = quotient(l, &rad)?;
        if !q.killing_is_nondegenerate() {
            return Err(Error::cert(
                "solvable_radical",
                "quotient Killing form is degenerate",
            ));
        }
    }
    Ok(rad)
}

/// Alias for the solvable radical; at finite dimension the intersection
/// of all primitive ideals collapses to it.
pub fn vasilescu_radical(l: &LieAlgebra) -> Result<Subspace> {
    solvable_radical(l)
}

fn random_small_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Scalar> {
    (0..dim)
        .map(|_| Scalar::from_int(rng.gen_range(-3i64..=3)))
        .collect()
}

/// Largest nilpotent ideal. The elements of the solvable radical whose
/// adjoint operator lies in the trace-form radical of the enveloping
/// algebra of the radical's own adjoint action form exactly the
/// nilradical; a plain Killing-kernel shortcut would be unsound over this
/// field because distinct weights can cancel in squares.
///
/// Certificates: the result is a nilpotent ideal, and sampled elements of
/// the solvable radical are ad-nilpotent exactly when they are members.
pub fn nilradical(l: &LieAlgebra) -> Result<Subspace> {
    let rad = solvable_radical(l)?;
    nilradical_given_rad(l, &rad)
}

/// Nilradical with the solvable radical already at hand.
pub fn nilradical_given_rad(l: &LieAlgebra, rad: &Subspace) -> Result<Subspace> {
    let nil = nilradical_within(l, rad)?;
    let nil = nil.sum(&l.centre())?;

    if !l.is_ideal(&nil)? {
        return Err(Error::cert("nilradical", "result is not an ideal"));
    }
    if !subspace_is_nilpotent(l, &nil)? {
        return Err(Error::cert("nilradical", "result is not nilpotent"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e69_6c52 ^ l.dim() as u64);
    for _ in 0..8 {
        let coords = random_small_vector(&mut rng, rad.dim());
        let x = rad.expand(&coords);
        let nilpotent = l.ad(&x).pow_is_nilpotent();
        if nilpotent != nil.member(&x) {
            return Err(Error::cert(
                "nilradical",
                "sampled radical element contradicts membership",
            ));
        }
    }
    Ok(nil)
}

/// The nilradical of the algebra induced on the solvable radical, mapped
/// back to ambient coordinates.
fn nilradical_within(l: &LieAlgebra, rad: &Subspace) -> Result<Subspace> {
    let r = rad.dim();
    if r == 0 {
        return Ok(l.zero_subspace());
    }
    let (alg, incl) = induced_algebra(l, rad)?;
    let ads: Vec<Matrix> = (0..r).map(|k| alg.ad_basis(k)).collect();
    let env = enveloping_algebra(r, &ads.iter().filter(|m| !m.is_zero()).cloned().collect::<Vec<_>>());
    let rad_ops = assoc_radical(&env)?;

    // Solve ad(x) = sum of radical operators: unknowns are the r
    // coordinates of x and one coefficient per radical basis operator.
    let cols = r + rad_ops.len();
    let rows = r * r;
    let mut system = Matrix::zero(rows, cols);
    for (j, ad_j) in ads.iter().enumerate() {
        for a in 0..r {
            for b in 0..r {
                *system.at_mut(a * r + b, j) = ad_j.at(a, b).clone();
            }
        }
    }
    for (t, op) in rad_ops.iter().enumerate() {
        for a in 0..r {
            for b in 0..r {
                *system.at_mut(a * r + b, r + t) = -op.at(a, b).clone();
            }
        }
    }
    let kernel = system.kernel();
    let rows: Vec<Vec<Scalar>> = kernel
        .basis_rows()
        .map(|sol| incl.apply(&sol[..r]))
        .filter(|v| !vec_is_zero(v))
        .collect();
    Ok(Subspace::from_rows(l.dim(), rows))
}

/// Bracket of the whole algebra with its solvable radical: the
/// intersection of the maximal ideals of finite codimension. Certified to
/// be a nilpotent ideal.
pub fn jacobson_ideal(l: &LieAlgebra) -> Result<Subspace> {
    let rad = solvable_radical(l)?;
    let k = l.bracket_spaces(&l.whole(), &rad)?;
    if !l.is_ideal(&k)? {
        return Err(Error::cert("jacobson_ideal", "result is not an ideal"));
    }
    if !subspace_is_nilpotent(l, &k)? {
        return Err(Error::cert("jacobson_ideal", "result is not nilpotent"));
    }
    Ok(k)
}

/// Stabilized term of the derived series: the largest perfect ideal, the
/// smallest characteristic ideal with solvable quotient, and the ideal
/// generated by every Levi subalgebra.
pub fn levi_radical(l: &LieAlgebra) -> Subspace {
    let s = derived_series(l);
    let p = s.stable_term().clone();
    debug_assert!(l
        .bracket_spaces(&p, &p)
        .map(|b| b == p)
        .unwrap_or(false));
    p
}

/// Stabilized term of the lower central series.
pub fn lower_central_radical(l: &LieAlgebra) -> Subspace {
    lower_central_series(l).stable_term().clone()
}

/// One obstruction pass for the Frattini ideal on a given algebra:
/// brackets inside the nilradical, the action of the trace-form radical
/// of the enveloping algebra on the nilradical, and the part of the
/// centre that meets the derived subalgebra. Each summand is contained in
/// every ideal with Frattini-free quotient.
fn frattini_obstruction(m: &LieAlgebra, nil: Option<&Subspace>) -> Result<Subspace> {
    let nil = match nil {
        Some(n) => n.clone(),
        None => nilradical(m)?,
    };
    let mut obs = m.bracket_spaces(&nil, &nil)?;
    if !nil.is_zero() {
        let env = ad_envelope_on(m, &nil)?;
        for op in assoc_radical(&env)? {
            for row in nil.basis_rows() {
                let coords = nil.coords(row).expect("basis row is a member");
                let image = nil.expand(&op.apply(&coords));
                obs.insert_row(&image);
            }
        }
    }
    let central = m.centre().intersect(&m.derived_subalgebra())?;
    obs.sum(&central)
}

/// Intersection of all maximal subalgebras of finite codimension, found
/// by obstruction iteration: grow an ideal until the quotient carries no
/// obstruction, then demand a verified Frattini-free witness for the
/// quotient. An unverifiable answer is an error, never a value.
pub fn frattini_ideal(l: &LieAlgebra) -> Result<Subspace> {
    frattini_ideal_given(l, None)
}

/// Frattini ideal with the nilradical of `l` already at hand.
pub fn frattini_ideal_given(l: &LieAlgebra, nil: Option<&Subspace>) -> Result<Subspace> {
    let mut ideal = l.zero_subspace();
    loop {
        let first_round = ideal.is_zero();
        let (m, sect) = if first_round {
            (l.clone(), Matrix::identity(l.dim()))
        } else {
            let (m, _, sect) = quotient(l, &ideal)?;
            (m, sect)
        };
        let obs = frattini_obstruction(&m, if first_round { nil } else { None })?;
        if obs.is_zero() {
            let verdict = if first_round {
                crate::structure::frattini_free_given(&m, nil)?
            } else {
                crate::structure::frattini_free(&m)?
            };
            if !verdict.is_yes() {
                return Err(Error::WitnessConstructionFailed(format!(
                    "quotient of {} failed the Frattini-free checklist after obstructions vanished",
                    l.name
                )));
            }
            break;
        }
        let mut grown = ideal.clone();
        for row in obs.basis_rows() {
            grown.insert_row(&sect.apply(row));
        }
        if grown.dim() == ideal.dim() {
            return Err(Error::cert("frattini_ideal", "obstruction made no progress"));
        }
        ideal = grown;
    }

    // Postconditions from the general theory: the Frattini ideal sits
    // inside the Jacobson ideal and contains centre /\ derived.
    let k = jacobson_ideal(l)?;
    if !k.contains(&ideal)? {
        return Err(Error::cert(
            "frattini_ideal",
            "result is not contained in the Jacobson ideal",
        ));
    }
    let central = l.centre().intersect(&l.derived_subalgebra())?;
    if !ideal.contains(&central)? {
        return Err(Error::cert(
            "frattini_ideal",
            "result misses a central derived element",
        ));
    }
    Ok(ideal)
}

/// Stage dimensions of a superposition run and the stabilization count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRecord {
    pub preradical: String,
    pub stages: Vec<usize>,
    pub r: usize,
}

/// Frattini and Jacobson indices via the solvability shortcut
/// `r = i_s(ideal) + 1`, cross-checked against the literal superposition
/// iteration counts. A disagreement is an internal error.
pub fn radical_indices(l: &LieAlgebra) -> Result<(usize, usize)> {
    if l.dim() == 0 {
        return Ok((0, 0));
    }
    let phi = frattini_ideal(l)?;
    let k = jacobson_ideal(l)?;
    radical_indices_given(l, &phi, &k)
}

/// Index pair with the two ideals already at hand; the superposition
/// cross-check reuses them as the first stage of each run.
pub fn radical_indices_given(l: &LieAlgebra, phi: &Subspace, k: &Subspace) -> Result<(usize, usize)> {
    if l.dim() == 0 {
        return Ok((0, 0));
    }
    let r_frattini = solvability_index_of(l, phi)?
        .ok_or_else(|| Error::cert("radical_indices", "frattini ideal not solvable"))?
        + 1;
    let r_jacobson = solvability_index_of(l, k)?
        .ok_or_else(|| Error::cert("radical_indices", "jacobson ideal not solvable"))?
        + 1;

    let phi_run = crate::combinators::superpose_run_seeded(
        &crate::combinators::frattini_preradical(),
        l,
        Some(phi.clone()),
    )?;
    let k_run = crate::combinators::superpose_run_seeded(
        &crate::combinators::jacobson_preradical(),
        l,
        Some(k.clone()),
    )?;
    if phi_run.record.r != r_frattini || k_run.record.r != r_jacobson {
        return Err(Error::cert(
            "radical_indices",
            format!(
                "shortcut ({r_frattini},{r_jacobson}) disagrees with superposition ({},{})",
                phi_run.record.r, k_run.record.r
            ),
        ));
    }
    Ok((r_frattini, r_jacobson))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn get(name: &str, params: &[usize]) -> LieAlgebra {
        catalog::build(name, params).unwrap()
    }

    #[test]
    fn rad_of_simple_is_zero() {
        assert!(solvable_radical(&get("sl", &[2])).unwrap().is_zero());
    }

    #[test]
    fn rad_of_gl2_is_the_scalar_line() {
        let g = get("gl", &[2]);
        let rad = solvable_radical(&g).unwrap();
        assert_eq!(rad.dim(), 1);
        // the scalar matrix line: I = h1-ish combination; verify centrality
        assert!(g.centre().contains(&rad).unwrap());
    }

    #[test]
    fn rad_of_solvable_is_whole() {
        for (n, p) in [("t", vec![2usize]), ("t", vec![3]), ("borel2", vec![]), ("cext4", vec![])] {
            let l = get(n, &p);
            assert!(solvable_radical(&l).unwrap().is_full(), "{n}");
        }
    }

    #[test]
    fn nilradical_examples() {
        let h = get("heisenberg3", &[]);
        assert!(nilradical(&h).unwrap().is_full());

        let b = get("borel2", &[]);
        let n = nilradical(&b).unwrap();
        assert_eq!(n.dim(), 1);
        assert!(n.member(&b.unit(1)));

        // t(3): scalar line plus the strictly upper triangular part.
        let t3 = get("t", &[3]);
        let n = nilradical(&t3).unwrap();
        assert_eq!(n.dim(), 4);
        assert!(t3.centre().basis_rows().all(|r| n.member(r)));
    }

    #[test]
    fn nilradical_of_cext4() {
        let l = get("cext4", &[]);
        let n = nilradical(&l).unwrap();
        assert_eq!(n.dim(), 3);
        assert!(n.member(&l.unit(1)));
        assert!(n.member(&l.unit(2)));
        assert!(n.member(&l.unit(3)));
        assert!(!n.member(&l.unit(0)));
    }

    #[test]
    fn jacobson_examples() {
        let b = get("borel2", &[]);
        let k = jacobson_ideal(&b).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.member(&b.unit(1)));

        assert!(jacobson_ideal(&get("sl", &[2])).unwrap().is_zero());
        assert!(jacobson_ideal(&get("classI", &[])).unwrap().is_zero());

        // K(t(3)) is the strictly upper triangular part.
        let t3 = get("t", &[3]);
        let k = jacobson_ideal(&t3).unwrap();
        let n3 = Subspace::from_rows(
            t3.dim(),
            ["e12", "e13", "e23"]
                .iter()
                .map(|lab| t3.unit(t3.labels().iter().position(|l| l == lab).unwrap()))
                .collect(),
        );
        assert_eq!(k, n3);
    }

    #[test]
    fn levi_radical_examples() {
        let g = get("gl", &[2]);
        let p = levi_radical(&g);
        assert_eq!(p.dim(), 3);
        assert_eq!(p, g.derived_subalgebra());

        assert!(levi_radical(&get("t", &[3])).is_zero());
        assert!(levi_radical(&get("borel2", &[])).is_zero());

        let mix = crate::products::direct_product(
            "sl2+ab1",
            &[get("sl", &[2]), get("abelian", &[1])],
        )
        .unwrap();
        assert_eq!(levi_radical(&mix).dim(), 3);
    }

    #[test]
    fn lower_central_radical_examples() {
        assert!(lower_central_radical(&get("heisenberg3", &[])).is_zero());
        let b = get("borel2", &[]);
        let p = lower_central_radical(&b);
        assert_eq!(p.dim(), 1);
        assert!(p.member(&b.unit(1)));
        assert!(lower_central_radical(&get("sl", &[2])).is_full());
    }

    #[test]
    fn frattini_examples() {
        let h = get("heisenberg3", &[]);
        assert_eq!(frattini_ideal(&h).unwrap(), h.centre());

        assert!(frattini_ideal(&get("borel2", &[])).unwrap().is_zero());

        let l = get("cext4", &[]);
        let phi = frattini_ideal(&l).unwrap();
        assert_eq!(phi.dim(), 1);
        assert!(phi.member(&l.unit(2)));

        let t3 = get("t", &[3]);
        let phi = frattini_ideal(&t3).unwrap();
        let e13 = t3.unit(t3.labels().iter().position(|l| l == "e13").unwrap());
        assert_eq!(phi, Subspace::line(t3.dim(), e13));
        // equals the second derived term
        let d = derived_series(&t3);
        assert_eq!(phi, d.terms[2]);
    }

    #[test]
    fn index_examples() {
        assert_eq!(radical_indices(&get("t", &[2])).unwrap(), (1, 2));
        assert_eq!(radical_indices(&get("t", &[3])).unwrap(), (2, 3));
        assert_eq!(radical_indices(&get("heisenberg3", &[])).unwrap(), (2, 2));
        assert_eq!(radical_indices(&get("sl", &[2])).unwrap(), (1, 1));
        assert_eq!(radical_indices(&get("cext4", &[])).unwrap(), (2, 2));
    }

    #[test]
    fn vasilescu_alias() {
        let g = get("gl", &[2]);
        assert_eq!(vasilescu_radical(&g).unwrap(), solvable_radical(&g).unwrap());
        assert!(vasilescu_radical(&get("sl", &[2])).unwrap().is_zero());
        assert!(vasilescu_radical(&get("borel2", &[])).unwrap().is_full());
    }

    #[test]
    fn semidirect_products_keep_radicals_in_the_acted_factor() {
        // With a semisimple acting factor, every radical of the product
        // lands inside the embedded module, and the module's own value
        // is recovered for idempotent maps.
        let l = get("classII", &[2]);
        let module = Subspace::from_rows(5, vec![l.unit(3), l.unit(4)]);
        let rad = solvable_radical(&l).unwrap();
        assert_eq!(rad, module);
        assert!(module.contains(&nilradical(&l).unwrap()).unwrap());
        assert!(module.contains(&jacobson_ideal(&l).unwrap()).unwrap());
        assert!(module.contains(&frattini_ideal(&l).unwrap()).unwrap());
    }

    #[test]
    fn inclusion_chain_on_small_catalog() {
        for (n, p) in [
            ("heisenberg3", vec![]),
            ("borel2", vec![]),
            ("t", vec![3usize]),
            ("cext4", vec![]),
            ("gl", vec![2]),
            ("classII", vec![2]),
        ] {
            let l = get(n, &p);
            let central = l.centre().intersect(&l.derived_subalgebra()).unwrap();
            let phi = frattini_ideal(&l).unwrap();
            let k = jacobson_ideal(&l).unwrap();
            let nil = nilradical(&l).unwrap();
            let rad = solvable_radical(&l).unwrap();
            assert!(phi.contains(&central).unwrap(), "{n}");
            assert!(k.contains(&phi).unwrap(), "{n}");
            assert!(nil.contains(&k).unwrap(), "{n}");
            assert!(rad.contains(&nil).unwrap(), "{n}");
        }
    }
}
