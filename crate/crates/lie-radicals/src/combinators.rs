//! Generic preradical combinators: superposition (iterate inside the
//! returned ideal until it stabilizes) and convolution (evaluate on the
//! quotient and pull back), together with the star closure built from
//! convolution.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::products::{induced_algebra, quotient};
use crate::radicals::{self, IndexRecord};
use crate::subspace::Subspace;
use std::sync::Arc;

type Eval = dyn Fn(&LieAlgebra) -> Result<Subspace> + Send + Sync;

/// An ideal-valued map on algebras. Evaluation verifies that the returned
/// subspace really is an ideal of its input.
#[derive(Clone)]
pub struct Preradical {
    pub name: String,
    eval: Arc<Eval>,
}

impl Preradical {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&LieAlgebra) -> Result<Subspace> + Send + Sync + 'static,
    ) -> Self {
        Preradical {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn eval(&self, l: &LieAlgebra) -> Result<Subspace> {
        let out = (self.eval)(l)?;
        if !l.is_ideal(&out)? {
            return Err(Error::cert(
                "preradical",
                format!("{} returned a non-ideal", self.name),
            ));
        }
        Ok(out)
    }

    /// `self <= other` on one algebra: containment of the evaluations.
    pub fn le_on(&self, other: &Preradical, l: &LieAlgebra) -> Result<bool> {
        other.eval(l)?.contains(&self.eval(l)?)
    }

    pub fn is_semisimple_for(&self, l: &LieAlgebra) -> Result<bool> {
        Ok(self.eval(l)?.is_zero())
    }

    pub fn is_radical_for(&self, l: &LieAlgebra) -> Result<bool> {
        Ok(self.eval(l)?.is_full())
    }
}

pub fn derived_step() -> Preradical {
    Preradical::new("derived-step", |l| Ok(l.derived_subalgebra()))
}

pub fn centre_preradical() -> Preradical {
    Preradical::new("centre", |l| Ok(l.centre()))
}

pub fn solvable_radical_preradical() -> Preradical {
    Preradical::new("rad", radicals::solvable_radical)
}

pub fn nilradical_preradical() -> Preradical {
    Preradical::new("nilrad", radicals::nilradical)
}

pub fn jacobson_preradical() -> Preradical {
    Preradical::new("jacobson", radicals::jacobson_ideal)
}

pub fn frattini_preradical() -> Preradical {
    Preradical::new("frattini", radicals::frattini_ideal)
}

pub fn levi_preradical() -> Preradical {
    Preradical::new("levi-radical", |l| Ok(radicals::levi_radical(l)))
}

pub fn lower_central_preradical() -> Preradical {
    Preradical::new("lower-central-radical", |l| {
        Ok(radicals::lower_central_radical(l))
    })
}

/// Result of a superposition run: the stabilized ideal in the coordinates
/// of the original algebra, plus the stage record.
pub struct SuperposeRun {
    pub stable: Subspace,
    pub record: IndexRecord,
}

/// Iterates `r` on the ideal it returns, viewing each stage as an algebra
/// in its own right, until the chain stabilizes. Stage subspaces are
/// mapped back through the accumulated inclusion so the record reads in
/// the original coordinates.
pub fn superpose_run(r: &Preradical, l: &LieAlgebra) -> Result<SuperposeRun> {
    superpose_run_seeded(r, l, None)
}

/// Superposition run where the first evaluation may be supplied by the
/// caller (it must equal `r.eval(l)`; later stages always evaluate).
pub fn superpose_run_seeded(
    r: &Preradical,
    l: &LieAlgebra,
    mut seed: Option<Subspace>,
) -> Result<SuperposeRun> {
    let mut stages = vec![l.dim()];
    let mut current_alg = l.clone();
    let mut current_space = l.whole();
    let mut count = 0usize;
    loop {
        let ideal = match seed.take() {
            Some(s) => s,
            None => r.eval(&current_alg)?,
        };
        let mapped = map_to_ambient(&current_space, &ideal);
        let done = mapped == current_space || mapped.is_zero();
        if mapped != current_space {
            count += 1;
            stages.push(mapped.dim());
        }
        if done {
            return Ok(SuperposeRun {
                stable: mapped,
                record: IndexRecord {
                    preradical: r.name.clone(),
                    stages,
                    r: count,
                },
            });
        }
        let (alg, _) = induced_algebra(&current_alg, &ideal)?;
        current_alg = alg;
        current_space = mapped;
    }
}

/// A subspace expressed in stage coordinates, mapped into the ambient
/// coordinates of the original algebra.
fn map_to_ambient(stage: &Subspace, inner: &Subspace) -> Subspace {
    let rows: Vec<Vec<crate::scalar::Scalar>> = inner
        .basis_rows()
        .map(|row| stage.expand(row))
        .collect();
    Subspace::from_rows(stage.ambient_dim(), rows)
}

/// Superposition as a preradical value.
pub fn superpose(r: &Preradical) -> Preradical {
    let inner = r.clone();
    Preradical::new(format!("{}°", r.name), move |l| {
        Ok(superpose_run(&inner, l)?.stable)
    })
}

/// Convolution: evaluate `r` on the quotient by `t` and pull back. The
/// result always contains `t`'s value, which is asserted per call.
pub fn convolve(r: &Preradical, t: &Preradical) -> Preradical {
    let (r, t) = (r.clone(), t.clone());
    Preradical::new(format!("{}*{}", r.name, t.name), move |l| {
        let base = t.eval(l)?;
        let pulled = eval_on_quotient(&r, l, &base)?;
        if !pulled.contains(&base)? {
            return Err(Error::cert(
                "convolve",
                "pullback does not contain the inner preradical's value",
            ));
        }
        Ok(pulled)
    })
}

fn eval_on_quotient(r: &Preradical, l: &LieAlgebra, ideal: &Subspace) -> Result<Subspace> {
    let (q, _, sect) = quotient(l, ideal)?;
    let upstairs = r.eval(&q)?;
    let mut out = ideal.clone();
    for row in upstairs.basis_rows() {
        out.insert_row(&sect.apply(row));
    }
    Ok(out)
}

/// Star closure: iterate `I <- preimage of r(L / I)` from zero until the
/// chain stabilizes. For upper-stable preradicals this returns `r` itself.
pub fn star(r: &Preradical) -> Preradical {
    let inner = r.clone();
    Preradical::new(format!("{}*", r.name), move |l| {
        let mut ideal = l.zero_subspace();
        loop {
            let next = eval_on_quotient(&inner, l, &ideal)?;
            if next == ideal {
                return Ok(ideal);
            }
            ideal = next;
        }
    })
}

/// Projection of a semidirect or direct product onto its acting factor,
/// used by tests of product compatibility.
pub fn block_projection(total_dim: usize, offset: usize, block: usize) -> Matrix {
    Matrix::from_fn(block, total_dim, |r, c| {
        if c == offset + r {
            crate::scalar::Scalar::one()
        } else {
            crate::scalar::Scalar::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::radicals::{frattini_ideal, jacobson_ideal, levi_radical};

    fn get(name: &str, params: &[usize]) -> LieAlgebra {
        catalog::build(name, params).unwrap()
    }

    #[test]
    fn superpose_derived_step_is_levi_radical() {
        for (n, p) in [("gl", vec![2usize]), ("borel2", vec![]), ("t", vec![3])] {
            let l = get(n, &p);
            let run = superpose_run(&derived_step(), &l).unwrap();
            assert_eq!(run.stable, levi_radical(&l), "{n}");
        }
        let g = get("gl", &[2]);
        let run = superpose_run(&derived_step(), &g).unwrap();
        assert_eq!(run.stable.dim(), 3);
    }

    #[test]
    fn superpose_jacobson_on_t3() {
        let t3 = get("t", &[3]);
        let run = superpose_run(&jacobson_preradical(), &t3).unwrap();
        assert!(run.stable.is_zero());
        assert_eq!(run.record.r, 3);
        assert_eq!(run.record.stages, vec![6, 3, 1, 0]);
    }

    #[test]
    fn superpose_of_lower_stable_map_stops_immediately() {
        // rad is idempotent, so superposition changes nothing.
        for (n, p) in [("gl", vec![2usize]), ("classII", vec![2])] {
            let l = get(n, &p);
            let run = superpose_run(&solvable_radical_preradical(), &l).unwrap();
            assert_eq!(run.stable, crate::radicals::solvable_radical(&l).unwrap());
        }
    }

    #[test]
    fn star_of_centre_fills_nilpotent_algebras() {
        let h = get("heisenberg3", &[]);
        let s = star(&centre_preradical());
        assert!(s.eval(&h).unwrap().is_full());
    }

    #[test]
    fn star_of_upper_stable_is_identity_on_value() {
        for (n, p) in [("heisenberg3", vec![]), ("borel2", vec![]), ("t", vec![3usize])] {
            let l = get(n, &p);
            assert_eq!(
                star(&frattini_preradical()).eval(&l).unwrap(),
                frattini_ideal(&l).unwrap(),
                "{n}"
            );
            assert_eq!(
                star(&jacobson_preradical()).eval(&l).unwrap(),
                jacobson_ideal(&l).unwrap(),
                "{n}"
            );
        }
    }

    #[test]
    fn convolve_with_trivial_centre_reduces_to_the_outer_map() {
        let b = get("borel2", &[]);
        let conv = convolve(&derived_step(), &centre_preradical());
        let got = conv.eval(&b).unwrap();
        assert_eq!(got, b.derived_subalgebra());
        assert_eq!(got.dim(), 1);
    }

    #[test]
    fn order_relation_on_catalog() {
        let phi = frattini_preradical();
        let k = jacobson_preradical();
        let nil = nilradical_preradical();
        let rad = solvable_radical_preradical();
        for (n, p) in [
            ("heisenberg3", vec![]),
            ("borel2", vec![]),
            ("cext4", vec![]),
            ("t", vec![3usize]),
            ("gl", vec![2]),
        ] {
            let l = get(n, &p);
            assert!(phi.le_on(&k, &l).unwrap(), "{n}");
            assert!(k.le_on(&nil, &l).unwrap(), "{n}");
            assert!(nil.le_on(&rad, &l).unwrap(), "{n}");
        }
    }

    #[test]
    fn semisimple_and_radical_predicates() {
        let rad = solvable_radical_preradical();
        assert!(rad.is_semisimple_for(&get("sl", &[2])).unwrap());
        assert!(rad.is_radical_for(&get("t", &[3])).unwrap());
        assert!(!rad.is_semisimple_for(&get("gl", &[2])).unwrap());
    }
}
