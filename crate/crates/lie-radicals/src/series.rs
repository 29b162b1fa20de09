//! Derived and lower central series with their stabilization indices.

use crate::algebra::LieAlgebra;
use crate::error::Result;
use crate::subspace::Subspace;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A strictly decreasing chain of ideals computed until it stabilizes.
/// `terms[0]` is the whole algebra and `terms[stabilized_at]` is the
/// first term equal to its successor.
#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized_at: usize,
}

impl SeriesRecord {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }

    pub fn stable_term(&self) -> &Subspace {
        &self.terms[self.stabilized_at]
    }

    pub fn reaches_zero(&self) -> bool {
        self.stable_term().is_zero()
    }
}

fn series(l: &LieAlgebra, kind: SeriesKind) -> SeriesRecord {
    let mut terms = vec![l.whole()];
    loop {
        let last = terms.last().unwrap();
        let next = match kind {
            SeriesKind::Derived => l.bracket_spaces(last, last),
            SeriesKind::LowerCentral => l.bracket_spaces(&l.whole(), last),
        }
        .expect("series terms share the algebra's ambient space");
        if &next == last {
            break;
        }
        terms.push(next);
    }
    SeriesRecord {
        kind,
        stabilized_at: terms.len() - 1,
        terms,
    }
}

pub fn derived_series(l: &LieAlgebra) -> SeriesRecord {
    series(l, SeriesKind::Derived)
}

pub fn lower_central_series(l: &LieAlgebra) -> SeriesRecord {
    series(l, SeriesKind::LowerCentral)
}

/// Least `n` with the `n`-th derived term zero; `0` for the zero algebra,
/// `1` for nonzero abelian algebras. `None` when the series stabilizes at
/// a nonzero term.
pub fn solvability_index(l: &LieAlgebra) -> Option<usize> {
    let s = derived_series(l);
    s.reaches_zero().then_some(s.stabilized_at)
}

/// Nilpotency class: least `n` with the `n`-step lower central term zero;
/// `0` for the zero algebra, `1` for nonzero abelian algebras.
pub fn nilpotency_index(l: &LieAlgebra) -> Option<usize> {
    let s = lower_central_series(l);
    s.reaches_zero().then_some(s.stabilized_at)
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    solvability_index(l).is_some()
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    nilpotency_index(l).is_some()
}

/// Solvability index of the algebra induced on a subalgebra.
pub fn solvability_index_of(l: &LieAlgebra, sub: &Subspace) -> Result<Option<usize>> {
    let mut terms = vec![sub.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = l.bracket_spaces(last, last)?;
        if &next == last {
            return Ok(next.is_zero().then_some(terms.len() - 1));
        }
        terms.push(next);
    }
}

/// Whether a subalgebra is nilpotent as an algebra in its own right,
/// iterating brackets against the subalgebra itself.
pub fn subspace_is_nilpotent(l: &LieAlgebra, sub: &Subspace) -> Result<bool> {
    let mut current = sub.clone();
    loop {
        let next = l.bracket_spaces(sub, &current)?;
        if next == current {
            return Ok(next.is_zero());
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn heisenberg_derived_profile() {
        let h = catalog::build("heisenberg3", &[]).unwrap();
        let s = derived_series(&h);
        assert_eq!(s.dims(), vec![3, 1, 0]);
        assert_eq!(s.stabilized_at, 2);
        assert_eq!(solvability_index(&h), Some(2));
        assert_eq!(nilpotency_index(&h), Some(2));
    }

    #[test]
    fn abelian_series() {
        let a = catalog::build("abelian", &[4]).unwrap();
        assert_eq!(derived_series(&a).dims(), vec![4, 0]);
        assert_eq!(solvability_index(&a), Some(1));
        let zero = catalog::build("abelian", &[0]).unwrap();
        assert_eq!(solvability_index(&zero), Some(0));
        assert_eq!(nilpotency_index(&zero), Some(0));
    }

    #[test]
    fn strict_upper_triangular_4_profile() {
        let n4 = catalog::build("n", &[4]).unwrap();
        let s = derived_series(&n4);
        assert_eq!(s.dims(), vec![6, 3, 0]);
        assert_eq!(solvability_index(&n4), Some(2));
    }

    #[test]
    fn sl2_is_not_solvable() {
        let l = catalog::build("sl", &[2]).unwrap();
        assert_eq!(solvability_index(&l), None);
        assert_eq!(nilpotency_index(&l), None);
        assert!(!is_solvable(&l));
    }

    #[test]
    fn borel_is_solvable_not_nilpotent() {
        let b = catalog::build("borel2", &[]).unwrap();
        assert_eq!(solvability_index(&b), Some(2));
        assert_eq!(nilpotency_index(&b), None);
    }

    #[test]
    fn series_terms_are_characteristic_on_small_algebras() {
        for (name, params) in [("heisenberg3", vec![]), ("borel2", vec![]), ("t", vec![3usize])] {
            let l = catalog::build(name, &params).unwrap();
            for term in derived_series(&l).terms.iter().chain(&lower_central_series(&l).terms) {
                assert!(l.is_characteristic(term).unwrap(), "{name}");
            }
        }
    }
}
