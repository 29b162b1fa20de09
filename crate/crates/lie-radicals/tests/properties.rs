//! Property tests for the exact linear algebra layer and the scalar
//! text form.

use lie_radicals::{GaussianRational, Matrix, Subspace};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| {
        let re = GaussianRational::from_ratio(a, b);
        let im = GaussianRational::from_ratio(c, d);
        GaussianRational::new(re.re, im.re)
    })
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(), rows * cols)
        .prop_map(move |entries| Matrix::from_vector(rows, cols, entries))
}

fn subspace_strategy(ambient: usize) -> impl Strategy<Value = Subspace> {
    (1usize..=3).prop_flat_map(move |rows| {
        proptest::collection::vec(scalar_strategy(), rows * ambient).prop_map(move |flat| {
            let rows_vec: Vec<Vec<GaussianRational>> =
                flat.chunks(ambient).map(|c| c.to_vec()).collect();
            Subspace::from_rows(ambient, rows_vec)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_roundtrip(x in scalar_strategy()) {
        let text = x.to_string();
        let back: GaussianRational = text.parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn scalar_field_laws(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            let q = &a / &b;
            prop_assert_eq!(&q * &b, a.clone());
        }
    }

    #[test]
    fn rref_is_idempotent_and_deterministic(m in matrix_strategy(4, 3)) {
        let (r1, rank1) = m.rref();
        let (r2, rank2) = r1.rref();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(rank1, rank2);
        let (r3, _) = m.rref();
        prop_assert_eq!(r1, r3);
    }

    #[test]
    fn solve_is_sound(m in matrix_strategy(3, 4), b in proptest::collection::vec(scalar_strategy(), 3)) {
        if let Some(x) = m.solve(&b) {
            prop_assert_eq!(m.apply(&x), b);
        }
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(3, 5)) {
        prop_assert_eq!(m.kernel().dim() + m.rank(), m.cols);
    }

    #[test]
    fn kernel_vectors_annihilate(m in matrix_strategy(3, 4)) {
        let k = m.kernel();
        for row in k.basis_rows() {
            prop_assert!(m.apply(row).iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn lattice_dimension_formula(u in subspace_strategy(5), v in subspace_strategy(5)) {
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(u.dim() + v.dim(), sum.dim() + meet.dim());
        // canonicality: the sum is symmetric as a value
        prop_assert_eq!(&sum, &v.sum(&u).unwrap());
        // absorbing: intersect is idempotent against its own result
        prop_assert_eq!(&meet.intersect(&u).unwrap(), &meet);
        prop_assert!(u.contains(&meet).unwrap());
        prop_assert!(sum.contains(&u).unwrap());
    }

    #[test]
    fn insert_row_matches_batch_reduction(u in subspace_strategy(4), extra in proptest::collection::vec(scalar_strategy(), 4)) {
        let mut incremental = u.clone();
        incremental.insert_row(&extra);
        let mut rows: Vec<Vec<GaussianRational>> = u.basis_rows().map(|r| r.to_vec()).collect();
        rows.push(extra);
        let batch = Subspace::from_rows(4, rows);
        prop_assert_eq!(incremental, batch);
    }

    #[test]
    fn membership_after_expansion(u in subspace_strategy(4), coords in proptest::collection::vec(scalar_strategy(), 3)) {
        let take = coords[..u.dim().min(3)].to_vec();
        if take.len() == u.dim() {
            let x = u.expand(&take);
            prop_assert!(u.member(&x));
            prop_assert_eq!(u.coords(&x).unwrap(), take);
        }
    }
}
