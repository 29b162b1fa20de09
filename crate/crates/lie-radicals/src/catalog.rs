//! Built-in model algebras: matrix families, the small solvable and
//! nilpotent standards, and the composite examples used throughout the
//! regression suites, together with their expected structural data.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::products::{algebra_from_matrices, direct_product, semidirect_product};
use crate::scalar::Scalar;

fn matrix_unit(n: usize, r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zero(n, n);
    *m.at_mut(r, c) = Scalar::one();
    m
}

fn sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::BadParams("sl(n) needs n >= 2".into()));
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for k in 0..n - 1 {
        let mut h = Matrix::zero(n, n);
        *h.at_mut(k, k) = Scalar::one();
        *h.at_mut(k + 1, k + 1) = Scalar::from_int(-1);
        mats.push(h);
        labels.push(format!("h{}", k + 1));
    }
    for r in 0..n {
        for c in 0..n {
            if r != c {
                mats.push(matrix_unit(n, r, c));
                labels.push(format!("e{}{}", r + 1, c + 1));
            }
        }
    }
    algebra_from_matrices(format!("sl{n}"), labels, &mats)
}

fn gl(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::BadParams("gl(n) needs n >= 1".into()));
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for r in 0..n {
        for c in 0..n {
            mats.push(matrix_unit(n, r, c));
            labels.push(format!("e{}{}", r + 1, c + 1));
        }
    }
    algebra_from_matrices(format!("gl{n}"), labels, &mats)
}

/// All upper triangular matrices, identity included.
fn upper_triangular(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::BadParams("t(n) needs n >= 1".into()));
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for r in 0..n {
        for c in r..n {
            mats.push(matrix_unit(n, r, c));
            labels.push(format!("e{}{}", r + 1, c + 1));
        }
    }
    algebra_from_matrices(format!("t{n}"), labels, &mats)
}

fn strictly_upper_triangular(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::BadParams("n(n) needs n >= 2".into()));
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for r in 0..n {
        for c in (r + 1)..n {
            mats.push(matrix_unit(n, r, c));
            labels.push(format!("e{}{}", r + 1, c + 1));
        }
    }
    algebra_from_matrices(format!("n{n}"), labels, &mats)
}

fn heisenberg3() -> Result<LieAlgebra> {
    LieAlgebra::new(
        "heisenberg3",
        3,
        vec!["x".into(), "y".into(), "z".into()],
        vec![(0, 1, vec![Scalar::zero(), Scalar::zero(), Scalar::one()])],
    )
}

/// Upper triangular trace-zero 2x2 matrices: [h, e] = 2e.
fn borel2() -> Result<LieAlgebra> {
    LieAlgebra::new(
        "borel2",
        2,
        vec!["h".into(), "e".into()],
        vec![(0, 1, vec![Scalar::zero(), Scalar::from_int(2)])],
    )
}

/// Central extension glued to a scaling action: [x,y] = n1, [x,n2] = n2.
fn cext4() -> Result<LieAlgebra> {
    let z = Scalar::zero;
    LieAlgebra::new(
        "cext4",
        4,
        vec!["x".into(), "y".into(), "n1".into(), "n2".into()],
        vec![
            (0, 1, vec![z(), z(), Scalar::one(), z()]),
            (0, 3, vec![z(), z(), z(), Scalar::one()]),
        ],
    )
}

fn class_i() -> Result<LieAlgebra> {
    let a = sl(2)?;
    direct_product("classI", &[a.clone(), a])
}

/// The defining action of sl(n) on its column space.
fn class_ii(n: usize) -> Result<LieAlgebra> {
    let acting = sl(n)?;
    let module = abelian(n)?;
    // phi: basis vector of sl(n) -> its defining matrix
    let mut mats = Vec::new();
    for k in 0..n - 1 {
        let mut h = Matrix::zero(n, n);
        *h.at_mut(k, k) = Scalar::one();
        *h.at_mut(k + 1, k + 1) = Scalar::from_int(-1);
        mats.push(h);
    }
    for r in 0..n {
        for c in 0..n {
            if r != c {
                mats.push(matrix_unit(n, r, c));
            }
        }
    }
    semidirect_product(format!("classII{n}"), &acting, &module, &mats)
}

fn abelian(n: usize) -> Result<LieAlgebra> {
    LieAlgebra::new(
        format!("abelian{n}"),
        n,
        (0..n).map(|k| format!("a{k}")).collect(),
        vec![],
    )
}

/// Builds a catalog entry by name. Parameterized families take one
/// integer parameter.
pub fn build(name: &str, params: &[usize]) -> Result<LieAlgebra> {
    let one_param = || -> Result<usize> {
        params
            .first()
            .copied()
            .ok_or_else(|| Error::BadParams(format!("{name} needs one integer parameter")))
    };
    match name {
        "abelian" => abelian(one_param()?),
        "heisenberg3" => heisenberg3(),
        "borel2" => borel2(),
        "sl" => sl(one_param()?),
        "gl" => gl(one_param()?),
        "t" => upper_triangular(one_param()?),
        "n" => strictly_upper_triangular(one_param()?),
        "classI" => class_i(),
        "classII" => class_ii(one_param().unwrap_or(2)),
        "cext4" => cext4(),
        _ => Err(Error::UnknownEntry(name.to_string())),
    }
}

pub fn entry_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("abelian", "abelian algebra of dimension n"),
        ("heisenberg3", "three-dimensional algebra with one-dimensional centre"),
        ("borel2", "upper triangular trace-zero 2x2 matrices"),
        ("sl", "trace-zero n x n matrices (n >= 2)"),
        ("gl", "all n x n matrices"),
        ("t", "upper triangular n x n matrices, identity included"),
        ("n", "strictly upper triangular n x n matrices (n >= 2)"),
        ("classI", "two commuting copies of sl(2)"),
        ("classII", "sl(n) acting on its column space (default n = 2)"),
        ("cext4", "central extension with a scaling direction"),
    ]
}

/// Expected structural data for the regression suites. `None` fields are
/// not pinned for that entry.
#[derive(Clone, Debug, Default)]
pub struct Expectations {
    pub dim: usize,
    pub centre_dim: Option<usize>,
    pub rad_dim: Option<usize>,
    pub nilradical_dim: Option<usize>,
    pub jacobson_dim: Option<usize>,
    pub frattini_dim: Option<usize>,
    pub levi_radical_dim: Option<usize>,
    pub indices: Option<(usize, usize)>,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub frattini_free: Option<bool>,
    pub jacobson_free: Option<bool>,
    pub subsimple: Option<&'static str>,
    pub summand_dims: Option<Vec<usize>>,
    pub notes: Vec<String>,
}

fn ceil_log2(n: usize) -> usize {
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

pub fn expected_table(name: &str, params: &[usize]) -> Result<Expectations> {
    let p = params.first().copied();
    let table = match (name, p) {
        ("abelian", Some(n)) => Expectations {
            dim: n,
            centre_dim: Some(n),
            rad_dim: Some(n),
            nilradical_dim: Some(n),
            jacobson_dim: Some(0),
            frattini_dim: Some(0),
            levi_radical_dim: Some(0),
            indices: Some((1, 1)),
            solvable: Some(true),
            nilpotent: Some(true),
            frattini_free: Some(true),
            jacobson_free: Some(true),
            subsimple: Some(if n == 1 { "dim1" } else { "not_subsimple" }),
            summand_dims: Some(vec![1; n]),
            notes: vec![],
        },
        ("heisenberg3", _) => Expectations {
            dim: 3,
            centre_dim: Some(1),
            rad_dim: Some(3),
            nilradical_dim: Some(3),
            jacobson_dim: Some(1),
            frattini_dim: Some(1),
            levi_radical_dim: Some(0),
            indices: Some((2, 2)),
            solvable: Some(true),
            nilpotent: Some(true),
            frattini_free: Some(false),
            jacobson_free: Some(false),
            subsimple: Some("not_subsimple"),
            summand_dims: Some(vec![3]),
            notes: vec![],
        },
        ("borel2", _) => Expectations {
            dim: 2,
            centre_dim: Some(0),
            rad_dim: Some(2),
            nilradical_dim: Some(1),
            jacobson_dim: Some(1),
            frattini_dim: Some(0),
            levi_radical_dim: Some(0),
            indices: Some((1, 2)),
            solvable: Some(true),
            nilpotent: Some(false),
            frattini_free: Some(true),
            jacobson_free: Some(false),
            subsimple: Some("classII"),
            summand_dims: Some(vec![2]),
            notes: vec![],
        },
        ("sl", Some(n)) => Expectations {
            dim: n * n - 1,
            centre_dim: Some(0),
            rad_dim: Some(0),
            nilradical_dim: Some(0),
            jacobson_dim: Some(0),
            frattini_dim: Some(0),
            levi_radical_dim: Some(n * n - 1),
            indices: Some((1, 1)),
            solvable: Some(false),
            nilpotent: Some(false),
            frattini_free: Some(true),
            jacobson_free: Some(true),
            subsimple: Some("simple"),
            summand_dims: Some(vec![n * n - 1]),
            notes: vec![],
        },
        ("gl", Some(n)) => Expectations {
            dim: n * n,
            centre_dim: Some(1),
            rad_dim: Some(1),
            nilradical_dim: Some(1),
            jacobson_dim: Some(0),
            frattini_dim: Some(0),
            levi_radical_dim: Some(n * n - 1),
            indices: Some((1, 1)),
            solvable: Some(n == 1),
            nilpotent: Some(n == 1),
            frattini_free: Some(true),
            jacobson_free: Some(true),
            subsimple: Some(if n == 1 { "dim1" } else { "not_subsimple" }),
            summand_dims: Some(if n == 1 {
                vec![1]
            } else {
                vec![n * n - 1, 1]
            }),
            notes: vec![],
        },
        ("t", Some(n)) => {
            let strict = n * (n - 1) / 2;
            let mut notes = vec![];
            if n >= 4 {
                notes.push(format!(
                    "maximal-ideal iteration count for t({n}) is ceil(log2 {n}) + 1 = {}, \
                     smaller than the dimension-based count n = {n} sometimes quoted for \
                     this family",
                    ceil_log2(n) + 1
                ));
            }
            Expectations {
                dim: n * (n + 1) / 2,
                centre_dim: Some(1),
                rad_dim: Some(n * (n + 1) / 2),
                nilradical_dim: Some(strict + 1),
                jacobson_dim: Some(strict),
                frattini_dim: match n {
                    1 => Some(0),
                    2 => Some(0),
                    3 => Some(1),
                    4 => Some(3),
                    _ => None,
                },
                levi_radical_dim: Some(0),
                indices: match n {
                    1 => Some((1, 1)),
                    2 => Some((1, 2)),
                    3 => Some((2, 3)),
                    4 => Some((2, 3)),
                    5 => Some((3, 4)),
                    _ => None,
                },
                solvable: Some(true),
                nilpotent: Some(n == 1),
                frattini_free: Some(n <= 2),
                jacobson_free: Some(n == 1),
                subsimple: Some(if n == 1 { "dim1" } else { "not_subsimple" }),
                summand_dims: None,
                notes,
            }
        }
        ("n", Some(n)) => {
            let dim = n * (n - 1) / 2;
            let is = ceil_log2(n);
            Expectations {
                dim,
                centre_dim: Some(1),
                rad_dim: Some(dim),
                nilradical_dim: Some(dim),
                jacobson_dim: Some(dim.saturating_sub(n - 1)),
                frattini_dim: Some(dim.saturating_sub(n - 1)),
                levi_radical_dim: Some(0),
                indices: Some((is, is)),
                solvable: Some(true),
                nilpotent: Some(true),
                frattini_free: Some(n == 2),
                jacobson_free: Some(n == 2),
                subsimple: Some(if n == 2 { "dim1" } else { "not_subsimple" }),
                summand_dims: Some(vec![dim]),
                notes: vec![],
            }
        }
        ("classI", _) => Expectations {
            dim: 6,
            centre_dim: Some(0),
            rad_dim: Some(0),
            nilradical_dim: Some(0),
            jacobson_dim: Some(0),
            frattini_dim: Some(0),
            levi_radical_dim: Some(6),
            indices: Some((1, 1)),
            solvable: Some(false),
            nilpotent: Some(false),
            frattini_free: Some(true),
            jacobson_free: Some(true),
            subsimple: Some("classI"),
            summand_dims: Some(vec![3, 3]),
            notes: vec![],
        },
        ("classII", Some(n)) => Expectations {
            dim: n * n - 1 + n,
            centre_dim: Some(0),
            rad_dim: Some(n),
            nilradical_dim: Some(n),
            jacobson_dim: Some(n),
            frattini_dim: Some(0),
            levi_radical_dim: Some(n * n - 1 + n),
            indices: Some((1, 2)),
            solvable: Some(false),
            nilpotent: Some(false),
            frattini_free: Some(true),
            jacobson_free: Some(false),
            subsimple: Some("classII"),
            summand_dims: Some(vec![n * n - 1 + n]),
            notes: vec![],
        },
        ("cext4", _) => Expectations {
            dim: 4,
            centre_dim: Some(1),
            rad_dim: Some(4),
            nilradical_dim: Some(3),
            jacobson_dim: Some(2),
            frattini_dim: Some(1),
            levi_radical_dim: Some(0),
            indices: Some((2, 2)),
            solvable: Some(true),
            nilpotent: Some(false),
            frattini_free: Some(false),
            jacobson_free: Some(false),
            subsimple: Some("not_subsimple"),
            summand_dims: Some(vec![4]),
            notes: vec![],
        },
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    Ok(table)
}

/// The default population used by the verification suites: every family
/// at small sizes.
pub fn default_population() -> Vec<(String, LieAlgebra)> {
    let specs: Vec<(&str, Vec<usize>)> = vec![
        ("abelian", vec![1]),
        ("abelian", vec![2]),
        ("abelian", vec![3]),
        ("heisenberg3", vec![]),
        ("borel2", vec![]),
        ("sl", vec![2]),
        ("sl", vec![3]),
        ("gl", vec![2]),
        ("gl", vec![3]),
        ("t", vec![2]),
        ("t", vec![3]),
        ("t", vec![4]),
        ("t", vec![5]),
        ("n", vec![3]),
        ("n", vec![4]),
        ("n", vec![5]),
        ("classI", vec![]),
        ("classII", vec![2]),
        ("classII", vec![3]),
        ("cext4", vec![]),
    ];
    specs
        .into_iter()
        .map(|(name, params)| {
            let label = if params.is_empty() {
                name.to_string()
            } else {
                format!("{name}({})", params[0])
            };
            (
                label,
                build(name, &params).expect("catalog entries validate"),
            )
        })
        .collect()
}
