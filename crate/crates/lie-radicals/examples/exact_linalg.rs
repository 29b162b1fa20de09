//! Exact linear algebra over the Gaussian rationals: scalars, row
//! reduction, solving, and the canonical subspace lattice.
//!
//! ```bash
//! cargo run --example exact_linalg
//! ```

use lie_radicals::{GaussianRational, Matrix, Subspace};

fn s(text: &str) -> GaussianRational {
    text.parse().unwrap()
}

fn main() {
    // Scalar arithmetic stays in lowest terms and parses back exactly.
    let a = s("1/2-3/4*i");
    let b = s("2+i");
    println!("({a}) * ({b}) = {}", &a * &b);
    println!("({a}) / ({b}) = {}", &a / &b);

    // Row reduction is exact: the second row is i times the first, so
    // the rank is 1 and no tolerance is involved.
    let m = Matrix::from_rows(vec![vec![s("1"), s("i")], vec![s("i"), s("-1")]]);
    let (rref, rank) = m.rref();
    println!("\nrref of [[1, i], [i, -1]] has rank {rank}:");
    for row in rref.to_text_rows() {
        println!("  [{}]", row.join(", "));
    }

    // Solving picks the deterministic solution with free variables zero.
    let system = Matrix::from_rows(vec![vec![s("1"), s("1")]]);
    println!("\nsolve [1 1] x = 2  ->  {:?}", system.solve(&[s("2")]).map(|x| x
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()));

    // The subspace lattice: canonical echelon bases make equality exact.
    let u = Subspace::from_rows(3, vec![vec![s("1"), s("1"), s("0")], vec![s("0"), s("2"), s("0")]]);
    let v = Subspace::from_rows(3, vec![vec![s("1"), s("0"), s("0")], vec![s("3"), s("1"), s("0")]]);
    println!("\ntwo spanning sets of the same plane compare equal: {}", u == v);

    let w = Subspace::from_rows(3, vec![vec![s("0"), s("0"), s("1")], vec![s("0"), s("1"), s("0")]]);
    let sum = u.sum(&w).unwrap();
    let meet = u.intersect(&w).unwrap();
    println!(
        "dim(U) + dim(W) = dim(U+W) + dim(U/\\W):  {} + {} = {} + {}",
        u.dim(),
        w.dim(),
        sum.dim(),
        meet.dim()
    );
    println!("kernel of [[1, 1]] is spanned by (1, -1): {:?}",
        Matrix::from_rows(vec![vec![s("1"), s("1")]])
            .kernel()
            .to_text_rows());
}
