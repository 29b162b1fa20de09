//! Building algebras: validated structure-constant tables, the JSON
//! interchange format, quotients, and direct/semidirect products.
//!
//! ```bash
//! cargo run --example build_algebras
//! ```

use lie_radicals::algebra::LieAlgebra;
use lie_radicals::{catalog, json, products, GaussianRational, Matrix};

fn s(text: &str) -> GaussianRational {
    text.parse().unwrap()
}

fn main() {
    // Construction validates antisymmetry and the Jacobi identity; a bad
    // table is rejected with the offending triple and residual.
    let bad = LieAlgebra::new(
        "bad",
        3,
        vec!["x".into(), "y".into(), "z".into()],
        vec![
            (0, 1, vec![s("0"), s("0"), s("1")]),
            (0, 2, vec![s("0"), s("1"), s("0")]),
            (1, 2, vec![s("0"), s("1"), s("0")]),
        ],
    );
    println!("invalid table rejected: {}", bad.unwrap_err());

    // The catalog builds validated standards; everything round-trips
    // through the JSON interchange format.
    let h = catalog::build("heisenberg3", &[]).unwrap();
    let text = json::emit_algebra(&h);
    println!("\nheisenberg3 as JSON:\n{text}");
    let back = json::parse_algebra(&text).unwrap();
    println!("round-trip preserves the tensor: {}", back.structure_constant(0, 1) == h.structure_constant(0, 1));

    // Quotient by the centre: the projection is a verified homomorphism.
    let (q, _, _) = products::quotient(&h, &h.centre()).unwrap();
    println!("\nheisenberg3 / centre is abelian of dim {}: {}", q.dim(), q.is_abelian());

    // Products: two copies of sl(2) side by side, and sl(2) acting on its
    // column space.
    let sl2 = catalog::build("sl", &[2]).unwrap();
    let pair = products::direct_product("sl2+sl2", &[sl2.clone(), sl2.clone()]).unwrap();
    println!("\ndirect product of two sl(2): dim {}", pair.dim());

    let module = catalog::build("abelian", &[2]).unwrap();
    let phi: Vec<Matrix> = vec![
        Matrix::from_rows(vec![vec![s("1"), s("0")], vec![s("0"), s("-1")]]),
        Matrix::from_rows(vec![vec![s("0"), s("1")], vec![s("0"), s("0")]]),
        Matrix::from_rows(vec![vec![s("0"), s("0")], vec![s("1"), s("0")]]),
    ];
    let acting = products::semidirect_product("sl2|x|C2", &sl2, &module, &phi).unwrap();
    println!("semidirect product sl(2) on its column space: dim {}", acting.dim());

    // An action that is not a derivation is refused.
    let one = LieAlgebra::new("c", 1, vec!["t".into()], vec![]).unwrap();
    let mut broken = Matrix::zero(3, 3);
    *broken.at_mut(2, 2) = s("1");
    let err = products::semidirect_product("nope", &one, &h, &[broken]).unwrap_err();
    println!("\nnon-derivation action rejected: {err}");
}
