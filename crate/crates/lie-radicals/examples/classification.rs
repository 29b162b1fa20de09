//! Structural classification with witnesses: Levi decompositions,
//! Frattini-free and Jacobson-free verdicts, subsimple classes, summand
//! splits and submaximal ideal families.
//!
//! ```bash
//! cargo run --example classification
//! ```

use lie_radicals::products::{direct_product, quotient};
use lie_radicals::structure::{
    direct_summands, frattini_free, jacobson_free, levi_decomposition, submaximal_witness_family,
    subsimple, FrattiniFree, JacobsonFree,
};
use lie_radicals::catalog;

fn main() {
    // Levi decomposition of gl(2): trace-zero part plus the scalar line.
    let g = catalog::build("gl", &[2]).unwrap();
    let w = levi_decomposition(&g).unwrap();
    println!(
        "gl(2) = semisimple part (dim {}) + radical (dim {})",
        w.levi.dim(),
        w.radical.dim()
    );

    // Frattini-free verdicts carry either a verified witness or the
    // violated conditions with offending subspaces.
    for (name, params) in [("borel2", vec![]), ("classII", vec![2usize]), ("cext4", vec![])] {
        let l = catalog::build(name, &params).unwrap();
        match frattini_free(&l).unwrap() {
            FrattiniFree::Yes(w) => println!(
                "{}: frattini-free, witness C dim {}, S dim {}, J dim {} in {} block(s)",
                l.name,
                w.c.dim(),
                w.s.dim(),
                w.j.dim(),
                w.blocks.len()
            ),
            FrattiniFree::No(violations) => {
                let labels: Vec<&str> = violations.iter().map(|v| v.label()).collect();
                println!("{}: not frattini-free, violated: {labels:?}", l.name);
            }
        }
    }

    // Jacobson-free splits into a semisimple ideal and a central radical.
    match jacobson_free(&g).unwrap() {
        JacobsonFree::Yes {
            semisimple,
            central,
        } => println!(
            "gl(2): jacobson-free, splits as dim {} + central dim {}",
            semisimple.dim(),
            central.dim()
        ),
        JacobsonFree::No { jacobson } => println!("gl(2): jacobson ideal dim {}", jacobson.dim()),
    }

    // Subsimple classes across the standards.
    println!("\nsubsimple classes:");
    for (name, params) in [
        ("abelian", vec![1usize]),
        ("sl", vec![2]),
        ("classI", vec![]),
        ("classII", vec![2]),
        ("borel2", vec![]),
        ("heisenberg3", vec![]),
    ] {
        let l = catalog::build(name, &params).unwrap();
        println!("  {:12} -> {}", l.name, subsimple(&l).unwrap().class.as_str());
    }

    // Summand splits and the submaximal ideal family of a mixed sum.
    let mixed = direct_product(
        "borel2+ab1",
        &[
            catalog::build("borel2", &[]).unwrap(),
            catalog::build("abelian", &[1]).unwrap(),
        ],
    )
    .unwrap();
    let split = direct_summands(&mixed).unwrap();
    println!(
        "\nborel2 + line splits into summands of dims {:?}",
        split.components.iter().map(|c| c.dim()).collect::<Vec<_>>()
    );
    let family = submaximal_witness_family(&mixed).unwrap();
    println!("submaximal ideal family:");
    for j in &family {
        let (q, _, _) = quotient(&mixed, j).unwrap();
        println!(
            "  ideal dim {} with quotient of class {}",
            j.dim(),
            subsimple(&q).unwrap().class.as_str()
        );
    }
}
