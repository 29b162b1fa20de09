//! Series and radicals: derived and lower central chains, the solvable
//! radical with its certificate, the nilradical, the Jacobson and
//! Frattini ideals, and the index pair.
//!
//! ```bash
//! cargo run --example series_and_radicals
//! ```

use lie_radicals::series::{derived_series, lower_central_series};
use lie_radicals::{catalog, radicals};

fn main() {
    for (name, params) in [
        ("heisenberg3", vec![]),
        ("borel2", vec![]),
        ("t", vec![3usize]),
        ("gl", vec![2]),
        ("cext4", vec![]),
    ] {
        let l = catalog::build(name, &params).unwrap();
        println!("== {} (dim {})", l.name, l.dim());
        println!("  derived dims       {:?}", derived_series(&l).dims());
        println!("  lower central dims {:?}", lower_central_series(&l).dims());

        let rad = radicals::solvable_radical(&l).unwrap();
        let nil = radicals::nilradical(&l).unwrap();
        let k = radicals::jacobson_ideal(&l).unwrap();
        let phi = radicals::frattini_ideal(&l).unwrap();
        println!(
            "  rad {}  nilradical {}  jacobson {}  frattini {}",
            rad.dim(),
            nil.dim(),
            k.dim(),
            phi.dim()
        );
        println!("  levi radical dim {}", radicals::levi_radical(&l).dim());

        // The chain centre/\derived <= frattini <= jacobson <= nilradical
        // <= radical holds on every algebra.
        let central = l.centre().intersect(&l.derived_subalgebra()).unwrap();
        assert!(phi.contains(&central).unwrap());
        assert!(k.contains(&phi).unwrap());
        assert!(nil.contains(&k).unwrap());
        assert!(rad.contains(&nil).unwrap());

        let (rf, rj) = radicals::radical_indices(&l).unwrap();
        println!("  indices: frattini {rf}, jacobson {rj}");
        println!();
    }

    // The triangular family shows the index gap growing logarithmically.
    println!("triangular family indices:");
    for n in 2..=5usize {
        let t = catalog::build("t", &[n]).unwrap();
        let (rf, rj) = radicals::radical_indices(&t).unwrap();
        println!("  t({n}): frattini {rf}, jacobson {rj}");
    }
}
