//! One-line structural summary of every built-in algebra, computed live.
//!
//! ```bash
//! cargo run --example catalog_tour
//! ```

use lie_radicals::report::Analysis;
use lie_radicals::catalog;

fn main() {
    println!(
        "{:<14} {:>3}  {:>3} {:>3} {:>3} {:>3}  {:>7}  {:<5} {:<5}  {}",
        "algebra", "dim", "rad", "nil", "K", "phi", "(rf,rj)", "ff", "jf", "subsimple"
    );
    for (label, l) in catalog::default_population() {
        let a = Analysis::run(&l).expect("certified analysis");
        println!(
            "{:<14} {:>3}  {:>3} {:>3} {:>3} {:>3}  ({:>2},{:>2})  {:<5} {:<5}  {}",
            label,
            l.dim(),
            a.rad.dim(),
            a.nilradical.dim(),
            a.jacobson.dim(),
            a.frattini.dim(),
            a.indices.0,
            a.indices.1,
            a.frattini_free.is_yes(),
            a.jacobson_free.is_yes(),
            a.subsimple.class.as_str(),
        );
    }
}
