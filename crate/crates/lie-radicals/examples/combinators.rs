//! Preradical combinators: superposition runs with their stage records,
//! convolution through quotients, and the star closure.
//!
//! ```bash
//! cargo run --example combinators
//! ```

use lie_radicals::combinators::{
    centre_preradical, convolve, derived_step, frattini_preradical, jacobson_preradical,
    lower_central_preradical, star, superpose_run,
};
use lie_radicals::{catalog, radicals};

fn main() {
    // Superposing the derived step recovers the stabilized derived term.
    let g = catalog::build("gl", &[2]).unwrap();
    let run = superpose_run(&derived_step(), &g).unwrap();
    println!(
        "derived-step superposition on gl(2): stages {:?}, stabilizes at the trace-zero part (dim {})",
        run.record.stages,
        run.stable.dim()
    );
    assert_eq!(run.stable, radicals::levi_radical(&g));

    // Two different one-step maps superpose to the same radical.
    let t3 = catalog::build("t", &[3]).unwrap();
    let via_derived = superpose_run(&derived_step(), &t3).unwrap().stable;
    let via_lower_central = superpose_run(&lower_central_preradical(), &t3).unwrap().stable;
    println!(
        "on t(3) both superpositions stabilize to zero: {} / {}",
        via_derived.is_zero(),
        via_lower_central.is_zero()
    );

    // The Jacobson ideal iterates to zero with a recorded stage profile.
    let run = superpose_run(&jacobson_preradical(), &t3).unwrap();
    println!(
        "jacobson superposition on t(3): stages {:?}, r = {}",
        run.record.stages, run.record.r
    );

    // Star closure: iterating centre pullbacks fills a nilpotent algebra.
    let h = catalog::build("heisenberg3", &[]).unwrap();
    let filled = star(&centre_preradical()).eval(&h).unwrap();
    println!("star(centre) on heisenberg3 reaches dim {}", filled.dim());

    // Upper stable preradicals are fixed by star.
    let phi = frattini_preradical();
    assert_eq!(star(&phi).eval(&t3).unwrap(), phi.eval(&t3).unwrap());
    println!("star fixes the frattini preradical on t(3)");

    // Convolution evaluates on the quotient and pulls back.
    let b = catalog::build("borel2", &[]).unwrap();
    let conv = convolve(&derived_step(), &centre_preradical());
    println!(
        "derived * centre on borel2 has dim {} (the centre is zero, so it is just the derived part)",
        conv.eval(&b).unwrap().dim()
    );

    // The order between the named preradicals, checked pointwise.
    let k = jacobson_preradical();
    for (label, l) in catalog::default_population() {
        assert!(phi.le_on(&k, &l).unwrap(), "{label}");
    }
    println!("frattini <= jacobson across the whole catalog");
}
