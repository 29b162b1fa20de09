//! Producing the machine-readable structure report, the same record the
//! `lie-radicals analyze --json` command emits.
//!
//! ```bash
//! cargo run --example analyze_report
//! ```

use lie_radicals::report::build_report;
use lie_radicals::{catalog, json};

fn main() {
    // The report for the 4-dimensional central extension: violations of
    // the Frattini-free conditions are listed with offending subspaces.
    let l = catalog::build("cext4", &[]).unwrap();
    let report = build_report(&l, vec![]).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    // Reports are built from the interchange format, so a file emitted by
    // `catalog emit` or `product direct` analyzes identically.
    let text = json::emit_algebra(&l);
    let back = json::parse_algebra(&text).unwrap();
    let second = build_report(&back, vec![]).unwrap();
    assert_eq!(
        serde_json::to_value(&report.frattini_ideal).unwrap(),
        serde_json::to_value(&second.frattini_ideal).unwrap()
    );
    println!("\nround-trip through the interchange format reproduces the report");
}
