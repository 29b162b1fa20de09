//! Thin command-line front end over the library. Exit codes: 0 success,
//! 1 input/parse errors, 2 invalid algebra data, 3 internal certificate
//! failures.

use clap::{Parser, Subcommand};
use lie_radicals::error::Error;
use lie_radicals::report::{build_report, verify_invariants, SubspaceJson};
use lie_radicals::{catalog, combinators, json, products, radicals, series, structure, LieAlgebra};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lie-radicals", version, about = "Radical structure of Lie algebras over the Gaussian rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structure report for an algebra file.
    Analyze {
        file: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the invariant suite on one algebra; exits 0 iff all pass.
    Verify { file: PathBuf },
    /// Run one named operation and print its result as JSON.
    Op { name: String, file: PathBuf },
    /// Direct and semidirect products.
    Product {
        #[command(subcommand)]
        kind: ProductKind,
    },
    /// List built-in algebras or emit one as JSON.
    Catalog {
        #[command(subcommand)]
        kind: CatalogKind,
    },
}

#[derive(Subcommand)]
enum ProductKind {
    /// Block-diagonal product of two algebra files.
    Direct { a: PathBuf, b: PathBuf },
    /// Semidirect product from a spec file with an action block.
    Semidirect { spec: PathBuf },
}

#[derive(Subcommand)]
enum CatalogKind {
    List,
    Emit {
        name: String,
        params: Vec<usize>,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ParseScalar(_) | Error::UnknownEntry(_) | Error::BadParams(_) => 1,
        Error::CertificateFailure { .. } | Error::WitnessConstructionFailed(_) => 3,
        _ => 2,
    }
}

fn read_algebra(path: &PathBuf) -> Result<LieAlgebra, (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (1u8, format!("cannot read {}: {e}", path.display())))?;
    // A JSON syntax failure is a parse error (exit 1); a well-formed file
    // describing a non-Lie table is invalid data (exit 2).
    let file: json::AlgebraFile = serde_json::from_str(&text)
        .map_err(|e| (1u8, format!("{}: json parse error: {e}", path.display())))?;
    file.to_algebra()
        .map_err(|e| (exit_code_for(&e).max(2), e.to_string()))
}

fn subspace_json(s: &lie_radicals::Subspace) -> serde_json::Value {
    serde_json::to_value(SubspaceJson::of(s)).expect("subspace serializes")
}

fn run_op(name: &str, l: &LieAlgebra) -> Result<serde_json::Value, Error> {
    use serde_json::json;
    let v = match name {
        "centre" => subspace_json(&l.centre()),
        "derived_subalgebra" => subspace_json(&l.derived_subalgebra()),
        "derived_series" => json!(series::derived_series(l).dims()),
        "lower_central_series" => json!(series::lower_central_series(l).dims()),
        "solvability_index" => json!(series::solvability_index(l)),
        "nilpotency_index" => json!(series::nilpotency_index(l)),
        "killing_form" => json!(l.killing_form().to_text_rows()),
        "solvable_radical" => subspace_json(&radicals::solvable_radical(l)?),
        "vasilescu_radical" => subspace_json(&radicals::vasilescu_radical(l)?),
        "nilradical" => subspace_json(&radicals::nilradical(l)?),
        "jacobson_ideal" => subspace_json(&radicals::jacobson_ideal(l)?),
        "frattini_ideal" => subspace_json(&radicals::frattini_ideal(l)?),
        "levi_radical" => subspace_json(&radicals::levi_radical(l)),
        "lower_central_radical" => subspace_json(&radicals::lower_central_radical(l)),
        "largest_semisimple_ideal" => subspace_json(&structure::largest_semisimple_ideal(l)?),
        "radical_indices" => {
            let (rf, rj) = radicals::radical_indices(l)?;
            json!({"r_frattini": rf, "r_jacobson": rj})
        }
        "levi_decomposition" => {
            let w = structure::levi_decomposition(l)?;
            json!({"levi": subspace_json(&w.levi), "radical": subspace_json(&w.radical)})
        }
        "simple_components" => {
            let split = structure::simple_components(l)?;
            json!({
                "complete": split.complete,
                "components": split.components.iter().map(subspace_json).collect::<Vec<_>>(),
            })
        }
        "direct_summands" => {
            let split = structure::direct_summands(l)?;
            json!({
                "complete": split.complete,
                "summands": split.components.iter().map(subspace_json).collect::<Vec<_>>(),
            })
        }
        "frattini_free" => {
            let report = build_report(l, vec![])?;
            serde_json::to_value(report.frattini_free).expect("verdict serializes")
        }
        "jacobson_free" => {
            let report = build_report(l, vec![])?;
            serde_json::to_value(report.jacobson_free).expect("verdict serializes")
        }
        "subsimple" => {
            let v = structure::subsimple(l)?;
            json!({"class": v.class.as_str(), "notes": v.notes})
        }
        "submaximal_witness_family" => {
            let fam = structure::submaximal_witness_family(l)?;
            json!(fam.iter().map(subspace_json).collect::<Vec<_>>())
        }
        "superpose_frattini" => {
            let run = combinators::superpose_run(&combinators::frattini_preradical(), l)?;
            json!({"stages": run.record.stages, "r": run.record.r})
        }
        "superpose_jacobson" => {
            let run = combinators::superpose_run(&combinators::jacobson_preradical(), l)?;
            json!({"stages": run.record.stages, "r": run.record.r})
        }
        _ => return Err(Error::UnknownEntry(format!("operation {name}"))),
    };
    Ok(serde_json::json!({"op": name, "algebra": l.name, "result": v}))
}

fn catalog_notes(l: &LieAlgebra) -> Vec<String> {
    // attach the family notes when the algebra matches a catalog name
    let name = l.name.clone();
    if let Some(n_text) = name.strip_prefix('t') {
        if let Ok(n) = n_text.parse::<usize>() {
            if let Ok(exp) = catalog::expected_table("t", &[n]) {
                return exp.notes;
            }
        }
    }
    vec![]
}

fn print_text_report(r: &lie_radicals::report::StructureReport) {
    println!("algebra {} (dim {})", r.name, r.dim);
    println!("  basis: {}", r.basis.join(", "));
    let flag = |b: bool| if b { "yes" } else { "no" };
    println!(
        "  abelian {}  solvable {}  nilpotent {}  semisimple {}  simple {}",
        flag(r.flags.abelian),
        r.flags
            .solvable
            .map_or("no".to_string(), |i| format!("yes (index {i})")),
        r.flags
            .nilpotent
            .map_or("no".to_string(), |i| format!("yes (class {i})")),
        flag(r.flags.semisimple),
        flag(r.flags.simple),
    );
    println!("  centre dim {}", r.centre_dim);
    println!("  derived series dims {:?}", r.derived_dims);
    println!("  lower central dims  {:?}", r.lower_central_dims);
    println!("  solvable radical dim {}", r.solvable_radical.dim);
    println!("  nilradical dim       {}", r.nilradical.dim);
    println!("  jacobson ideal dim   {}", r.jacobson_ideal.dim);
    println!("  frattini ideal dim   {}", r.frattini_ideal.dim);
    println!("  levi radical dim     {}", r.levi_radical.dim);
    println!("  largest semisimple ideal dim {}", r.largest_semisimple_ideal.dim);
    println!("  indices: frattini {}  jacobson {}", r.r_frattini, r.r_jacobson);
    println!("  frattini-free: {}", flag(r.frattini_free.answer));
    for v in &r.frattini_free.violations {
        println!("    violated: {} (offending dim {})", v.condition, v.offending.dim);
    }
    println!("  jacobson-free: {}", flag(r.jacobson_free.answer));
    println!("  subsimple: {}", r.subsimple.class);
    println!("  summand dims {:?}", r.summand_dims);
    for n in &r.notes {
        println!("  note: {n}");
    }
}

fn main_inner() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    let fail = |e: Error| (exit_code_for(&e), e.to_string());
    match cli.command {
        Command::Analyze { file, json: as_json } => {
            let l = read_algebra(&file)?;
            let report = build_report(&l, catalog_notes(&l)).map_err(fail)?;
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print_text_report(&report);
            }
            Ok(())
        }
        Command::Verify { file } => {
            let l = read_algebra(&file)?;
            let results = verify_invariants(&l);
            let mut all = true;
            for r in &results {
                let mark = if r.pass { "pass" } else { "FAIL" };
                if r.detail.is_empty() {
                    println!("{mark}  {}", r.name);
                } else {
                    println!("{mark}  {} ({})", r.name, r.detail);
                }
                all &= r.pass;
            }
            if all {
                Ok(())
            } else {
                Err((3, "invariant suite failed".to_string()))
            }
        }
        Command::Op { name, file } => {
            let l = read_algebra(&file)?;
            let value = run_op(&name, &l).map_err(fail)?;
            println!("{}", serde_json::to_string_pretty(&value).expect("op result serializes"));
            Ok(())
        }
        Command::Product { kind } => {
            let combined = match kind {
                ProductKind::Direct { a, b } => {
                    let la = read_algebra(&a)?;
                    let lb = read_algebra(&b)?;
                    let name = format!("{}+{}", la.name, lb.name);
                    products::direct_product(name, &[la, lb]).map_err(fail)?
                }
                ProductKind::Semidirect { spec } => {
                    let text = std::fs::read_to_string(&spec)
                        .map_err(|e| (1u8, format!("cannot read {}: {e}", spec.display())))?;
                    let file = json::parse_semidirect(&text)
                        .map_err(|e| (1u8, e.to_string()))?;
                    file.to_algebra().map_err(fail)?
                }
            };
            println!("{}", json::emit_algebra(&combined));
            Ok(())
        }
        Command::Catalog { kind } => match kind {
            CatalogKind::List => {
                for (name, desc) in catalog::entry_names() {
                    println!("{name:12} {desc}");
                }
                Ok(())
            }
            CatalogKind::Emit { name, params } => {
                let l = catalog::build(&name, &params).map_err(fail)?;
                println!("{}", json::emit_algebra(&l));
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    match main_inner() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
