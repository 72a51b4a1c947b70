//! The twisted cubic end to end: kernel lattice, circuits, and an
//! exhaustive search for a complete-intersection circuit basis.
//!
//! Run with `cargo run --example twisted_cubic`.

use toric_ci::{
    binomial_strings, enumerate_circuits, kernel_lattice, search_ci_circuit_basis, validate,
    IntMatrix, SearchOptions,
};

fn main() -> toric_ci::Result<()> {
    let cfg = validate(IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]))?;
    println!("configuration ({} x {}, codimension {}):", cfg.m(), cfg.n(), cfg.codim());
    print!("{}", cfg.matrix().to_text());

    let kernel = kernel_lattice(&cfg)?;
    println!("\nsaturated kernel basis:");
    print!("{}", kernel.matrix().to_text());

    let circuits = enumerate_circuits(&cfg)?;
    println!("\n{} circuits:", circuits.len());
    for c in &circuits {
        let v: Vec<String> = c.vector().iter().map(|x| x.to_string()).collect();
        println!("  ({})", v.join(", "));
    }

    let report = search_ci_circuit_basis(&cfg, &SearchOptions::default())?;
    println!("\nsearch verdict: {}", report.verdict.as_str());
    if let Some(b) = &report.basis {
        println!("complete-intersection basis ideal generated by:");
        for s in binomial_strings(b) {
            println!("  {s}");
        }
        println!(
            "lattice index g = {} (Laurent equality: {})",
            report.index_g.as_ref().unwrap(),
            report.laurent_equal.unwrap(),
        );
    }
    Ok(())
}
