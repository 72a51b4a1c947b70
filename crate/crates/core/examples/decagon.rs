//! The convex decagon: reconstruct a complete-intersection circuit basis
//! from seven quadruples of vertices and display its sign pattern.
//!
//! Run with `cargo run --example decagon`.

use toric_ci::citest::{find_violation, sign_pattern};
use toric_ci::generators::{convex_polygon, paper_decagon_quadruples, quadruple_circuit};
use toric_ci::{binomial_strings, IntMatrix};

fn main() -> toric_ci::Result<()> {
    let cfg = convex_polygon(10)?;
    println!("decagon configuration (vertices of a convex 10-gon lifted to height 1):");
    print!("{}", cfg.matrix().to_text());

    let mut columns = Vec::new();
    println!("\ncircuits from quadruples (1-based vertex indices):");
    for quad in paper_decagon_quadruples() {
        let c = quadruple_circuit(&cfg, quad)?;
        let shown: Vec<usize> = quad.iter().map(|i| i + 1).collect();
        let v: Vec<String> = c.vector().iter().map(|x| x.to_string()).collect();
        println!("  {shown:?} -> ({})", v.join(", "));
        columns.push(c.vector().to_vec());
    }

    let b = IntMatrix::from_columns(10, &columns)?;
    println!("\nsign pattern (rows = vertices, columns = circuits):");
    print!("{}", sign_pattern(&b).to_text());

    match find_violation(&sign_pattern(&b)) {
        None => println!("\nno mixed violation: the basis ideal is a complete intersection"),
        Some(w) => println!("\nviolation at rows {:?}, cols {:?}", w.rows, w.cols),
    }

    println!("\ngenerating binomials:");
    for s in binomial_strings(&b) {
        println!("  {s}");
    }
    Ok(())
}
