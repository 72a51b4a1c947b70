//! Every kernel vector is a positive rational combination of circuits that
//! agree with it in sign (conformal circuits). This example decomposes
//! (1, -1, -1, 1) for the twisted cubic and then rewrites an arbitrary
//! lattice basis as a basis made of circuits.
//!
//! Run with `cargo run --example conformal_decomposition`.

use num_bigint::BigInt;
use toric_ci::{
    circuitize_basis, conformal_decomposition, enumerate_circuits, validate, IntMatrix,
};

fn fmt(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn main() -> toric_ci::Result<()> {
    let cfg = validate(IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]))?;
    let circuits = enumerate_circuits(&cfg)?;

    let v: Vec<BigInt> = [1i64, -1, -1, 1].iter().map(|&x| BigInt::from(x)).collect();
    println!("decomposing {}:", fmt(&v));
    for term in conformal_decomposition(&cfg, &v, &circuits)? {
        println!("  + {} * {}", term.coefficient, fmt(&term.vector));
    }

    // a kernel basis whose first column is not a circuit
    let b = IntMatrix::from_i64(&[&[1, 0], &[-1, 1], &[-1, -2], &[1, 1]]);
    println!("\ncircuitizing the basis with columns {} and {}:", fmt(&b.column(0)), fmt(&b.column(1)));
    let c = circuitize_basis(&cfg, &b)?;
    for j in 0..c.cols() {
        println!("  column {}: {}", j + 1, fmt(&c.column(j)));
    }
    println!("rank preserved: {}", c.rank() == b.rank());
    Ok(())
}
