//! The counting bounds: where circuits outnumber the subsets they could
//! possibly avoid, and the codimension-3 nonexistence threshold.
//!
//! Run with `cargo run --example bounds`.

use toric_ci::{bound_eval, bound_threshold, codim3_bound};

fn main() -> toric_ci::Result<()> {
    println!("planar bound C(n, 4) > 2(n - 3) C(n - 2, 2):");
    for n in 18..=24 {
        let ev = bound_eval(2, n)?;
        println!(
            "  n = {n}: {} {} {}",
            ev.lhs,
            if ev.holds { ">" } else { "<=" },
            ev.rhs
        );
    }
    println!("first n from which the bound always holds: {}", bound_threshold(2)?);

    println!("\nnonexistence threshold 2(r^2 - r + 1) by codimension:");
    for r in 3..=6 {
        println!("  r = {r}: n >= {}", codim3_bound(r)?);
    }
    Ok(())
}
