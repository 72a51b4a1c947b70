//! Exact-arithmetic toolkit for deciding whether a toric ideal contains a
//! complete-intersection basis ideal.
//!
//! The pipeline: a configuration matrix `A` determines a kernel lattice
//! ([`lattice`]), whose minimal-support primitive vectors are the circuits
//! ([`circuits`]). A lattice basis generates a complete intersection exactly
//! when its sign pattern has no mixed submatrix with more columns than rows
//! ([`citest`]), and it suffices to search bases made of circuits
//! ([`search`]). [`generators`] builds the standard example families and
//! [`verify`] re-derives the headline computations end to end.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`); no floating point
//! anywhere.

pub mod circuits;
pub mod citest;
pub mod cli;
pub mod error;
pub mod exactmat;
pub mod generators;
pub mod lattice;
pub mod search;
pub mod verify;

pub use circuits::{
    circuit_from_support, circuitize_basis, conformal_decomposition, enumerate_circuits,
    is_conformal, Circuit, ConformalTerm,
};
pub use citest::{
    brute_force_violation, find_violation, is_complete_intersection,
    is_complete_intersection_matrix, sign_pattern, MixedWitness, SignMatrix,
};
pub use error::{Error, Result};
pub use exactmat::IntMatrix;
pub use generators::{
    bound_eval, bound_threshold, codim3_bound, convex_polygon, curve_ci_basis, cyclic_polytope,
    cyclic_polytope_default, monomial_curve, BoundEvaluation,
};
pub use lattice::{
    binomial_strings, kernel_lattice, lattice_index, laurent_equal, validate, Configuration,
    LatticeBasis,
};
pub use search::{
    check_given_basis, search_ci_circuit_basis, SearchMode, SearchOptions, SearchReport, Verdict,
};
