//! Configuration families (monomial curves, cyclic polytopes, convex
//! polygons on the parabola), the literal 10x7 sign matrix, and the
//! counting bounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::circuits::{circuit_from_support, Circuit};
use crate::citest::SignMatrix;
use crate::error::{Error, Result};
use crate::exactmat::{big_binomial, IntMatrix};
use crate::lattice::{validate_with, Configuration, ValidateOptions};

/// 2 x n curve matrix with first row of ones and second row the exponents,
/// normalized so the smallest exponent is 0. Repeated exponents are
/// accepted (they only add support-2 circuits).
pub fn monomial_curve(a: &[i64]) -> Result<Configuration> {
    let normalized = normalize_curve_exponents(a)?;
    let n = normalized.len();
    let mut m = IntMatrix::zero(2, n);
    for (j, &aj) in normalized.iter().enumerate() {
        *m.at_mut(0, j) = BigInt::one();
        *m.at_mut(1, j) = BigInt::from(aj);
    }
    let opts = ValidateOptions {
        allow_repeats: true,
        ..Default::default()
    };
    validate_with(m, &opts)
}

fn normalize_curve_exponents(a: &[i64]) -> Result<Vec<i64>> {
    if a.len() < 3 {
        return Err(Error::Domain(format!(
            "monomial curve needs at least 3 exponents, got {}",
            a.len()
        )));
    }
    for w in a.windows(2) {
        if w[0] > w[1] {
            return Err(Error::Domain("exponents must be non-decreasing".into()));
        }
    }
    let normalized: Vec<i64> = a.iter().map(|&x| x - a[0]).collect();
    let g = normalized
        .iter()
        .fold(BigInt::zero(), |g, &x| g.gcd(&BigInt::from(x)));
    if !g.is_one() {
        return Err(Error::Domain(format!(
            "exponents are not coprime after normalization (gcd {g})"
        )));
    }
    Ok(normalized)
}

/// The n x (n-2) kernel basis whose ideal is always a complete
/// intersection: column j carries a_{j+2} - a_{j+1} in row 0, -a_{j+2} in
/// row j+1 and a_{j+1} in row j+2 (0-based). A.B = 0 and rank n-2 are
/// checked at construction.
pub fn curve_ci_basis(a: &[i64]) -> Result<IntMatrix> {
    let cfg = monomial_curve(a)?;
    let a = normalize_curve_exponents(a)?;
    let n = a.len();
    let mut b = IntMatrix::zero(n, n - 2);
    for j in 0..n - 2 {
        *b.at_mut(0, j) = BigInt::from(a[j + 2] - a[j + 1]);
        *b.at_mut(j + 1, j) = BigInt::from(-a[j + 2]);
        *b.at_mut(j + 2, j) = BigInt::from(a[j + 1]);
    }
    if !cfg.matrix().mul(&b)?.is_zero() {
        return Err(Error::Invariant("curve basis is not in the kernel".into()));
    }
    if b.rank() != n - 2 {
        return Err(Error::InvalidBasis(format!(
            "curve basis has rank {} instead of {}",
            b.rank(),
            n - 2
        )));
    }
    Ok(b)
}

/// m x n Vandermonde-row matrix on strictly increasing positive parameters.
pub fn cyclic_polytope(m: usize, t: &[i64]) -> Result<Configuration> {
    if m < 2 {
        return Err(Error::Domain("cyclic polytope needs m >= 2".into()));
    }
    let n = t.len();
    if n <= m {
        return Err(Error::Domain(format!(
            "cyclic polytope needs more parameters ({n}) than rows ({m})"
        )));
    }
    if t[0] <= 0 {
        return Err(Error::Domain("parameters must be positive".into()));
    }
    for w in t.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Domain("parameters must be strictly increasing".into()));
        }
    }
    let mut a = IntMatrix::zero(m, n);
    for (j, &tj) in t.iter().enumerate() {
        let mut p = BigInt::one();
        for i in 0..m {
            *a.at_mut(i, j) = p.clone();
            p *= BigInt::from(tj);
        }
    }
    validate_with(a, &ValidateOptions::default())
}

/// Cyclic instance with the default parameters t = (1, ..., n).
pub fn cyclic_polytope_default(m: usize, n: usize) -> Result<Configuration> {
    let t: Vec<i64> = (1..=n as i64).collect();
    cyclic_polytope(m, &t)
}

/// n homogenized points (1, i, i^2) on the parabola: integral, in convex
/// position, counterclockwise-ordered, deterministic.
pub fn convex_polygon(n: usize) -> Result<Configuration> {
    if n < 3 {
        return Err(Error::Domain(format!("polygon needs at least 3 vertices, got {n}")));
    }
    let mut a = IntMatrix::zero(3, n);
    for j in 0..n {
        let i = j as i64;
        *a.at_mut(0, j) = BigInt::one();
        *a.at_mut(1, j) = BigInt::from(i);
        *a.at_mut(2, j) = BigInt::from(i * i);
    }
    validate_with(a, &ValidateOptions::default())
}

/// The circuit supported on four convex-position vertices; its sign
/// pattern is (+, -, +, -) along the support.
pub fn quadruple_circuit(cfg: &Configuration, quad: [usize; 4]) -> Result<Circuit> {
    for w in quad.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Domain("quadruple indices must be strictly increasing".into()));
        }
    }
    if quad[3] >= cfg.n() {
        return Err(Error::Domain(format!(
            "quadruple index {} out of range (n = {})",
            quad[3] + 1,
            cfg.n()
        )));
    }
    let c = circuit_from_support(cfg, &quad)?.ok_or_else(|| {
        Error::Domain("the four points do not support a circuit".into())
    })?;
    let signs: Vec<i8> = quad
        .iter()
        .map(|&i| {
            if c.vector()[i].is_positive() {
                1
            } else if c.vector()[i].is_negative() {
                -1
            } else {
                0
            }
        })
        .collect();
    if signs != [1, -1, 1, -1] {
        return Err(Error::Invariant(format!(
            "quadruple circuit sign pattern {signs:?} is not (+,-,+,-)"
        )));
    }
    Ok(c)
}

/// The literal 10 x 7 sign matrix of the decagon example.
pub fn paper_sign_matrix() -> SignMatrix {
    let rows: [[i8; 7]; 10] = [
        [1, 1, 1, 0, 1, 0, 0],
        [-1, -1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, -1, 1, 0],
        [-1, 1, -1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, -1, 0],
        [0, 0, 0, -1, 1, 1, 1],
        [0, 0, 0, 1, 0, 0, -1],
        [0, 0, 1, 0, -1, 0, 1],
        [0, -1, -1, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, -1, -1],
    ];
    SignMatrix::new(10, 7, rows.concat()).expect("literal matrix is well formed")
}

/// The seven index quadruples that realize the example matrix on the
/// decagon (0-based).
pub fn paper_decagon_quadruples() -> [[usize; 4]; 7] {
    [
        [0, 1, 2, 3],
        [0, 1, 3, 8],
        [0, 3, 7, 8],
        [4, 5, 6, 9],
        [0, 2, 5, 7],
        [2, 4, 5, 9],
        [5, 6, 7, 9],
    ]
}

/// One evaluation of the counting inequality C(n, d+2) > 2(n-d-1) C(n-2, d).
#[derive(Clone, Debug)]
pub struct BoundEvaluation {
    pub d: usize,
    pub n: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

pub fn bound_eval(d: usize, n: usize) -> Result<BoundEvaluation> {
    if d < 1 {
        return Err(Error::Domain("bound evaluation needs d >= 1".into()));
    }
    if n < d + 2 {
        return Err(Error::Domain(format!("bound evaluation needs n >= d + 2 = {}", d + 2)));
    }
    let lhs = big_binomial(n, d + 2);
    let rhs = BigInt::from(2 * (n - d - 1)) * big_binomial(n - 2, d);
    let holds = lhs > rhs;
    Ok(BoundEvaluation { d, n, lhs, rhs, holds })
}

pub const BOUND_SCAN_DEFAULT: usize = 2000;

/// Smallest n such that the inequality holds for every n' >= n within the
/// scanned range. The left side has degree d+2 against d+1 on the right,
/// so the tail is eventually stable; the scan limit guards the claim.
pub fn bound_threshold(d: usize) -> Result<usize> {
    bound_threshold_scanned(d, BOUND_SCAN_DEFAULT)
}

pub fn bound_threshold_scanned(d: usize, scan_limit: usize) -> Result<usize> {
    if scan_limit < d + 2 {
        return Err(Error::Domain("scan limit below the smallest valid n".into()));
    }
    let mut last_fail = None;
    let mut prev_margin: Option<BigInt> = None;
    let mut tail_growing = true;
    for n in d + 2..=scan_limit {
        let ev = bound_eval(d, n)?;
        if !ev.holds {
            last_fail = Some(n);
        }
        let margin = &ev.lhs - &ev.rhs;
        if let Some(p) = &prev_margin {
            tail_growing = &margin > p;
        }
        prev_margin = Some(margin);
    }
    if !tail_growing {
        return Err(Error::Domain(format!(
            "margin not yet growing at scan limit {scan_limit}; increase the range"
        )));
    }
    match last_fail {
        Some(n) if n == scan_limit => Err(Error::Domain(format!(
            "inequality still failing at scan limit {scan_limit}; increase the range"
        ))),
        Some(n) => Ok(n + 1),
        None => Ok(d + 2),
    }
}

/// Lower bound 2(r^2 - r + 1) beyond which the cyclic family of
/// codimension r contains no complete intersection basis ideal.
pub fn codim3_bound(r: usize) -> Result<u64> {
    if r < 3 {
        return Err(Error::Domain(format!("codimension bound needs r >= 3, got {r}")));
    }
    let r = r as u64;
    Ok(2 * (r * r - r + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::citest::{is_complete_intersection, is_complete_intersection_matrix, sign_pattern};
    use crate::lattice::kernel_lattice;

    #[test]
    fn monomial_curve_examples() {
        let cfg = monomial_curve(&[0, 1, 2, 3]).unwrap();
        assert_eq!(cfg.matrix(), &IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]));
        // a = (2,3,5) normalizes to (0,1,3)
        let cfg = monomial_curve(&[2, 3, 5]).unwrap();
        assert_eq!(cfg.matrix(), &IntMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 3]]));
        assert!(matches!(monomial_curve(&[0, 2, 4]), Err(Error::Domain(_))));
        assert!(matches!(monomial_curve(&[0, 3, 1]), Err(Error::Domain(_))));
    }

    #[test]
    fn curve_ci_basis_examples() {
        let b = curve_ci_basis(&[0, 1, 2, 3]).unwrap();
        assert_eq!(b, IntMatrix::from_i64(&[&[1, 1], &[-2, 0], &[1, -3], &[0, 2]]));
        let b = curve_ci_basis(&[0, 1, 3]).unwrap();
        assert_eq!(b, IntMatrix::from_i64(&[&[2], &[-3], &[1]]));
        assert!(is_complete_intersection_matrix(&b));
    }

    #[test]
    fn curve_ci_basis_randomized_invariants() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0xc0ffee);
        let mut done = 0;
        while done < 50 {
            let n = rng.gen_range(3..=10usize);
            let mut a = vec![0i64];
            let mut cur = 0i64;
            for _ in 1..n {
                cur += rng.gen_range(0..=8);
                a.push(cur.min(50));
            }
            if normalize_curve_exponents(&a).is_err() {
                continue;
            }
            let cfg = monomial_curve(&a).unwrap();
            let Ok(b) = curve_ci_basis(&a) else { continue };
            done += 1;
            assert!(cfg.matrix().mul(&b).unwrap().is_zero());
            assert_eq!(b.rank(), n - 2);
            assert!(is_complete_intersection_matrix(&b));
            let s = sign_pattern(&b);
            assert!(crate::citest::is_mixed(&s));
        }
    }

    #[test]
    fn cyclic_polytope_examples() {
        let cfg = cyclic_polytope(2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(cfg.matrix(), &IntMatrix::from_i64(&[&[1, 1, 1, 1], &[1, 2, 3, 4]]));
        let cfg = cyclic_polytope_default(3, 6).unwrap();
        assert_eq!(cfg.codim(), 3);
        assert!(matches!(cyclic_polytope(2, &[0, 1, 2]), Err(Error::Domain(_))));
        assert!(matches!(cyclic_polytope(2, &[1, 1, 2]), Err(Error::Domain(_))));
    }

    #[test]
    fn cyclic_circuit_structure_small() {
        // r = 3, n = 6, m = 3: every circuit has exactly 2 zeros and
        // alternating signs, and there are C(6, 4) = 15 of them
        let cfg = cyclic_polytope_default(3, 6).unwrap();
        let circuits = crate::circuits::enumerate_circuits(&cfg).unwrap();
        assert_eq!(circuits.len(), 15);
        for c in &circuits {
            let zeros = c.vector().iter().filter(|x| x.is_zero()).count();
            assert_eq!(zeros, 2);
            let signs: Vec<i8> = c
                .support()
                .iter()
                .map(|&i| if c.vector()[i].is_positive() { 1 } else { -1 })
                .collect();
            for w in signs.windows(2) {
                assert_eq!(w[0], -w[1]);
            }
        }
    }

    #[test]
    fn convex_polygon_examples() {
        let cfg = convex_polygon(4).unwrap();
        assert_eq!(
            cfg.matrix(),
            &IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3], &[0, 1, 4, 9]])
        );
        assert!(convex_polygon(2).is_err());
        let cfg = convex_polygon(3).unwrap();
        assert_eq!(cfg.codim(), 0);
        assert_eq!(kernel_lattice(&cfg).unwrap().codim(), 0);
    }

    #[test]
    fn quadruple_circuit_examples() {
        let decagon = convex_polygon(10).unwrap();
        let c = quadruple_circuit(&decagon, [0, 1, 2, 3]).unwrap();
        let lead: Vec<i64> = vec![1, -3, 3, -1];
        for (i, &x) in lead.iter().enumerate() {
            assert_eq!(c.vector()[i], BigInt::from(x));
        }
        assert!(c.vector()[4..].iter().all(|x| x.is_zero()));
        // unique circuit of the square, r = 1
        let square = convex_polygon(4).unwrap();
        let c = quadruple_circuit(&square, [0, 1, 2, 3]).unwrap();
        let circuits = crate::circuits::enumerate_circuits(&square).unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].vector(), c.vector());
        assert!(quadruple_circuit(&decagon, [0, 1, 2, 10]).is_err());
        assert!(quadruple_circuit(&decagon, [0, 1, 1, 2]).is_err());
    }

    #[test]
    fn quadruple_signs_all_polygons_up_to_12() {
        use itertools::Itertools;
        for n in 4..=12 {
            let cfg = convex_polygon(n).unwrap();
            for quad in (0..n).combinations(4) {
                let quad = [quad[0], quad[1], quad[2], quad[3]];
                quadruple_circuit(&cfg, quad).unwrap(); // sign pattern asserted inside
            }
        }
    }

    #[test]
    fn paper_matrix_columns() {
        let p = paper_sign_matrix();
        let col = |j: usize| -> Vec<(usize, i8)> {
            (0..10).filter(|&i| p.at(i, j) != 0).map(|i| (i, p.at(i, j))).collect()
        };
        assert_eq!(col(0), vec![(0, 1), (1, -1), (2, 1), (3, -1)]);
        assert_eq!(col(3), vec![(4, 1), (5, -1), (6, 1), (9, -1)]);
        assert!(is_complete_intersection(&p));
    }

    #[test]
    fn bound_examples() {
        let ev = bound_eval(2, 22).unwrap();
        assert_eq!(ev.lhs, BigInt::from(7315));
        assert_eq!(ev.rhs, BigInt::from(7220));
        assert!(ev.holds);
        let ev = bound_eval(2, 21).unwrap();
        assert_eq!(ev.lhs, BigInt::from(5985));
        assert_eq!(ev.rhs, BigInt::from(6156));
        assert!(!ev.holds);
        assert_eq!(bound_threshold(2).unwrap(), 22);
        assert!(bound_eval(0, 5).is_err());
        assert!(bound_eval(2, 3).is_err());
    }

    #[test]
    fn bound_eval_matches_factorial_formula() {
        // independent route: factorial quotients instead of the running product
        fn fact(k: usize) -> BigInt {
            (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
        }
        for d in 1..=3 {
            for n in d + 2..=30 {
                let ev = bound_eval(d, n).unwrap();
                let lhs = fact(n) / (fact(d + 2) * fact(n - d - 2));
                let rhs = BigInt::from(2 * (n - d - 1)) * fact(n - 2)
                    / (fact(d) * fact(n - 2 - d));
                assert_eq!(ev.lhs, lhs);
                assert_eq!(ev.rhs, rhs);
            }
        }
    }

    #[test]
    fn codim3_bound_examples() {
        assert_eq!(codim3_bound(3).unwrap(), 14);
        assert_eq!(codim3_bound(4).unwrap(), 26);
        assert_eq!(codim3_bound(5).unwrap(), 42);
        assert!(codim3_bound(2).is_err());
    }
}
