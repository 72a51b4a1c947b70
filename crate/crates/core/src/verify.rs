//! Reproduction harness: the checks behind `toric-ci verify-paper`, also
//! driven one-by-one from the acceptance test suite.

use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::circuits::{
    circuitize_basis, conformal_decomposition, enumerate_circuits, is_conformal,
    circuits_to_matrix, Circuit,
};
use crate::citest::{
    brute_force_violation, find_two_full_rows, find_violation, is_complete_intersection,
    sign_pattern, SignMatrix,
};
use crate::exactmat::{choose, IntMatrix, RatVector};
use crate::generators::{
    bound_eval, bound_threshold, codim3_bound, convex_polygon, curve_ci_basis,
    cyclic_polytope_default, monomial_curve, paper_decagon_quadruples, paper_sign_matrix,
    quadruple_circuit,
};
use crate::lattice::{kernel_lattice, validate, Configuration};
use crate::search::{search_ci_circuit_basis, SearchOptions, Verdict};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub name: &'static str,
    /// Exploratory rows are reported but never fail the run.
    pub blocking: bool,
    pub passed: bool,
    pub details: String,
    pub elapsed_ms: u128,
}

impl CheckOutcome {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else if self.blocking {
            "FAIL"
        } else {
            "INFO"
        }
    }
}

pub fn check_ids() -> Vec<(&'static str, &'static str)> {
    vec![
        ("1", "paper-sign-matrix"),
        ("2", "codim-two-corollary"),
        ("3", "monomial-curves"),
        ("4", "cyclic-nonexistence"),
        ("5", "cyclic-circuit-structure"),
        ("6", "bounds"),
        ("7", "decagon-reconstruction"),
        ("8", "oracle-equivalence"),
        ("9", "conformal-machinery"),
        ("10", "small-cyclic-probe"),
    ]
}

/// Run all checks, or only those whose id or name contains `only`.
pub fn run_all(only: Option<&str>) -> Vec<CheckOutcome> {
    let checks: Vec<fn() -> CheckOutcome> = vec![
        check_paper_sign_matrix,
        check_codim_two_corollary,
        check_monomial_curves,
        check_cyclic_nonexistence,
        check_cyclic_circuit_structure,
        check_bounds,
        check_decagon_reconstruction,
        check_oracle_equivalence,
        check_conformal_machinery,
        check_small_cyclic_probe,
    ];
    let ids = check_ids();
    checks
        .into_iter()
        .zip(ids)
        .filter(|(_, (id, name))| match only {
            None => true,
            Some(filter) => *id == filter || name.contains(filter),
        })
        .map(|(f, _)| f())
        .collect()
}

fn outcome(
    id: &'static str,
    name: &'static str,
    blocking: bool,
    started: Instant,
    passed: bool,
    details: String,
) -> CheckOutcome {
    CheckOutcome {
        id,
        name,
        blocking,
        passed,
        details,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// 1. The literal 10x7 sign matrix is a complete intersection, confirmed by
/// the exhaustive oracle, in under 5 seconds.
pub fn check_paper_sign_matrix() -> CheckOutcome {
    let started = Instant::now();
    let s = paper_sign_matrix();
    let fast = find_violation(&s).is_none();
    let brute = matches!(brute_force_violation(&s, None), Ok(None));
    let elapsed = started.elapsed().as_millis();
    let passed = fast && brute && elapsed < 5000;
    outcome(
        "1",
        "paper-sign-matrix",
        true,
        started,
        passed,
        format!("fast CI = {fast}, brute-force CI = {brute}, elapsed {elapsed} ms (< 5000)"),
    )
}

fn random_configuration(rng: &mut StdRng, m: usize, n: usize, max_entry: i64) -> Option<Configuration> {
    let mut a = IntMatrix::zero(m, n);
    for j in 0..n {
        *a.at_mut(0, j) = BigInt::one();
    }
    for i in 1..m {
        for j in 0..n {
            *a.at_mut(i, j) = BigInt::from(rng.gen_range(0..=max_entry));
        }
    }
    validate(a).ok()
}

/// 2. Codimension at most two: every circuit basis of 200 random
/// configurations with r in {1, 2} passes the criterion.
pub fn check_codim_two_corollary() -> CheckOutcome {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(2);
    let mut configs = 0usize;
    let mut bases = 0usize;
    let mut violations = 0usize;
    while configs < 200 {
        let r = rng.gen_range(1..=2usize);
        let n = rng.gen_range(r + 2..=8usize);
        let m = n - r;
        let Some(cfg) = random_configuration(&mut rng, m, n, 6) else {
            continue;
        };
        let Ok(circuits) = enumerate_circuits(&cfg) else {
            continue;
        };
        if circuits.is_empty() {
            continue;
        }
        configs += 1;
        for sel in (0..circuits.len()).combinations(r) {
            let selection: Vec<&Circuit> = sel.iter().map(|&i| &circuits[i]).collect();
            let b = circuits_to_matrix(cfg.n(), &selection).expect("circuit columns");
            if b.rank() != r {
                continue;
            }
            bases += 1;
            if !is_complete_intersection(&sign_pattern(&b)) {
                violations += 1;
            }
        }
    }
    outcome(
        "2",
        "codim-two-corollary",
        true,
        started,
        violations == 0,
        format!("{configs} configurations, {bases} circuit bases tested, {violations} violations"),
    )
}

/// 3. Monomial curves: the explicit kernel basis is in the kernel, has full
/// rank, and always passes the criterion.
pub fn check_monomial_curves() -> CheckOutcome {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(3);
    let mut done = 0usize;
    let mut failures = 0usize;
    while done < 100 {
        let n = rng.gen_range(3..=10usize);
        let mut a = vec![0i64];
        let mut cur = rng.gen_range(0..=3i64).max(if n == 3 { 1 } else { 0 });
        a.push(cur);
        for _ in 2..n {
            cur = (cur + rng.gen_range(0..=6)).min(50);
            a.push(cur);
        }
        if a[1] == 0 && a[2] == 0 {
            continue; // the displayed basis degenerates on triple-repeated 0
        }
        let Ok(cfg) = monomial_curve(&a) else { continue };
        done += 1;
        match curve_ci_basis(&a) {
            Ok(b) => {
                let in_kernel = cfg.matrix().mul(&b).map(|p| p.is_zero()).unwrap_or(false);
                let full_rank = b.rank() == n - 2;
                let ci = is_complete_intersection(&sign_pattern(&b));
                if !(in_kernel && full_rank && ci) {
                    failures += 1;
                }
            }
            Err(_) => failures += 1,
        }
    }
    outcome(
        "3",
        "monomial-curves",
        true,
        started,
        failures == 0,
        format!("{done} curves, {failures} failures"),
    )
}

/// The r = 3 cyclic instance at the nonexistence bound n = 14 (m = n - r = 11).
fn cyclic_r3_n14() -> Configuration {
    cyclic_polytope_default(11, 14).expect("valid cyclic instance")
}

/// 4. Cyclic nonexistence certificate: 91 circuits, exhausted-none over all
/// C(91, 3) = 121,485 triples with exact accounting, under 60 s.
pub fn check_cyclic_nonexistence() -> CheckOutcome {
    let started = Instant::now();
    let cfg = cyclic_r3_n14();
    let report = match search_ci_circuit_basis(&cfg, &SearchOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            return outcome("4", "cyclic-nonexistence", true, started, false, e.to_string())
        }
    };
    let circuits_ok = report.counters.circuits == 91;
    let verdict_ok = report.verdict == Verdict::ExhaustedNone;
    let accounted = report.counters.tested as u128 + report.counters.covered;
    let accounting_ok = accounted == choose(91, 3) && choose(91, 3) == 121_485;
    let elapsed = started.elapsed().as_millis();
    let time_ok = elapsed < 60_000;
    outcome(
        "4",
        "cyclic-nonexistence",
        true,
        started,
        circuits_ok && verdict_ok && accounting_ok && time_ok,
        format!(
            "circuits = {} (want 91), verdict = {}, tested + covered = {accounted} (want 121485), elapsed {elapsed} ms (< 60000)",
            report.counters.circuits,
            report.verdict.as_str()
        ),
    )
}

/// 5. Structure of the 91 circuits: exactly two zeros each, alternating
/// signs, and every triple exposes two consecutive fully-nonzero rows.
pub fn check_cyclic_circuit_structure() -> CheckOutcome {
    let started = Instant::now();
    let cfg = cyclic_r3_n14();
    let circuits = match enumerate_circuits(&cfg) {
        Ok(c) => c,
        Err(e) => {
            return outcome("5", "cyclic-circuit-structure", true, started, false, e.to_string())
        }
    };
    let mut structure_ok = circuits.len() == 91;
    for c in &circuits {
        let zeros = c.vector().iter().filter(|x| x.is_zero()).count();
        if zeros != 2 {
            structure_ok = false;
        }
        let signs: Vec<i8> = c
            .support()
            .iter()
            .map(|&i| if c.vector()[i].is_positive() { 1 } else { -1 })
            .collect();
        if signs.windows(2).any(|w| w[0] == w[1]) {
            structure_ok = false;
        }
    }
    // nonzero-row masks make the triple scan cheap; the witness itself is
    // re-derived through find_two_full_rows on a sampled sign matrix below
    let masks: Vec<u32> = circuits
        .iter()
        .map(|c| {
            c.vector()
                .iter()
                .enumerate()
                .fold(0u32, |m, (i, x)| if x.is_zero() { m } else { m | 1 << i })
        })
        .collect();
    let mut triples = 0u64;
    let mut with_full_rows = 0u64;
    let mut detector_checked = 0u64;
    let mut detector_ok = true;
    for i in 0..circuits.len() {
        for j in i + 1..circuits.len() {
            let ij = masks[i] & masks[j];
            for k in j + 1..circuits.len() {
                triples += 1;
                let common = ij & masks[k];
                let has = common & (common >> 1) != 0;
                if has {
                    with_full_rows += 1;
                }
                // cross-check the dedicated detector on a deterministic sample
                if triples % 251 == 0 {
                    detector_checked += 1;
                    let sel: Vec<&Circuit> = vec![&circuits[i], &circuits[j], &circuits[k]];
                    let sm = sign_pattern(&circuits_to_matrix(cfg.n(), &sel).expect("triple"));
                    if find_two_full_rows(&sm).is_some() != has {
                        detector_ok = false;
                    }
                }
            }
        }
    }
    let passed = structure_ok
        && triples == with_full_rows
        && triples == 121_485
        && detector_ok
        && detector_checked > 0;
    outcome(
        "5",
        "cyclic-circuit-structure",
        true,
        started,
        passed,
        format!(
            "{} circuits, {with_full_rows}/{triples} triples with two consecutive full rows, detector cross-checked on {detector_checked}",
            circuits.len()
        ),
    )
}

/// 6. Counting bounds: threshold 22 in the plane, and 2(r^2 - r + 1) = 14
/// for r = 3.
pub fn check_bounds() -> CheckOutcome {
    let started = Instant::now();
    let t = bound_threshold(2);
    let e22 = bound_eval(2, 22);
    let e21 = bound_eval(2, 21);
    let c3 = codim3_bound(3);
    let passed = matches!(t, Ok(22))
        && matches!(&e22, Ok(ev) if ev.lhs == BigInt::from(7315) && ev.rhs == BigInt::from(7220) && ev.holds)
        && matches!(&e21, Ok(ev) if ev.lhs == BigInt::from(5985) && ev.rhs == BigInt::from(6156) && !ev.holds)
        && matches!(c3, Ok(14));
    outcome(
        "6",
        "bounds",
        true,
        started,
        passed,
        format!(
            "threshold(2) = {t:?}, eval(2,22) = 7315 > 7220: {}, eval(2,21) = 5985 <= 6156: {}, codim3(3) = {c3:?}",
            matches!(&e22, Ok(ev) if ev.holds),
            matches!(&e21, Ok(ev) if !ev.holds),
        ),
    )
}

/// 7. Decagon reconstruction: the seven quadruples reproduce the printed
/// sign matrix, pass the criterion, and the integer circuit matrix has
/// exact rank 7 (the paper only guarantees this generically).
pub fn check_decagon_reconstruction() -> CheckOutcome {
    let started = Instant::now();
    let run = || -> crate::error::Result<(bool, bool, usize)> {
        let cfg = convex_polygon(10)?;
        let mut columns = Vec::new();
        for quad in paper_decagon_quadruples() {
            columns.push(quadruple_circuit(&cfg, quad)?.vector().to_vec());
        }
        let b = IntMatrix::from_columns(10, &columns)?;
        let s = sign_pattern(&b);
        let paper = paper_sign_matrix();
        let matches_paper = sign_matrices_equal(&s, &paper)
            && sign_matrices_equal_up_to_column_order(&s, &paper);
        let ci = is_complete_intersection(&s) && brute_force_violation(&s, None)?.is_none();
        Ok((matches_paper, ci, b.rank()))
    };
    match run() {
        Ok((matches_paper, ci, rank)) => outcome(
            "7",
            "decagon-reconstruction",
            true,
            started,
            matches_paper && ci && rank == 7,
            format!("sign pattern matches = {matches_paper}, CI = {ci}, exact rank = {rank} (want 7)"),
        ),
        Err(e) => outcome("7", "decagon-reconstruction", true, started, false, e.to_string()),
    }
}

fn sign_matrices_equal(a: &SignMatrix, b: &SignMatrix) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && (0..a.rows()).all(|i| (0..a.cols()).all(|j| a.at(i, j) == b.at(i, j)))
}

fn sign_matrices_equal_up_to_column_order(a: &SignMatrix, b: &SignMatrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let col = |s: &SignMatrix, j: usize| -> Vec<i8> { (0..s.rows()).map(|i| s.at(i, j)).collect() };
    let mut acols: Vec<Vec<i8>> = (0..a.cols()).map(|j| col(a, j)).collect();
    let mut bcols: Vec<Vec<i8>> = (0..b.cols()).map(|j| col(b, j)).collect();
    acols.sort();
    bcols.sort();
    acols == bcols
}

/// 8. Oracle equivalence on 1000 random sign matrices.
pub fn check_oracle_equivalence() -> CheckOutcome {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(8);
    let mut disagreements = 0usize;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8usize);
        let r = rng.gen_range(1..=5usize);
        let entries: Vec<i8> = (0..n * r).map(|_| rng.gen_range(-1i8..=1)).collect();
        let s = SignMatrix::new(n, r, entries).expect("entries in range");
        let fast = find_violation(&s);
        let brute = brute_force_violation(&s, None).expect("within cap");
        let consistent = fast.is_some() == brute.is_some()
            && fast.map(|w| w.verify(&s)).unwrap_or(true)
            && brute.map(|w| w.verify(&s)).unwrap_or(true);
        if !consistent {
            disagreements += 1;
        }
    }
    outcome(
        "8",
        "oracle-equivalence",
        true,
        started,
        disagreements == 0,
        format!("1000 matrices, {disagreements} disagreements"),
    )
}

/// 9. Conformal machinery: exact reconstruction with conformal circuit
/// terms, circuits decompose as themselves, and circuitization preserves
/// rank and the CI property.
pub fn check_conformal_machinery() -> CheckOutcome {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(9);
    let mut vectors = 0usize;
    let mut failures = 0usize;
    let mut circuitized = 0usize;
    while vectors < 200 {
        let n = rng.gen_range(3..=7usize);
        let m = rng.gen_range(1..=n - 1);
        let Some(cfg) = random_configuration(&mut rng, m, n, 4) else {
            continue;
        };
        if cfg.codim() == 0 {
            continue;
        }
        let Ok(circuits) = enumerate_circuits(&cfg) else { continue };
        if circuits.is_empty() {
            continue;
        }
        let Ok(kernel) = kernel_lattice(&cfg) else { continue };
        let kb = kernel.matrix();
        // random integer kernel vector
        let coeffs: Vec<i64> = (0..kb.cols()).map(|_| rng.gen_range(-3i64..=3)).collect();
        let mut v = vec![BigInt::zero(); n];
        for (j, &c) in coeffs.iter().enumerate() {
            for i in 0..n {
                v[i] += kb.at(i, j) * BigInt::from(c);
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        vectors += 1;
        match conformal_decomposition(&cfg, &v, &circuits) {
            Ok(terms) => {
                let mut sum = RatVector::from_int(&vec![BigInt::zero(); n]);
                let mut ok = true;
                for t in &terms {
                    let neg = -t.coefficient.clone();
                    sum.sub_scaled(&neg, &t.vector);
                    if !t.coefficient.is_positive() {
                        ok = false;
                    }
                    if !is_conformal(&t.vector, &v).unwrap_or(false) {
                        ok = false;
                    }
                }
                for (i, vi) in v.iter().enumerate() {
                    if sum.get(i) != &BigRational::from(vi.clone()) {
                        ok = false;
                    }
                }
                if terms.len() > crate::circuits::support(&v).len() {
                    ok = false;
                }
                if !ok {
                    failures += 1;
                }
            }
            Err(_) => failures += 1,
        }
        // a circuit decomposes as itself with coefficient 1
        let c = &circuits[rng.gen_range(0..circuits.len())];
        match conformal_decomposition(&cfg, c.vector(), &circuits) {
            Ok(terms) => {
                if !(terms.len() == 1
                    && terms[0].coefficient.is_one()
                    && terms[0].vector == c.vector())
                {
                    failures += 1;
                }
            }
            Err(_) => failures += 1,
        }
        // circuitization preserves rank and (for CI inputs) the CI property
        if circuitized < 100 {
            let r = cfg.codim();
            let mut cols = Vec::new();
            for _ in 0..r {
                let coeffs: Vec<i64> = (0..kb.cols()).map(|_| rng.gen_range(-2i64..=2)).collect();
                let mut col = vec![BigInt::zero(); n];
                for (j, &c) in coeffs.iter().enumerate() {
                    for i in 0..n {
                        col[i] += kb.at(i, j) * BigInt::from(c);
                    }
                }
                cols.push(col);
            }
            if let Ok(b) = IntMatrix::from_columns(n, &cols) {
                if b.rank() == r {
                    circuitized += 1;
                    let input_ci = is_complete_intersection(&sign_pattern(&b));
                    match circuitize_basis(&cfg, &b) {
                        Ok(c) => {
                            if c.rank() != r {
                                failures += 1;
                            }
                            if input_ci && !is_complete_intersection(&sign_pattern(&c)) {
                                failures += 1;
                            }
                        }
                        Err(_) => failures += 1,
                    }
                }
            }
        }
    }
    outcome(
        "9",
        "conformal-machinery",
        true,
        started,
        failures == 0,
        format!("{vectors} kernel vectors, {circuitized} circuitizations, {failures} failures"),
    )
}

/// 10. Exploratory probe of the cyclic family at r = 3: n = 6..11 should
/// all admit a CI circuit basis; n = 12, 13 are open and only recorded.
pub fn check_small_cyclic_probe() -> CheckOutcome {
    let started = Instant::now();
    let mut rows = Vec::new();
    let mut low_all_found = true;
    for n in 6..=13usize {
        let m = n - 3;
        let verdict = cyclic_polytope_default(m, n)
            .and_then(|cfg| search_ci_circuit_basis(&cfg, &SearchOptions::default()))
            .map(|r| r.verdict);
        let label = match &verdict {
            Ok(v) => v.as_str().to_string(),
            Err(e) => format!("error: {e}"),
        };
        if n <= 11 && !matches!(verdict, Ok(Verdict::Found)) {
            low_all_found = false;
        }
        rows.push(format!("n={n}: {label}"));
    }
    outcome(
        "10",
        "small-cyclic-probe",
        false,
        started,
        low_all_found,
        rows.join(", "),
    )
}
