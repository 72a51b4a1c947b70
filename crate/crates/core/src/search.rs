//! Exhaustive and randomized search for a complete-intersection circuit
//! basis. By the circuit reduction, an exhausted negative over circuit
//! r-subsets certifies that no basis ideal at all is a complete
//! intersection.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::circuits::{enumerate_circuits, Circuit};
use crate::citest::{
    brute_force_violation, find_violation, is_complete_intersection, sign_pattern, MixedWitness,
    SignMatrix, BRUTE_FORCE_DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::exactmat::{choose, IntMatrix, RationalEchelon};
use crate::lattice::{lattice_index, Configuration};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchMode {
    Exhaustive,
    FirstFound,
    Randomized,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Found,
    ExhaustedNone,
    BudgetExceeded,
    /// Only produced by `check_given_basis`: this particular basis is not a
    /// complete intersection.
    NotCi,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Found => "found",
            Verdict::ExhaustedNone => "exhausted-none",
            Verdict::BudgetExceeded => "budget-exceeded",
            Verdict::NotCi => "not-ci",
        }
    }
}

#[derive(Clone, Default, Debug)]
pub struct Counters {
    pub circuits: usize,
    pub tested: u64,
    pub pruned_sign: u64,
    pub pruned_rank: u64,
    /// Leaves covered by prefix prunes; tested + covered equals
    /// C(circuits, r) on an exhausted search.
    pub covered: u128,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub verdict: Verdict,
    pub basis: Option<IntMatrix>,
    pub witness: Option<MixedWitness>,
    pub index_g: Option<BigInt>,
    pub laurent_equal: Option<bool>,
    pub counters: Counters,
    pub seed: Option<u64>,
    pub elapsed_ms: u128,
}

impl SearchReport {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.as_str(),
            "basis": self.basis.as_ref().map(|b| {
                (0..b.cols())
                    .map(|j| b.column(j).iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            }),
            "witness": self.witness.as_ref().map(|w| json!({
                "rows": w.rows.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "cols": w.cols.iter().map(|j| j + 1).collect::<Vec<_>>(),
            })),
            "g": self.index_g.as_ref().map(|g| g.to_string()),
            "laurent_equal": self.laurent_equal,
            "counters": {
                "circuits": self.counters.circuits,
                "tested": self.counters.tested,
                "pruned_sign": self.counters.pruned_sign,
                "pruned_rank": self.counters.pruned_rank,
                "covered": self.counters.covered.to_string(),
            },
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms as u64,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Budget in combinations tested (reproducible, unlike wall time).
    pub budget: Option<u64>,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::Exhaustive,
            budget: None,
            seed: 0,
            jobs: 1,
        }
    }
}

fn selection_sign_matrix(circuits: &[Circuit], chosen: &[usize], n: usize) -> SignMatrix {
    let cols: Vec<Vec<BigInt>> = chosen.iter().map(|&i| circuits[i].vector().to_vec()).collect();
    let m = IntMatrix::from_columns(n, &cols).expect("circuit vectors have length n");
    sign_pattern(&m)
}

struct DfsShared<'a> {
    circuits: &'a [Circuit],
    n: usize,
    r: usize,
    budget: u64,
    tested: &'a AtomicU64,
    stop: &'a AtomicBool,
}

enum DfsOutcome {
    Done,
    Found(Vec<usize>),
    Budget,
}

struct DfsLocal {
    pruned_sign: u64,
    pruned_rank: u64,
    covered: u128,
}

fn dfs(
    shared: &DfsShared,
    local: &mut DfsLocal,
    chosen: &mut Vec<usize>,
    echelon: &mut RationalEchelon,
    start: usize,
) -> DfsOutcome {
    let k = chosen.len();
    let need = shared.r - k;
    let count = shared.circuits.len();
    if need == 0 || count < need {
        return DfsOutcome::Done;
    }
    for next in start..=count - need {
        if shared.stop.load(Ordering::Relaxed) {
            return DfsOutcome::Done;
        }
        let leaf = need == 1;
        if leaf {
            let t = shared.tested.fetch_add(1, Ordering::Relaxed) + 1;
            if t > shared.budget {
                return DfsOutcome::Budget;
            }
        }
        chosen.push(next);
        let sm = selection_sign_matrix(shared.circuits, chosen, shared.n);
        if find_violation(&sm).is_some() {
            if !leaf {
                local.pruned_sign += 1;
                local.covered += choose(count - 1 - next, need - 1);
            }
            chosen.pop();
            continue;
        }
        if echelon.try_insert(shared.circuits[next].vector()) {
            if leaf {
                return DfsOutcome::Found(chosen.clone());
            }
            match dfs(shared, local, chosen, echelon, next + 1) {
                DfsOutcome::Done => {}
                other => return other,
            }
            echelon.pop();
        } else if !leaf {
            local.pruned_rank += 1;
            local.covered += choose(count - 1 - next, need - 1);
        }
        chosen.pop();
    }
    DfsOutcome::Done
}

/// Search r-subsets of the canonical circuit set for one whose sign matrix
/// passes the criterion and whose columns are independent. In exhaustive
/// mode a none verdict certifies that no basis ideal of I_A is a complete
/// intersection.
pub fn search_ci_circuit_basis(cfg: &Configuration, opts: &SearchOptions) -> Result<SearchReport> {
    let start_time = Instant::now();
    let r = cfg.codim();
    if r < 1 {
        return Err(Error::Domain("search needs codimension r >= 1".into()));
    }
    let circuits = enumerate_circuits(cfg)?;
    match opts.mode {
        SearchMode::Exhaustive | SearchMode::FirstFound => {
            exhaustive_search(cfg, &circuits, opts, start_time)
        }
        SearchMode::Randomized => randomized_search(cfg, &circuits, opts, start_time),
    }
}

fn exhaustive_search(
    cfg: &Configuration,
    circuits: &[Circuit],
    opts: &SearchOptions,
    start_time: Instant,
) -> Result<SearchReport> {
    let r = cfg.codim();
    let n = cfg.n();
    let budget = opts.budget.unwrap_or(u64::MAX);
    let tested = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let shared = DfsShared {
        circuits,
        n,
        r,
        budget,
        tested: &tested,
        stop: &stop,
    };
    let jobs = opts.jobs.max(1);
    let found: Mutex<Option<Vec<usize>>> = Mutex::new(None);
    let budget_hit = AtomicBool::new(false);
    let mut totals = DfsLocal {
        pruned_sign: 0,
        pruned_rank: 0,
        covered: 0,
    };
    if jobs == 1 {
        let mut chosen = Vec::new();
        let mut echelon = RationalEchelon::new(n);
        match dfs(&shared, &mut totals, &mut chosen, &mut echelon, 0) {
            DfsOutcome::Found(sel) => *found.lock().unwrap() = Some(sel),
            DfsOutcome::Budget => budget_hit.store(true, Ordering::Relaxed),
            DfsOutcome::Done => {}
        }
    } else {
        // split the prefix tree at the first level, round-robin
        let merged = Mutex::new(Vec::<DfsLocal>::new());
        std::thread::scope(|scope| {
            for worker in 0..jobs {
                let shared = &shared;
                let found = &found;
                let budget_hit = &budget_hit;
                let merged = &merged;
                scope.spawn(move || {
                    let mut local = DfsLocal {
                        pruned_sign: 0,
                        pruned_rank: 0,
                        covered: 0,
                    };
                    let count = shared.circuits.len();
                    let mut first = worker;
                    while first + shared.r <= count && !shared.stop.load(Ordering::Relaxed) {
                        let mut chosen = Vec::new();
                        let mut echelon = RationalEchelon::new(shared.n);
                        // run the subtree rooted at `first` only: emulate by
                        // bounding the top-level loop to a single index
                        let outcome = dfs_single_root(shared, &mut local, &mut chosen, &mut echelon, first);
                        match outcome {
                            DfsOutcome::Found(sel) => {
                                shared.stop.store(true, Ordering::Relaxed);
                                let mut slot = found.lock().unwrap();
                                if slot.is_none() {
                                    *slot = Some(sel);
                                }
                            }
                            DfsOutcome::Budget => {
                                budget_hit.store(true, Ordering::Relaxed);
                                shared.stop.store(true, Ordering::Relaxed);
                            }
                            DfsOutcome::Done => {}
                        }
                        first += jobs;
                    }
                    merged.lock().unwrap().push(local);
                });
            }
        });
        for local in merged.into_inner().unwrap() {
            totals.pruned_sign += local.pruned_sign;
            totals.pruned_rank += local.pruned_rank;
            totals.covered += local.covered;
        }
    }
    let counters = Counters {
        circuits: circuits.len(),
        tested: tested.load(Ordering::Relaxed).min(budget),
        pruned_sign: totals.pruned_sign,
        pruned_rank: totals.pruned_rank,
        covered: totals.covered,
    };
    let elapsed_ms = start_time.elapsed().as_millis();
    if let Some(sel) = found.into_inner().unwrap() {
        let selection: Vec<&Circuit> = sel.iter().map(|&i| &circuits[i]).collect();
        return found_report(cfg, &selection, counters, None, elapsed_ms);
    }
    if budget_hit.load(Ordering::Relaxed) {
        return Ok(SearchReport {
            verdict: Verdict::BudgetExceeded,
            basis: None,
            witness: None,
            index_g: None,
            laurent_equal: None,
            counters,
            seed: None,
            elapsed_ms,
        });
    }
    debug_assert_eq!(
        counters.tested as u128 + counters.covered,
        choose(circuits.len(), r),
        "prefix tree accounting must cover all selections"
    );
    Ok(SearchReport {
        verdict: Verdict::ExhaustedNone,
        basis: None,
        witness: None,
        index_g: None,
        laurent_equal: None,
        counters,
        seed: None,
        elapsed_ms,
    })
}

fn dfs_single_root(
    shared: &DfsShared,
    local: &mut DfsLocal,
    chosen: &mut Vec<usize>,
    echelon: &mut RationalEchelon,
    root: usize,
) -> DfsOutcome {
    let count = shared.circuits.len();
    let need = shared.r;
    let leaf = need == 1;
    if leaf {
        let t = shared.tested.fetch_add(1, Ordering::Relaxed) + 1;
        if t > shared.budget {
            return DfsOutcome::Budget;
        }
    }
    chosen.push(root);
    let sm = selection_sign_matrix(shared.circuits, chosen, shared.n);
    if find_violation(&sm).is_some() {
        if !leaf {
            local.pruned_sign += 1;
            local.covered += choose(count - 1 - root, need - 1);
        }
        return DfsOutcome::Done;
    }
    if !echelon.try_insert(shared.circuits[root].vector()) {
        if !leaf {
            local.pruned_rank += 1;
            local.covered += choose(count - 1 - root, need - 1);
        }
        return DfsOutcome::Done;
    }
    if leaf {
        return DfsOutcome::Found(chosen.clone());
    }
    dfs(shared, local, chosen, echelon, root + 1)
}

fn randomized_search(
    cfg: &Configuration,
    circuits: &[Circuit],
    opts: &SearchOptions,
    start_time: Instant,
) -> Result<SearchReport> {
    let r = cfg.codim();
    let n = cfg.n();
    let count = circuits.len();
    let total = choose(count, r);
    let budget = opts.budget.unwrap_or(u64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut counters = Counters {
        circuits: count,
        ..Default::default()
    };
    while counters.tested < budget && (seen.len() as u128) < total {
        let mut sel: Vec<usize> =
            rand::seq::index::sample(&mut rng, count, r.min(count)).into_vec();
        if sel.len() < r {
            break;
        }
        sel.sort_unstable();
        if !seen.insert(sel.clone()) {
            continue;
        }
        counters.tested += 1;
        let sm = selection_sign_matrix(circuits, &sel, n);
        if find_violation(&sm).is_some() {
            continue;
        }
        let mut echelon = RationalEchelon::new(n);
        if !sel.iter().all(|&i| echelon.try_insert(circuits[i].vector())) {
            continue;
        }
        let selection: Vec<&Circuit> = sel.iter().map(|&i| &circuits[i]).collect();
        return found_report(
            cfg,
            &selection,
            counters,
            Some(opts.seed),
            start_time.elapsed().as_millis(),
        );
    }
    let verdict = if (seen.len() as u128) >= total {
        Verdict::ExhaustedNone
    } else {
        Verdict::BudgetExceeded
    };
    Ok(SearchReport {
        verdict,
        basis: None,
        witness: None,
        index_g: None,
        laurent_equal: None,
        counters,
        seed: Some(opts.seed),
        elapsed_ms: start_time.elapsed().as_millis(),
    })
}

/// Soundness gate: every found basis is re-verified before being reported.
fn found_report(
    cfg: &Configuration,
    selection: &[&Circuit],
    counters: Counters,
    seed: Option<u64>,
    elapsed_ms: u128,
) -> Result<SearchReport> {
    let b = crate::circuits::circuits_to_matrix(cfg.n(), selection)?;
    if !cfg.matrix().mul(&b)?.is_zero() {
        return Err(Error::Invariant("found basis is not in the kernel".into()));
    }
    if b.rank() != cfg.codim() {
        return Err(Error::Invariant("found basis is rank deficient".into()));
    }
    let sm = sign_pattern(&b);
    if !is_complete_intersection(&sm) {
        return Err(Error::Invariant("found basis fails the CI criterion".into()));
    }
    if cfg.n() <= BRUTE_FORCE_DEFAULT_CAP && brute_force_violation(&sm, None)?.is_some() {
        return Err(Error::Invariant("brute-force oracle refutes the found basis".into()));
    }
    let g = lattice_index(cfg, &b)?;
    let laurent = g.is_one();
    Ok(SearchReport {
        verdict: Verdict::Found,
        basis: Some(b),
        witness: None,
        index_g: Some(g),
        laurent_equal: Some(laurent),
        counters,
        seed,
        elapsed_ms,
    })
}

/// One-shot CI and index report for a user-supplied basis matrix.
pub fn check_given_basis(cfg: &Configuration, b: &IntMatrix) -> Result<SearchReport> {
    let start_time = Instant::now();
    let g = lattice_index(cfg, b)?; // errors on invalid bases
    let sm = sign_pattern(b);
    let witness = find_violation(&sm);
    let laurent = g.is_one();
    Ok(SearchReport {
        verdict: if witness.is_none() {
            Verdict::Found
        } else {
            Verdict::NotCi
        },
        basis: Some(b.clone()),
        witness,
        index_g: Some(g),
        laurent_equal: Some(laurent),
        counters: Counters::default(),
        seed: None,
        elapsed_ms: start_time.elapsed().as_millis(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Cyclic,
    Polygon,
}

#[derive(Debug)]
pub struct BoundProbe {
    pub n: usize,
    pub report: SearchReport,
}

/// Exhaustive search per n over a configuration family, for empirical
/// probing of the nonexistence bounds. For `Cyclic` the parameter is the
/// codimension r (so m = n - r, t = 1..n); for `Polygon` it is the plane
/// dimension and must be 2.
pub fn verify_nonexistence_bound(
    family: Family,
    param: usize,
    n_range: std::ops::RangeInclusive<usize>,
    per_row_budget: Option<u64>,
) -> Result<Vec<BoundProbe>> {
    let mut out = Vec::new();
    for n in n_range {
        let cfg = match family {
            Family::Cyclic => {
                if param < 1 || n <= param {
                    return Err(Error::Domain(format!(
                        "cyclic family needs n > r >= 1, got n = {n}, r = {param}"
                    )));
                }
                crate::generators::cyclic_polytope_default(n - param, n)?
            }
            Family::Polygon => {
                if param != 2 {
                    return Err(Error::Domain("polygon family is planar (d = 2)".into()));
                }
                crate::generators::convex_polygon(n)?
            }
        };
        let opts = SearchOptions {
            mode: SearchMode::Exhaustive,
            budget: per_row_budget,
            ..Default::default()
        };
        let report = search_ci_circuit_basis(&cfg, &opts)?;
        out.push(BoundProbe { n, report });
    }
    Ok(out)
}
