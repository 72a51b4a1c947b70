//! Command-line front end. Exit codes are part of the interface:
//! 0 success / CI / basis found, 2 bad input, 3 invalid basis,
//! 10 not a complete intersection, 11 search exhausted with no basis,
//! 12 search budget exceeded.

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuits::enumerate_circuits;
use crate::citest::{brute_force_violation, find_violation, sign_pattern, SignMatrix};
use crate::error::Error;
use crate::exactmat::IntMatrix;
use crate::generators::{
    bound_eval, bound_threshold, codim3_bound, convex_polygon, curve_ci_basis,
    cyclic_polytope, cyclic_polytope_default, monomial_curve,
};
use crate::lattice::{binomial_strings, kernel_lattice, validate, Configuration};
use crate::search::{check_given_basis, search_ci_circuit_basis, SearchMode, SearchOptions, Verdict};
use crate::verify::run_all;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INVALID_BASIS: u8 = 3;
pub const EXIT_NOT_CI: u8 = 10;
pub const EXIT_EXHAUSTED: u8 = 11;
pub const EXIT_BUDGET: u8 = 12;

#[derive(Parser)]
#[command(
    name = "toric-ci",
    about = "Decide whether a toric ideal contains a complete-intersection basis ideal",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a saturated basis of the kernel lattice of a configuration
    Kernel {
        /// Configuration matrix file ("-" for stdin)
        file: String,
    },
    /// Enumerate the circuits of a configuration
    Circuits {
        /// Configuration matrix file ("-" for stdin)
        file: String,
        /// Also print each circuit as a binomial
        #[arg(long)]
        binomials: bool,
    },
    /// Test a lattice basis (or a bare sign matrix) for the mixed-submatrix criterion
    CiCheck(CiCheckArgs),
    /// Search the circuit bases of a configuration for a complete intersection
    Search(SearchArgs),
    /// Generate a configuration from a named family
    Gen(GenArgs),
    /// Evaluate the counting bounds
    Bound(BoundArgs),
    /// Re-run the built-in reproduction checks
    VerifyPaper {
        /// Run only checks whose id or name contains this string
        #[arg(long)]
        only: Option<String>,
        /// Emit one JSON object per check
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CiCheckArgs {
    /// Configuration matrix file (omit when using --signs)
    config: Option<String>,
    /// Candidate lattice basis file (columns are kernel vectors)
    basis: Option<String>,
    /// Check a bare sign matrix (+ - 0 tokens) instead of a basis
    #[arg(long, conflicts_with_all = ["config", "basis"])]
    signs: Option<String>,
    /// Confirm the verdict with the exhaustive submatrix scan (n <= 12 rows)
    #[arg(long)]
    brute_force: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Configuration matrix file ("-" for stdin)
    file: String,
    /// Search strategy
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Stop after testing this many circuit combinations
    /// (default: TORIC_CI_BUDGET if set, otherwise unlimited)
    #[arg(long)]
    budget: Option<u64>,
    /// RNG seed for --mode random
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the exhaustive mode
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Emit the full report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    First,
    Random,
}

#[derive(Args)]
struct GenArgs {
    /// Family to generate
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Exponents for --family curve, e.g. "0,1,2,3"
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    a: Option<Vec<i64>>,
    /// Ambient row count for --family cyclic
    #[arg(long)]
    m: Option<usize>,
    /// Number of columns (cyclic and polygon)
    #[arg(long)]
    n: Option<usize>,
    /// Explicit parameter values for --family cyclic, e.g. "1,2,4,8"
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    t: Option<Vec<i64>>,
    /// Also print the curve's explicit complete-intersection basis
    #[arg(long)]
    with_basis: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Curve,
    Cyclic,
    Polygon,
}

#[derive(Args)]
struct BoundArgs {
    /// Polytope dimension for the counting bound
    #[arg(long)]
    d: Option<usize>,
    /// Evaluate the d-dimensional bound at a specific n (omit for the threshold)
    #[arg(long)]
    n: Option<usize>,
    /// Codimension: print the nonexistence bound 2(r^2 - r + 1)
    #[arg(long)]
    r: Option<usize>,
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InvalidBasis(_) => EXIT_INVALID_BASIS,
                _ => EXIT_PARSE,
            };
            ExitCode::from(code)
        }
    }
}

fn read_input(path: &str) -> crate::error::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{path}: {e}"),
        })
    }
}

fn read_configuration(path: &str) -> crate::error::Result<Configuration> {
    validate(IntMatrix::parse_text(&read_input(path)?)?)
}

fn dispatch(cli: Cli) -> crate::error::Result<u8> {
    match cli.command {
        Command::Kernel { file } => cmd_kernel(&file),
        Command::Circuits { file, binomials } => cmd_circuits(&file, binomials),
        Command::CiCheck(args) => cmd_ci_check(args),
        Command::Search(args) => cmd_search(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bound(args) => cmd_bound(args),
        Command::VerifyPaper { only, json } => Ok(cmd_verify(only.as_deref(), json)),
    }
}

fn cmd_kernel(file: &str) -> crate::error::Result<u8> {
    let cfg = read_configuration(file)?;
    let basis = kernel_lattice(&cfg)?;
    println!("# kernel lattice basis, codimension {}", cfg.codim());
    print!("{}", basis.matrix().to_text());
    Ok(EXIT_OK)
}

fn cmd_circuits(file: &str, binomials: bool) -> crate::error::Result<u8> {
    let cfg = read_configuration(file)?;
    let circuits = enumerate_circuits(&cfg)?;
    println!("# {} circuits", circuits.len());
    if binomials {
        let cols: Vec<Vec<_>> = circuits.iter().map(|c| c.vector().to_vec()).collect();
        let b = IntMatrix::from_columns(cfg.n(), &cols)?;
        for (c, s) in circuits.iter().zip(binomial_strings(&b)) {
            println!("{}    {s}", format_vector(c.vector()));
        }
    } else {
        for c in &circuits {
            println!("{}", format_vector(c.vector()));
        }
    }
    Ok(EXIT_OK)
}

fn format_vector(v: &[num_bigint::BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_ci_check(args: CiCheckArgs) -> crate::error::Result<u8> {
    if let Some(signs_path) = args.signs {
        let s = SignMatrix::parse_text(&read_input(&signs_path)?)?;
        let witness = find_violation(&s);
        if args.brute_force {
            let brute = brute_force_violation(&s, None)?;
            if brute.is_some() != witness.is_some() {
                return Err(Error::Invariant(
                    "fast and brute-force criterion disagree".into(),
                ));
            }
        }
        return Ok(report_witness(witness));
    }
    let (Some(config), Some(basis)) = (args.config, args.basis) else {
        return Err(Error::Parse {
            line: 0,
            msg: "expected CONFIG and BASIS files, or --signs FILE".into(),
        });
    };
    let cfg = read_configuration(&config)?;
    let b = IntMatrix::parse_text(&read_input(&basis)?)?;
    let report = check_given_basis(&cfg, &b)?;
    if let (Some(g), Some(eq)) = (&report.index_g, report.laurent_equal) {
        println!(
            "lattice index g = {g}, Laurent equality: {}",
            if eq { "yes" } else { "no" }
        );
    }
    if args.brute_force {
        let brute = brute_force_violation(&sign_pattern(&b), None)?;
        if brute.is_some() != report.witness.is_some() {
            return Err(Error::Invariant(
                "fast and brute-force criterion disagree".into(),
            ));
        }
    }
    Ok(report_witness(report.witness))
}

fn report_witness(witness: Option<crate::citest::MixedWitness>) -> u8 {
    match witness {
        None => {
            println!("complete intersection: yes");
            EXIT_OK
        }
        Some(w) => {
            println!("complete intersection: no");
            println!(
                "mixed witness: rows {:?}, columns {:?} (1-based)",
                w.rows.iter().map(|i| i + 1).collect::<Vec<_>>(),
                w.cols.iter().map(|j| j + 1).collect::<Vec<_>>(),
            );
            EXIT_NOT_CI
        }
    }
}

fn cmd_search(args: SearchArgs) -> crate::error::Result<u8> {
    let cfg = read_configuration(&args.file)?;
    let budget = args.budget.or_else(|| {
        std::env::var("TORIC_CI_BUDGET").ok().and_then(|v| v.parse().ok())
    });
    let opts = SearchOptions {
        mode: match args.mode {
            ModeArg::Exhaustive => SearchMode::Exhaustive,
            ModeArg::First => SearchMode::FirstFound,
            ModeArg::Random => SearchMode::Randomized,
        },
        budget,
        seed: args.seed,
        jobs: args.jobs.max(1),
    };
    let report = search_ci_circuit_basis(&cfg, &opts)?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        println!(
            "verdict: {} ({} circuits, {} combinations tested, {} covered by pruning)",
            report.verdict.as_str(),
            report.counters.circuits,
            report.counters.tested,
            report.counters.covered,
        );
        if let Some(b) = &report.basis {
            if let Some(g) = &report.index_g {
                println!("lattice index g = {g}");
            }
            for s in binomial_strings(b) {
                println!("  {s}");
            }
            print!("{}", b.to_text());
        }
    }
    Ok(match report.verdict {
        Verdict::Found => EXIT_OK,
        Verdict::NotCi => EXIT_NOT_CI,
        Verdict::ExhaustedNone => EXIT_EXHAUSTED,
        Verdict::BudgetExceeded => EXIT_BUDGET,
    })
}

fn cmd_gen(args: GenArgs) -> crate::error::Result<u8> {
    let missing = |msg: &str| Error::Parse { line: 0, msg: msg.into() };
    match args.family {
        FamilyArg::Curve => {
            let a = args.a.ok_or_else(|| missing("--family curve requires --a"))?;
            let cfg = monomial_curve(&a)?;
            print!("{}", cfg.matrix().to_text());
            if args.with_basis {
                let b = curve_ci_basis(&a)?;
                println!("# explicit complete-intersection kernel basis");
                print!("{}", b.to_text());
            }
        }
        FamilyArg::Cyclic => {
            let m = args.m.ok_or_else(|| missing("--family cyclic requires --m"))?;
            let cfg = match args.t {
                Some(t) => cyclic_polytope(m, &t)?,
                None => {
                    let n = args.n.ok_or_else(|| missing("--family cyclic requires --n or --t"))?;
                    cyclic_polytope_default(m, n)?
                }
            };
            print!("{}", cfg.matrix().to_text());
        }
        FamilyArg::Polygon => {
            let n = args.n.ok_or_else(|| missing("--family polygon requires --n"))?;
            print!("{}", convex_polygon(n)?.matrix().to_text());
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bound(args: BoundArgs) -> crate::error::Result<u8> {
    match (args.d, args.r) {
        (Some(d), None) => match args.n {
            Some(n) => {
                let ev = bound_eval(d, n)?;
                println!(
                    "d = {d}, n = {n}: C(n, d+2) = {} {} 2(n-d-1)C(n-2, d) = {}",
                    ev.lhs,
                    if ev.holds { ">" } else { "<=" },
                    ev.rhs,
                );
            }
            None => {
                let t = bound_threshold(d)?;
                println!("d = {d}: bound holds for all n >= {t}");
            }
        },
        (None, Some(r)) => {
            println!("codimension {r}: no CI circuit basis guaranteed for n >= {}", codim3_bound(r)?);
        }
        _ => {
            return Err(Error::Parse {
                line: 0,
                msg: "expected --d [--n] or --r".into(),
            })
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(only: Option<&str>, json: bool) -> u8 {
    let outcomes = run_all(only);
    if outcomes.is_empty() {
        eprintln!("no checks match the filter");
        return EXIT_PARSE;
    }
    let mut failed = false;
    for o in &outcomes {
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "id": o.id,
                    "name": o.name,
                    "status": o.status(),
                    "blocking": o.blocking,
                    "passed": o.passed,
                    "details": o.details,
                    "elapsed_ms": o.elapsed_ms as u64,
                })
            );
        } else {
            println!("[{}] {} {} — {}", o.status(), o.id, o.name, o.details);
        }
        if o.blocking && !o.passed {
            failed = true;
        }
    }
    if failed {
        1
    } else {
        EXIT_OK
    }
}
