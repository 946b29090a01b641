//! Command implementations behind the `ideal-forge` binary.
//!
//! Every command produces exactly one JSON document. Exit codes: 0 success,
//! 1 a check failed, 2 bad input or a resource cap was hit.

pub mod expr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use ideal_forge::decomp::{decompose, skew_among, theorem1_profile, DecompositionResult};
use ideal_forge::lattice::IdealLattice;
use ideal_forge::malcev::satisfies_malcev;
use ideal_forge::zz::{theorem3_sweep, DEFAULT_SWEEP_BUDGET};
use ideal_forge::{
    additive_exponent, all_ideals, find_malcev, is_distributive, is_modular, theorem3_predicate, verify_axioms,
    xgcd, FiniteRing, Ideal, ZZPrincipalIdeal, DEFAULT_IDEAL_CAP, DEFAULT_SEARCH_CAP,
};

use expr::{Evaluated, RingExpr};

pub const CAP_ENV: &str = "IDEAL_FORGE_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
}

#[derive(Debug, Parser)]
#[command(name = "ideal-forge", version, about = "Ideal lattices, skew ideals of direct products, and Mal'cev witness search")]
pub struct Cli {
    /// Indent the JSON output (whitespace only)
    #[arg(long, global = true, alias = "json-indent")]
    pub pretty: bool,
    /// Worker threads for the parallel stages
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Maximum number of ideals to enumerate
    #[arg(long, global = true, env = CAP_ENV, default_value_t = DEFAULT_IDEAL_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate or export a ring
    #[command(subcommand)]
    Ring(RingCommand),
    /// Enumerate the ideal lattice of a ring
    Ideals { expr: String },
    /// Find the skew ideals of a direct product
    Skew { left: String, right: String },
    /// Search for a term t with x*t(x) = x
    Malcev {
        expr: String,
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Maximum number of coefficient vectors to try
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        search_cap: u64,
    },
    /// Principal ideals of cZ x dZ
    #[command(subcommand)]
    Zz(ZzCommand),
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// Check the ring axioms
    Verify { expr: String },
    /// Print the ring as a ring-spec document
    Dump { expr: String },
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct Generator {
    #[arg(short = 'a', allow_negative_numbers = true)]
    pub a: BigInt,
    #[arg(short = 'b', allow_negative_numbers = true)]
    pub b: BigInt,
    #[arg(short = 'c', allow_negative_numbers = true)]
    pub c: BigInt,
    #[arg(short = 'd', allow_negative_numbers = true)]
    pub d: BigInt,
}

#[derive(Debug, Subcommand)]
pub enum ZzCommand {
    /// Is (u, v) in I(a, b)?
    Member {
        #[command(flatten)]
        generator: Generator,
        #[arg(short = 'u', allow_negative_numbers = true)]
        u: BigInt,
        #[arg(short = 'v', allow_negative_numbers = true)]
        v: BigInt,
    },
    /// Is I(a, b) directly decomposable?
    Decompose {
        #[command(flatten)]
        generator: Generator,
    },
    /// Cross-check the decision procedures on all small parameters
    Sweep {
        #[arg(long, default_value_t = 6)]
        bound: i64,
        /// Maximum number of membership grid points
        #[arg(long, default_value_t = DEFAULT_SWEEP_BUDGET)]
        budget: u128,
    },
}

/// A finished command: its exit code and JSON document.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Self { code: 0, report }
    }

    fn check(passed: bool, report: Value) -> Self {
        Self {
            code: if passed { 0 } else { 1 },
            report,
        }
    }

    fn input_error(err: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            report: json!({ "error": err.to_string() }),
        }
    }
}

/// Runs a parsed command on a thread pool of `cli.jobs` workers.
pub fn run(cli: &Cli) -> Outcome {
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome::input_error(e),
    };
    pool.install(|| dispatch(cli).unwrap_or_else(Outcome::input_error))
}

pub fn render(outcome: &Outcome, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(&outcome.report)
    } else {
        serde_json::to_string(&outcome.report)
    }
    .expect("JSON values serialize")
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Ring(RingCommand::Verify { expr }) => ring_verify(expr),
        Command::Ring(RingCommand::Dump { expr }) => ring_dump(expr),
        Command::Ideals { expr } => ideals(expr, cli.cap),
        Command::Skew { left, right } => skew(left, right, cli.cap),
        Command::Malcev {
            expr,
            degree_bound,
            search_cap,
        } => malcev(expr, *degree_bound, *search_cap),
        Command::Zz(cmd) => zz(cmd),
    }
}

fn evaluate(src: &str) -> Result<Evaluated, CliError> {
    expr::parse(src)?.eval()
}

fn label_list(ring: &FiniteRing, ideal: &Ideal) -> Value {
    json!(ideal.labels(ring))
}

pub fn ring_verify(src: &str) -> Result<Outcome, CliError> {
    let parsed = expr::parse(src)?;
    // files are checked without construction so violations can be reported
    let (spec, ring_json) = match &parsed {
        RingExpr::File(path) => (expr::load_spec(path)?, json!(src)),
        other => (other.eval()?.ring().to_spec(), json!(src)),
    };
    let report = verify_axioms(&spec).map_err(|e| CliError::Input(e.to_string()))?;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let labels: Vec<&str> = v
                .witness
                .iter()
                .map(|&x| spec.labels.get(x).map_or("?", String::as_str))
                .collect();
            json!({ "axiom": v.axiom.name(), "witness": v.witness, "witness_labels": labels })
        })
        .collect();
    let commutative = spec.commutative.unwrap_or_else(|| {
        (0..spec.order).all(|x| (0..spec.order).all(|y| spec.mul[x][y] == spec.mul[y][x]))
    });
    Ok(Outcome::check(
        report.passed,
        json!({
            "ring": ring_json,
            "order": spec.order,
            "commutative": report.passed && commutative,
            "passed": report.passed,
            "violations": violations,
        }),
    ))
}

pub fn ring_dump(src: &str) -> Result<Outcome, CliError> {
    let spec = evaluate(src)?.ring().to_spec();
    Ok(Outcome::ok(serde_json::to_value(spec).expect("spec serializes")))
}

fn cap_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

pub fn ideals(src: &str, cap: usize) -> Result<Outcome, CliError> {
    let evaluated = evaluate(src)?;
    let ring = evaluated.ring();
    let ideals = all_ideals(ring, cap).map_err(cap_error)?;
    let lattice = IdealLattice::from_ideals(ring, ideals).map_err(cap_error)?;
    let hasse = lattice.hasse(ring);
    Ok(Outcome::ok(json!({
        "ring": src,
        "order": ring.order(),
        "count": lattice.len(),
        "ideals": lattice.ideals().iter().map(|i| label_list(ring, i)).collect::<Vec<_>>(),
        "distributive": is_distributive(&lattice),
        "modular": is_modular(&lattice),
        "lattice": hasse,
    })))
}

pub fn skew(left_src: &str, right_src: &str, cap: usize) -> Result<Outcome, CliError> {
    let left = evaluate(left_src)?.into_ring();
    let right = evaluate(right_src)?.into_ring();
    let p = ideal_forge::direct_product(&left, &right);
    let c = p.carrier();
    let ideals = all_ideals(c, cap).map_err(cap_error)?;

    let mut agreement = true;
    for i in &ideals {
        let profile = theorem1_profile(&p, i).map_err(cap_error)?;
        if !profile.agrees() {
            eprintln!("conditions disagree on ideal {:?}: {profile:?}", i.labels(c));
            agreement = false;
        }
    }
    let ideal_count = ideals.len();
    let skew = skew_among(&p, ideals);
    let witnesses: Vec<Value> = skew
        .iter()
        .map(|i| {
            let witness = match decompose(&p, i).expect("ideal of the carrier") {
                DecompositionResult::Skew { witness } => witness,
                DecompositionResult::Decomposable { .. } => unreachable!("filtered as skew"),
            };
            json!({ "ideal": label_list(c, i), "witness": c.label(witness) })
        })
        .collect();
    Ok(Outcome::check(
        agreement,
        json!({
            "factors": [left_src, right_src],
            "order": c.order(),
            "ideal_count": ideal_count,
            "skew_count": skew.len(),
            "skew_witnesses": witnesses,
            "theorem1_agreement": agreement,
        }),
    ))
}

pub fn malcev(src: &str, degree_bound: Option<usize>, search_cap: u64) -> Result<Outcome, CliError> {
    let ring = evaluate(src)?.into_ring();
    let outcome = find_malcev(&ring, degree_bound, search_cap).map_err(cap_error)?;
    let verified = outcome.witness.as_ref().is_some_and(|w| satisfies_malcev(&ring, w));
    let mut report = json!({
        "ring": src,
        "exponent": additive_exponent(&ring),
        "degree_bound": outcome.searched_degree_bound,
        "found": outcome.found,
        "verified": verified,
        "noncommutative": outcome.noncommutative,
    });
    if let Some(w) = &outcome.witness {
        report["coefficients"] = json!(w.coeffs());
    }
    Ok(Outcome::check(!outcome.found || verified, report))
}

/// Integers as JSON numbers when they fit in `i64`, strings otherwise.
fn int(v: &BigInt) -> Value {
    i64::try_from(v).map_or_else(|_| json!(v.to_string()), |x| json!(x))
}

fn ideal_of(g: &Generator) -> Result<ZZPrincipalIdeal, CliError> {
    ZZPrincipalIdeal::new(g.a.clone(), g.b.clone(), g.c.clone(), g.d.clone()).map_err(|e| CliError::Input(e.to_string()))
}

pub fn zz(cmd: &ZzCommand) -> Result<Outcome, CliError> {
    match cmd {
        ZzCommand::Member { generator, u, v } => {
            let ideal = ideal_of(generator)?;
            let member = ideal.member(u, v).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(Outcome::ok(json!({
                "a": int(&generator.a), "b": int(&generator.b),
                "c": int(&generator.c), "d": int(&generator.d),
                "u": int(u), "v": int(v),
                "member": member,
            })))
        }
        ZzCommand::Decompose { generator } => {
            let ideal = ideal_of(generator)?;
            let g = generator;
            let predicate = theorem3_predicate(&g.a, &g.b, &g.c, &g.d).map_err(|e| CliError::Input(e.to_string()))?;
            let bezout = xgcd(&g.c, &g.d);
            let decomposable = ideal.is_decomposable();
            Ok(Outcome::check(
                decomposable == predicate,
                json!({
                    "a": int(&g.a), "b": int(&g.b), "c": int(&g.c), "d": int(&g.d),
                    "decomposable": decomposable,
                    "gcd_criterion": predicate,
                    "bezout": { "g": int(&bezout.g), "e": int(&bezout.e), "f": int(&bezout.f) },
                }),
            ))
        }
        ZzCommand::Sweep { bound, budget } => {
            let report = theorem3_sweep(*bound, *budget).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(Outcome::check(
                report.mismatches.is_empty(),
                serde_json::to_value(&report).expect("report serializes"),
            ))
        }
    }
}
