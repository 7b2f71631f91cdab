//! Command-line interface: lifting chains, bound constants, the exhaustive
//! solver, valuation scans, the Woodall slice, and the `verify` pipeline.
//!
//! Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 internal
//! assertion failure. Big integers are read and written as decimal strings
//! (scientific notation like `1e66` is accepted on input).

use clap::{Args, Parser, Subcommand};
use cullen_sunits::bounds::{general_constants, sunit_constants};
use cullen_sunits::cache::Cache;
use cullen_sunits::lifting::{
    solutions_mod_prime_power, valuation_ceiling, CeilingResult, LiftTarget,
};
use cullen_sunits::padic::SmoothnessBasis;
use cullen_sunits::real::{parse_decimal, Dir, Precision};
use cullen_sunits::recurrence::{cullen, make_recurrence, woodall, TernaryRecurrence};
use cullen_sunits::search::{scan_nu11_case, scan_valuation, solve_cullen, woodall_check};
use cullen_sunits_cli::verify::{self, Profile, VerifyReport};
use num_bigint::BigInt;
use num_traits::One;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cullen-sunits",
    version,
    about = "Valuation toolkit for Cullen numbers as sums of factorials and smooth numbers"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Thread count for the block-parallel scans (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Cache directory (falls back to $CACHE_DIR, then ./.cache/cullen-sunits).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Working precision in significant decimal digits for bound constants.
    #[arg(long, global = true, default_value_t = 60)]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lift chains for n 2^n ≡ t' (mod p^k): base residues, prime-power
    /// solutions, or a valuation ceiling over n <= N.
    Lift(LiftArgs),
    /// Print the effective bound constants for a sequence.
    Bounds(BoundsArgs),
    /// Exhaustively solve C_n = m1! + m2! + s over a smoothness basis.
    Search(SearchArgs),
    /// Valuation scans: max nu_p(C_n - t) over an index range, or the
    /// nu_11/nu_13 case with --nu11.
    Scan(ScanArgs),
    /// Solutions of W_n = 1! + s with smooth s, up to n-max.
    Woodall(WoodallArgs),
    /// Run the verification suite and print its report.
    Verify(VerifyArgs),
    /// Print the most recent verification report from the cache.
    Report,
}

#[derive(Args)]
struct LiftArgs {
    /// Odd prime modulus base.
    #[arg(long)]
    p: u64,
    /// Right-hand side t' of n 2^n ≡ t'.
    #[arg(long = "t-prime", allow_hyphen_values = true)]
    t_prime: String,
    /// Ceiling range bound N (decimal or scientific, e.g. 1e66).
    #[arg(long = "N")]
    n_cap: Option<String>,
    /// Prime-power exponent k for the solution list mod p^k (p-1).
    #[arg(long)]
    k: Option<u32>,
    /// Resume a ceiling from a checkpoint file written by a previous run.
    #[arg(long)]
    resume: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Number of factorial terms k.
    #[arg(long)]
    k: u32,
    /// Coefficient bound A.
    #[arg(long = "A")]
    a_bound: u64,
    /// Largest basis prime P (enables c5/c6/c7).
    #[arg(long = "P")]
    p_max: Option<u64>,
    /// cullen, woodall, or custom:r1,r2,r3,u0,u1,u2.
    #[arg(long, default_value = "cullen")]
    sequence: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long = "n-max")]
    n_max: u64,
    #[arg(long = "m1-max")]
    m1_max: u64,
    /// Comma-separated prime basis.
    #[arg(long, default_value = "2,3,5,7")]
    basis: String,
}

#[derive(Args)]
struct ScanArgs {
    /// Run the nu_11/nu_13 case instead of a plain valuation scan.
    #[arg(long)]
    nu11: bool,
    #[arg(long, required_unless_present = "nu11")]
    p: Option<u64>,
    /// Constant t in nu_p(C_n - t); default 0.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    t: String,
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// Valuation cap governing the scan modulus p^(cap+1).
    #[arg(long, default_value_t = 20)]
    cap: u32,
    /// Also list every index with valuation at or above this threshold.
    #[arg(long)]
    threshold: Option<u64>,
}

#[derive(Args)]
struct WoodallArgs {
    #[arg(long = "n-max", default_value_t = 10_000)]
    n_max: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// quick (skips the 236899-range scans) or full.
    #[arg(long, default_value = "full")]
    profile: String,
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

fn parse_big(s: &str) -> Result<BigInt, CliError> {
    let (num, den) = std::panic::catch_unwind(|| parse_decimal(s))
        .map_err(|_| CliError::usage(format!("cannot parse integer {s:?}")))?;
    if !den.is_one() {
        return Err(CliError::usage(format!("{s:?} is not an integer")));
    }
    Ok(num)
}

fn open_cache(dir: &Option<PathBuf>) -> Result<Cache, CliError> {
    let path = dir
        .clone()
        .or_else(|| std::env::var_os("CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(".cache/cullen-sunits"));
    Cache::open(&path).map_err(|e| CliError::Internal(format!("cannot open cache {path:?}: {e}")))
}

fn sequence_from_flag(flag: &str) -> Result<TernaryRecurrence, CliError> {
    match flag {
        "cullen" => Ok(cullen()),
        "woodall" => Ok(woodall()),
        other => {
            let spec = other.strip_prefix("custom:").ok_or_else(|| {
                CliError::usage("sequence must be cullen, woodall or custom:r1,r2,r3,u0,u1,u2")
            })?;
            let parts: Vec<i64> = spec
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::usage(format!("bad custom sequence: {e}")))?;
            if parts.len() != 6 {
                return Err(CliError::usage("custom sequence needs six integers"));
            }
            make_recurrence(parts[0], parts[1], parts[2], parts[3], parts[4], parts[5])
                .map_err(|e| CliError::usage(format!("invalid recurrence: {e}")))
        }
    }
}

fn ceiling_json(result: &CeilingResult) -> serde_json::Value {
    let uniform = result
        .values_at(result.ceiling)
        .expect("chains extend to the global ceiling");
    serde_json::json!({
        "p": result.p,
        "tPrime": result.t_prime.to_string(),
        "N": result.n_cap.to_string(),
        "J": result.ceiling,
        "perBase": result.per_base.iter().zip(uniform).map(|(b, at_j)| serde_json::json!({
            "base": b.base,
            "J": b.crossing,
            "n": b.chain.n.to_string(),
            "nAtGlobalJ": at_j.to_string(),
            "digits": b.chain.digits,
        })).collect::<Vec<_>>(),
        "exactRoots": result.exact_roots,
    })
}

fn cmd_lift(args: &LiftArgs, cache: &Cache, json: bool) -> Result<ExitCode, CliError> {
    let t_prime = parse_big(&args.t_prime)?;
    let target =
        LiftTarget::new(args.p, t_prime.clone()).map_err(|e| CliError::usage(e.to_string()))?;

    if let Some(k) = args.k {
        let sols =
            solutions_mod_prime_power(&target, k).map_err(|e| CliError::usage(e.to_string()))?;
        let value = serde_json::json!({
            "p": args.p,
            "tPrime": t_prime.to_string(),
            "k": k,
            "solutions": sols.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        });
        if json {
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            println!(
                "solutions of n 2^n = {t_prime} mod {}^{k} in one period:",
                args.p
            );
            for s in sols {
                println!("  {s}");
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let n_cap = match &args.n_cap {
        Some(s) => parse_big(s)?,
        None => return Err(CliError::usage("lift needs either --k or --N")),
    };

    let key = Cache::key(
        "lift-ceiling",
        &format!("p={},t'={t_prime},N={n_cap}", args.p),
    );
    let mut result: Option<CeilingResult> = None;
    if let Some(path) = &args.resume {
        let raw = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read checkpoint {path:?}: {e}")))?;
        let v: serde_json::Value = serde_json::from_str(&raw)
            .map_err(|e| CliError::usage(format!("bad checkpoint JSON: {e}")))?;
        let mut prior: CeilingResult = serde_json::from_value(v)
            .map_err(|e| CliError::usage(format!("bad checkpoint: {e}")))?;
        if prior.p != args.p || prior.t_prime != t_prime {
            return Err(CliError::usage("checkpoint is for different parameters"));
        }
        if prior.n_cap > n_cap {
            return Err(CliError::usage(
                "checkpoint covers a larger range than --N; rerun without --resume",
            ));
        }
        if !prior.is_consistent() {
            return Err(CliError::usage("checkpoint fails its consistency check"));
        }
        // Extend each chain until it clears the (possibly larger) bound.
        for b in &mut prior.per_base {
            while b.chain.n <= n_cap {
                b.chain
                    .step()
                    .map_err(|e| CliError::Internal(e.to_string()))?;
            }
            b.crossing = b.chain.steps();
        }
        prior.ceiling = prior.per_base.iter().map(|b| b.crossing).max().unwrap_or(0);
        prior.n_cap = n_cap.clone();
        result = Some(prior);
    } else if let Some(v) = cache.get(&key) {
        if let Ok(r) = serde_json::from_value::<CeilingResult>(v) {
            if r.is_consistent() {
                result = Some(r);
            }
        }
    }
    let result = match result {
        Some(r) => r,
        None => {
            valuation_ceiling(&target, &n_cap).map_err(|e| CliError::Internal(e.to_string()))?
        }
    };
    let value = ceiling_json(&result);
    let _ = cache.put(&key, &serde_json::to_value(&result).unwrap());
    if json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "ceiling for nu_{}(n 2^n - ({t_prime})) over n <= {n_cap}: J = {}",
            args.p, result.ceiling
        );
        let uniform = result
            .values_at(result.ceiling)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        for (b, at_j) in result.per_base.iter().zip(uniform) {
            println!(
                "  base {:>3}: crossing at {:>4}, n_{} = {at_j}",
                b.base, b.crossing, result.ceiling
            );
        }
        if !result.exact_roots.is_empty() {
            println!(
                "  exact roots (infinite valuation): {:?}",
                result.exact_roots
            );
        }
        println!("checkpoint cached under key {key}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(args: &BoundsArgs, prec: Precision, json: bool) -> Result<ExitCode, CliError> {
    let rec = sequence_from_flag(&args.sequence)?;
    let gc = general_constants(args.k, args.a_bound, &rec, prec)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let sample_n = gc.c4.clone().max(BigInt::from(3u32)) + 1u32;
    let c3_at_sample = gc.c3.eval(&sample_n, prec);
    let mut rows = vec![
        ("c1", "Y^8".to_string(), gc.c1.to_string(), "exact"),
        (
            "c2",
            "2.02e12 log^2 Y".to_string(),
            gc.c2.hi().to_sci(20, Dir::Up),
            "up",
        ),
        (
            "n0",
            format!(
                "largest n with n < (log 4A + 10.49 c2 log^3 n)^{} / log gamma",
                args.k
            ),
            gc.n0.to_string(),
            "up",
        ),
        (
            "n1",
            format!(
                "largest n with n < 1.45 (log 4(A+1) + 10.49 c2 log^3 n)^{}",
                args.k
            ),
            gc.n1.to_string(),
            "up",
        ),
        ("c4", "max(c1, n1)".to_string(), gc.c4.to_string(), "up"),
        (
            "c3(c4+1)",
            "(n/1.45)^(1/(2k+2)) (log(4A)/4 + 2.63 c2 log^3 n)^(-1/2)".to_string(),
            c3_at_sample.to_sci(12, Dir::Down),
            "down",
        ),
    ];
    let mut sunit_json = serde_json::Value::Null;
    if let Some(p_max) = args.p_max {
        let sc = sunit_constants(args.k, args.a_bound, p_max, &rec, prec)
            .map_err(|e| CliError::usage(e.to_string()))?;
        rows.push((
            "c7",
            "1.45 max(P,A)^(2k+2) (2 c2 log 4A)^(k+1)".to_string(),
            sc.c7.hi().to_sci(20, Dir::Up),
            "up",
        ));
        rows.push((
            "c6",
            "2^(3k+3) c7 log^(3k+3)(c7 (3k+3)^(3k+3))".to_string(),
            sc.c6.hi().to_sci(20, Dir::Up),
            "up",
        ));
        rows.push(("c5", "max(c4, c6)".to_string(), sc.c5.to_string(), "up"));
        sunit_json = serde_json::json!({
            "c7": sc.c7.hi().to_sci(30, Dir::Up),
            "c6": sc.c6.hi().to_sci(30, Dir::Up),
            "c5": sc.c5.to_string(),
        });
    }
    if json {
        let value = serde_json::json!({
            "sequence": args.sequence,
            "k": args.k,
            "A": args.a_bound,
            "P": args.p_max,
            "Y": rec.y(),
            "gamma": rec.gamma(),
            "constants": rows.iter().map(|(name, formula, value, rounding)| serde_json::json!({
                "name": name,
                "formula": formula,
                "value": value,
                "rounding": rounding,
            })).collect::<Vec<_>>(),
            "sunit": sunit_json,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "bound constants for {} (Y = {}, gamma = {}), k = {}, A = {}:",
            args.sequence,
            rec.y(),
            rec.gamma(),
            args.k,
            args.a_bound
        );
        for (name, formula, value, rounding) in rows {
            println!("  {name:<9} = {value:<28} [{rounding:>5}]  {formula}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(args: &SearchArgs, json: bool) -> Result<ExitCode, CliError> {
    let primes: Vec<u64> = args
        .basis
        .split(',')
        .map(|x| x.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::usage(format!("bad basis: {e}")))?;
    let basis = SmoothnessBasis::new(primes).map_err(|e| CliError::usage(e.to_string()))?;
    let sols = solve_cullen(args.n_max, args.m1_max, &basis, &cullen());
    if json {
        let value: Vec<serde_json::Value> = sols.iter().map(|s| s.to_json(&basis)).collect();
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "solutions of C_n = m1! + m2! + s over basis {:?}, n <= {}, m1 <= {}:",
            basis.primes(),
            args.n_max,
            args.m1_max
        );
        for s in &sols {
            println!(
                "  [n={}, m1={}, m2={}, s={}]{}",
                s.n,
                s.ms[0],
                s.ms[1],
                s.s,
                if s.degenerate { " (degenerate)" } else { "" }
            );
        }
        println!("{} solutions", sols.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(args: &ScanArgs, json: bool) -> Result<ExitCode, CliError> {
    if args.nu11 {
        let report =
            scan_nu11_case(args.from, args.to).map_err(|e| CliError::usage(e.to_string()))?;
        if json {
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        } else {
            println!("nu_11(C_n - s(n)) >= 4 at: {:?}", report.list11);
            println!("of those, nu_13 >= 3 at: {:?}", report.list13);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let p = args.p.expect("clap enforces --p without --nu11");
    let t = parse_big(&args.t)?;
    let out = scan_valuation(
        p,
        |_| t.clone(),
        args.from,
        args.to,
        args.cap,
        args.threshold,
    )
    .map_err(|e| CliError::usage(e.to_string()))?;
    if json {
        let value = serde_json::json!({
            "p": p,
            "t": t.to_string(),
            "range": [args.from, args.to],
            "max": out.max.to_string(),
            "argmax": out.argmax,
            "overThreshold": out.over_threshold,
            "zeros": out.zeros,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "max nu_{p}(C_n - ({t})) over {} <= n <= {}: {} at {:?}",
            args.from, args.to, out.max, out.argmax
        );
        if let Some(th) = args.threshold {
            println!("indices with valuation >= {th}: {:?}", out.over_threshold);
        }
        if !out.zeros.is_empty() {
            println!("exact zeros (infinite valuation): {:?}", out.zeros);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_woodall(args: &WoodallArgs, json: bool) -> Result<ExitCode, CliError> {
    let out = woodall_check(args.n_max).map_err(|e| CliError::usage(e.to_string()))?;
    if json {
        let value: Vec<serde_json::Value> = out
            .iter()
            .map(|(n, s)| serde_json::json!({"n": n.to_string(), "s": s.to_string()}))
            .collect();
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!(
            "W_n = 1! + s with s a {{2,3,5,7}}-unit, n <= {}:",
            args.n_max
        );
        for (n, s) in &out {
            println!("  n = {n}, s = {s}");
        }
        println!("(a desk-scale slice of the n < 10^66 statement)");
    }
    Ok(ExitCode::SUCCESS)
}

const REPORT_KEY_PARAMS: &str = "last-report";

fn cmd_verify(
    args: &VerifyArgs,
    cache: &Cache,
    prec: Precision,
    json: bool,
) -> Result<ExitCode, CliError> {
    let profile = Profile::parse(&args.profile)
        .ok_or_else(|| CliError::usage("profile must be quick or full"))?;
    let report = verify::run_verify(profile, cache, prec);
    let key = Cache::key("verify", REPORT_KEY_PARAMS);
    let _ = cache.put(&key, &report.to_json());
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).unwrap()
        );
    } else {
        print!("{}", report.render_text());
    }
    if report.mismatches() > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_report(cache: &Cache, json: bool) -> Result<ExitCode, CliError> {
    let key = Cache::key("verify", REPORT_KEY_PARAMS);
    let value = cache
        .get(&key)
        .ok_or_else(|| CliError::usage("no verification report in the cache; run verify first"))?;
    if json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let report: VerifyReport = serde_json::from_value(value)
            .map_err(|e| CliError::Internal(format!("corrupt cached report: {e}")))?;
        print!("{}", report.render_text());
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    cullen_sunits::configure_parallelism(cli.jobs)
        .map_err(|e| CliError::usage(format!("cannot configure --jobs: {e}")))?;
    let prec = Precision::digits(cli.precision.max(30));
    match &cli.command {
        Command::Lift(args) => cmd_lift(args, &open_cache(&cli.cache_dir)?, cli.json),
        Command::Bounds(args) => cmd_bounds(args, prec, cli.json),
        Command::Search(args) => cmd_search(args, cli.json),
        Command::Scan(args) => cmd_scan(args, cli.json),
        Command::Woodall(args) => cmd_woodall(args, cli.json),
        Command::Verify(args) => cmd_verify(args, &open_cache(&cli.cache_dir)?, prec, cli.json),
        Command::Report => cmd_report(&open_cache(&cli.cache_dir)?, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
