//! Command line for the zetafast evaluator: ζ(s), ζ′/ζ″, and Dirichlet
//! L-functions to a requested accuracy δ with explicit error bounds, plus
//! geometry inspection, a critical-line zero scanner, a summand-count
//! benchmark, and a built-in self test.
//!
//! Exit codes: 0 success, 2 usage, 3 domain error, 4 accuracy unreachable
//! at the available working precision. `ZETAFAST_PRECISION` (auto,
//! hardware, extended) overrides the backend selection policy.

// Frozen reference values keep more digits than f64 holds on purpose.
#![allow(clippy::excessive_precision)]

use std::io::Write as _;
use std::process::exit;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetafast_core::dirichlet::l_reference;
use zetafast_core::numerics::real::Real;
use zetafast_core::oracle::{zeta_reference, zeta_reference_validated};
use zetafast_core::params::{derive_params, speed_precondition, summand_bound};
use zetafast_core::scanner::{refine_zero, scan_brackets, REFINE_TOLERANCE, SCAN_DELTA};
use zetafast_core::{
    find_zeros, l_function_opts, zeta_derivative_opts, zeta_opts, BackendPolicy, CharacterGroup,
    Cx, Cx64, DdReal, Error, EvalOptions, EvalResult, WorkingPrecision,
};

#[derive(Parser)]
#[command(
    name = "zetafast",
    version,
    about = "Riemann zeta, its derivatives, and Dirichlet L-functions in ~sqrt(tau) operations \
             with certified error bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate zeta(sigma + i*tau) to accuracy delta.
    Zeta {
        #[command(flatten)]
        point: PointArgs,
        /// Refuse points whose error bound cannot be certified (certified)
        /// or evaluate anyway with a best-effort bound (heuristic).
        #[arg(long, value_enum, default_value_t = Mode::Certified)]
        mode: Mode,
        #[command(flatten)]
        common: EvalCommon,
    },
    /// Evaluate the order-1 or order-2 derivative of zeta.
    ZetaDeriv {
        /// Derivative order.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        order: u32,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        common: EvalCommon,
    },
    /// Evaluate L(sigma + i*tau, chi) for a Dirichlet character chi mod q.
    Lfun {
        /// Character modulus (2..=10000).
        #[arg(long)]
        q: u64,
        /// Character index within the group enumeration (0 is principal).
        #[arg(long)]
        char_index: u64,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        common: EvalCommon,
    },
    /// Print the evaluation geometry chosen for a point: cutoff order,
    /// smoothing scale, sum lengths, and the a-priori summand bound.
    Params {
        #[command(flatten)]
        point: PointArgs,
        /// Emit machine-readable JSON instead of aligned text.
        #[arg(long)]
        json: bool,
    },
    /// Scan [t0, t1] for zeros of zeta(1/2 + it) and print one zero per line.
    Scan {
        /// Lower end of the scan window.
        #[arg(long)]
        t0: f64,
        /// Upper end of the scan window.
        #[arg(long)]
        t1: f64,
        /// Grid step for sign-change bracketing (clamped to 0.25).
        #[arg(long)]
        step: Option<f64>,
        /// Accuracy for the underlying zeta evaluations.
        #[arg(long, default_value_t = SCAN_DELTA)]
        delta: f64,
        /// Emit machine-readable JSON instead of one zero per line.
        #[arg(long)]
        json: bool,
    },
    /// Time evaluations over a tau x delta grid on the critical line and
    /// compare measured summand counts against the a-priori bound.
    Bench {
        /// Real part of every benchmark point.
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        /// Comma-separated list of heights tau.
        #[arg(long)]
        tau_list: String,
        /// Comma-separated list of accuracy targets delta.
        #[arg(long)]
        delta_list: String,
        /// Write the CSV table to this file instead of stdout.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
    },
    /// Run the built-in acceptance checks; exit 0 only if all pass.
    Selftest,
}

/// The evaluation point and accuracy target shared by every subcommand.
#[derive(Args)]
struct PointArgs {
    /// Real part sigma of the evaluation point.
    #[arg(long)]
    sigma: f64,
    /// Imaginary part tau of the evaluation point.
    #[arg(long)]
    tau: f64,
    /// Requested absolute accuracy delta.
    #[arg(long)]
    delta: f64,
}

#[derive(Args)]
struct EvalCommon {
    /// Evaluator to run: the fast engine or the slow independent oracle.
    #[arg(long, value_enum, default_value_t = Engine::Zetafast)]
    engine: Engine,
    /// Emit machine-readable JSON instead of aligned text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Certified,
    Heuristic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Zetafast,
    Oracle,
}

fn main() {
    let cli = Cli::parse();
    let policy = policy_from_env();
    match cli.command {
        Command::Zeta { point, mode, common } => {
            let opts =
                EvalOptions { policy, require_certified: mode == Mode::Certified };
            let r = match common.engine {
                Engine::Zetafast => zeta_opts(point.sigma, point.tau, point.delta, &opts),
                Engine::Oracle => oracle_zeta(point.sigma, point.tau),
            }
            .unwrap_or_else(|e| bail(e));
            let label = format!("zeta({} + {}i)", point.sigma, point.tau);
            print_result(&label, &r, common.json);
        }
        Command::ZetaDeriv { order, point, common } => {
            let opts = EvalOptions { policy, require_certified: false };
            let r = match common.engine {
                Engine::Zetafast => {
                    zeta_derivative_opts(order, point.sigma, point.tau, point.delta, &opts)
                }
                Engine::Oracle => oracle_zeta_derivative(order, point.sigma, point.tau),
            }
            .unwrap_or_else(|e| bail(e));
            let primes = if order == 1 { "'" } else { "''" };
            let label = format!("zeta{primes}({} + {}i)", point.sigma, point.tau);
            print_result(&label, &r, common.json);
        }
        Command::Lfun { q, char_index, point, common } => {
            let group = CharacterGroup::new(q).unwrap_or_else(|e| bail(e));
            let chi = group.character(char_index).unwrap_or_else(|e| bail(e));
            let opts = EvalOptions { policy, require_certified: false };
            let r = match common.engine {
                Engine::Zetafast => {
                    l_function_opts(&chi, point.sigma, point.tau, point.delta, &opts)
                }
                Engine::Oracle => oracle_l(&chi, point.sigma, point.tau),
            }
            .unwrap_or_else(|e| bail(e));
            let label =
                format!("L({} + {}i, chi mod {} index {})", point.sigma, point.tau, q, char_index);
            print_result(&label, &r, common.json);
        }
        Command::Params { point, json } => {
            run_params(point.sigma, point.tau, point.delta, json);
        }
        Command::Scan { t0, t1, step, delta, json } => {
            run_scan(t0, t1, step, delta, json);
        }
        Command::Bench { sigma, tau_list, delta_list, csv } => {
            let taus = parse_list("--tau-list", &tau_list);
            let deltas = parse_list("--delta-list", &delta_list);
            run_bench(sigma, &taus, &deltas, csv.as_deref(), policy);
        }
        Command::Selftest => {
            exit(run_selftest(policy));
        }
    }
}

/// Backend override from `ZETAFAST_PRECISION`; unset means automatic.
fn policy_from_env() -> BackendPolicy {
    match std::env::var("ZETAFAST_PRECISION") {
        Err(_) => BackendPolicy::default(),
        Ok(v) => BackendPolicy::parse(&v).unwrap_or_else(|| {
            eprintln!("error: ZETAFAST_PRECISION must be auto, hardware, or extended (got {v:?})");
            exit(2);
        }),
    }
}

fn bail(err: Error) -> ! {
    eprintln!("error: {err}");
    let code = match err {
        Error::PrecisionExhausted { .. } => 4,
        _ => 3,
    };
    exit(code);
}

/// Format with 17 significant digits so the printed value round-trips to
/// the exact f64 bit pattern.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn result_json(r: &EvalResult) -> String {
    format!(
        concat!(
            "{{\"value\":{{\"re\":{},\"im\":{}}},",
            "\"error_bound\":{},\"certified\":{},",
            "\"summands_used\":{},\"max_cancellation_ratio\":{}}}"
        ),
        fmt(r.value.re),
        fmt(r.value.im),
        fmt(r.error_bound),
        r.certified,
        r.summands_used,
        fmt(r.max_cancellation_ratio)
    )
}

fn print_result(label: &str, r: &EvalResult, json: bool) {
    if json {
        println!("{}", result_json(r));
        return;
    }
    println!("{label} = {} + {}i", fmt(r.value.re), fmt(r.value.im));
    println!("error bound             {}", fmt(r.error_bound));
    println!("certified               {}", r.certified);
    println!("summands used           {}", r.summands_used);
    println!("max cancellation ratio  {}", fmt(r.max_cancellation_ratio));
    println!("precision               {}", r.precision.name());
}

/// Independent slow evaluation of zeta via Euler–Maclaurin at extended
/// precision, with an observed self-consistency gap as the error bound.
fn oracle_zeta(sigma: f64, tau: f64) -> zetafast_core::Result<EvalResult> {
    let (v, gap) = zeta_reference_validated(sigma, tau)?;
    Ok(oracle_result(Cx64::new(v.re.to_f64(), v.im.to_f64()), gap.max(1e-28)))
}

/// Oracle derivatives by central differences of the Euler–Maclaurin value
/// at extended precision, stepped in the sigma direction. The step h
/// balances the h² difference truncation against the reference's own
/// noise, which the second difference amplifies by 1/h²; the quoted error
/// covers both with a crude polylog bound on the higher derivatives.
fn oracle_zeta_derivative(order: u32, sigma: f64, tau: f64) -> zetafast_core::Result<EvalResult> {
    let h = if order == 1 { 1e-6 } else { 1e-5 };
    let plus = zeta_reference(sigma + h, tau)?;
    let minus = zeta_reference(sigma - h, tau)?;
    let value = match order {
        1 => (plus - minus) * Cx::from_re(DdReal::from(0.5 / h)),
        _ => {
            let mid = zeta_reference(sigma, tau)? * Cx::from_re(DdReal::from(2.0));
            (plus - mid + minus) * Cx::from_re(DdReal::from(1.0 / (h * h)))
        }
    };
    let value = Cx64::new(value.re.to_f64(), value.im.to_f64());
    let growth = 1.0 + (2.0 + tau.abs()).ln().powi(order as i32 + 2);
    let err = h * h * growth + 1e-22 / (h * h) + 1e-16 * (1.0 + value.abs());
    Ok(oracle_result(value, err))
}

/// Independent slow evaluation of L(s, chi) assembled from Hurwitz zeta
/// values at extended precision.
fn oracle_l(
    chi: &zetafast_core::DirichletCharacter,
    sigma: f64,
    tau: f64,
) -> zetafast_core::Result<EvalResult> {
    let v = l_reference(chi, sigma, tau)?;
    let value = Cx64::new(v.re.to_f64(), v.im.to_f64());
    Ok(oracle_result(value, 1e-20 * (1.0 + value.abs())))
}

fn oracle_result(value: Cx64, error_bound: f64) -> EvalResult {
    EvalResult {
        value,
        error_bound,
        certified: false,
        summands_used: 0,
        max_cancellation_ratio: 0.0,
        precision: WorkingPrecision::Extended,
    }
}

fn run_params(sigma: f64, tau: f64, delta: f64, json: bool) {
    let p = derive_params(sigma, tau, delta).unwrap_or_else(|e| bail(e));
    let bound = summand_bound(sigma, tau, delta);
    let fast = speed_precondition(tau, delta);
    if json {
        println!(
            concat!(
                "{{\"v\":{},\"n_scale\":{},\"m_terms\":{},\"d_cutoff\":{},",
                "\"delta\":{},\"certified\":{},\"charged_summands\":{},",
                "\"summand_bound\":{},\"speed_precondition\":{}}}"
            ),
            p.v,
            fmt(p.n_scale),
            p.m_terms,
            p.d_cutoff,
            fmt(p.delta),
            p.certified,
            p.charged_summands(),
            fmt(bound),
            fast
        );
        return;
    }
    println!("cutoff order v          {}", p.v);
    println!("smoothing scale N       {}", fmt(p.n_scale));
    println!("correction terms M      {}", p.m_terms);
    println!("direct cutoff           {}", p.d_cutoff);
    println!("effective delta         {}", fmt(p.delta));
    println!("certified strip         {}", p.certified);
    println!("charged summands        {}", p.charged_summands());
    println!("summand bound           {}", fmt(bound));
    println!("speed precondition      {fast}");
}

fn run_scan(t0: f64, t1: f64, step: Option<f64>, delta: f64, json: bool) {
    let zeros = match step {
        None => find_zeros(t0, t1, delta),
        Some(h) => scan_brackets(t0, t1, h, delta).and_then(|brackets| {
            brackets.iter().map(|b| refine_zero(b, delta, REFINE_TOLERANCE)).collect()
        }),
    }
    .unwrap_or_else(|e| bail(e));
    if json {
        let list: Vec<String> = zeros.iter().map(|z| fmt(*z)).collect();
        println!(
            "{{\"t0\":{},\"t1\":{},\"count\":{},\"zeros\":[{}]}}",
            fmt(t0),
            fmt(t1),
            zeros.len(),
            list.join(",")
        );
        return;
    }
    for z in &zeros {
        println!("{}", fmt(*z));
    }
}

fn parse_list(flag: &str, text: &str) -> Vec<f64> {
    let vals: Vec<f64> = text
        .split(',')
        .map(|p| {
            p.trim().parse().unwrap_or_else(|_| {
                eprintln!("error: {flag} entry {:?} is not a number", p.trim());
                exit(2);
            })
        })
        .collect();
    if vals.is_empty() {
        eprintln!("error: {flag} must list at least one value");
        exit(2);
    }
    vals
}

/// One benchmark row per (tau, delta) pair: time the fast engine, compare
/// its summand count to the a-priori bound, and measure the true error
/// against the Euler–Maclaurin oracle.
fn run_bench(
    sigma: f64,
    taus: &[f64],
    deltas: &[f64],
    csv: Option<&std::path::Path>,
    policy: BackendPolicy,
) {
    const HEADER: &str =
        "sigma,tau,delta,summands_measured,summands_bound,precondition_ok,wall_time,abs_error_vs_oracle";
    let opts = EvalOptions { policy, require_certified: false };
    let mut rows = Vec::new();
    for &tau in taus {
        let reference = zeta_reference(sigma, tau).unwrap_or_else(|e| bail(e));
        let reference = Cx64::new(reference.re.to_f64(), reference.im.to_f64());
        for &delta in deltas {
            let start = Instant::now();
            let r = zeta_opts(sigma, tau, delta, &opts).unwrap_or_else(|e| bail(e));
            let wall = start.elapsed().as_secs_f64();
            let bound = summand_bound(sigma, tau, delta).ceil() as u64;
            let ok = speed_precondition(tau, delta);
            let err = (r.value - reference).abs();
            rows.push(format!(
                "{sigma},{tau},{delta},{},{bound},{ok},{},{}",
                r.summands_used,
                fmt(wall),
                fmt(err)
            ));
            if csv.is_some() {
                println!(
                    "tau {tau:>12} delta {delta:>8}: {} summands (bound {bound}), {:.3}s, err {:.3e}",
                    r.summands_used, wall, err
                );
            }
        }
    }
    match csv {
        None => {
            println!("{HEADER}");
            for row in &rows {
                println!("{row}");
            }
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).unwrap_or_else(|e| {
                eprintln!("error: cannot write {}: {e}", path.display());
                exit(2);
            });
            writeln!(file, "{HEADER}").and_then(|_| {
                rows.iter().try_for_each(|row| writeln!(file, "{row}"))
            })
            .unwrap_or_else(|e| {
                eprintln!("error: cannot write {}: {e}", path.display());
                exit(2);
            });
            println!("wrote {} rows to {}", rows.len(), path.display());
        }
    }
}

/// Quick acceptance checks over every component; prints one line per check.
fn run_selftest(policy: BackendPolicy) -> i32 {
    let opts = EvalOptions { policy, require_certified: false };
    let mut failures = 0u32;
    let mut check = |name: &str, pass: bool, detail: String| {
        if pass {
            println!("ok   {name}");
        } else {
            println!("FAIL {name}: {detail}");
            failures += 1;
        }
    };

    let pi = std::f64::consts::PI;
    match zeta_opts(2.0, 0.0, 1e-10, &opts) {
        Ok(r) => {
            let err = (r.value - Cx64::from_re(pi * pi / 6.0)).abs();
            check("zeta(2) = pi^2/6", err <= r.error_bound && r.error_bound <= 1.1e-10,
                format!("err {err:.3e}, bound {:.3e}", r.error_bound));
        }
        Err(e) => check("zeta(2) = pi^2/6", false, e.to_string()),
    }
    match zeta_opts(0.0, 0.0, 1e-10, &opts) {
        Ok(r) => {
            let err = (r.value - Cx64::from_re(-0.5)).abs();
            check("zeta(0) = -1/2", err <= r.error_bound, format!("err {err:.3e}"));
        }
        Err(e) => check("zeta(0) = -1/2", false, e.to_string()),
    }
    match zeta_derivative_opts(1, 0.0, 0.0, 1e-10, &opts) {
        Ok(r) => {
            let target = -0.5 * (2.0 * pi).ln();
            let err = (r.value - Cx64::from_re(target)).abs();
            check("zeta'(0) = -ln(2 pi)/2", err <= 1e-10, format!("err {err:.3e}"));
        }
        Err(e) => check("zeta'(0) = -ln(2 pi)/2", false, e.to_string()),
    }

    let anchor = Cx64::new(2.692619885681324090, -0.020386029602598162);
    match zeta_opts(0.5, 100.0, 1e-9, &opts) {
        Ok(r) => {
            let err = (r.value - anchor).abs();
            check("zeta(1/2 + 100i) strip anchor", err <= 1e-9 && r.certified,
                format!("err {err:.3e}, certified {}", r.certified));
        }
        Err(e) => check("zeta(1/2 + 100i) strip anchor", false, e.to_string()),
    }

    match zetafast_core::engine::neglected_branch_magnitude(0.5, 1000.0, 1e-6) {
        Ok(mag) => check("neglected branch below delta/3", mag <= 1e-6 / 3.0,
            format!("magnitude {mag:.3e}")),
        Err(e) => check("neglected branch below delta/3", false, e.to_string()),
    }

    let catalan = 0.915965594177219015;
    let l_check = CharacterGroup::new(4)
        .and_then(|g| g.character(1))
        .and_then(|chi| {
            let at2 = l_function_opts(&chi, 2.0, 0.0, 1e-10, &opts)?;
            let at1 = l_function_opts(&chi, 1.0, 0.0, 1e-10, &opts)?;
            Ok(((at2.value - Cx64::from_re(catalan)).abs(),
                (at1.value - Cx64::from_re(pi / 4.0)).abs()))
        });
    match l_check {
        Ok((e2, e1)) => check("L(2, chi_4) and L(1, chi_4)", e2 <= 1e-8 && e1 <= 1e-8,
            format!("errs {e2:.3e}, {e1:.3e}")),
        Err(e) => check("L(2, chi_4) and L(1, chi_4)", false, e.to_string()),
    }

    match find_zeros(14.0, 15.0, 1e-8) {
        Ok(zeros) => {
            let target = 14.134725141734694;
            let pass = zeros.len() == 1 && (zeros[0] - target).abs() <= 1e-6;
            let found = zeros.first().copied().unwrap_or(f64::NAN);
            check("first critical-line zero", pass, format!("found {found}"));
        }
        Err(e) => check("first critical-line zero", false, e.to_string()),
    }

    // Cutoff order sandwich: the solved v lies within one unit above the
    // fixed-point target at seeded random strip points.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut rnd = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut sandwich_ok = true;
    let mut sandwich_detail = String::new();
    for _ in 0..10 {
        let sigma = 2.0 * rnd();
        let tau = 1.0 + 4000.0 * rnd();
        let delta = 10f64.powf(-3.0 - 6.0 * rnd());
        let p = match derive_params(sigma, tau, delta) {
            Ok(p) => p,
            Err(e) => {
                sandwich_ok = false;
                sandwich_detail = e.to_string();
                break;
            }
        };
        let c = ((1.0 - sigma) / 2.0).max(0.0);
        let lhs = c * (0.5 + p.v as f64 + tau).ln() + (8.0 / p.delta).ln();
        if (p.v as f64) < lhs - 1e-9 || (p.v as f64) > lhs + 1.0 + 1e-9 {
            sandwich_ok = false;
            sandwich_detail = format!("v {} outside [{lhs}, {}]", p.v, lhs + 1.0);
            break;
        }
    }
    check("cutoff order sandwich", sandwich_ok, sandwich_detail);

    // Termwise derivative against a central difference of the engine itself.
    let fd = |sigma: f64, tau: f64| -> zetafast_core::Result<Cx64> {
        let h = 1e-5;
        let plus = zeta_opts(sigma + h, tau, 1e-12, &opts)?.value;
        let minus = zeta_opts(sigma - h, tau, 1e-12, &opts)?.value;
        Ok((plus - minus) * Cx64::from_re(0.5 / h))
    };
    let deriv_check = zeta_derivative_opts(1, 0.6, 25.0, 1e-10, &opts)
        .and_then(|d| Ok((d.value, fd(0.6, 25.0)?)));
    match deriv_check {
        Ok((d, f)) => {
            let rel = (d - f).abs() / f.abs().max(1e-300);
            check("derivative matches finite difference", rel <= 1e-5,
                format!("rel {rel:.3e}"));
        }
        Err(e) => check("derivative matches finite difference", false, e.to_string()),
    }

    if failures == 0 {
        println!("all checks passed");
        0
    } else {
        println!("{failures} check(s) failed");
        1
    }
}
