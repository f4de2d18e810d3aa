//! Command-line front end. [`run`] parses an argument list, runs one
//! subcommand and returns what the `noarb` binary would print, so tests can
//! drive it without spawning processes.
//!
//! Exit codes: 0 success, 1 invalid input, 2 arbitrage or a violated
//! no-arbitrage constraint was detected, 3 numerical failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use noarb::binomial::{self, OnePeriodMarket, OptionKind};
use noarb::bsm;
use noarb::gbm::{self, ProcessCase, ProcessSpec, Scheme};
use noarb::gordan::{self, Classification, MarketFile};
use noarb::pde::{self, SolverConfig, TimeScheme};
use noarb::Error;
use serde_json::{json, Map, Value};

mod xcheck;

pub use xcheck::{xcheck_rows, XcheckRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DETECTED: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Seed used when neither `--seed` nor `NOARB_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(exit_code: i32, stdout: String) -> Self {
        Self {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(exit_code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            exit_code,
            stdout: String::new(),
            stderr,
        }
    }
}

const CONVENTIONS: &str = "\
Rate conventions: `binomial --r` is the continuously compounded rate for one
period. For gbm, bsm and pde, --r, --alpha and --sigma are per unit of --t.";

#[derive(Debug, Parser)]
#[command(name = "noarb", version, about = "No-arbitrage pricing and verification toolkit", after_help = CONVENTIONS)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Arbitrage detection for one-period markets.
    Gordan {
        #[command(subcommand)]
        action: GordanAction,
    },
    /// One-period binomial pricing and replication.
    #[command(after_help = CONVENTIONS)]
    Binomial {
        #[command(subcommand)]
        action: BinomialAction,
    },
    /// Geometric Brownian motion: constraints, simulation, delta hedging.
    #[command(after_help = CONVENTIONS)]
    Gbm {
        #[command(subcommand)]
        action: GbmAction,
    },
    /// Closed-form Black–Scholes–Merton prices.
    #[command(after_help = CONVENTIONS)]
    Bsm {
        #[command(subcommand)]
        action: BsmAction,
    },
    /// Finite-difference solution of the pricing PDE.
    #[command(after_help = CONVENTIONS)]
    Pde {
        #[command(subcommand)]
        action: PdeAction,
    },
    /// Rerun the worked example and the four-way pricing comparison.
    Xcheck,
}

#[derive(Debug, Subcommand)]
enum GordanAction {
    /// Find a state-price measure or an arbitrage portfolio.
    Classify {
        /// Market definition (JSON with rate, states and assets).
        market: PathBuf,
    },
}

#[derive(Debug, Args)]
struct BinomialArgs {
    /// Spot price.
    #[arg(long)]
    s0: f64,
    /// Up factor.
    #[arg(long)]
    u: f64,
    /// Down factor.
    #[arg(long)]
    d: f64,
    /// Continuously compounded rate for the single period.
    #[arg(long)]
    r: f64,
    /// Claim payoff in the up state.
    #[arg(long)]
    up: f64,
    /// Claim payoff in the down state.
    #[arg(long)]
    down: f64,
}

#[derive(Debug, Subcommand)]
enum BinomialAction {
    /// Price a claim by the risk-neutral probability.
    Price(BinomialArgs),
    /// Shares and bank holding that replicate a claim.
    Replicate(BinomialArgs),
}

#[derive(Debug, Args)]
struct ProcessArgs {
    /// 1: S₀e^{σW+αt}; 2: S₀e^{σW+(α−σ²/2)t}; 3: S₀e^{σW−σ²t/2}.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    case: u8,
    /// Drift α per unit time (cases 1 and 2).
    #[arg(long)]
    alpha: Option<f64>,
    /// Volatility per square-root unit time.
    #[arg(long)]
    sigma: f64,
    /// Risk-free rate per unit time.
    #[arg(long)]
    r: f64,
    /// Horizon.
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long, default_value_t = 100.0)]
    s0: f64,
    #[arg(long, default_value_t = 100_000)]
    paths: usize,
    /// Defaults to $NOARB_SEED, then to a fixed value.
    #[arg(long, env = "NOARB_SEED")]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SchemeArg {
    Exact,
    Euler,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Call,
    Put,
}

impl From<KindArg> for OptionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Call => OptionKind::Call,
            KindArg::Put => OptionKind::Put,
        }
    }
}

#[derive(Debug, Subcommand)]
enum GbmAction {
    /// No-arbitrage residual and a Monte Carlo martingale test.
    Check(ProcessArgs),
    /// Simulate terminal prices.
    Simulate {
        #[command(flatten)]
        process: ProcessArgs,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = SchemeArg::Exact)]
        scheme: SchemeArg,
        /// Write terminal prices as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Discrete delta hedging of a European option.
    Hedge {
        #[command(flatten)]
        process: ProcessArgs,
        /// Strike.
        #[arg(long, default_value_t = 100.0)]
        k: f64,
        #[arg(long, value_enum, default_value_t = KindArg::Call)]
        kind: KindArg,
        #[arg(long, default_value_t = 64)]
        rebalances: usize,
    },
}

#[derive(Debug, Subcommand)]
enum BsmAction {
    /// Closed-form price and delta.
    Price {
        #[arg(long)]
        s0: f64,
        /// Strike.
        #[arg(long)]
        k: f64,
        /// Risk-free rate per unit time.
        #[arg(long)]
        r: f64,
        #[arg(long)]
        sigma: f64,
        /// Maturity.
        #[arg(long)]
        t: f64,
        #[arg(long, value_enum, default_value_t = KindArg::Call)]
        kind: KindArg,
        /// Also integrate the payoff against the lognormal density.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TimeSchemeArg {
    CrankNicolson,
    Implicit,
}

#[derive(Debug, Subcommand)]
enum PdeAction {
    /// Solve on a uniform grid and read off the price at (0, s0).
    Solve {
        #[arg(long)]
        s0: f64,
        /// Strike.
        #[arg(long)]
        k: f64,
        /// Risk-free rate per unit time.
        #[arg(long)]
        r: f64,
        #[arg(long)]
        sigma: f64,
        /// Maturity.
        #[arg(long)]
        t: f64,
        #[arg(long, value_enum, default_value_t = KindArg::Call)]
        kind: KindArg,
        /// Upper price bound; defaults to 4·max(s0, k).
        #[arg(long)]
        smax: Option<f64>,
        /// Price intervals.
        #[arg(long, default_value_t = 400)]
        m: usize,
        /// Time intervals.
        #[arg(long, default_value_t = 400)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TimeSchemeArg::CrankNicolson)]
        scheme: TimeSchemeArg,
        /// Write the value surface as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs one command. `args` excludes the program name.
pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("noarb".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::failure(EXIT_INVALID, text)
            } else {
                // --help and --version
                CommandResult::ok(text)
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok((code, payload)) => CommandResult::with_code(code, render(&payload, json)),
        Err(failure) => failure,
    }
}

/// Exit code for a library error.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ArbitrageViolation { .. } | Error::ConstraintViolated { .. } => EXIT_DETECTED,
        Error::NumericalFailure(_) | Error::QuadratureFailure { .. } | Error::UnstableConfig(_) => {
            EXIT_NUMERICAL
        }
        _ => EXIT_INVALID,
    }
}

fn fail(err: Error) -> CommandResult {
    CommandResult::failure(exit_code_for(&err), format!("error: {err}"))
}

type Outcome = std::result::Result<(i32, Value), CommandResult>;

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Gordan {
            action: GordanAction::Classify { market },
        } => classify(&market),
        Command::Binomial { action } => binomial_cmd(action),
        Command::Gbm { action } => gbm_cmd(action),
        Command::Bsm { action } => bsm_cmd(action),
        Command::Pde { action } => pde_cmd(action),
        Command::Xcheck => xcheck::run_xcheck(),
    }
}

fn classify(path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CommandResult::failure(EXIT_INVALID, format!("error: cannot read {}: {e}", path.display()))
    })?;
    let file = MarketFile::from_json(&text).map_err(fail)?;
    let matrix = file.excess_matrix().map_err(fail)?;
    let names: Vec<&str> = file.assets.iter().map(|a| a.name.as_str()).collect();
    match gordan::classify_matrix(&matrix).map_err(fail)? {
        Classification::NoArbitrage { measure, complete } => Ok((
            EXIT_OK,
            json!({
                "command": "gordan classify",
                "arbitrage": false,
                "probabilities": measure.probabilities,
                "complete": complete,
                "residual": measure.residual,
            }),
        )),
        Classification::Arbitrage(cert) => Ok((
            EXIT_DETECTED,
            json!({
                "command": "gordan classify",
                "arbitrage": true,
                "assets": names,
                "weights": cert.weights,
                "worst_excess": cert.worst_excess,
                "state_excess": matrix.portfolio_excess(&cert.weights),
            }),
        )),
    }
}

fn binomial_cmd(action: BinomialAction) -> Outcome {
    let (replicate, a) = match action {
        BinomialAction::Price(a) => (false, a),
        BinomialAction::Replicate(a) => (true, a),
    };
    finite_flags(&[
        ("--s0", a.s0),
        ("--u", a.u),
        ("--d", a.d),
        ("--r", a.r),
        ("--up", a.up),
        ("--down", a.down),
    ])?;
    let mkt = OnePeriodMarket::new(a.s0, a.u, a.d, a.r).map_err(fail)?;
    let pi = binomial::risk_neutral_prob(&mkt);
    if replicate {
        let plan = binomial::replicate(&mkt, a.up, a.down).map_err(fail)?;
        Ok((
            EXIT_OK,
            json!({
                "command": "binomial replicate",
                "delta": plan.delta,
                "bank": plan.bank,
                "cost": plan.cost,
                "pi": pi,
            }),
        ))
    } else {
        let price = binomial::price_european(&mkt, a.up, a.down).map_err(fail)?;
        Ok((
            EXIT_OK,
            json!({ "command": "binomial price", "price": price, "pi": pi }),
        ))
    }
}

fn finite_flags(flags: &[(&str, f64)]) -> std::result::Result<(), CommandResult> {
    for (flag, v) in flags {
        if !v.is_finite() {
            return Err(CommandResult::failure(
                EXIT_INVALID,
                format!("error: {flag} must be a finite number, got {v}"),
            ));
        }
    }
    Ok(())
}

fn process_spec(p: &ProcessArgs) -> std::result::Result<ProcessSpec, CommandResult> {
    let case = ProcessCase::from_number(p.case).expect("clap limits --case to 1..=3");
    let alpha = match (case, p.alpha) {
        (ProcessCase::Martingale, _) => 0.0,
        (_, Some(a)) => a,
        (_, None) => {
            return Err(CommandResult::failure(
                EXIT_INVALID,
                format!("error: --alpha is required for case {}", p.case),
            ))
        }
    };
    finite_flags(&[
        ("--alpha", alpha),
        ("--sigma", p.sigma),
        ("--r", p.r),
        ("--t", p.t),
        ("--s0", p.s0),
    ])?;
    ProcessSpec::new(case, p.s0, alpha, p.sigma).map_err(fail)
}

fn seed_of(p: &ProcessArgs) -> u64 {
    p.seed.unwrap_or(DEFAULT_SEED)
}

fn write_csv(path: &Path, write: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>) -> std::result::Result<(), CommandResult> {
    let io_fail = |e: std::io::Error| {
        CommandResult::failure(EXIT_INVALID, format!("error: --out {}: {e}", path.display()))
    };
    let mut out = BufWriter::new(File::create(path).map_err(io_fail)?);
    write(&mut out).map_err(io_fail)?;
    out.flush().map_err(io_fail)
}

fn gbm_cmd(action: GbmAction) -> Outcome {
    match action {
        GbmAction::Check(p) => {
            let spec = process_spec(&p)?;
            let seed = seed_of(&p);
            let residual = spec.no_arb_residual(p.r);
            let report = gbm::mc_martingale_check(&spec, p.t, p.paths, seed).map_err(fail)?;
            let holds = residual.abs() <= gbm::HEDGE_RESIDUAL_TOLERANCE;
            let constraint = spec.case().constraint();
            let message = if holds {
                format!("constraint {constraint} holds")
            } else {
                format!("constraint {constraint} violated")
            };
            Ok((
                if holds { EXIT_OK } else { EXIT_DETECTED },
                json!({
                    "command": "gbm check",
                    "case": p.case,
                    "residual": residual,
                    "message": message,
                    "deflator": spec.deflator(p.t),
                    "expected_terminal": spec.expected_terminal(p.t),
                    "deflated_mean": report.deflated_mean,
                    "std_error": report.std_error,
                    "z_score": report.z_score,
                    "paths": report.paths,
                    "seed": report.seed,
                }),
            ))
        }
        GbmAction::Simulate {
            process,
            steps,
            scheme,
            out,
        } => {
            let spec = process_spec(&process)?;
            let seed = seed_of(&process);
            let scheme = match scheme {
                SchemeArg::Exact => Scheme::Exact,
                SchemeArg::Euler => Scheme::Euler,
            };
            let set = gbm::simulate_paths(&spec, process.t, steps, process.paths, seed, scheme)
                .map_err(fail)?;
            if let Some(path) = &out {
                write_csv(path, |w| set.write_csv(w))?;
            }
            let stats = set.stats();
            Ok((
                EXIT_OK,
                json!({
                    "command": "gbm simulate",
                    "case": process.case,
                    "scheme": format!("{scheme:?}").to_lowercase(),
                    "mean": stats.mean,
                    "std_error": stats.std_error,
                    "expected_terminal": spec.expected_terminal(process.t),
                    "nonpositive_paths": set.nonpositive_paths,
                    "paths": process.paths,
                    "steps": steps,
                    "seed": seed,
                }),
            ))
        }
        GbmAction::Hedge {
            process,
            k,
            kind,
            rebalances,
        } => {
            let spec = process_spec(&process)?;
            let seed = seed_of(&process);
            finite_flags(&[("--k", k)])?;
            let contract = bsm::OptionContract::new(k, process.t, kind.into()).map_err(fail)?;
            let h = gbm::delta_hedge_simulate(&spec, &contract, process.r, rebalances, process.paths, seed)
                .map_err(fail)?;
            Ok((
                EXIT_OK,
                json!({
                    "command": "gbm hedge",
                    "case": process.case,
                    "rebalances": h.rebalances,
                    "error_mean": h.error_mean,
                    "error_std": h.error_std,
                    "mean_std_error": h.mean_std_error,
                    "paths": process.paths,
                    "seed": seed,
                }),
            ))
        }
    }
}

fn bsm_cmd(action: BsmAction) -> Outcome {
    let BsmAction::Price {
        s0,
        k,
        r,
        sigma,
        t,
        kind,
        oracle,
    } = action;
    finite_flags(&[("--s0", s0), ("--k", k), ("--r", r), ("--sigma", sigma), ("--t", t)])?;
    let kind: OptionKind = kind.into();
    let price = bsm::price(kind, s0, k, r, sigma, t).map_err(fail)?;
    let delta = bsm::delta_of(kind, s0, k, r, sigma, t).map_err(fail)?;
    let mut out = Map::new();
    out.insert("command".into(), json!("bsm price"));
    out.insert("kind".into(), json!(kind_name(kind)));
    out.insert("price".into(), json!(price));
    out.insert("delta".into(), json!(delta));
    if oracle {
        let drift = r - 0.5 * sigma * sigma;
        let integral = match kind {
            OptionKind::Call => bsm::quadrature_oracle(s0, k, drift, sigma, t),
            OptionKind::Put => bsm::quadrature_put_oracle(s0, k, drift, sigma, t),
        }
        .map_err(fail)?;
        let value = (-r * t).exp() * integral;
        out.insert("oracle".into(), json!(value));
        out.insert("oracle_deviation".into(), json!((value - price).abs()));
    }
    Ok((EXIT_OK, Value::Object(out)))
}

fn kind_name(kind: OptionKind) -> &'static str {
    match kind {
        OptionKind::Call => "call",
        OptionKind::Put => "put",
    }
}

fn pde_cmd(action: PdeAction) -> Outcome {
    let PdeAction::Solve {
        s0,
        k,
        r,
        sigma,
        t,
        kind,
        smax,
        m,
        n,
        scheme,
        out,
    } = action;
    finite_flags(&[("--s0", s0), ("--k", k), ("--r", r), ("--sigma", sigma), ("--t", t)])?;
    let s_max = smax.unwrap_or(4.0 * s0.max(k));
    finite_flags(&[("--smax", s_max)])?;
    if s_max <= s0 {
        return Err(CommandResult::failure(
            EXIT_INVALID,
            format!("error: --smax {s_max} must exceed --s0 {s0}"),
        ));
    }
    let scheme = match scheme {
        TimeSchemeArg::CrankNicolson => TimeScheme::CrankNicolson,
        TimeSchemeArg::Implicit => TimeScheme::ImplicitEuler,
    };
    let config = SolverConfig::new(s_max, m, n, scheme).map_err(fail)?;
    let kind: OptionKind = kind.into();
    let sol = pde::solve(kind, k, r, sigma, t, &config).map_err(fail)?;
    if let Some(path) = &out {
        write_csv(path, |w| sol.write_csv(w))?;
    }
    let price = sol.price_at(0.0, s0).map_err(fail)?;
    let closed = bsm::price(kind, s0, k, r, sigma, t).map_err(fail)?;
    let mut fields = Map::new();
    fields.insert("command".into(), json!("pde solve"));
    fields.insert("kind".into(), json!(kind_name(kind)));
    fields.insert("price".into(), json!(price));
    fields.insert("closed_form".into(), json!(closed));
    fields.insert("deviation".into(), json!((price - closed).abs()));
    fields.insert("s_max".into(), json!(s_max));
    fields.insert("m".into(), json!(m));
    fields.insert("n".into(), json!(n));
    // the central difference needs a node on each side of s0
    if let Ok(delta) = sol.solution_delta(0.0, s0) {
        fields.insert("delta".into(), json!(delta));
    }
    Ok((EXIT_OK, Value::Object(fields)))
}

/// JSON (sorted keys, shortest round-trip floats) or `key: value` lines
/// with six decimals.
fn render(payload: &Value, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string(payload).expect("JSON values serialize");
        s.push('\n');
        return s;
    }
    if let Some(rows) = payload.get("rows").and_then(Value::as_array) {
        return xcheck::render_table(rows, payload);
    }
    let mut out = String::new();
    if let Value::Object(map) = payload {
        for (key, value) in map {
            out.push_str(&format!("{key}: {}\n", text_value(value)));
        }
    }
    out
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => format!("{:.6}", n.as_f64().unwrap()),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
