//! Geometric Brownian motion in three parameterizations, the deflators that
//! turn each into a martingale, and the no-arbitrage constraint each one
//! places on the risk-free rate.
//!
//! | case | price process                    | deflator             | constraint      |
//! |------|----------------------------------|----------------------|-----------------|
//! | 1    | `S₀·e^{σW(t) + αt}`              | `e^{−(α + σ²/2)t}`   | `α + σ²/2 = r`  |
//! | 2    | `S₀·e^{σW(t) + (α − σ²/2)t}`     | `e^{−αt}`            | `α = r`         |
//! | 3    | `S₀·e^{σW(t) − σ²t/2}`           | `1`                  | `r = 0`         |
//!
//! Simulation draws one ChaCha8 stream per path: the generator is seeded
//! from the user seed and path `j` reads stream `j`. Normal variates come
//! from the ziggurat sampler in `rand_distr::StandardNormal`. A result is
//! therefore a pure function of its inputs, whatever the thread count.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::OptionKind;
use crate::bsm::{self, OptionContract};
use crate::error::{ensure_finite, Error, Result};

/// Largest no-arbitrage residual the hedging simulator accepts.
pub const HEDGE_RESIDUAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProcessCase {
    /// `S₀·e^{σW(t) + αt}`: `α` is the drift of the log price.
    LogDrift,
    /// `S₀·e^{σW(t) + (α − σ²/2)t}`: `α` is the mean growth rate.
    MeanDrift,
    /// `S₀·e^{σW(t) − σ²t/2}`: already a martingale, no `α`.
    Martingale,
}

impl ProcessCase {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Self::LogDrift),
            2 => Some(Self::MeanDrift),
            3 => Some(Self::Martingale),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::LogDrift => 1,
            Self::MeanDrift => 2,
            Self::Martingale => 3,
        }
    }

    /// The constraint on the risk-free rate, as text.
    pub fn constraint(self) -> &'static str {
        match self {
            Self::LogDrift => "alpha + sigma^2/2 = r",
            Self::MeanDrift => "alpha = r",
            Self::Martingale => "r = 0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProcessSpec {
    case: ProcessCase,
    s0: f64,
    alpha: f64,
    sigma: f64,
}

impl ProcessSpec {
    /// `alpha` is ignored for [`ProcessCase::Martingale`].
    pub fn new(case: ProcessCase, s0: f64, alpha: f64, sigma: f64) -> Result<Self> {
        ensure_finite("s0", s0)?;
        ensure_finite("alpha", alpha)?;
        ensure_finite("sigma", sigma)?;
        if s0 <= 0.0 {
            return Err(Error::InvalidParams(format!("s0 must be positive, got {s0}")));
        }
        if sigma <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "sigma must be positive, got {sigma}"
            )));
        }
        let alpha = if case == ProcessCase::Martingale { 0.0 } else { alpha };
        Ok(Self {
            case,
            s0,
            alpha,
            sigma,
        })
    }

    pub fn case(&self) -> ProcessCase {
        self.case
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Drift of `ln S(t)` per unit time.
    pub fn log_drift(&self) -> f64 {
        let half_var = 0.5 * self.sigma * self.sigma;
        match self.case {
            ProcessCase::LogDrift => self.alpha,
            ProcessCase::MeanDrift => self.alpha - half_var,
            ProcessCase::Martingale => -half_var,
        }
    }

    /// Growth rate of `E[S(t)]`, i.e. the drift coefficient of the SDE.
    pub fn mean_growth(&self) -> f64 {
        let half_var = 0.5 * self.sigma * self.sigma;
        match self.case {
            ProcessCase::LogDrift => self.alpha + half_var,
            ProcessCase::MeanDrift => self.alpha,
            ProcessCase::Martingale => 0.0,
        }
    }

    /// `S(t)` given a standard normal draw `z` for `W(t)/√t`.
    pub fn exact_terminal(&self, t: f64, z: f64) -> f64 {
        self.s0 * (self.sigma * t.sqrt() * z + self.log_drift() * t).exp()
    }

    pub fn deflator(&self, t: f64) -> f64 {
        match self.case {
            ProcessCase::Martingale => 1.0,
            _ => (-self.mean_growth() * t).exp(),
        }
    }

    pub fn expected_terminal(&self, t: f64) -> f64 {
        match self.case {
            ProcessCase::Martingale => self.s0,
            _ => self.s0 * (self.mean_growth() * t).exp(),
        }
    }

    /// `α + σ²/2 − r`, `α − r` or `r`, by case. Zero when the case's
    /// no-arbitrage constraint holds; the magnitude measures the violation.
    pub fn no_arb_residual(&self, rate: f64) -> f64 {
        match self.case {
            ProcessCase::LogDrift => self.alpha + 0.5 * self.sigma * self.sigma - rate,
            ProcessCase::MeanDrift => self.alpha - rate,
            ProcessCase::Martingale => rate,
        }
    }

    pub fn sde_coefficients(&self) -> SdeCoefficients {
        SdeCoefficients {
            drift_rate: self.mean_growth(),
            sigma: self.sigma,
        }
    }
}

/// `dS = μ·S dt + σ·S dW`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SdeCoefficients {
    pub drift_rate: f64,
    pub sigma: f64,
}

impl SdeCoefficients {
    pub fn drift(&self, s: f64) -> f64 {
        self.drift_rate * s
    }

    pub fn diffusion(&self, s: f64) -> f64 {
        self.sigma * s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scheme {
    Exact,
    Euler,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSet {
    pub terminals: Vec<f64>,
    /// Euler paths that went nonpositive at some step. Always 0 for Exact.
    pub nonpositive_paths: usize,
}

impl SampleSet {
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "terminal")?;
        for v in &self.terminals {
            writeln!(out, "{v}")?;
        }
        Ok(())
    }

    pub fn stats(&self) -> SampleStats {
        SampleStats::of(&self.terminals)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleStats {
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator).
    pub std_dev: f64,
    pub std_error: f64,
    pub count: usize,
}

impl SampleStats {
    /// Two-pass mean and deviation with compensated sums, in slice order.
    pub fn of(values: &[f64]) -> Self {
        let n = values.len();
        if n == 0 {
            return Self {
                mean: f64::NAN,
                std_dev: f64::NAN,
                std_error: f64::NAN,
                count: 0,
            };
        }
        let mean = compensated_sum(values.iter().copied()) / n as f64;
        if n < 2 {
            return Self {
                mean,
                std_dev: 0.0,
                std_error: 0.0,
                count: n,
            };
        }
        let ss = compensated_sum(values.iter().map(|v| (v - mean) * (v - mean)));
        let std_dev = (ss / (n - 1) as f64).sqrt();
        Self {
            mean,
            std_dev,
            std_error: std_dev / (n as f64).sqrt(),
            count: n,
        }
    }
}

fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0_f64, 0.0_f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Generator for path `path` under `seed`.
pub fn path_rng(seed: u64, path: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(path);
    rng
}

fn check_horizon(t: f64) -> Result<()> {
    ensure_finite("t", t)?;
    if t < 0.0 {
        return Err(Error::InvalidParams(format!("t must be ≥ 0, got {t}")));
    }
    Ok(())
}

/// Terminal prices at `t` for `paths` independent paths.
///
/// `Exact` draws one normal per path; `Euler` takes `steps` steps of
/// `S ← S + μS·Δt + σS·√Δt·z` and keeps going if `S` turns nonpositive,
/// counting such paths in [`SampleSet::nonpositive_paths`].
pub fn simulate_paths(
    spec: &ProcessSpec,
    t: f64,
    steps: usize,
    paths: usize,
    seed: u64,
    scheme: Scheme,
) -> Result<SampleSet> {
    check_horizon(t)?;
    if steps == 0 || paths == 0 {
        return Err(Error::InvalidParams(format!(
            "steps and paths must be ≥ 1, got steps = {steps}, paths = {paths}"
        )));
    }
    let results: Vec<(f64, bool)> = match scheme {
        Scheme::Exact => (0..paths as u64)
            .into_par_iter()
            .map(|j| {
                let z: f64 = path_rng(seed, j).sample(StandardNormal);
                (spec.exact_terminal(t, z), false)
            })
            .collect(),
        Scheme::Euler => {
            let coeffs = spec.sde_coefficients();
            let dt = t / steps as f64;
            let sqrt_dt = dt.sqrt();
            (0..paths as u64)
                .into_par_iter()
                .map(|j| {
                    let mut rng = path_rng(seed, j);
                    let mut s = spec.s0;
                    let mut hit_zero = false;
                    for _ in 0..steps {
                        let z: f64 = rng.sample(StandardNormal);
                        s += coeffs.drift(s) * dt + coeffs.diffusion(s) * sqrt_dt * z;
                        hit_zero |= s <= 0.0;
                    }
                    (s, hit_zero)
                })
                .collect()
        }
    };
    Ok(SampleSet {
        nonpositive_paths: results.iter().filter(|(_, bad)| *bad).count(),
        terminals: results.into_iter().map(|(s, _)| s).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MartingaleReport {
    pub deflated_mean: f64,
    pub std_error: f64,
    /// `(deflated_mean − S₀) / std_error`; 0 when the error is 0.
    pub z_score: f64,
    pub paths: usize,
    pub seed: u64,
}

/// Monte Carlo check that `E[deflator(t)·S(t)] = S₀`.
pub fn mc_martingale_check(spec: &ProcessSpec, t: f64, paths: usize, seed: u64) -> Result<MartingaleReport> {
    check_horizon(t)?;
    if paths < 100 {
        return Err(Error::InvalidParams(format!(
            "need at least 100 paths, got {paths}"
        )));
    }
    if t == 0.0 {
        return Ok(MartingaleReport {
            deflated_mean: spec.s0,
            std_error: 0.0,
            z_score: 0.0,
            paths,
            seed,
        });
    }
    let samples = simulate_paths(spec, t, 1, paths, seed, Scheme::Exact)?;
    let deflator = spec.deflator(t);
    let deflated: Vec<f64> = samples.terminals.iter().map(|s| s * deflator).collect();
    let stats = SampleStats::of(&deflated);
    let z_score = if stats.std_error > 0.0 {
        (stats.mean - spec.s0) / stats.std_error
    } else {
        0.0
    };
    Ok(MartingaleReport {
        deflated_mean: stats.mean,
        std_error: stats.std_error,
        z_score,
        paths,
        seed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HedgeResult {
    pub rebalances: usize,
    /// Per path: hedge portfolio value minus option payoff at expiry.
    pub terminal_errors: Vec<f64>,
    pub error_mean: f64,
    pub error_std: f64,
    /// Standard error of `error_mean`.
    pub mean_std_error: f64,
}

/// Discrete delta hedging of a European option.
///
/// Each path starts with the closed-form premium, holds the closed-form
/// delta in stock at each of `rebalances` evenly spaced dates, and keeps the
/// rest in the bank at rate `rate`. The stock follows `spec` exactly between
/// dates. Refuses to run unless `spec` satisfies its no-arbitrage
/// constraint at `rate`, since replication is only exact under it.
pub fn delta_hedge_simulate(
    spec: &ProcessSpec,
    contract: &OptionContract,
    rate: f64,
    rebalances: usize,
    paths: usize,
    seed: u64,
) -> Result<HedgeResult> {
    ensure_finite("rate", rate)?;
    let residual = spec.no_arb_residual(rate);
    if residual.abs() > HEDGE_RESIDUAL_TOLERANCE {
        return Err(Error::ConstraintViolated {
            constraint: spec.case.constraint(),
            residual,
        });
    }
    if rebalances == 0 || paths == 0 {
        return Err(Error::InvalidParams(format!(
            "rebalances and paths must be ≥ 1, got rebalances = {rebalances}, paths = {paths}"
        )));
    }
    let (strike, maturity, kind) = (contract.strike, contract.maturity, contract.kind);
    let sigma = spec.sigma;
    let premium = bsm::price(kind, spec.s0, strike, rate, sigma, maturity)?;
    let dt = maturity / rebalances as f64;
    let carry = (rate * dt).exp();
    let step_drift = spec.log_drift() * dt;
    let step_vol = sigma * dt.sqrt();

    let terminal_errors = (0..paths as u64)
        .into_par_iter()
        .map(|j| -> Result<f64> {
            let mut rng = path_rng(seed, j);
            let mut s = spec.s0;
            let mut value = premium;
            for k in 0..rebalances {
                let remaining = maturity - k as f64 * dt;
                let hedge = bsm::delta_of(kind, s, strike, rate, sigma, remaining)?;
                let cash = value - hedge * s;
                let z: f64 = rng.sample(StandardNormal);
                s *= (step_vol * z + step_drift).exp();
                value = hedge * s + cash * carry;
            }
            Ok(value - kind.payoff(s, strike))
        })
        .collect::<Result<Vec<f64>>>()?;

    let stats = SampleStats::of(&terminal_errors);
    Ok(HedgeResult {
        rebalances,
        error_mean: stats.mean,
        error_std: stats.std_dev,
        mean_std_error: stats.std_error,
        terminal_errors,
    })
}

/// Convenience for the common call case.
pub fn delta_hedge_call(
    spec: &ProcessSpec,
    strike: f64,
    maturity: f64,
    rate: f64,
    rebalances: usize,
    paths: usize,
    seed: u64,
) -> Result<HedgeResult> {
    let contract = OptionContract::new(strike, maturity, OptionKind::Call)?;
    delta_hedge_simulate(spec, &contract, rate, rebalances, paths, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use proptest::prelude::*;

    fn case1(alpha: f64, sigma: f64) -> ProcessSpec {
        ProcessSpec::new(ProcessCase::LogDrift, 100.0, alpha, sigma).unwrap()
    }

    fn case2(alpha: f64, sigma: f64) -> ProcessSpec {
        ProcessSpec::new(ProcessCase::MeanDrift, 100.0, alpha, sigma).unwrap()
    }

    fn case3(sigma: f64) -> ProcessSpec {
        ProcessSpec::new(ProcessCase::Martingale, 100.0, 0.0, sigma).unwrap()
    }

    #[test]
    fn exact_terminal_plug_ins() {
        for spec in [case1(0.05, 0.2), case2(0.05, 0.2), case3(0.2)] {
            assert_eq!(spec.exact_terminal(0.0, 1.7), 100.0);
        }
        assert!((case3(0.2).exact_terminal(1.0, 0.0) - 100.0 * (-0.02_f64).exp()).abs() < 1e-12);
        assert!((case1(0.05, 0.2).exact_terminal(2.0, 0.0) - 100.0 * 0.1_f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn deflators() {
        for spec in [case1(0.05, 0.2), case2(0.05, 0.2), case3(0.2)] {
            assert_eq!(spec.deflator(0.0), 1.0);
        }
        assert!((case1(0.01, 0.2).deflator(1.0) - (-0.03_f64).exp()).abs() < 1e-15);
        assert_eq!(case3(0.4).deflator(7.0), 1.0);
        assert!((case2(0.03, 0.2).deflator(2.0) - (-0.06_f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn expected_terminals() {
        assert!((case2(0.03, 0.2).expected_terminal(1.0) - 100.0 * 0.03_f64.exp()).abs() < 1e-12);
        assert_eq!(case3(0.3).expected_terminal(5.0), 100.0);
        assert!((case1(0.01, 0.2).expected_terminal(0.25) - 100.0 * 0.0075_f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn residuals() {
        assert!(case1(0.01, 0.2).no_arb_residual(0.03).abs() < 1e-15);
        assert_eq!(case2(0.03, 0.2).no_arb_residual(0.03), 0.0);
        assert_eq!(case3(0.2).no_arb_residual(0.03), 0.03);
        assert_eq!(case3(0.2).no_arb_residual(0.0), 0.0);
    }

    #[test]
    fn martingale_case_ignores_alpha() {
        let spec = ProcessSpec::new(ProcessCase::Martingale, 100.0, 0.5, 0.2).unwrap();
        assert_eq!(spec.alpha(), 0.0);
        assert_eq!(spec.expected_terminal(3.0), 100.0);
    }

    #[test]
    fn sde_coefficient_values() {
        let c = case1(0.01, 0.2).sde_coefficients();
        assert!((c.drift(100.0) - 3.0).abs() < 1e-12);
        assert!((c.diffusion(100.0) - 20.0).abs() < 1e-12);
        assert!((case2(0.03, 0.2).sde_coefficients().drift(100.0) - 3.0).abs() < 1e-12);
        assert_eq!(case3(0.2).sde_coefficients().drift(123.0), 0.0);
    }

    #[test]
    fn invalid_specs() {
        assert!(ProcessSpec::new(ProcessCase::LogDrift, 0.0, 0.0, 0.2).is_err());
        assert!(ProcessSpec::new(ProcessCase::LogDrift, 100.0, 0.0, 0.0).is_err());
        assert!(ProcessSpec::new(ProcessCase::LogDrift, 100.0, f64::NAN, 0.2).is_err());
        assert!(ProcessCase::from_number(4).is_none());
    }

    #[test]
    fn zero_horizon_paths_stay_at_spot() {
        for scheme in [Scheme::Exact, Scheme::Euler] {
            let set = simulate_paths(&case1(0.1, 0.3), 0.0, 4, 50, 1, scheme).unwrap();
            assert!(set.terminals.iter().all(|&s| s == 100.0));
        }
        let r = mc_martingale_check(&case1(0.1, 0.3), 0.0, 100, 1).unwrap();
        assert_eq!(r.deflated_mean, 100.0);
        assert_eq!(r.z_score, 0.0);
    }

    #[test]
    fn simulation_argument_errors() {
        let spec = case3(0.2);
        assert!(matches!(
            simulate_paths(&spec, 1.0, 0, 10, 1, Scheme::Euler),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            simulate_paths(&spec, 1.0, 1, 0, 1, Scheme::Exact),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            mc_martingale_check(&spec, 1.0, 99, 1),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn paths_are_order_independent() {
        let spec = case2(0.05, 0.25);
        let all = simulate_paths(&spec, 1.0, 8, 64, 42, Scheme::Euler).unwrap();
        // path j depends only on (seed, j)
        let mut rng = path_rng(42, 17);
        let dt = 1.0 / 8.0;
        let c = spec.sde_coefficients();
        let mut s = 100.0;
        for _ in 0..8 {
            let z: f64 = rng.sample(StandardNormal);
            s += c.drift(s) * dt + c.diffusion(s) * dt.sqrt() * z;
        }
        assert_eq!(all.terminals[17], s);
        let again = simulate_paths(&spec, 1.0, 8, 64, 42, Scheme::Euler).unwrap();
        assert_eq!(all, again);
        let shorter = simulate_paths(&spec, 1.0, 8, 20, 42, Scheme::Euler).unwrap();
        assert_eq!(&all.terminals[..20], &shorter.terminals[..]);
    }

    #[test]
    fn euler_flags_nonpositive_paths() {
        // σ√Δt of 3 makes negative steps routine
        let spec = case2(0.0, 3.0);
        let set = simulate_paths(&spec, 1.0, 1, 1000, 5, Scheme::Euler).unwrap();
        assert!(set.nonpositive_paths > 100);
        assert!(set.terminals.iter().any(|&s| s < 0.0));
    }

    #[test]
    fn csv_dump() {
        let set = SampleSet {
            terminals: vec![1.5, 2.0],
            nonpositive_paths: 0,
        };
        let mut buf = Vec::new();
        set.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "terminal\n1.5\n2\n");
    }

    #[test]
    fn discounted_case2_mean_at_risk_free_drift() {
        let r = 0.03;
        let spec = case2(r, 0.2);
        let set = simulate_paths(&spec, 1.0, 1, 1_000_000, 2024, Scheme::Exact).unwrap();
        let discounted: Vec<f64> = set.terminals.iter().map(|s| (-r).exp() * s).collect();
        let stats = SampleStats::of(&discounted);
        assert!((stats.mean - 100.0).abs() <= 4.0 * stats.std_error);
    }

    #[test]
    fn hedge_refuses_violated_constraint() {
        let err = delta_hedge_call(&case3(0.2), 100.0, 1.0, 0.03, 4, 10, 1).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolated { constraint: "r = 0", .. }));
        let err = delta_hedge_call(&case1(0.03, 0.2), 100.0, 1.0, 0.03, 4, 10, 1).unwrap_err();
        assert!(matches!(err, Error::ConstraintViolated { .. }));
    }

    #[test]
    fn zero_strike_hedge_is_exact() {
        let spec = case2(0.03, 0.2);
        let h = delta_hedge_call(&spec, 0.0, 0.25, 0.03, 64, 200, 9).unwrap();
        assert!(h.terminal_errors.iter().all(|&e| e == 0.0));
    }

    #[test]
    fn put_hedge_tracks_payoff() {
        let spec = case2(0.03, 0.2);
        let contract = OptionContract::new(110.0, 0.25, OptionKind::Put).unwrap();
        let h = delta_hedge_simulate(&spec, &contract, 0.03, 256, 2000, 3).unwrap();
        assert!(h.error_std < 0.3);
        assert!(h.error_mean.abs() <= 4.0 * h.mean_std_error + 1e-3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn deflated_mean_identity(alpha in -0.5..0.5f64, sigma in 0.01..1.0f64, t in 0.0..10.0f64, case in 1u8..=3) {
            let spec = ProcessSpec::new(ProcessCase::from_number(case).unwrap(), 100.0, alpha, sigma).unwrap();
            let product = spec.expected_terminal(t) * spec.deflator(t);
            prop_assert!((product - 100.0).abs() <= 1e-14 * 100.0);
        }

        #[test]
        fn cross_case_constraints_agree(r in -0.1..0.2f64, sigma in 0.01..1.0f64) {
            let half_var = 0.5 * sigma * sigma;
            let one = case1(r - half_var, sigma);
            let two = case2(r, sigma);
            prop_assert!(one.no_arb_residual(r).abs() <= 1e-14);
            prop_assert_eq!(two.no_arb_residual(r), 0.0);
            prop_assert!((two.alpha() - (one.alpha() + half_var)).abs() <= 1e-14);
            prop_assert!((one.log_drift() - two.log_drift()).abs() <= 1e-14);
        }
    }
}
