//! Black-Scholes-Merton closed form for European options, with an
//! independent quadrature route to the same lognormal expectation and a
//! finite-difference residual of the pricing PDE
//! `r·c = c_t + r·S·c_S + ½σ²S²·c_SS`.
//!
//! Rates and volatilities are per unit of `maturity`; discounting is
//! `e^{−r·T}`.

pub mod normal;
mod quadrature;

pub use normal::{erfc, norm_cdf, norm_pdf};
pub use quadrature::{adaptive_simpson, MAX_PANELS};

use serde::Serialize;

use crate::binomial::OptionKind;
use crate::error::{ensure_finite, Error, Result};

/// Absolute tolerance for the lognormal-expectation integrals.
pub const QUADRATURE_TOLERANCE: f64 = 1e-10;
/// Integration range half-width, in standard deviations of the log price.
pub const TAIL_WIDTH: f64 = 12.0;
/// Tolerance on `α + σ²/2 − r` below which the drift form may be priced.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OptionContract {
    pub strike: f64,
    pub maturity: f64,
    pub kind: OptionKind,
}

impl OptionContract {
    pub fn new(strike: f64, maturity: f64, kind: OptionKind) -> Result<Self> {
        ensure_finite("strike", strike)?;
        ensure_finite("maturity", maturity)?;
        if strike < 0.0 {
            return Err(Error::Domain(format!("strike must be ≥ 0, got {strike}")));
        }
        if maturity <= 0.0 {
            return Err(Error::Domain(format!(
                "maturity must be positive, got {maturity}"
            )));
        }
        Ok(Self {
            strike,
            maturity,
            kind,
        })
    }

    pub fn call(strike: f64, maturity: f64) -> Result<Self> {
        Self::new(strike, maturity, OptionKind::Call)
    }
}

/// Closed-form call price together with its intermediate quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BsmQuote {
    pub price: f64,
    pub d1: f64,
    pub d2: f64,
    /// Standardized log-strike `[ln(K/S₀) − αT]/(σ√T)` with `α = r − σ²/2`;
    /// equals `−d2`.
    pub a: f64,
    pub delta: f64,
}

fn check_inputs(s0: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<()> {
    for (name, v) in [
        ("s0", s0),
        ("strike", strike),
        ("rate", rate),
        ("sigma", sigma),
        ("maturity", maturity),
    ] {
        ensure_finite(name, v)?;
    }
    if s0 <= 0.0 {
        return Err(Error::Domain(format!("s0 must be positive, got {s0}")));
    }
    if strike < 0.0 {
        return Err(Error::Domain(format!("strike must be ≥ 0, got {strike}")));
    }
    if sigma <= 0.0 {
        return Err(Error::Domain(format!("sigma must be positive, got {sigma}")));
    }
    if maturity <= 0.0 {
        return Err(Error::Domain(format!(
            "maturity must be positive, got {maturity}"
        )));
    }
    Ok(())
}

pub fn d1_d2(s0: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<(f64, f64)> {
    check_inputs(s0, strike, rate, sigma, maturity)?;
    if strike == 0.0 {
        return Err(Error::Domain("d1/d2 need a positive strike".into()));
    }
    let vol = sigma * maturity.sqrt();
    let d1 = ((s0 / strike).ln() + (rate + 0.5 * sigma * sigma) * maturity) / vol;
    Ok((d1, d1 - vol))
}

/// `S₀Φ(d₁) − K·e^{−rT}Φ(d₂)`. A zero strike prices the stock itself.
pub fn price_call(s0: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<f64> {
    check_inputs(s0, strike, rate, sigma, maturity)?;
    if strike == 0.0 {
        return Ok(s0);
    }
    let (d1, d2) = d1_d2(s0, strike, rate, sigma, maturity)?;
    Ok(s0 * norm_cdf(d1) - strike * (-rate * maturity).exp() * norm_cdf(d2))
}

/// Put by parity: `call − S₀ + K·e^{−rT}`.
pub fn price_put(s0: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<f64> {
    let call = price_call(s0, strike, rate, sigma, maturity)?;
    if strike == 0.0 {
        return Ok(0.0);
    }
    Ok(call - s0 + strike * (-rate * maturity).exp())
}

pub fn price(kind: OptionKind, s0: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<f64> {
    match kind {
        OptionKind::Call => price_call(s0, strike, rate, sigma, maturity),
        OptionKind::Put => price_put(s0, strike, rate, sigma, maturity),
    }
}

/// Call hedge ratio `Φ(d₁)` with `t_remaining` years to expiry.
pub fn delta(s0: f64, strike: f64, rate: f64, sigma: f64, t_remaining: f64) -> Result<f64> {
    check_inputs(s0, strike, rate, sigma, t_remaining)?;
    if strike == 0.0 {
        return Ok(1.0);
    }
    let (d1, _) = d1_d2(s0, strike, rate, sigma, t_remaining)?;
    Ok(norm_cdf(d1))
}

/// Hedge ratio for either kind; the put's is `Φ(d₁) − 1`.
pub fn delta_of(kind: OptionKind, s0: f64, strike: f64, rate: f64, sigma: f64, t_remaining: f64) -> Result<f64> {
    let call = delta(s0, strike, rate, sigma, t_remaining)?;
    Ok(match kind {
        OptionKind::Call => call,
        OptionKind::Put => call - 1.0,
    })
}

pub fn quote(s0: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<BsmQuote> {
    let (d1, d2) = d1_d2(s0, strike, rate, sigma, maturity)?;
    let drift = rate - 0.5 * sigma * sigma;
    let a = ((strike / s0).ln() - drift * maturity) / (sigma * maturity.sqrt());
    Ok(BsmQuote {
        price: price_call(s0, strike, rate, sigma, maturity)?,
        d1,
        d2,
        a,
        delta: norm_cdf(d1),
    })
}

/// Call price written in terms of the log-price drift `α` of
/// `S(T) = S₀·e^{σW(T) + αT}`:
///
/// `e^{−rT}[S₀e^{(α+σ²/2)T}Φ(σ√T − a) − KΦ(−a)]`, `a = [ln(K/S₀) − αT]/(σ√T)`.
///
/// This only prices the option when `α + σ²/2 = r`; otherwise the
/// function refuses with [`Error::ConstraintViolated`].
pub fn price_call_case1(
    s0: f64,
    strike: f64,
    alpha: f64,
    sigma: f64,
    maturity: f64,
    rate: f64,
) -> Result<f64> {
    check_inputs(s0, strike, rate, sigma, maturity)?;
    ensure_finite("alpha", alpha)?;
    let residual = alpha + 0.5 * sigma * sigma - rate;
    if residual.abs() > CONSTRAINT_TOLERANCE {
        return Err(Error::ConstraintViolated {
            constraint: "alpha + sigma^2/2 = r",
            residual,
        });
    }
    if strike == 0.0 {
        return Ok((-rate * maturity).exp() * s0 * ((alpha + 0.5 * sigma * sigma) * maturity).exp());
    }
    let vol = sigma * maturity.sqrt();
    let a = ((strike / s0).ln() - alpha * maturity) / vol;
    let forward_leg = s0 * ((alpha + 0.5 * sigma * sigma) * maturity).exp() * norm_cdf(vol - a);
    let strike_leg = strike * norm_cdf(-a);
    Ok((-rate * maturity).exp() * (forward_leg - strike_leg))
}

fn check_oracle_inputs(s0: f64, strike: f64, log_drift: f64, sigma: f64, maturity: f64) -> Result<()> {
    ensure_finite("log_drift", log_drift)?;
    check_inputs(s0, strike, 0.0, sigma, maturity)
}

/// Undiscounted `E[(S₀e^Y − K)⁺]` with `Y ~ N(αT, σ²T)`, by adaptive
/// Simpson over the log price from `ln(K/S₀)` to `αT + 12σ√T`.
///
/// Shares no code with the closed form beyond the Gaussian density.
pub fn quadrature_oracle(s0: f64, strike: f64, log_drift: f64, sigma: f64, maturity: f64) -> Result<f64> {
    check_oracle_inputs(s0, strike, log_drift, sigma, maturity)?;
    let mean = log_drift * maturity;
    let sd = sigma * maturity.sqrt();
    if strike == 0.0 {
        return Ok(s0 * (mean + 0.5 * sd * sd).exp());
    }
    let lower = (strike / s0).ln().max(mean - TAIL_WIDTH * sd);
    let upper = mean + TAIL_WIDTH * sd;
    if lower >= upper {
        return Ok(0.0);
    }
    adaptive_simpson(
        |y| (s0 * y.exp() - strike) * norm_pdf((y - mean) / sd) / sd,
        lower,
        upper,
        QUADRATURE_TOLERANCE,
    )
}

/// Undiscounted `E[(K − S₀e^Y)⁺]`, the put-side counterpart of
/// [`quadrature_oracle`].
pub fn quadrature_put_oracle(s0: f64, strike: f64, log_drift: f64, sigma: f64, maturity: f64) -> Result<f64> {
    check_oracle_inputs(s0, strike, log_drift, sigma, maturity)?;
    if strike == 0.0 {
        return Ok(0.0);
    }
    let mean = log_drift * maturity;
    let sd = sigma * maturity.sqrt();
    let lower = mean - TAIL_WIDTH * sd;
    let upper = (strike / s0).ln().min(mean + TAIL_WIDTH * sd);
    if lower >= upper {
        return Ok(0.0);
    }
    adaptive_simpson(
        |y| (strike - s0 * y.exp()) * norm_pdf((y - mean) / sd) / sd,
        lower,
        upper,
        QUADRATURE_TOLERANCE,
    )
}

/// Largest `|r·c − c_t − r·S·c_S − ½σ²S²·c_SS|` over `spots` at time `t`,
/// with derivatives of the closed-form call taken by central differences
/// (`ΔS = 10⁻³·S`, `Δt = 10⁻⁵·T`).
pub fn pde_residual(spots: &[f64], t: f64, strike: f64, rate: f64, sigma: f64, maturity: f64) -> Result<f64> {
    check_inputs(1.0, strike, rate, sigma, maturity)?;
    pde_residual_of(
        |time, spot| price_call(spot, strike, rate, sigma, maturity - time),
        spots,
        t,
        rate,
        sigma,
        maturity,
    )
}

/// [`pde_residual`] for an arbitrary value function `value(t, S)`.
pub fn pde_residual_of<F>(value: F, spots: &[f64], t: f64, rate: f64, sigma: f64, maturity: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    let dt = 1e-5 * maturity;
    if !(t >= 0.0 && t + dt < maturity) {
        return Err(Error::Domain(format!(
            "t = {t} must satisfy 0 ≤ t < T - {dt:e}"
        )));
    }
    let t_lo = (t - dt).max(0.0);
    let t_hi = t + dt;
    let mut worst = 0.0_f64;
    for &s in spots {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::Domain(format!("grid point {s} must be positive")));
        }
        let ds = 1e-3 * s;
        let c = value(t, s)?;
        let up = value(t, s + ds)?;
        let down = value(t, s - ds)?;
        let c_s = (up - down) / (2.0 * ds);
        let c_ss = (up - 2.0 * c + down) / (ds * ds);
        let c_t = (value(t_hi, s)? - value(t_lo, s)?) / (t_hi - t_lo);
        let residual = rate * c - c_t - rate * s * c_s - 0.5 * sigma * sigma * s * s * c_ss;
        worst = worst.max(residual.abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const S0: f64 = 100.0;
    const K: f64 = 110.0;
    const R: f64 = 0.03;
    const SIGMA: f64 = 0.2;
    const T: f64 = 0.25;

    #[test]
    fn d1_d2_reference() {
        // high-precision values: -0.8281017980432486, -0.9281017980432486
        let (d1, d2) = d1_d2(S0, K, R, SIGMA, T).unwrap();
        assert!((d1 + 0.828_101_798_043_248_6).abs() < 1e-13);
        assert!((d2 + 0.928_101_798_043_248_6).abs() < 1e-13);
    }

    #[test]
    fn d1_vanishes_on_constructed_inputs() {
        let (sigma, t) = (0.2, 1.0);
        let rate = -0.5 * sigma * sigma;
        let (d1, d2) = d1_d2(100.0, 100.0, rate, sigma, t).unwrap();
        assert!(d1.abs() < 1e-15);
        assert!((d2 + sigma).abs() < 1e-15);
    }

    #[test]
    fn reference_call_and_put() {
        // 1.0913439896275013 and 10.269430019732729 at 30 digits
        assert!((price_call(S0, K, R, SIGMA, T).unwrap() - 1.091_343_989_627_501).abs() < 1e-12);
        assert!((price_put(S0, K, R, SIGMA, T).unwrap() - 10.269_430_019_732_729).abs() < 1e-11);
    }

    #[test]
    fn zero_strike_limits() {
        assert_eq!(price_call(S0, 0.0, R, SIGMA, T).unwrap(), S0);
        assert_eq!(price_put(S0, 0.0, R, SIGMA, T).unwrap(), 0.0);
        assert_eq!(delta(S0, 0.0, R, SIGMA, T).unwrap(), 1.0);
        let oracle = quadrature_oracle(S0, 0.0, 0.01, SIGMA, T).unwrap();
        assert!((oracle - S0 * (0.01 * T + 0.5 * SIGMA * SIGMA * T).exp()).abs() < 1e-12);
    }

    #[test]
    fn vanishing_volatility_limit() {
        let c = price_call(S0, 90.0, R, 1e-8, 1.0).unwrap();
        let intrinsic = (S0 - 90.0 * (-R).exp()).max(0.0);
        assert!((c - intrinsic).abs() < 1e-6);
    }

    #[test]
    fn deep_in_the_money_put() {
        let s0 = 1e-9;
        let p = price_put(s0, K, R, SIGMA, T).unwrap();
        assert!((p - (K * (-R * T).exp() - s0)).abs() < 1e-8);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(price_call(-1.0, K, R, SIGMA, T), Err(Error::Domain(_))));
        assert!(matches!(price_call(S0, K, R, 0.0, T), Err(Error::Domain(_))));
        assert!(matches!(price_call(S0, K, R, SIGMA, 0.0), Err(Error::Domain(_))));
        assert!(matches!(d1_d2(S0, 0.0, R, SIGMA, T), Err(Error::Domain(_))));
        assert!(matches!(price_call(S0, f64::NAN, R, SIGMA, T), Err(Error::NonFinite(_))));
    }

    #[test]
    fn quote_substitution_identities() {
        let q = quote(S0, K, R, SIGMA, T).unwrap();
        let vol = SIGMA * T.sqrt();
        assert!((q.d2 - (q.d1 - vol)).abs() < 1e-14);
        assert!((q.d1 - (vol - q.a)).abs() < 1e-14);
        assert!((q.d2 + q.a).abs() < 1e-14);
    }

    #[test]
    fn drift_form_matches_closed_form() {
        let alpha = R - 0.5 * SIGMA * SIGMA;
        let a3 = price_call_case1(S0, K, alpha, SIGMA, T, R).unwrap();
        let a4 = price_call(S0, K, R, SIGMA, T).unwrap();
        assert!((a3 - a4).abs() < 1e-12);

        // zero drift, volatility chosen so σ²/2 = r
        let sigma = (2.0 * R).sqrt();
        let a3 = price_call_case1(S0, K, 0.0, sigma, T, R).unwrap();
        assert!((a3 - price_call(S0, K, R, sigma, T).unwrap()).abs() < 1e-12);

        // drift equal to r misses the constraint by σ²/2
        match price_call_case1(S0, K, R, SIGMA, T, R) {
            Err(Error::ConstraintViolated { residual, .. }) => {
                assert!((residual - 0.5 * SIGMA * SIGMA).abs() < 1e-15)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quadrature_matches_closed_form() {
        let alpha = R - 0.5 * SIGMA * SIGMA;
        let integral = quadrature_oracle(S0, K, alpha, SIGMA, T).unwrap();
        let closed = price_call(S0, K, R, SIGMA, T).unwrap();
        assert!(((-R * T).exp() * integral - closed).abs() < 1e-6);

        let put_integral = quadrature_put_oracle(S0, K, alpha, SIGMA, T).unwrap();
        let put = price_put(S0, K, R, SIGMA, T).unwrap();
        assert!(((-R * T).exp() * put_integral - put).abs() < 1e-6);
    }

    #[test]
    fn far_tail_strike_is_negligible() {
        let alpha = 0.01;
        let sd = SIGMA * T.sqrt();
        let strike = S0 * (alpha * T + 10.0 * sd).exp();
        assert!(quadrature_oracle(S0, strike, alpha, SIGMA, T).unwrap() <= 1e-8 * S0);
    }

    #[test]
    fn delta_against_finite_difference() {
        let h = 1e-4 * S0;
        let fd = (price_call(S0 + h, K, R, SIGMA, T).unwrap() - price_call(S0 - h, K, R, SIGMA, T).unwrap())
            / (2.0 * h);
        assert!((delta(S0, K, R, SIGMA, T).unwrap() - fd).abs() < 1e-6);
        assert!(delta(1.0, 1000.0, R, SIGMA, T).unwrap() < 1e-15);
        assert!((delta_of(OptionKind::Put, S0, K, R, SIGMA, T).unwrap() - (fd - 1.0)).abs() < 1e-6);
    }

    #[test]
    fn closed_form_solves_the_pde() {
        let grid = [80.0, 100.0, 120.0];
        assert!(pde_residual(&grid, T / 2.0, K, R, SIGMA, T).unwrap() <= 1e-3);
        assert!(pde_residual(&grid, T / 2.0, K, R, 2.0 * SIGMA, T).unwrap() <= 1e-3);
    }

    #[test]
    fn pde_residual_detects_intrinsic_value() {
        let intrinsic = |_t: f64, s: f64| Ok((s - K).max(0.0));
        let r = pde_residual_of(intrinsic, &[K], T / 2.0, R, SIGMA, T).unwrap();
        assert!(r > 0.1, "residual {r}");
    }

    #[test]
    fn pde_residual_rejects_expired_time() {
        assert!(matches!(
            pde_residual(&[100.0], T, K, R, SIGMA, T),
            Err(Error::Domain(_))
        ));
    }

    fn market() -> impl Strategy<Value = (f64, f64, f64, f64, f64)> {
        (50.0..150.0f64, 50.0..150.0f64, 0.0..0.1f64, 0.05..0.5f64, 0.1..2.0f64)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bounds_and_parity((s0, k, r, sigma, t) in market()) {
            let c = price_call(s0, k, r, sigma, t).unwrap();
            let p = price_put(s0, k, r, sigma, t).unwrap();
            let discounted = k * (-r * t).exp();
            prop_assert!(c >= (s0 - discounted).max(0.0) - 1e-12);
            prop_assert!(c <= s0);
            prop_assert!((c - p - (s0 - discounted)).abs() <= 1e-12 * s0);
        }

        #[test]
        fn monotone_in_inputs((s0, k, r, sigma, t) in market(), bump in 0.01..5.0f64) {
            let c = price_call(s0, k, r, sigma, t).unwrap();
            prop_assert!(price_call(s0, k + bump, r, sigma, t).unwrap() <= c + 1e-12);
            prop_assert!(price_call(s0 + bump, k, r, sigma, t).unwrap() >= c - 1e-12);
            prop_assert!(price_call(s0, k, r, sigma + bump / 10.0, t).unwrap() >= c - 1e-12);
        }

        #[test]
        fn substitution_variable((s0, k, r, sigma, t) in market()) {
            let q = quote(s0, k, r, sigma, t).unwrap();
            let vol = sigma * t.sqrt();
            prop_assert!((q.d1 - (vol - q.a)).abs() <= 1e-13 * (1.0 + q.d1.abs()));
            prop_assert!((q.d2 + q.a).abs() <= 1e-13 * (1.0 + q.d2.abs()));
        }
    }
}
