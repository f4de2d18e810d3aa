//! One-period binomial pricing and replication, plus a multi-period
//! Cox-Ross-Rubinstein lattice used to check convergence to the closed form.
//!
//! The one-period `rate` is the continuously compounded rate over the whole
//! period, so the growth factor is `e^rate`. The lattice instead takes an
//! annual rate and a maturity in years.

use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OnePeriodMarket {
    s0: f64,
    up: f64,
    down: f64,
    rate: f64,
}

impl OnePeriodMarket {
    /// Rejects markets where `e^rate` is not strictly between `down` and
    /// `up`: such a market admits an arbitrage and has no pricing measure.
    pub fn new(s0: f64, up: f64, down: f64, rate: f64) -> Result<Self> {
        for (name, v) in [("s0", s0), ("u", up), ("d", down), ("r", rate)] {
            ensure_finite(name, v)?;
        }
        if s0 <= 0.0 {
            return Err(Error::Domain(format!("s0 must be positive, got {s0}")));
        }
        if down <= 0.0 || up <= down {
            return Err(Error::Domain(format!(
                "need u > d > 0, got u = {up}, d = {down}"
            )));
        }
        let growth = rate.exp();
        if !(down < growth && growth < up) {
            return Err(Error::ArbitrageViolation {
                growth,
                down,
                up,
            });
        }
        Ok(Self {
            s0,
            up,
            down,
            rate,
        })
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn up(&self) -> f64 {
        self.up
    }

    pub fn down(&self) -> f64 {
        self.down
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    fn growth(&self) -> f64 {
        self.rate.exp()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReplicationPlan {
    /// Shares of stock held.
    pub delta: f64,
    /// Money in the bank; negative means borrowed.
    pub bank: f64,
    /// `delta · s0 + bank`.
    pub cost: f64,
}

/// `π = (e^r − d) / (u − d)`.
pub fn risk_neutral_prob(mkt: &OnePeriodMarket) -> f64 {
    (mkt.growth() - mkt.down) / (mkt.up - mkt.down)
}

/// Discounted expectation of the payoff under the risk-neutral measure.
pub fn price_european(mkt: &OnePeriodMarket, payoff_up: f64, payoff_down: f64) -> Result<f64> {
    ensure_finite("payoff_up", payoff_up)?;
    ensure_finite("payoff_down", payoff_down)?;
    let pi = risk_neutral_prob(mkt);
    Ok((-mkt.rate).exp() * (pi * payoff_up + (1.0 - pi) * payoff_down))
}

/// Stock-and-bank holdings that reproduce the payoff in both states.
pub fn replicate(mkt: &OnePeriodMarket, payoff_up: f64, payoff_down: f64) -> Result<ReplicationPlan> {
    ensure_finite("payoff_up", payoff_up)?;
    ensure_finite("payoff_down", payoff_down)?;
    let (u, d, s0) = (mkt.up, mkt.down, mkt.s0);
    let delta = (payoff_up - payoff_down) / (s0 * u - s0 * d);
    let bank = (-mkt.rate).exp() * (u * payoff_down - d * payoff_up) / (u - d);
    Ok(ReplicationPlan {
        delta,
        bank,
        cost: delta * s0 + bank,
    })
}

/// Long `Δ` shares, short one claim, chosen so the position pays the same
/// in both states; the claim price follows from discounting that riskless
/// payoff. Returns `(delta, price)`.
pub fn covered_hedge(mkt: &OnePeriodMarket, payoff_up: f64, payoff_down: f64) -> Result<(f64, f64)> {
    ensure_finite("payoff_up", payoff_up)?;
    ensure_finite("payoff_down", payoff_down)?;
    let (su, sd) = (mkt.s0 * mkt.up, mkt.s0 * mkt.down);
    // Δ·su − cu = Δ·sd − cd
    let delta = (payoff_up - payoff_down) / (su - sd);
    let riskless = delta * sd - payoff_down;
    let price = delta * mkt.s0 - riskless * (-mkt.rate).exp();
    Ok((delta, price))
}

/// `π·payoff_up + (1−π)·payoff_down − e^r·price0`; zero exactly when the
/// asset is priced by the risk-neutral measure.
pub fn martingale_identity_check(
    mkt: &OnePeriodMarket,
    price0: f64,
    payoff_up: f64,
    payoff_down: f64,
) -> f64 {
    let pi = risk_neutral_prob(mkt);
    pi * payoff_up + (1.0 - pi) * payoff_down - mkt.growth() * price0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OptionKind {
    Call,
    Put,
}

impl OptionKind {
    pub fn payoff(self, spot: f64, strike: f64) -> f64 {
        match self {
            OptionKind::Call => (spot - strike).max(0.0),
            OptionKind::Put => (strike - spot).max(0.0),
        }
    }
}

/// European price on an `steps`-period CRR lattice with `u = e^{σ√Δt}`,
/// `d = 1/u` and per-step growth `e^{rΔt}`.
pub fn crr_lattice_price(
    s0: f64,
    strike: f64,
    rate: f64,
    sigma: f64,
    maturity: f64,
    steps: usize,
    kind: OptionKind,
) -> Result<f64> {
    for (name, v) in [
        ("s0", s0),
        ("strike", strike),
        ("rate", rate),
        ("sigma", sigma),
        ("maturity", maturity),
    ] {
        ensure_finite(name, v)?;
    }
    if steps == 0 {
        return Err(Error::InvalidParams("steps must be at least 1".into()));
    }
    if s0 <= 0.0 || strike < 0.0 || sigma <= 0.0 || maturity <= 0.0 {
        return Err(Error::Domain(
            "need s0 > 0, strike ≥ 0, sigma > 0, maturity > 0".into(),
        ));
    }
    let dt = maturity / steps as f64;
    let jump = sigma * dt.sqrt();
    let (up, down) = (jump.exp(), (-jump).exp());
    let growth = (rate * dt).exp();
    if !(down < growth && growth < up) {
        return Err(Error::ArbitrageViolation { growth, down, up });
    }
    let pi = (growth - down) / (up - down);
    let discount = (-rate * dt).exp();

    let mut values: Vec<f64> = (0..=steps)
        .map(|j| {
            let spot = s0 * (jump * (2.0 * j as f64 - steps as f64)).exp();
            kind.payoff(spot, strike)
        })
        .collect();
    for level in (0..steps).rev() {
        for j in 0..=level {
            values[j] = discount * (pi * values[j + 1] + (1.0 - pi) * values[j]);
        }
    }
    Ok(values[0])
}

/// `call − put − s0 + strike·e^{−r·maturity}`.
pub fn put_call_parity_residual(
    call_price: f64,
    put_price: f64,
    s0: f64,
    strike: f64,
    rate: f64,
    maturity: f64,
) -> f64 {
    call_price - put_price - s0 + strike * (-rate * maturity).exp()
}
