//! The worked one-period example and the four-way pricing comparison,
//! as a table of checks.

use noarb::binomial::{self, OptionKind};
use noarb::gordan::{self, Classification};
use noarb::pde::{self, SolverConfig, TimeScheme};
use noarb::worked_example as fig;
use noarb::{bsm, Result};
use serde_json::{json, Value};

use crate::{fail, Outcome, EXIT_NUMERICAL, EXIT_OK};

/// Inputs of the four-way comparison: spot, strike, rate, volatility, maturity.
pub const COMPARISON: (f64, f64, f64, f64, f64) = (100.0, 110.0, 0.03, 0.2, 0.25);
pub const CRR_STEPS: usize = 1000;
pub const PDE_GRID: (f64, usize, usize) = (440.0, 400, 400);
pub const METHOD_TOLERANCE: f64 = 0.01;

#[derive(Debug, Clone, PartialEq)]
pub struct XcheckRow {
    pub name: &'static str,
    pub expected: f64,
    pub value: f64,
    pub tolerance: f64,
}

impl XcheckRow {
    fn new(name: &'static str, expected: f64, value: f64, tolerance: f64) -> Self {
        Self {
            name,
            expected,
            value,
            tolerance,
        }
    }

    pub fn deviation(&self) -> f64 {
        (self.value - self.expected).abs()
    }

    pub fn pass(&self) -> bool {
        self.deviation() <= self.tolerance
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "expected": self.expected,
            "value": self.value,
            "deviation": self.deviation(),
            "tolerance": self.tolerance,
            "pass": self.pass(),
        })
    }
}

/// Every check in the order it is reported.
pub fn xcheck_rows() -> Result<Vec<XcheckRow>> {
    let mut rows = Vec::new();

    let classification = gordan::classify_market(&fig::quotes(), fig::RATE)?;
    let (measure_pi, complete) = match &classification {
        Classification::NoArbitrage { measure, complete } => (measure.probabilities[0], *complete),
        Classification::Arbitrage(_) => (f64::NAN, false),
    };
    rows.push(XcheckRow::new("gordan state measure pi", fig::RISK_NEUTRAL_PROB, measure_pi, 5e-4));
    rows.push(XcheckRow::new("gordan complete market", 1.0, f64::from(u8::from(complete)), 0.0));

    let mkt = fig::market();
    let (cu, cd) = fig::call_payoffs();
    let (pu, pd) = fig::put_payoffs();
    let call = binomial::price_european(&mkt, cu, cd)?;
    let put = binomial::price_european(&mkt, pu, pd)?;
    let plan = binomial::replicate(&mkt, cu, cd)?;
    rows.push(XcheckRow::new("binomial pi", fig::RISK_NEUTRAL_PROB, binomial::risk_neutral_prob(&mkt), 5e-4));
    rows.push(XcheckRow::new("binomial call c0", fig::CALL_PRICE, call, 5e-4));
    rows.push(XcheckRow::new("binomial put p0", fig::PUT_PRICE, put, 5e-3));
    rows.push(XcheckRow::new("replication delta", fig::CALL_DELTA, plan.delta, 5e-4));
    rows.push(XcheckRow::new("replication bank", fig::CALL_BANK, plan.bank, 5e-4));
    let parity = binomial::put_call_parity_residual(call, put, fig::SPOT, fig::STRIKE, fig::RATE, 1.0);
    rows.push(XcheckRow::new("put-call parity residual", 0.0, parity, 1e-9));

    let (s0, k, r, sigma, t) = COMPARISON;
    let closed = bsm::price_call(s0, k, r, sigma, t)?;
    let lattice = binomial::crr_lattice_price(s0, k, r, sigma, t, CRR_STEPS, OptionKind::Call)?;
    let (s_max, m, n) = PDE_GRID;
    let grid = pde::solve_call(k, r, sigma, t, &SolverConfig::new(s_max, m, n, TimeScheme::CrankNicolson)?)?
        .price_at(0.0, s0)?;
    let integral = (-r * t).exp() * bsm::quadrature_oracle(s0, k, r - 0.5 * sigma * sigma, sigma, t)?;
    rows.push(XcheckRow::new("crr lattice vs closed form", closed, lattice, METHOD_TOLERANCE));
    rows.push(XcheckRow::new("pde grid vs closed form", closed, grid, METHOD_TOLERANCE));
    rows.push(XcheckRow::new("quadrature vs closed form", closed, integral, METHOD_TOLERANCE));
    let prices = [closed, lattice, grid, integral];
    let hi = prices.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = prices.iter().copied().fold(f64::INFINITY, f64::min);
    rows.push(XcheckRow::new("four-way spread", 0.0, hi - lo, METHOD_TOLERANCE));
    Ok(rows)
}

pub(crate) fn run_xcheck() -> Outcome {
    let rows = xcheck_rows().map_err(|e| {
        let mut failure = fail(e);
        failure.exit_code = EXIT_NUMERICAL;
        failure
    })?;
    let all_pass = rows.iter().all(XcheckRow::pass);
    let payload = json!({
        "command": "xcheck",
        "pass": all_pass,
        "rows": rows.iter().map(XcheckRow::to_json).collect::<Vec<_>>(),
    });
    Ok((if all_pass { EXIT_OK } else { EXIT_NUMERICAL }, payload))
}

pub(crate) fn render_table(rows: &[Value], payload: &Value) -> String {
    let mut out = format!(
        "{:<28} {:>12} {:>12} {:>10} {:>9}  result\n",
        "check", "expected", "value", "deviation", "tolerance"
    );
    for row in rows {
        let num = |k: &str| row[k].as_f64().unwrap_or(f64::NAN);
        out.push_str(&format!(
            "{:<28} {:>12.6} {:>12.6} {:>10.2e} {:>9.0e}  {}\n",
            row["name"].as_str().unwrap_or(""),
            num("expected"),
            num("value"),
            num("deviation"),
            num("tolerance"),
            if row["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" },
        ));
    }
    let verdict = if payload["pass"].as_bool() == Some(true) { "all checks pass" } else { "some checks FAILED" };
    out.push_str(verdict);
    out.push('\n');
    out
}
