//! The one-period market used throughout the docs and the cross-check:
//! spot 100 moving to 120 or 80, strike 110 call and put, and a
//! continuously compounded rate of 0.03 over the period.
//!
//! Option prices are the exact state-price values, not rounded quotes.
//! They round to 5.5911 (call) and 12.34 (put).

use crate::binomial::{self, OnePeriodMarket};
use crate::gordan::AssetQuote;

pub const SPOT: f64 = 100.0;
pub const UP: f64 = 1.2;
pub const DOWN: f64 = 0.8;
pub const RATE: f64 = 0.03;
pub const STRIKE: f64 = 110.0;

/// Printed reference values with the precision they are quoted at.
pub const RISK_NEUTRAL_PROB: f64 = 0.5761;
pub const CALL_PRICE: f64 = 5.5911;
pub const PUT_PRICE: f64 = 12.34;
pub const CALL_DELTA: f64 = 0.25;
pub const CALL_BANK: f64 = -19.4089;

pub fn market() -> OnePeriodMarket {
    OnePeriodMarket::new(SPOT, UP, DOWN, RATE).expect("viable fixture")
}

pub fn call_payoffs() -> (f64, f64) {
    ((SPOT * UP - STRIKE).max(0.0), (SPOT * DOWN - STRIKE).max(0.0))
}

pub fn put_payoffs() -> (f64, f64) {
    ((STRIKE - SPOT * UP).max(0.0), (STRIKE - SPOT * DOWN).max(0.0))
}

/// Money market, stock, call and put rows at exact prices.
pub fn quotes() -> Vec<AssetQuote> {
    let mkt = market();
    let (cu, cd) = call_payoffs();
    let (pu, pd) = put_payoffs();
    let call = binomial::price_european(&mkt, cu, cd).expect("viable");
    let put = binomial::price_european(&mkt, pu, pd).expect("viable");
    let growth = RATE.exp();
    vec![
        AssetQuote::new("money market", 1.0, vec![growth, growth]),
        AssetQuote::new("stock", SPOT, vec![SPOT * UP, SPOT * DOWN]),
        AssetQuote::new("call", call, vec![cu, cd]),
        AssetQuote::new("put", put, vec![pu, pd]),
    ]
}
