use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("asset `{asset}` has {found} payoffs, expected {expected}")]
    MismatchedStates {
        asset: String,
        expected: usize,
        found: usize,
    },

    #[error("market needs at least 2 states and 1 asset, got {states} states and {assets} assets")]
    EmptyMarket { states: usize, assets: usize },

    #[error("non-finite input: {0}")]
    NonFinite(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// The one-period growth factor `e^r` is not strictly between `d` and `u`.
    #[error("arbitrage: growth factor {growth} is outside the open interval ({down}, {up})")]
    ArbitrageViolation { growth: f64, down: f64, up: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A no-arbitrage constraint required by the operation does not hold.
    #[error("constraint {constraint} violated (residual {residual:e})")]
    ConstraintViolated {
        constraint: &'static str,
        residual: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not reach tolerance within {panels} panels")]
    QuadratureFailure { panels: usize },

    #[error("unstable solver configuration: {0}")]
    UnstableConfig(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("market file: {0}")]
    MarketFile(String),
}

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(format!("{name} = {value}")))
    }
}
