//! No-arbitrage pricing toolkit: arbitrage detection by a theorem of
//! alternatives, binomial and Black–Scholes–Merton pricing, geometric
//! Brownian motion martingales, delta hedging and a finite-difference PDE
//! solver, each checked against the others.

pub mod binomial;
pub mod bsm;
pub mod error;
pub mod gbm;
pub mod gordan;
pub mod pde;
pub mod simplex;
pub mod worked_example;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gordan.md")]
    mod gordan {}
    #[doc = include_str!("../../../book/src/binomial.md")]
    mod binomial {}
    #[doc = include_str!("../../../book/src/gbm.md")]
    mod gbm {}
    #[doc = include_str!("../../../book/src/bsm.md")]
    mod bsm {}
    #[doc = include_str!("../../../book/src/pde.md")]
    mod pde {}
}
