//! Finite differences for `r·c = c_t + r·S·c_S + ½σ²S²·c_SS` on a uniform
//! grid `[0, sMax] × [0, T]`, stepping backward from the payoff.
//!
//! Crank–Nicolson by default. Its first step is fully implicit so the payoff
//! kink at the strike does not leave a sawtooth in the solution.

use std::io::{self, Write};

use serde::Serialize;

use crate::binomial::OptionKind;
use crate::error::{ensure_finite, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TimeScheme {
    CrankNicolson,
    ImplicitEuler,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverConfig {
    pub s_max: f64,
    pub space_steps: usize,
    pub time_steps: usize,
    pub scheme: TimeScheme,
}

impl SolverConfig {
    pub fn new(s_max: f64, space_steps: usize, time_steps: usize, scheme: TimeScheme) -> Result<Self> {
        ensure_finite("s_max", s_max)?;
        if s_max <= 0.0 {
            return Err(Error::InvalidParams(format!("s_max must be positive, got {s_max}")));
        }
        if space_steps < 4 {
            return Err(Error::InvalidParams(format!(
                "need at least 4 space steps, got {space_steps}"
            )));
        }
        if time_steps < 1 {
            return Err(Error::InvalidParams("need at least 1 time step".into()));
        }
        Ok(Self {
            s_max,
            space_steps,
            time_steps,
            scheme,
        })
    }

    /// Crank–Nicolson with `sMax = 4·max(s0, strike)`.
    pub fn for_problem(s0: f64, strike: f64, space_steps: usize, time_steps: usize) -> Result<Self> {
        Self::new(4.0 * s0.max(strike), space_steps, time_steps, TimeScheme::CrankNicolson)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSolution {
    /// `values[k][i]` is the option value at `t_grid[k]`, `s_grid[i]`.
    pub values: Vec<Vec<f64>>,
    pub s_grid: Vec<f64>,
    pub t_grid: Vec<f64>,
    pub kind: OptionKind,
}

pub fn solve_call(strike: f64, rate: f64, sigma: f64, maturity: f64, config: &SolverConfig) -> Result<GridSolution> {
    solve(OptionKind::Call, strike, rate, sigma, maturity, config)
}

pub fn solve_put(strike: f64, rate: f64, sigma: f64, maturity: f64, config: &SolverConfig) -> Result<GridSolution> {
    solve(OptionKind::Put, strike, rate, sigma, maturity, config)
}

/// Dirichlet values at `S = 0` and `S = sMax` with `tau` left to expiry.
fn boundaries(kind: OptionKind, strike: f64, rate: f64, s_max: f64, tau: f64) -> (f64, f64) {
    let discounted = strike * (-rate * tau).exp();
    match kind {
        OptionKind::Call => (0.0, s_max - discounted),
        OptionKind::Put => (discounted, 0.0),
    }
}

pub fn solve(
    kind: OptionKind,
    strike: f64,
    rate: f64,
    sigma: f64,
    maturity: f64,
    config: &SolverConfig,
) -> Result<GridSolution> {
    ensure_finite("strike", strike)?;
    ensure_finite("rate", rate)?;
    ensure_finite("sigma", sigma)?;
    ensure_finite("maturity", maturity)?;
    if strike < 0.0 || sigma <= 0.0 || maturity <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "need strike ≥ 0, sigma > 0, maturity > 0; got {strike}, {sigma}, {maturity}"
        )));
    }
    if config.s_max <= strike {
        return Err(Error::InvalidParams(format!(
            "s_max {} must exceed the strike {strike}",
            config.s_max
        )));
    }
    let m = config.space_steps;
    let n = config.time_steps;
    let h = config.s_max / m as f64;
    let dt = maturity / n as f64;
    let s_grid: Vec<f64> = (0..=m).map(|i| if i == m { config.s_max } else { i as f64 * h }).collect();
    let t_grid: Vec<f64> = (0..=n).map(|k| if k == n { maturity } else { k as f64 * dt }).collect();

    // L·V at node i = lower[i]·V[i-1] + diag[i]·V[i] + upper[i]·V[i+1]
    let var = sigma * sigma;
    let lower: Vec<f64> = (0..=m).map(|i| 0.5 * (var * (i * i) as f64 - rate * i as f64)).collect();
    let diag: Vec<f64> = (0..=m).map(|i| -(var * (i * i) as f64) - rate).collect();
    let upper: Vec<f64> = (0..=m).map(|i| 0.5 * (var * (i * i) as f64 + rate * i as f64)).collect();

    let mut values = vec![Vec::new(); n + 1];
    values[n] = s_grid.iter().map(|&s| kind.payoff(s, strike)).collect();

    let interior = m - 1;
    let mut sub = vec![0.0; interior];
    let mut main = vec![0.0; interior];
    let mut sup = vec![0.0; interior];
    let mut rhs = vec![0.0; interior];

    for k in (0..n).rev() {
        let theta = match config.scheme {
            TimeScheme::ImplicitEuler => 1.0,
            TimeScheme::CrankNicolson if k == n - 1 => 1.0,
            TimeScheme::CrankNicolson => 0.5,
        };
        let prev = &values[k + 1];
        let tau = maturity - t_grid[k];
        let (lo, hi) = boundaries(kind, strike, rate, config.s_max, tau);
        for j in 0..interior {
            let i = j + 1;
            let explicit = lower[i] * prev[i - 1] + diag[i] * prev[i] + upper[i] * prev[i + 1];
            rhs[j] = prev[i] + (1.0 - theta) * dt * explicit;
            sub[j] = -theta * dt * lower[i];
            main[j] = 1.0 - theta * dt * diag[i];
            sup[j] = -theta * dt * upper[i];
        }
        rhs[0] -= sub[0] * lo;
        rhs[interior - 1] -= sup[interior - 1] * hi;
        let inner = thomas(&sub, &main, &sup, &rhs)?;
        let mut row = Vec::with_capacity(m + 1);
        row.push(lo);
        row.extend_from_slice(&inner);
        row.push(hi);
        values[k] = row;
    }

    Ok(GridSolution {
        values,
        s_grid,
        t_grid,
        kind,
    })
}

/// Solves a tridiagonal system; `sub[0]` and `sup[last]` are ignored.
pub fn thomas(sub: &[f64], main: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = main.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let scale = main.iter().chain(sub).chain(sup).fold(0.0_f64, |a, v| a.max(v.abs()));
    let tiny = f64::EPSILON * scale.max(f64::MIN_POSITIVE);
    let mut denom = main[0];
    for i in 0..n {
        if i > 0 {
            denom = main[i] - sub[i] * c[i - 1];
        }
        if !denom.is_finite() || denom.abs() <= tiny {
            return Err(Error::UnstableConfig(format!(
                "tridiagonal system is singular at row {i} (pivot {denom:e})"
            )));
        }
        c[i] = if i + 1 < n { sup[i] / denom } else { 0.0 };
        let carried = if i > 0 { sub[i] * d[i - 1] } else { 0.0 };
        d[i] = (rhs[i] - carried) / denom;
    }
    for i in (0..n.saturating_sub(1)).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    Ok(d)
}

/// Index `i` and weight `w` with `x = (1 − w)·grid[i] + w·grid[i + 1]`.
fn bracket(grid: &[f64], x: f64) -> (usize, f64) {
    let last = grid.len() - 1;
    let step = grid[last] / last as f64;
    let mut i = ((x / step).floor().max(0.0) as usize).min(last - 1);
    // the guess can be one off after rounding
    while i > 0 && grid[i] > x {
        i -= 1;
    }
    while i + 1 < last && grid[i + 1] <= x {
        i += 1;
    }
    let w = (x - grid[i]) / (grid[i + 1] - grid[i]);
    (i, w.clamp(0.0, 1.0))
}

impl GridSolution {
    pub fn maturity(&self) -> f64 {
        *self.t_grid.last().unwrap()
    }

    pub fn s_max(&self) -> f64 {
        *self.s_grid.last().unwrap()
    }

    pub fn space_step(&self) -> f64 {
        self.s_max() / (self.s_grid.len() - 1) as f64
    }

    fn check_t(&self, t: f64) -> Result<()> {
        if !(0.0..=self.maturity()).contains(&t) {
            return Err(Error::OutOfRange(format!(
                "t = {t} outside [0, {}]",
                self.maturity()
            )));
        }
        Ok(())
    }

    /// Row index and weight for time `t`.
    fn row_at(&self, t: f64) -> (usize, f64) {
        bracket(&self.t_grid, t)
    }

    fn node(&self, k: usize, wt: f64, i: usize) -> f64 {
        let v0 = self.values[k][i];
        if wt == 0.0 {
            v0
        } else {
            (1.0 - wt) * v0 + wt * self.values[k + 1][i]
        }
    }

    /// Bilinear interpolation; exact at nodes.
    pub fn price_at(&self, t: f64, s: f64) -> Result<f64> {
        self.check_t(t)?;
        if !(0.0..=self.s_max()).contains(&s) {
            return Err(Error::OutOfRange(format!("s = {s} outside [0, {}]", self.s_max())));
        }
        let (k, wt) = self.row_at(t);
        let (i, ws) = bracket(&self.s_grid, s);
        let left = self.node(k, wt, i);
        if ws == 0.0 {
            return Ok(left);
        }
        let right = self.node(k, wt, i + 1);
        if ws == 1.0 {
            return Ok(right);
        }
        Ok((1.0 - ws) * left + ws * right)
    }

    /// Central difference in `S`, interpolated linearly between the
    /// differences at neighbouring nodes. `s` must lie in
    /// `[s_grid[1], s_grid[M − 1]]`.
    pub fn solution_delta(&self, t: f64, s: f64) -> Result<f64> {
        self.check_t(t)?;
        let m = self.s_grid.len() - 1;
        let (lo, hi) = (self.s_grid[1], self.s_grid[m - 1]);
        if !(lo..=hi).contains(&s) {
            return Err(Error::OutOfRange(format!(
                "delta needs an interior price in [{lo}, {hi}], got {s}"
            )));
        }
        let (k, wt) = self.row_at(t);
        let h2 = 2.0 * self.space_step();
        let central = |i: usize| (self.node(k, wt, i + 1) - self.node(k, wt, i - 1)) / h2;
        let (i, _) = bracket(&self.s_grid, s);
        let i = i.clamp(1, m - 2);
        let ws = ((s - self.s_grid[i]) / (self.s_grid[i + 1] - self.s_grid[i])).clamp(0.0, 1.0);
        if ws == 0.0 {
            return Ok(central(i));
        }
        Ok((1.0 - ws) * central(i) + ws * central(i + 1))
    }

    /// CSV with header `t,s,value`, one line per node, ordered by time.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "t,s,value")?;
        for (t, row) in self.t_grid.iter().zip(&self.values) {
            for (s, v) in self.s_grid.iter().zip(row) {
                writeln!(out, "{t},{s},{v}")?;
            }
        }
        Ok(())
    }
}
