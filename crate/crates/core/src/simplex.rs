//! Dense two-phase simplex for small linear programs.
//!
//! Problems are stated as `minimize cᵀx` over `x ≥ 0` with a list of
//! `≤`, `≥` or `=` rows. Entering and leaving variables follow Bland's
//! rule (lowest eligible index), which rules out cycling at the price of
//! speed. The instances solved here have at most a few dozen columns.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::LessEq => Relation::GreaterEq,
            Relation::GreaterEq => Relation::LessEq,
            Relation::Equal => Relation::Equal,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    /// Minimized. Its length fixes the number of structural variables.
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    /// Smallest magnitude treated as nonzero for pivots and reduced costs.
    pub pivot_tolerance: f64,
    /// Largest phase-one objective (sum of artificials) accepted as feasible.
    pub feasibility_tolerance: f64,
    /// Pivot budget across both phases.
    pub max_pivots: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            pivot_tolerance: 1e-11,
            feasibility_tolerance: 1e-9,
            max_pivots: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, value: f64 },
    /// Phase one stalled with this much artificial mass left.
    Infeasible { infeasibility: f64 },
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    /// Reduced costs; the last entry holds minus the objective value.
    costs: Vec<f64>,
    basis: Vec<usize>,
    kinds: Vec<ColumnKind>,
    pivots: usize,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn width(&self) -> usize {
        self.kinds.len()
    }

    fn rhs(&self, row: usize) -> f64 {
        self.rows[row][self.width()]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let width = self.width();
        let p = self.rows[row][col];
        for v in self.rows[row].iter_mut() {
            *v /= p;
        }
        self.rows[row][col] = 1.0;
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let factor = r[col];
            if factor != 0.0 {
                for j in 0..=width {
                    r[j] -= factor * pivot_row[j];
                }
                r[col] = 0.0;
            }
        }
        let factor = self.costs[col];
        if factor != 0.0 {
            for j in 0..=width {
                self.costs[j] -= factor * pivot_row[j];
            }
            self.costs[col] = 0.0;
        }
        self.basis[row] = col;
        self.pivots += 1;
    }

    fn load_costs(&mut self, cost_of: impl Fn(usize) -> f64) {
        let width = self.width();
        let mut costs: Vec<f64> = (0..width).map(&cost_of).collect();
        costs.push(0.0);
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost_of(b);
            if cb != 0.0 {
                for j in 0..=width {
                    costs[j] -= cb * self.rows[i][j];
                }
            }
        }
        self.costs = costs;
    }

    fn run(&mut self, opts: &SimplexOptions, allow_artificial: bool) -> Result<PhaseEnd> {
        let width = self.width();
        loop {
            let entering = (0..width).find(|&j| {
                (allow_artificial || self.kinds[j] != ColumnKind::Artificial)
                    && self.costs[j] < -opts.pivot_tolerance
            });
            let Some(col) = entering else {
                return Ok(PhaseEnd::Optimal);
            };

            let mut leaving: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][col];
                if a <= opts.pivot_tolerance {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                leaving = match leaving {
                    None => Some((i, ratio)),
                    Some((best, best_ratio)) => {
                        let tie = (ratio - best_ratio).abs() <= 1e-12 * (1.0 + best_ratio.abs());
                        if ratio < best_ratio && !tie
                            || tie && self.basis[i] < self.basis[best]
                        {
                            Some((i, ratio))
                        } else {
                            Some((best, best_ratio))
                        }
                    }
                };
            }
            let Some((row, _)) = leaving else {
                return Ok(PhaseEnd::Unbounded);
            };

            if self.pivots >= opts.max_pivots {
                return Err(Error::NumericalFailure(format!(
                    "simplex exceeded {} pivots",
                    opts.max_pivots
                )));
            }
            self.pivot(row, col);
        }
    }
}

impl LinearProgram {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn solve(&self, opts: &SimplexOptions) -> Result<LpOutcome> {
        let n = self.num_vars();
        for (k, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::InvalidParams(format!(
                    "constraint {k} has {} coefficients, expected {n}",
                    c.coeffs.len()
                )));
            }
        }

        // Normalize to nonnegative right-hand sides.
        let rows: Vec<Constraint> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs < 0.0 {
                    Constraint {
                        coeffs: c.coeffs.iter().map(|v| -v).collect(),
                        relation: c.relation.flipped(),
                        rhs: -c.rhs,
                    }
                } else {
                    c.clone()
                }
            })
            .collect();

        let slacks = rows
            .iter()
            .filter(|c| c.relation != Relation::Equal)
            .count();
        let artificials = rows
            .iter()
            .filter(|c| c.relation != Relation::LessEq)
            .count();
        let width = n + slacks + artificials;

        let mut kinds = vec![ColumnKind::Structural; n];
        kinds.extend(std::iter::repeat_n(ColumnKind::Slack, slacks));
        kinds.extend(std::iter::repeat_n(ColumnKind::Artificial, artificials));

        let mut table = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        let mut next_slack = n;
        let mut next_artificial = n + slacks;
        for c in &rows {
            let mut r = vec![0.0; width + 1];
            r[..n].copy_from_slice(&c.coeffs);
            r[width] = c.rhs;
            match c.relation {
                Relation::LessEq => {
                    r[next_slack] = 1.0;
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::GreaterEq => {
                    r[next_slack] = -1.0;
                    next_slack += 1;
                    r[next_artificial] = 1.0;
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                Relation::Equal => {
                    r[next_artificial] = 1.0;
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            table.push(r);
        }

        let mut tab = Tableau {
            rows: table,
            costs: Vec::new(),
            basis,
            kinds,
            pivots: 0,
        };

        if artificials > 0 {
            let kinds = tab.kinds.clone();
            tab.load_costs(|j| {
                if kinds[j] == ColumnKind::Artificial {
                    1.0
                } else {
                    0.0
                }
            });
            // Phase one is bounded below by zero, so it cannot be unbounded.
            tab.run(opts, true)?;
            let infeasibility = -tab.costs[width];
            if infeasibility > opts.feasibility_tolerance {
                return Ok(LpOutcome::Infeasible { infeasibility });
            }
            // Drive zero-level artificials out of the basis where possible;
            // rows where that fails are redundant and stay inert.
            for i in 0..tab.rows.len() {
                if tab.kinds[tab.basis[i]] != ColumnKind::Artificial {
                    continue;
                }
                let replacement = (0..width).find(|&j| {
                    tab.kinds[j] != ColumnKind::Artificial
                        && tab.rows[i][j].abs() > opts.pivot_tolerance
                });
                if let Some(j) = replacement {
                    tab.pivot(i, j);
                }
            }
        }

        let objective = &self.objective;
        tab.load_costs(|j| if j < n { objective[j] } else { 0.0 });
        match tab.run(opts, false)? {
            PhaseEnd::Unbounded => Ok(LpOutcome::Unbounded),
            PhaseEnd::Optimal => {
                let mut x = vec![0.0; n];
                for (i, &b) in tab.basis.iter().enumerate() {
                    if b < n {
                        x[b] = tab.rhs(i);
                    }
                }
                let value = x.iter().zip(objective).map(|(a, b)| a * b).sum();
                Ok(LpOutcome::Optimal { x, value })
            }
        }
    }
}
