//! One-period arbitrage detection as a theorem of alternatives.
//!
//! For an excess-payoff matrix with assets as rows and states as columns,
//! exactly one of two systems is solvable:
//!
//! * a portfolio `x` whose excess payoff is strictly positive in every state
//!   (an arbitrage), or
//! * a probability vector `p ≥ 0`, `Σp = 1`, under which every asset's
//!   expected excess payoff is zero (a state-price measure).
//!
//! Both sides are decided with the dense simplex in [`crate::simplex`]. The
//! market is complete, and the measure unique, when the matrix has rank
//! `states − 1`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::simplex::{Constraint, LinearProgram, LpOutcome, Relation, SimplexOptions};

/// Largest `max |row · p|` accepted for a state measure.
pub const FEASIBILITY_TOLERANCE: f64 = 1e-9;
/// Smallest worst-state excess payoff that counts as an arbitrage, after
/// scaling the portfolio to unit max-norm.
pub const POSITIVITY_TOLERANCE: f64 = 1e-9;
/// Pivots below this fraction of the largest entry count as zero in the rank test.
pub const RANK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssetQuote {
    pub name: String,
    pub price0: f64,
    pub payoffs: Vec<f64>,
}

impl AssetQuote {
    pub fn new(name: impl Into<String>, price0: f64, payoffs: Vec<f64>) -> Self {
        Self {
            name: name.into(),
            price0,
            payoffs,
        }
    }
}

/// A market-definition file: `{"rate": .., "states": .., "assets": [..]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarketFile {
    pub rate: f64,
    pub states: usize,
    pub assets: Vec<AssetQuote>,
}

impl MarketFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let market: MarketFile =
            serde_json::from_str(text).map_err(|e| Error::MarketFile(e.to_string()))?;
        for a in &market.assets {
            if a.payoffs.len() != market.states {
                return Err(Error::MismatchedStates {
                    asset: a.name.clone(),
                    expected: market.states,
                    found: a.payoffs.len(),
                });
            }
        }
        Ok(market)
    }

    pub fn excess_matrix(&self) -> Result<PayoffMatrix> {
        build_excess_matrix(&self.assets, self.rate)
    }
}

/// Excess payoffs `payoff_j(i) − e^r · price0_j`, one row per asset.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffMatrix {
    entries: Vec<Vec<f64>>,
    rate: f64,
}

impl PayoffMatrix {
    /// Wraps raw excess payoffs. Rows must share a length of at least 2.
    pub fn from_rows(entries: Vec<Vec<f64>>, rate: f64) -> Result<Self> {
        let states = entries.first().map_or(0, Vec::len);
        if entries.is_empty() || states < 2 {
            return Err(Error::EmptyMarket {
                states,
                assets: entries.len(),
            });
        }
        for (j, row) in entries.iter().enumerate() {
            if row.len() != states {
                return Err(Error::MismatchedStates {
                    asset: format!("row {j}"),
                    expected: states,
                    found: row.len(),
                });
            }
            for v in row {
                ensure_finite("excess payoff", *v)?;
            }
        }
        ensure_finite("rate", rate)?;
        Ok(Self { entries, rate })
    }

    pub fn asset_count(&self) -> usize {
        self.entries.len()
    }

    pub fn state_count(&self) -> usize {
        self.entries[0].len()
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn entry(&self, asset: usize, state: usize) -> f64 {
        self.entries[asset][state]
    }

    /// Excess payoff of portfolio `weights` in each state.
    pub fn portfolio_excess(&self, weights: &[f64]) -> Vec<f64> {
        (0..self.state_count())
            .map(|i| {
                self.entries
                    .iter()
                    .zip(weights)
                    .map(|(row, w)| row[i] * w)
                    .sum()
            })
            .collect()
    }

    /// Expected excess payoff of each asset under `probabilities`.
    pub fn expected_excess(&self, probabilities: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(probabilities).map(|(a, p)| a * p).sum())
            .collect()
    }

    fn pivot_budget(&self) -> usize {
        10 * (self.asset_count() + self.state_count())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateMeasure {
    pub probabilities: Vec<f64>,
    pub unique: bool,
    /// `max |row · p|` over assets.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArbitrageCertificate {
    /// Portfolio weights, scaled so the largest magnitude is 1.
    pub weights: Vec<f64>,
    /// Smallest excess payoff over states; strictly positive.
    pub worst_excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Classification {
    NoArbitrage {
        measure: StateMeasure,
        complete: bool,
    },
    Arbitrage(ArbitrageCertificate),
}

impl Classification {
    pub fn is_arbitrage(&self) -> bool {
        matches!(self, Classification::Arbitrage(_))
    }
}

pub fn build_excess_matrix(quotes: &[AssetQuote], rate: f64) -> Result<PayoffMatrix> {
    ensure_finite("rate", rate)?;
    let states = quotes.first().map_or(0, |q| q.payoffs.len());
    if quotes.is_empty() || states < 2 {
        return Err(Error::EmptyMarket {
            states,
            assets: quotes.len(),
        });
    }
    let growth = rate.exp();
    let mut entries = Vec::with_capacity(quotes.len());
    for q in quotes {
        if q.payoffs.len() != states {
            return Err(Error::MismatchedStates {
                asset: q.name.clone(),
                expected: states,
                found: q.payoffs.len(),
            });
        }
        ensure_finite(&format!("{}.price0", q.name), q.price0)?;
        for v in &q.payoffs {
            ensure_finite(&format!("{}.payoff", q.name), *v)?;
        }
        let forward = growth * q.price0;
        entries.push(q.payoffs.iter().map(|v| v - forward).collect());
    }
    Ok(PayoffMatrix { entries, rate })
}

/// Finds `p ≥ 0`, `Σp = 1` with every asset's expected excess payoff zero.
///
/// Returns `Ok(None)` when no such measure exists within
/// [`FEASIBILITY_TOLERANCE`]; by the alternative, an arbitrage then exists.
pub fn solve_state_measure(m: &PayoffMatrix) -> Result<Option<StateMeasure>> {
    let order: Vec<usize> = (0..m.state_count()).collect();
    solve_state_measure_in_order(m, &order)
}

/// Same as [`solve_state_measure`], with LP columns laid out in `order`.
///
/// Bland's rule prefers low column indices, so a different order starts the
/// simplex from a different basis. Used to cross-check uniqueness.
pub fn solve_state_measure_in_order(
    m: &PayoffMatrix,
    order: &[usize],
) -> Result<Option<StateMeasure>> {
    let states = m.state_count();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..states).collect::<Vec<_>>() {
        return Err(Error::InvalidParams(
            "state order must be a permutation".into(),
        ));
    }

    let mut constraints: Vec<Constraint> = m
        .rows()
        .iter()
        .map(|row| Constraint {
            coeffs: order.iter().map(|&i| row[i]).collect(),
            relation: Relation::Equal,
            rhs: 0.0,
        })
        .collect();
    constraints.push(Constraint {
        coeffs: vec![1.0; states],
        relation: Relation::Equal,
        rhs: 1.0,
    });
    let lp = LinearProgram {
        objective: vec![0.0; states],
        constraints,
    };
    let opts = SimplexOptions {
        feasibility_tolerance: FEASIBILITY_TOLERANCE,
        max_pivots: m.pivot_budget(),
        ..SimplexOptions::default()
    };

    let x = match lp.solve(&opts)? {
        LpOutcome::Optimal { x, .. } => x,
        LpOutcome::Infeasible { .. } => return Ok(None),
        LpOutcome::Unbounded => {
            return Err(Error::NumericalFailure(
                "state-measure LP reported unbounded".into(),
            ))
        }
    };

    let mut probabilities = vec![0.0; states];
    for (k, &i) in order.iter().enumerate() {
        probabilities[i] = x[k].max(0.0);
    }
    let total: f64 = probabilities.iter().sum();
    if total <= 0.0 {
        return Ok(None);
    }
    for p in probabilities.iter_mut() {
        *p /= total;
    }
    let residual = m
        .expected_excess(&probabilities)
        .into_iter()
        .fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if residual > FEASIBILITY_TOLERANCE {
        return Ok(None);
    }
    Ok(Some(StateMeasure {
        probabilities,
        unique: check_completeness(m),
        residual,
    }))
}

/// Solves `max t` subject to `(Ax)_i ≥ t` in every state and `‖x‖∞ ≤ 1`.
///
/// Returns the optimal portfolio as a certificate when its worst-state
/// excess payoff exceeds [`POSITIVITY_TOLERANCE`].
pub fn find_arbitrage(m: &PayoffMatrix) -> Result<Option<ArbitrageCertificate>> {
    let (weights, _) = max_min_portfolio(m)?;
    let scale = weights.iter().fold(0.0_f64, |acc, w| acc.max(w.abs()));
    if scale == 0.0 {
        return Ok(None);
    }
    let weights: Vec<f64> = weights.iter().map(|w| w / scale).collect();
    let worst_excess = m
        .portfolio_excess(&weights)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    if worst_excess > POSITIVITY_TOLERANCE {
        Ok(Some(ArbitrageCertificate {
            weights,
            worst_excess,
        }))
    } else {
        Ok(None)
    }
}

/// Optimal value of the max-min LP behind [`find_arbitrage`].
///
/// Zero exactly when no arbitrage exists; the size of a positive value says
/// how far the market is from the no-arbitrage boundary.
pub fn arbitrage_margin(m: &PayoffMatrix) -> Result<f64> {
    max_min_portfolio(m).map(|(_, t)| t)
}

fn max_min_portfolio(m: &PayoffMatrix) -> Result<(Vec<f64>, f64)> {
    let assets = m.asset_count();
    // Columns: shifted weights u_j = x_j + 1 in [0, 2], then t⁺, t⁻.
    let width = assets + 2;
    let mut constraints = Vec::with_capacity(m.state_count() + assets);
    for i in 0..m.state_count() {
        let mut coeffs: Vec<f64> = m.rows().iter().map(|row| row[i]).collect();
        let rhs = coeffs.iter().sum();
        coeffs.push(-1.0);
        coeffs.push(1.0);
        constraints.push(Constraint {
            coeffs,
            relation: Relation::GreaterEq,
            rhs,
        });
    }
    for j in 0..assets {
        let mut coeffs = vec![0.0; width];
        coeffs[j] = 1.0;
        constraints.push(Constraint {
            coeffs,
            relation: Relation::LessEq,
            rhs: 2.0,
        });
    }
    let mut objective = vec![0.0; width];
    objective[assets] = -1.0;
    objective[assets + 1] = 1.0;
    let lp = LinearProgram {
        objective,
        constraints,
    };
    let opts = SimplexOptions {
        max_pivots: m.pivot_budget(),
        ..SimplexOptions::default()
    };
    match lp.solve(&opts)? {
        LpOutcome::Optimal { x, value } => {
            let weights = x[..assets].iter().map(|u| u - 1.0).collect();
            Ok((weights, -value))
        }
        // x = 0, t = min_i(0) is always feasible and t is bounded by the box.
        other => Err(Error::NumericalFailure(format!(
            "arbitrage LP ended as {other:?}"
        ))),
    }
}

/// True when the excess matrix has rank `states − 1`.
pub fn check_completeness(m: &PayoffMatrix) -> bool {
    numerical_rank(m.rows(), RANK_TOLERANCE) + 1 == m.state_count()
}

/// Rank by Gaussian elimination with partial (row) pivoting. Pivots at or
/// below `relative_tol` times the largest absolute entry count as zero.
pub fn numerical_rank(rows: &[Vec<f64>], relative_tol: f64) -> usize {
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let largest = a
        .iter()
        .flatten()
        .fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if largest == 0.0 {
        return 0;
    }
    let threshold = relative_tol * largest;
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let (pivot_row, pivot_abs) = (rank..n_rows)
            .map(|r| (r, a[r][col].abs()))
            .fold((rank, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_abs <= threshold {
            continue;
        }
        a.swap(rank, pivot_row);
        for r in rank + 1..n_rows {
            let factor = a[r][col] / a[rank][col];
            if factor != 0.0 {
                for c in col..n_cols {
                    a[r][c] -= factor * a[rank][c];
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn classify_market(quotes: &[AssetQuote], rate: f64) -> Result<Classification> {
    classify_matrix(&build_excess_matrix(quotes, rate)?)
}

pub fn classify_matrix(m: &PayoffMatrix) -> Result<Classification> {
    if let Some(measure) = solve_state_measure(m)? {
        let complete = measure.unique;
        return Ok(Classification::NoArbitrage { measure, complete });
    }
    match find_arbitrage(m)? {
        Some(cert) => Ok(Classification::Arbitrage(cert)),
        None => Err(Error::NumericalFailure(
            "market sits inside the tolerance band: neither a measure nor an arbitrage was found"
                .into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked_example;
    use proptest::prelude::*;

    fn stock_only(up: f64, down: f64) -> PayoffMatrix {
        build_excess_matrix(&[AssetQuote::new("stock", 100.0, vec![up, down])], 0.03).unwrap()
    }

    #[test]
    fn excess_rows_of_worked_example() {
        let m = build_excess_matrix(&worked_example::quotes(), worked_example::RATE).unwrap();
        assert_eq!(m.asset_count(), 4);
        assert_eq!(m.rows()[0], vec![0.0, 0.0]);
        assert!((m.entry(1, 0) - 16.954_55).abs() < 1e-5);
        assert!((m.entry(1, 1) + 23.045_45).abs() < 1e-5);
    }

    #[test]
    fn money_market_row_is_zero() {
        let g = 0.07_f64.exp();
        let m = build_excess_matrix(&[AssetQuote::new("bond", 1.0, vec![g, g])], 0.07).unwrap();
        assert_eq!(m.rows(), &[vec![0.0, 0.0]]);
    }

    #[test]
    fn dominated_stock_row() {
        // 120 - 100 e^0.03 and 111 - 100 e^0.03 via the identity e^x - 1 = expm1(x)
        let m = stock_only(120.0, 111.0);
        let shift = 100.0 * 0.03_f64.exp_m1();
        assert!((m.entry(0, 0) - (20.0 - shift)).abs() < 1e-12);
        assert!((m.entry(0, 1) - (11.0 - shift)).abs() < 1e-12);
        assert!((m.entry(0, 0) - 16.954).abs() < 1e-3);
        assert!((m.entry(0, 1) - 7.954).abs() < 1e-3);
    }

    #[test]
    fn construction_errors() {
        let bad = [
            AssetQuote::new("a", 1.0, vec![1.0, 2.0]),
            AssetQuote::new("b", 1.0, vec![1.0, 2.0, 3.0]),
        ];
        assert!(matches!(
            build_excess_matrix(&bad, 0.0),
            Err(Error::MismatchedStates { found: 3, .. })
        ));
        let nan = [AssetQuote::new("a", f64::NAN, vec![1.0, 2.0])];
        assert!(matches!(build_excess_matrix(&nan, 0.0), Err(Error::NonFinite(_))));
        let one_state = [AssetQuote::new("a", 1.0, vec![1.0])];
        assert!(matches!(
            build_excess_matrix(&one_state, 0.0),
            Err(Error::EmptyMarket { .. })
        ));
    }

    #[test]
    fn worked_example_measure() {
        let m = build_excess_matrix(&worked_example::quotes(), worked_example::RATE).unwrap();
        let measure = solve_state_measure(&m).unwrap().expect("measure exists");
        assert!((measure.probabilities[0] - 0.5761).abs() < 5e-5);
        assert!((measure.probabilities[1] - 0.4239).abs() < 5e-5);
        assert!(measure.unique);
        assert!(measure.residual <= FEASIBILITY_TOLERANCE);
        assert!(find_arbitrage(&m).unwrap().is_none());
        assert!(check_completeness(&m));
    }

    #[test]
    fn printed_precision_quotes_leave_a_small_arbitrage() {
        // Four-decimal call and two-decimal put prices are off the exact
        // state prices by ~1e-4, which the strict tolerance detects.
        let g = 0.03_f64.exp();
        let quotes = [
            AssetQuote::new("bond", 1.0, vec![g, g]),
            AssetQuote::new("stock", 100.0, vec![120.0, 80.0]),
            AssetQuote::new("call", 5.5911, vec![10.0, 0.0]),
            AssetQuote::new("put", 12.34, vec![0.0, 30.0]),
        ];
        let m = build_excess_matrix(&quotes, 0.03).unwrap();
        assert!(solve_state_measure(&m).unwrap().is_none());
        let cert = find_arbitrage(&m).unwrap().expect("tiny arbitrage");
        assert!(cert.worst_excess > POSITIVITY_TOLERANCE);
        assert!(cert.worst_excess < 1e-2);
    }

    #[test]
    fn degenerate_zero_market() {
        let m = PayoffMatrix::from_rows(vec![vec![0.0, 0.0]], 0.0).unwrap();
        let measure = solve_state_measure(&m).unwrap().unwrap();
        assert!(!measure.unique);
        assert!((measure.probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(find_arbitrage(&m).unwrap().is_none());
        assert!(!check_completeness(&m));
    }

    #[test]
    fn dominated_stock_is_arbitrage() {
        let m = stock_only(120.0, 111.0);
        assert!(solve_state_measure(&m).unwrap().is_none());
        let cert = find_arbitrage(&m).unwrap().unwrap();
        assert_eq!(cert.weights, vec![1.0]);
        assert!((cert.worst_excess - (11.0 - 100.0 * 0.03_f64.exp_m1())).abs() < 1e-12);
    }

    #[test]
    fn incomplete_three_state_market() {
        let g = 0.02_f64.exp();
        let quotes = [
            AssetQuote::new("bond", 1.0, vec![g, g, g]),
            AssetQuote::new("stock", 50.0, vec![60.0, 51.0, 40.0]),
        ];
        let m = build_excess_matrix(&quotes, 0.02).unwrap();
        assert!(!check_completeness(&m));
        let c = classify_market(&quotes, 0.02).unwrap();
        assert!(matches!(c, Classification::NoArbitrage { complete: false, .. }));
    }

    #[test]
    fn classify_branches() {
        let c = classify_market(&worked_example::quotes(), worked_example::RATE).unwrap();
        match c {
            Classification::NoArbitrage { measure, complete } => {
                assert!(complete);
                assert!((measure.probabilities[0] - 0.5761).abs() < 5e-5);
            }
            other => panic!("unexpected {other:?}"),
        }

        let g = 0.03_f64.exp();
        let bond_only = [AssetQuote::new("bond", 1.0, vec![g, g])];
        assert!(matches!(
            classify_market(&bond_only, 0.03).unwrap(),
            Classification::NoArbitrage { complete: false, .. }
        ));

        let dominated = [
            AssetQuote::new("bond", 1.0, vec![g, g]),
            AssetQuote::new("stock", 100.0, vec![120.0, 111.0]),
        ];
        match classify_market(&dominated, 0.03).unwrap() {
            Classification::Arbitrage(cert) => {
                // long stock; the bond row is zero so its weight is free
                assert!(cert.weights[1] > 0.0);
                let excess = build_excess_matrix(&dominated, 0.03)
                    .unwrap()
                    .portfolio_excess(&cert.weights);
                assert!(excess.iter().all(|&e| e > 0.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rank_by_hand() {
        assert_eq!(numerical_rank(&[vec![0.0, 0.0]], 1e-9), 0);
        assert_eq!(numerical_rank(&[vec![1.0, 2.0], vec![2.0, 4.0]], 1e-9), 1);
        assert_eq!(
            numerical_rank(&[vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 1.0], vec![1.0, 1.0, 2.0]], 1e-9),
            2
        );
        assert_eq!(numerical_rank(&[vec![1.0, 0.0], vec![0.0, 1.0], vec![3.0, 3.0]], 1e-9), 2);
    }

    #[test]
    fn market_file_round_trip() {
        let text = r#"{"rate": 0.03, "states": 2, "assets": [
            {"name": "stock", "price0": 100, "payoffs": [120, 80]},
            {"name": "call", "price0": 5.5911, "payoffs": [10, 0]}]}"#;
        let market = MarketFile::from_json(text).unwrap();
        assert_eq!(market.assets.len(), 2);
        assert_eq!(market.excess_matrix().unwrap().state_count(), 2);

        let wrong = r#"{"rate": 0.03, "states": 3, "assets": [
            {"name": "stock", "price0": 100, "payoffs": [120, 80]}]}"#;
        assert!(matches!(
            MarketFile::from_json(wrong),
            Err(Error::MismatchedStates { expected: 3, found: 2, .. })
        ));
        assert!(matches!(MarketFile::from_json("{"), Err(Error::MarketFile(_))));
    }

    fn reversed(m: &PayoffMatrix) -> Vec<usize> {
        (0..m.state_count()).rev().collect()
    }

    /// Rows orthogonal to a planted interior measure, so the market is arbitrage-free.
    fn planted(rows: Vec<Vec<f64>>, weights: Vec<f64>) -> PayoffMatrix {
        let total: f64 = weights.iter().sum();
        let p: Vec<f64> = weights.iter().map(|w| w / total).collect();
        let pp: f64 = p.iter().map(|v| v * v).sum();
        let rows = rows
            .into_iter()
            .map(|r| {
                let k = r.iter().zip(&p).map(|(a, b)| a * b).sum::<f64>() / pp;
                r.iter().zip(&p).map(|(a, b)| a - k * b).collect()
            })
            .collect();
        PayoffMatrix::from_rows(rows, 0.0).unwrap()
    }

    fn planted_market() -> impl Strategy<Value = PayoffMatrix> {
        (2usize..=4).prop_flat_map(|states| {
            (
                prop::collection::vec(prop::collection::vec(-10.0..10.0f64, states), 1..=6),
                prop::collection::vec(0.05..1.0f64, states),
            )
                .prop_map(|(rows, w)| planted(rows, w))
        })
    }

    proptest! {
        #[test]
        fn complete_markets_have_one_measure(m in planted_market()) {
            let a = solve_state_measure(&m).unwrap().expect("planted measure");
            prop_assert!(a.residual <= FEASIBILITY_TOLERANCE);
            prop_assert!((a.probabilities.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            if a.unique {
                let b = solve_state_measure_in_order(&m, &reversed(&m)).unwrap().unwrap();
                for (x, y) in a.probabilities.iter().zip(&b.probabilities) {
                    prop_assert!((x - y).abs() <= 1e-8);
                }
            }
        }

        #[test]
        fn scaling_an_asset_keeps_the_branch(
            rows in prop::collection::vec(prop::collection::vec(-10.0..10.0f64, 3), 1..=5),
            which in 0usize..5,
            lambda in 0.1..10.0f64,
        ) {
            let m = PayoffMatrix::from_rows(rows.clone(), 0.0).unwrap();
            let margin = arbitrage_margin(&m).unwrap();
            prop_assume!(!(1e-12..=1e-6).contains(&margin));
            let a = classify_matrix(&m);
            prop_assume!(a.is_ok());
            let a = a.unwrap();
            let mut scaled = rows;
            let k = which % scaled.len();
            for v in scaled[k].iter_mut() {
                *v *= lambda;
            }
            let s = PayoffMatrix::from_rows(scaled, 0.0).unwrap();
            let b = classify_matrix(&s).unwrap();
            prop_assert_eq!(a.is_arbitrage(), b.is_arbitrage());
            if let (
                Classification::NoArbitrage { measure: ma, complete: true },
                Classification::NoArbitrage { measure: mb, .. },
            ) = (&a, &b) {
                for (x, y) in ma.probabilities.iter().zip(&mb.probabilities) {
                    prop_assert!((x - y).abs() <= 1e-8);
                }
            }
        }
    }
}
