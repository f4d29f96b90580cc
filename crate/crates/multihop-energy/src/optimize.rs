//! Burst-factor and network-size optimizers.
//!
//! The burst factor that minimizes the computation energy has the closed
//! form `min(ln(2) R_ref, 1)`; the sum-energy optimum has none once the
//! exact allocation sum enters, but it is bracketed by the
//! computation-optimal factor and the full budget and the objective is
//! unimodal there, so a golden-section search settles it. Network size is
//! minimized exhaustively.

use std::f64::consts::LN_2;
use std::ops::RangeInclusive;

use crate::energy::{evaluate_breakdown, BurstFactor, EnergyBreakdown, Scenario};
use crate::error::{ensure_positive, Error, Result};

/// How the burst factor is chosen while scanning network sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurstMode {
    /// Fix the computation-optimal burst factor for the scenario's model.
    CompOpt,
    /// Search the sum-energy-optimal burst factor per candidate size.
    SumOpt,
}

/// Outcome of a network-size optimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    pub best_n: usize,
    pub best_delta_t: BurstFactor,
    pub breakdown: EnergyBreakdown,
    /// Number of relay counts evaluated.
    pub candidates_examined: usize,
}

/// One point of the transmission-computation tradeoff curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TradeoffPoint {
    pub relay_count: usize,
    pub e_tx_norm: f64,
    pub e_c_norm: f64,
}

/// Burst factor minimizing the computation energy of the default
/// exponential model: `min(ln(2) R_ref, 1)`. Independent of the network
/// size.
///
/// Model-aware callers should prefer
/// [`ComplexityModel::comp_optimal_burst`](crate::energy::ComplexityModel::comp_optimal_burst),
/// which reduces to this closed form for the default exponential
/// parameters.
pub fn optimal_burst_factor_comp(r_ref: f64) -> Result<BurstFactor> {
    ensure_positive("r_ref", r_ref)?;
    BurstFactor::new((LN_2 * r_ref).min(1.0))
}

/// Burst factor minimizing the normalized sum energy for a network with
/// `relay_count` relays, found by golden-section search on
/// `[comp_optimal, 1]` to an absolute tolerance of 1e-6.
///
/// The search result is compared against both interval endpoints, so a
/// boundary optimum (the rule for linear complexity, where the full budget
/// always wins) is returned exactly.
pub fn optimal_burst_factor_sum(relay_count: usize, scenario: &Scenario) -> Result<BurstFactor> {
    scenario.validate()?;
    let lower = scenario.model.comp_optimal_burst(scenario.r_ref)?.get();
    let objective = |dt: f64| -> Result<f64> {
        Ok(evaluate_breakdown(relay_count, BurstFactor::new(dt)?, scenario)?.e_sum_norm)
    };
    let best = minimize_on_interval(lower, 1.0, 1e-6, objective)?;
    BurstFactor::new(best)
}

/// Golden-section minimization of `f` on `[a, b]`, followed by an endpoint
/// comparison. Returns the argmin.
fn minimize_on_interval(
    mut a: f64,
    mut b: f64,
    tol: f64,
    f: impl Fn(f64) -> Result<f64>,
) -> Result<f64> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (a0, b0) = (a, b);
    if b - a <= tol {
        return Ok(b);
    }

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while b - a > tol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        }
    }
    let interior = if f1 < f2 { x1 } else { x2 };

    // A monotone objective puts the optimum on the boundary; hand back the
    // exact endpoint in that case.
    let mut best = interior;
    let mut best_value = f(interior)?;
    for candidate in [a0, b0] {
        let value = f(candidate)?;
        if value < best_value {
            best = candidate;
            best_value = value;
        }
    }
    Ok(best)
}

/// Exhaustive minimization of the normalized sum energy over the relay
/// count `0..=n_max`. Ties break toward fewer relays.
pub fn optimal_relay_count(
    scenario: &Scenario,
    n_max: usize,
    burst_mode: BurstMode,
) -> Result<OptimizationResult> {
    scenario.validate()?;
    let comp_opt = scenario.model.comp_optimal_burst(scenario.r_ref)?;
    let mut best: Option<OptimizationResult> = None;
    for relay_count in 0..=n_max {
        let delta_t = match burst_mode {
            BurstMode::CompOpt => comp_opt,
            BurstMode::SumOpt => optimal_burst_factor_sum(relay_count, scenario)?,
        };
        let breakdown = evaluate_breakdown(relay_count, delta_t, scenario)?;
        let better = match &best {
            Some(current) => breakdown.e_sum_norm < current.breakdown.e_sum_norm,
            None => true,
        };
        if better {
            best = Some(OptimizationResult {
                best_n: relay_count,
                best_delta_t: delta_t,
                breakdown,
                candidates_examined: n_max + 1,
            });
        }
    }
    Ok(best.expect("at least one candidate"))
}

/// Transmission-computation energy pairs for every relay count in
/// `n_range`, each evaluated at the model's computation-optimal burst
/// factor. Points come back ordered by relay count; transmission energy
/// falls and computation energy rises along the curve.
pub fn tradeoff_curve(
    scenario: &Scenario,
    n_range: RangeInclusive<usize>,
) -> Result<Vec<TradeoffPoint>> {
    scenario.validate()?;
    if n_range.is_empty() {
        return Err(Error::InvalidParameter {
            name: "n_range",
            value: f64::NAN,
            requirement: "must be non-empty",
        });
    }
    let delta_t = scenario.model.comp_optimal_burst(scenario.r_ref)?;
    n_range
        .map(|relay_count| {
            let b = evaluate_breakdown(relay_count, delta_t, scenario)?;
            Ok(TradeoffPoint {
                relay_count,
                e_tx_norm: b.e_tx_norm,
                e_c_norm: b.e_c_norm,
            })
        })
        .collect()
}

/// Exhaustive argmin of `objective` over the burst-factor grid
/// `{step, 2 step, ..., 1}`. Grid cells are spaced `1 / round(1/step)`
/// apart so the full budget is always the last candidate. Objectives may
/// return infinity to rank a cell out (overflowed energies do); ties break
/// toward the smaller burst factor.
pub fn grid_argmin(grid_step: f64, objective: impl Fn(BurstFactor) -> f64) -> Result<BurstFactor> {
    if !grid_step.is_finite() || grid_step <= 0.0 || grid_step > 0.01 {
        return Err(Error::InvalidParameter {
            name: "grid_step",
            value: grid_step,
            requirement: "must lie in (0, 0.01]",
        });
    }
    let cells = (1.0 / grid_step).round() as u64;
    let mut best = BurstFactor::FULL;
    let mut best_value = f64::INFINITY;
    for i in 1..=cells {
        let delta_t = BurstFactor::new(i as f64 / cells as f64)?;
        let value = objective(delta_t);
        if value < best_value {
            best = delta_t;
            best_value = value;
        }
    }
    Ok(best)
}

/// Grid-search reference for the burst-factor optimizers: exhaustive
/// argmin of the normalized sum energy over `{step, 2 step, ..., 1}`.
/// Grid cells whose energies overflow rank as infinitely expensive.
pub fn brute_force_delta_oracle(
    relay_count: usize,
    scenario: &Scenario,
    grid_step: f64,
) -> Result<BurstFactor> {
    scenario.validate()?;
    grid_argmin(grid_step, |delta_t| {
        match evaluate_breakdown(relay_count, delta_t, scenario) {
            Ok(b) => b.e_sum_norm,
            Err(_) => f64::INFINITY,
        }
    })
}
