//! Optimal trajectory and value for arbitrary valid `(β, θ)`: the capital
//! recursion, the first-order-condition consumption policy
//! `c_t = A·k_t^θ / S_{n−t}`, the population value `V[n]`, and the
//! initial-consumption analytics.
//!
//! Everything is computed in the log domain: the capital recursion
//! `log k_{t+1} = log(Aβθ) + θ·log k_t + log S_{n−t−1} − log S_{n−t}` and the
//! policy `log c_t = log A + θ·log k_t − log S_{n−t}` stay finite for any
//! horizon, so [`population_value`] is total even where materializing the
//! consumption levels would underflow.

use thiserror::Error;

use crate::model::{self, ModelParams};
use crate::numerics::CompensatedSum;

/// Largest |log k| (or |log c|) that [`Trajectory`] will exponentiate;
/// beyond this the level representation is meaningless in f64.
const LOG_RANGE_GUARD: f64 = 700.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClosedFormError {
    #[error(
        "capital or consumption left the representable range at generation {step} \
         (log level {log_level:.3}); the configuration is degenerate at this horizon"
    )]
    LevelOutOfRange { step: usize, log_level: f64 },
    #[error("the infinite-horizon initial consumption degenerates to zero at beta = theta = 1")]
    DegenerateLimit,
    #[error(
        "subsistence-proof horizon is not positive (got {0:.6}); the subsistence level \
         is at or above the infinite-horizon initial consumption"
    )]
    NonPositiveHorizon(f64),
}

/// `log k_t` for `t = 0..=n` under the optimal policy (the exhausted
/// terminal stock `k_{n+1} = 0` is implied, not stored).
fn log_capital_path(params: &ModelParams, n: usize) -> Vec<f64> {
    let theta = params.elasticity();
    let step = params.productivity().ln() + params.log_saving_ratio();
    let log_s: Vec<f64> = (0..=n).map(|l| model::log_geometric_sum(l, params)).collect();
    let mut lk = Vec::with_capacity(n + 1);
    lk.push(params.initial_capital().ln());
    for t in 0..n {
        let next = step + theta * lk[t] + log_s[n - t - 1] - log_s[n - t];
        lk.push(next);
    }
    lk
}

/// `(log k_t, log c_t)` for `t = 0..=n`.
fn log_paths(params: &ModelParams, n: usize) -> (Vec<f64>, Vec<f64>) {
    let lk = log_capital_path(params, n);
    let log_c = lk
        .iter()
        .enumerate()
        .map(|(t, &l)| params.log_output(l) - model::log_geometric_sum(n - t, params))
        .collect();
    (lk, log_c)
}

/// `V[n] = Σ_{t=0}^{n} β^t · log c_t` under the optimal policy. Total for
/// all valid parameters and horizons; works entirely in the log domain.
pub fn population_value(params: &ModelParams, n: usize) -> f64 {
    let (_, log_c) = log_paths(params, n);
    discounted_sum(params.discount(), &log_c)
}

fn discounted_sum(beta: f64, terms: &[f64]) -> f64 {
    let mut acc = CompensatedSum::default();
    let mut weight = 1.0;
    for &term in terms {
        acc.add(weight * term);
        weight *= beta;
    }
    acc.value()
}

/// Optimal capital levels `k_0..k_{n+1}` (length `n + 2`, last entry exactly
/// zero). Errors if any level leaves the representable range.
pub fn optimal_capital_path(params: &ModelParams, n: usize) -> Result<Vec<f64>, ClosedFormError> {
    let lk = log_capital_path(params, n);
    let mut k = Vec::with_capacity(n + 2);
    for (t, &l) in lk.iter().enumerate() {
        if l.abs() > LOG_RANGE_GUARD {
            return Err(ClosedFormError::LevelOutOfRange { step: t, log_level: l });
        }
        k.push(l.exp());
    }
    k.push(0.0);
    Ok(k)
}

/// A fully materialized optimal plan: consumption `c` (length `n + 1`),
/// capital `k` (length `n + 2`, `k[n + 1] = 0`), the undiscounted
/// contributions `contrib[t] = log c_t`, and the value `V[n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub n: usize,
    pub c: Vec<f64>,
    pub k: Vec<f64>,
    pub contrib: Vec<f64>,
    pub value: f64,
}

/// Solve the `n`-horizon problem and materialize the whole plan. The
/// terminal consumption is set to exactly `A·k_n^θ` so `k_{n+1} = 0` holds
/// by construction.
pub fn optimal_consumption_path(
    params: &ModelParams,
    n: usize,
) -> Result<Trajectory, ClosedFormError> {
    let (lk, log_c) = log_paths(params, n);
    let mut k = Vec::with_capacity(n + 2);
    let mut c = Vec::with_capacity(n + 1);
    for t in 0..=n {
        if lk[t].abs() > LOG_RANGE_GUARD {
            return Err(ClosedFormError::LevelOutOfRange { step: t, log_level: lk[t] });
        }
        if log_c[t].abs() > LOG_RANGE_GUARD {
            return Err(ClosedFormError::LevelOutOfRange { step: t, log_level: log_c[t] });
        }
        // The initial stock is a given level, not a computed one.
        k.push(if t == 0 {
            params.initial_capital()
        } else {
            lk[t].exp()
        });
        c.push(log_c[t].exp());
    }
    // Terminal generation eats the whole stock.
    c[n] = params.productivity() * k[n].powf(params.elasticity());
    k.push(0.0);
    let value = discounted_sum(params.discount(), &log_c);
    Ok(Trajectory {
        n,
        c,
        k,
        contrib: log_c,
        value,
    })
}

/// First-generation consumption `c₀[n] = A·k₀^θ / S_n`; strictly
/// decreasing in the horizon.
pub fn initial_consumption(params: &ModelParams, n: usize) -> f64 {
    (params.log_output(params.initial_capital().ln()) - model::log_geometric_sum(n, params)).exp()
}

/// Long-horizon limit of the first-generation consumption,
/// `(1 − βθ)·A·k₀^θ`. Degenerates to zero at `β = θ = 1`, which is
/// signalled rather than returned.
pub fn initial_consumption_infinite(params: &ModelParams) -> Result<f64, ClosedFormError> {
    if params.saving_ratio_is_one() {
        return Err(ClosedFormError::DegenerateLimit);
    }
    Ok((1.0 - params.saving_ratio())
        * params.productivity()
        * params.initial_capital().powf(params.elasticity()))
}

/// Horizon count at which the initial consumption's decay clock crosses the
/// subsistence level: `(log s − log c₀[∞]) / log(βθ)` for `βθ < 1`, and the
/// exhaustion count `A·k₀ / s` on the fully degenerate branch. Returns a
/// real (unrounded) count; errors when the formula yields a non-positive
/// horizon (subsistence at or above `c₀[∞]`).
pub fn subsistence_horizon(params: &ModelParams) -> Result<f64, ClosedFormError> {
    let s = params.subsistence();
    if params.saving_ratio_is_one() {
        return Ok(params.productivity() * params.initial_capital() / s);
    }
    let c_inf = initial_consumption_infinite(params)?;
    let n = (s.ln() - c_inf.ln()) / params.log_saving_ratio();
    if n <= 0.0 {
        return Err(ClosedFormError::NonPositiveHorizon(n));
    }
    Ok(n)
}
