//! Undiscounted specialization (`β = 1`): the infinite-horizon contribution
//! path, the three-way classification of the limiting population value by
//! the sign of `log(A·Θ)` where `Θ = θ^θ·(1−θ)^{1−θ}`, and the fully
//! analytic corner `A = β = θ = 1` where the value reduces to
//! `(n+1)·log(k₀/(n+1))`.

use thiserror::Error;

use crate::model::{self, ModelParams};

#[derive(Debug, Error, PartialEq)]
pub enum ZeroDiscountError {
    /// The continuous optimum `k₀/e − 1` is negative: every generation after
    /// the first lowers the value.
    #[error("initial capital {k0} admits no nonnegative horizon (requires k0 >= e)")]
    NonPositiveHorizon { k0: f64 },
}

/// Extended-real limiting value: the divergent classifications are results,
/// not failures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedValue {
    Finite(f64),
    PosInfinity,
    NegInfinity,
}

impl ExtendedValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedValue::Finite(_))
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            ExtendedValue::Finite(v) => Some(*v),
            _ => None,
        }
    }
}

fn check_regime(params: &ModelParams) {
    assert!(
        params.discount_is_one() && !params.elasticity_is_one(),
        "undiscounted analytics require beta = 1 and theta < 1"
    );
}

/// Log consumption of generation `t` on the infinite-horizon optimal path:
/// `log(A·Θ)/(1−θ) + θ^t·(θ·log k₀ − (θ/(1−θ))·log(Aθ))`. Converges
/// geometrically (factor `θ`) to the plateau `log(A·Θ)/(1−θ)`.
pub fn zd_contribution_infinite(params: &ModelParams, t: usize) -> f64 {
    check_regime(params);
    let (a, theta, k0) = (
        params.productivity(),
        params.elasticity(),
        params.initial_capital(),
    );
    let plateau = model::log_dual_productivity(a, theta) / (1.0 - theta);
    let transient = theta * k0.ln() - theta / (1.0 - theta) * (a * theta).ln();
    plateau + (t as f64 * theta.ln()).exp() * transient
}

/// Limiting population value under `β = 1`, classified by the sign of
/// `log(A·Θ)`: `+∞` when positive, `−∞` when negative, and on the knife
/// edge the finite `(θ/(1−θ))·log(((1−θ)/θ)·k₀)`.
pub fn zd_value_infinite(params: &ModelParams) -> ExtendedValue {
    check_regime(params);
    let (a, theta, k0) = (
        params.productivity(),
        params.elasticity(),
        params.initial_capital(),
    );
    let log_dual = model::log_dual_productivity(a, theta);
    if log_dual > model::SIGN_TOLERANCE {
        ExtendedValue::PosInfinity
    } else if log_dual < -model::SIGN_TOLERANCE {
        ExtendedValue::NegInfinity
    } else {
        ExtendedValue::Finite(theta / (1.0 - theta) * ((1.0 - theta) / theta * k0).ln())
    }
}

/// Population value in the fully degenerate corner `A = β = θ = 1`:
/// `(n+1)·log(k₀/(n+1))` — the endowment split evenly over `n+1` lives.
pub fn akzd_value(k0: f64, n: usize) -> f64 {
    let m = (n + 1) as f64;
    m * (k0 / m).ln()
}

/// Continuous maximizer of [`akzd_value`]: `k₀/e − 1`. Errors when that is
/// negative (`k₀ < e`); at `k₀ = e` the unique optimum is a single life.
pub fn akzd_optimal_horizon(k0: f64) -> Result<f64, ZeroDiscountError> {
    let n = k0 / std::f64::consts::E - 1.0;
    if n < 0.0 {
        Err(ZeroDiscountError::NonPositiveHorizon { k0 })
    } else {
        Ok(n)
    }
}
