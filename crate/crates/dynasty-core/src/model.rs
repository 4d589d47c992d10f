//! Problem parameters, validation, regime classification, and the geometric
//! sum `S_ℓ = Σ_{i=0}^{ℓ} (βθ)^i` that appears in every closed-form policy.

use thiserror::Error;

use crate::numerics;

/// Absolute tolerance on log-products (`log(Aβ)`, `log(AΘ)`, `log A`) below
/// which a boundary sign counts as zero, and on `1 − β` / `1 − θ` when
/// picking a degenerate-regime branch. Keeping one constant for both means
/// branch selection and boundary signs can never disagree.
pub const SIGN_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("productivity must be a positive finite number, got {0}")]
    Productivity(f64),
    #[error("discount factor must lie in (0, 1], got {0}")]
    DiscountFactor(f64),
    #[error("capital elasticity must lie in (0, 1], got {0}")]
    Elasticity(f64),
    #[error("initial capital must be a positive finite number, got {0}")]
    InitialCapital(f64),
    #[error("subsistence level must be a positive finite number, got {0}")]
    Subsistence(f64),
}

/// Primitives of the planning problem: productivity `A`, discount factor
/// `β ∈ (0, 1]`, capital elasticity `θ ∈ (0, 1]`, initial capital `k₀`, and
/// a subsistence consumption level `s` used by the survival analytics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    a: f64,
    beta: f64,
    theta: f64,
    k0: f64,
    s: f64,
}

impl ModelParams {
    pub const DEFAULT_SUBSISTENCE: f64 = 1e-9;

    pub fn new(a: f64, beta: f64, theta: f64, k0: f64) -> Result<Self, ParamError> {
        if !(a.is_finite() && a > 0.0) {
            return Err(ParamError::Productivity(a));
        }
        if !(beta.is_finite() && beta > 0.0 && beta <= 1.0) {
            return Err(ParamError::DiscountFactor(beta));
        }
        if !(theta.is_finite() && theta > 0.0 && theta <= 1.0) {
            return Err(ParamError::Elasticity(theta));
        }
        if !(k0.is_finite() && k0 > 0.0) {
            return Err(ParamError::InitialCapital(k0));
        }
        Ok(Self {
            a,
            beta,
            theta,
            k0,
            s: Self::DEFAULT_SUBSISTENCE,
        })
    }

    pub fn with_subsistence(mut self, s: f64) -> Result<Self, ParamError> {
        if !(s.is_finite() && s > 0.0) {
            return Err(ParamError::Subsistence(s));
        }
        self.s = s;
        Ok(self)
    }

    pub fn productivity(&self) -> f64 {
        self.a
    }

    pub fn discount(&self) -> f64 {
        self.beta
    }

    pub fn elasticity(&self) -> f64 {
        self.theta
    }

    pub fn initial_capital(&self) -> f64 {
        self.k0
    }

    pub fn subsistence(&self) -> f64 {
        self.s
    }

    /// The geometric ratio `βθ` of the optimal saving weights.
    pub fn saving_ratio(&self) -> f64 {
        self.beta * self.theta
    }

    /// `log(βθ)` computed as `log β + log θ` for accuracy near one.
    pub fn log_saving_ratio(&self) -> f64 {
        self.beta.ln() + self.theta.ln()
    }

    pub(crate) fn discount_is_one(&self) -> bool {
        1.0 - self.beta <= SIGN_TOLERANCE
    }

    pub(crate) fn elasticity_is_one(&self) -> bool {
        1.0 - self.theta <= SIGN_TOLERANCE
    }

    pub(crate) fn saving_ratio_is_one(&self) -> bool {
        self.discount_is_one() && self.elasticity_is_one()
    }

    /// `log(A·k^θ)` given `log k`.
    pub(crate) fn log_output(&self, log_k: f64) -> f64 {
        self.a.ln() + self.theta * log_k
    }
}

/// `S_ℓ = Σ_{i=0}^{ℓ} (βθ)^i`; exactly `ℓ+1` on the `βθ = 1` branch,
/// otherwise the `expm1` ratio form of `(1 − (βθ)^{ℓ+1}) / (1 − βθ)`.
pub fn geometric_sum(ell: usize, params: &ModelParams) -> f64 {
    let lr = params.log_saving_ratio();
    if lr == 0.0 {
        return (ell + 1) as f64;
    }
    f64::exp_m1((ell + 1) as f64 * lr) / f64::exp_m1(lr)
}

/// `log S_ℓ`, stable even when `(βθ)^{ℓ+1}` underflows.
pub fn log_geometric_sum(ell: usize, params: &ModelParams) -> f64 {
    let lr = params.log_saving_ratio();
    if lr == 0.0 {
        return ((ell + 1) as f64).ln();
    }
    (-f64::exp_m1((ell + 1) as f64 * lr)).ln() - (-f64::exp_m1(lr)).ln()
}

/// One step of the capital law of motion, `A·k^θ − c`. May be negative; the
/// caller decides feasibility.
pub fn transition(k: f64, c: f64, params: &ModelParams) -> f64 {
    params.a * k.powf(params.theta) - c
}

/// Net marginal product of capital `A·θ·k^{θ−1} − 1` (complete
/// depreciation). At `θ = 1` this is the implied interest rate `A − 1`.
pub fn mpk(params: &ModelParams, k: f64) -> f64 {
    params.a * params.theta * k.powf(params.theta - 1.0) - 1.0
}

fn log_elasticity_weight(theta: f64) -> f64 {
    if theta <= 0.0 || theta >= 1.0 {
        // 0^0 = 1 convention at both endpoints.
        return 0.0;
    }
    theta * theta.ln() + (1.0 - theta) * (1.0 - theta).ln()
}

/// Dual productivity `A·Θ` with `Θ = θ^θ·(1−θ)^{1−θ}` (convention
/// `0^0 = 1`, so `Θ = 1` at `θ ∈ {0, 1}`).
pub fn dual_productivity(a: f64, theta: f64) -> f64 {
    a * log_elasticity_weight(theta).exp()
}

/// `log(A·Θ)`; the classification input for the undiscounted regime.
pub fn log_dual_productivity(a: f64, theta: f64) -> f64 {
    a.ln() + log_elasticity_weight(theta)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BracketError {
    #[error(
        "no root of A·Theta(theta) = 1 in ({lo}, {hi}): endpoint objective values \
         {f_lo:.6e} and {f_hi:.6e} share a sign"
    )]
    NoRoot { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
}

/// The upper root `θ ∈ (0.5, 1)` of `A·Θ(θ) = 1` for `A > 1`. `Θ` is
/// unimodal with minimum `0.5` at `θ = 0.5`, so each half-interval holds one
/// root; this returns the one above `0.5`. Fails with [`BracketError`] when
/// the bracket does not change sign (e.g. `A > 2` or `A ≤ 1`).
pub fn theta_for_unit_dual(a: f64) -> Result<f64, BracketError> {
    let objective = |theta: f64| log_dual_productivity(a, theta);
    let (lo, hi) = (0.5, 1.0 - 1e-15);
    let (f_lo, f_hi) = (objective(lo), objective(hi));
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(BracketError::NoRoot { lo, hi, f_lo, f_hi });
    }
    Ok(numerics::bisect(lo, hi, 1e-12, 200, objective))
}

/// Structural regime of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Linear production, discounted: `θ = 1`, `β < 1`.
    Ak,
    /// Undiscounted, concave production: `β = 1`, `θ < 1`.
    ZeroDiscount,
    /// Fully degenerate `β = θ = 1`.
    AkZeroDiscount,
    /// Interior `β < 1`, `θ < 1`.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySign {
    Negative,
    Zero,
    Positive,
}

impl BoundarySign {
    /// Sign of a log-product under [`SIGN_TOLERANCE`].
    pub fn of(x: f64) -> Self {
        if x.abs() <= SIGN_TOLERANCE {
            BoundarySign::Zero
        } else if x > 0.0 {
            BoundarySign::Positive
        } else {
            BoundarySign::Negative
        }
    }
}

/// Regime plus the boundary signs that classify long-horizon behavior:
/// `log(Aβ)` on the linear-production side, `log(AΘ)` on the undiscounted
/// side. The general regime carries both; each specialization carries the
/// one that applies (both coincide with `log A` when `β = θ = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseClass {
    pub regime: Regime,
    pub ak_boundary: Option<BoundarySign>,
    pub zd_boundary: Option<BoundarySign>,
}

pub fn classify_phase(params: &ModelParams) -> PhaseClass {
    let ak_sign = BoundarySign::of(params.productivity().ln() + params.discount().ln());
    let zd_sign = BoundarySign::of(log_dual_productivity(
        params.productivity(),
        params.elasticity(),
    ));
    match (params.elasticity_is_one(), params.discount_is_one()) {
        (true, false) => PhaseClass {
            regime: Regime::Ak,
            ak_boundary: Some(ak_sign),
            zd_boundary: None,
        },
        (false, true) => PhaseClass {
            regime: Regime::ZeroDiscount,
            ak_boundary: None,
            zd_boundary: Some(zd_sign),
        },
        (true, true) => PhaseClass {
            regime: Regime::AkZeroDiscount,
            ak_boundary: Some(ak_sign),
            zd_boundary: Some(zd_sign),
        },
        (false, false) => PhaseClass {
            regime: Regime::General,
            ak_boundary: Some(ak_sign),
            zd_boundary: Some(zd_sign),
        },
    }
}
