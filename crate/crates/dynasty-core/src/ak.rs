//! Linear-production specialization (`θ = 1`, `β < 1`): closed-form value
//! at real-valued horizons, its infinite-horizon limit, and the
//! first-order-condition analysis of the horizon choice.
//!
//! With `θ = 1` the geometric sums telescope out of the consumption path and
//! the undiscounted contribution `log c_t` becomes affine in `t` with slope
//! `log(Aβ)`:
//!
//! ```text
//! log c_t = log(A·k₀) − log S_n + t·log(Aβ)
//! V(n)    = S(n)·(log(A·k₀) − log S(n)) + T(n)·log(Aβ)
//! ```
//!
//! where `S(n) = Σ β^t` and `T(n) = Σ t·β^t` extend analytically to real
//! `n`. The horizon derivative factors as `dV/dn = −λ(n)·(f(n) − g(n))` with
//! `f(n) = −γ + n·log(Aβ)` rising linearly, `g(n) = log(1 − β^{n+1})`
//! saturating at zero, and `λ(n) = β^{n+1}·log β / (1 − β)` a strictly
//! negative scale that vanishes geometrically. The value curve therefore
//! rises exactly where `f > g`, and `f − g` is convex, so it crosses zero at
//! most twice: the possible shapes are a single peak, rise-fall-rise, or a
//! monotone rise.

use crate::model::ModelParams;
use crate::numerics;

/// Hard cap on the horizon root scan; beyond this the report is returned
/// with `scan_complete = false`.
const ROOT_SCAN_CAP: f64 = 1e6;

fn check_regime(params: &ModelParams) {
    assert!(
        params.elasticity_is_one() && !params.discount_is_one(),
        "linear-production analytics require theta = 1 and beta < 1"
    );
}

/// `Σ_{t=0}^{n} β^t` at real `n`.
fn discount_mass(beta: f64, n: f64) -> f64 {
    -f64::exp_m1((n + 1.0) * beta.ln()) / (1.0 - beta)
}

/// `Σ_{t=0}^{n} t·β^t` at real `n`.
fn weighted_discount_mass(beta: f64, n: f64) -> f64 {
    let omb = 1.0 - beta;
    let b_pow = ((n + 1.0) * beta.ln()).exp();
    (beta - (omb * n + 1.0) * b_pow) / (omb * omb)
}

/// Closed-form `V(n)` at a real-valued horizon.
pub fn ak_value(params: &ModelParams, n: f64) -> f64 {
    check_regime(params);
    let beta = params.discount();
    let s = discount_mass(beta, n);
    let log_c0 = (params.productivity() * params.initial_capital()).ln() - s.ln();
    let log_ab = params.productivity().ln() + beta.ln();
    s * log_c0 + weighted_discount_mass(beta, n) * log_ab
}

/// `lim_{n→∞} V(n) = log(A·(1−β)^{1−β}·β^β) / (1−β)² + log k₀ / (1−β)`.
pub fn ak_value_infinite(params: &ModelParams) -> f64 {
    check_regime(params);
    let beta = params.discount();
    let omb = 1.0 - beta;
    (params.productivity().ln() + omb * omb.ln() + beta * beta.ln()) / (omb * omb)
        + params.initial_capital().ln() / omb
}

/// Coefficients of the horizon first-order condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocCoefficients {
    /// Intercept of the rising branch.
    pub gamma: f64,
    /// Slope of the rising branch, `log(Aβ)`.
    pub slope: f64,
    beta: f64,
}

impl FocCoefficients {
    /// `λ(n) = β^{n+1}·log β / (1 − β)`. Strictly negative for `β < 1`: the
    /// value derivative is `−λ(n)·(f(n) − g(n))`, so the curve rises exactly
    /// where the rising branch exceeds the saturating one.
    pub fn lambda_at(&self, n: f64) -> f64 {
        ((n + 1.0) * self.beta.ln()).exp() * self.beta.ln() / (1.0 - self.beta)
    }

    /// Rising branch `f(n) = −γ + n·log(Aβ)`.
    pub fn rising_branch(&self, n: f64) -> f64 {
        -self.gamma + n * self.slope
    }

    /// Saturating branch `g(n) = log(1 − β^{n+1})`.
    pub fn saturating_branch(&self, n: f64) -> f64 {
        (-f64::exp_m1((n + 1.0) * self.beta.ln())).ln()
    }

    /// `dV/dn` at real `n`.
    pub fn value_derivative(&self, n: f64) -> f64 {
        -self.lambda_at(n) * (self.rising_branch(n) - self.saturating_branch(n))
    }
}

/// `γ` and `log(Aβ)` for the horizon first-order condition:
/// `γ = 1 − (1 − β + log β)·log(Aβ) / ((1 − β)·log β) − log(A·(1−β)·k₀)`.
pub fn foc_coefficients(params: &ModelParams) -> FocCoefficients {
    check_regime(params);
    let (a, beta, k0) = (
        params.productivity(),
        params.discount(),
        params.initial_capital(),
    );
    let lb = beta.ln();
    let log_ab = a.ln() + lb;
    let gamma =
        1.0 - ((1.0 - beta + lb) * log_ab) / ((1.0 - beta) * lb) - (a * (1.0 - beta) * k0).ln();
    FocCoefficients {
        gamma,
        slope: log_ab,
        beta,
    }
}

/// Shape of the value curve over the horizon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveShape {
    /// One interior stationary point: rise then fall toward the limit.
    SinglePeak,
    /// Two stationary points: rise, fall, then rise toward the limit.
    RiseFallRise,
    /// No stationary point: the curve climbs toward its limit from below.
    MonotoneRise,
}

/// Stationary points of the continuous-horizon value curve.
#[derive(Debug, Clone, PartialEq)]
pub struct FocRootReport {
    /// Real-valued roots of `f − g`, ascending; zero, one, or two entries.
    pub roots: Vec<f64>,
    pub shape: CurveShape,
    pub coefficients: FocCoefficients,
    /// False when the search hit the hard cap before the tail was decided.
    pub scan_complete: bool,
}

/// Locate the roots of `f(n) − g(n)` on `n ≥ 0` and classify the curve.
/// `f − g` is convex (its derivative `slope + β^{n+1}·(−log β)/(1−β^{n+1})`
/// is increasing), so bisection on the derivative and on each side of the
/// minimum finds every root without a dense scan.
pub fn foc_roots(params: &ModelParams) -> FocRootReport {
    let co = foc_coefficients(params);
    let h = |n: f64| co.rising_branch(n) - co.saturating_branch(n);
    // h'(n) = slope − g'(n); g' > 0 decreasing, so h' is increasing.
    let beta = params.discount();
    let lb = beta.ln();
    let h_prime = |n: f64| {
        let b_pow = ((n + 1.0) * lb).exp();
        co.slope + b_pow * lb / (-f64::exp_m1((n + 1.0) * lb))
    };

    let mut roots = Vec::new();
    let mut scan_complete = true;

    // Find the minimizer of h (h' crosses zero at most once, from below).
    let argmin = if h_prime(0.0) >= 0.0 {
        0.0
    } else {
        let mut hi = 1.0;
        while h_prime(hi) < 0.0 && hi < ROOT_SCAN_CAP {
            hi *= 2.0;
        }
        if h_prime(hi) < 0.0 {
            scan_complete = false;
            hi
        } else {
            numerics::bisect(hi / 2.0, hi, 1e-9, 200, h_prime)
        }
    };

    // Left root: h falls from h(0) to h(argmin).
    if argmin > 0.0 && h(0.0) > 0.0 && h(argmin) < 0.0 {
        roots.push(numerics::bisect(0.0, argmin, 1e-9, 200, h));
    }
    // Right root: h climbs back only if the rising branch has positive slope.
    if h(argmin) < 0.0 && co.slope > 0.0 {
        let mut hi = (argmin + 1.0) * 2.0;
        while h(hi) < 0.0 && hi < ROOT_SCAN_CAP {
            hi *= 2.0;
        }
        if h(hi) < 0.0 {
            scan_complete = false;
        } else {
            roots.push(numerics::bisect(argmin, hi, 1e-9, 200, h));
        }
    }

    let shape = match (roots.len(), co.slope > 0.0) {
        (0, true) => CurveShape::MonotoneRise,
        (2, true) => CurveShape::RiseFallRise,
        (1, true) => {
            // Grazing or capped tail: treat an isolated crossing like the
            // descending arm of a rise-fall-rise pattern.
            if scan_complete {
                CurveShape::RiseFallRise
            } else {
                CurveShape::SinglePeak
            }
        }
        _ => CurveShape::SinglePeak,
    };

    FocRootReport {
        roots,
        shape,
        coefficients: co,
        scan_complete,
    }
}

/// Undiscounted contribution of generation `t` under horizon `n`:
/// affine in `t` with slope `log(Aβ)`.
pub fn ak_contribution(params: &ModelParams, n: usize, t: usize) -> f64 {
    check_regime(params);
    debug_assert!(t <= n);
    let beta = params.discount();
    let s = discount_mass(beta, n as f64);
    (params.productivity() * params.initial_capital()).ln() - s.ln()
        + t as f64 * (params.productivity().ln() + beta.ln())
}

/// Optimal capital stock at generation `t ∈ [0, n+1]`:
/// `k_t = ((1 − β^{n+1−t}) / (1 − β^{n+1}))·(Aβ)^t·k₀`, exactly zero at
/// `t = n + 1`.
pub fn ak_capital(params: &ModelParams, n: usize, t: usize) -> f64 {
    check_regime(params);
    debug_assert!(t <= n + 1);
    if t == n + 1 {
        return 0.0;
    }
    if t == 0 {
        return params.initial_capital();
    }
    let lb = params.discount().ln();
    let log_ab = params.productivity().ln() + lb;
    let log_ratio = (-f64::exp_m1((n + 1 - t) as f64 * lb)).ln()
        - (-f64::exp_m1((n + 1) as f64 * lb)).ln();
    (log_ratio + t as f64 * log_ab + params.initial_capital().ln()).exp()
}
