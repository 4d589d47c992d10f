//! Integer optimal-horizon search over the population value `V[n]`, for any
//! parameter regime: closed-form candidate enumeration where analytics
//! exist, adaptive scanning where they do not, infinite-horizon detection,
//! plateau-onset queries, and value-curve generation.
//!
//! ## Horizon axis
//!
//! A dynasty with last generation index `m` contains `m + 1` lives.
//! `find_optimal_horizon` reports `n_star` as the *generation count*
//! (`m + 1`) in the linear-production, undiscounted, and interior regimes,
//! and as the terminal *index* (`m`) in the fully degenerate corner — the
//! conventions under which the two families of headline figures are usually
//! quoted. [`HorizonSolution::optimal_last_index`] always exposes the raw
//! index for trajectory work.

use thiserror::Error;

use crate::closed_form;
use crate::model::{self, classify_phase, ModelParams, PhaseClass, Regime};
use crate::parallel;
use crate::ak;
use crate::zero_discount::{self, ExtendedValue};

/// Default scan ceiling for `find_optimal_horizon`.
pub const DEFAULT_N_MAX: usize = 100_000;
/// Default increment tolerance for scan convergence.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Tolerance under which two candidate values count as tied; ties resolve
/// to the smaller horizon (fewest generations at equal value).
const VALUE_TIE: f64 = 1e-12;

/// Plateau tolerance used to fill `HorizonSolution::plateau_onset` when the
/// optimum is infinite but the value curve has a finite limit: half of the
/// last displayed decimal at three-decimal reporting precision.
const DISPLAY_PLATEAU_EPS: f64 = 0.5e-3;

/// Hard ceiling on dense scan evaluations (the scan is O(n) per point, so
/// this bounds total work at O(cap²) in the worst case).
const SCAN_HARD_CAP: usize = 65_536;

/// Evaluations per parallel scan batch.
const SCAN_BATCH: usize = 64;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum HorizonError {
    /// Plateau onset is only defined against a finite value-curve limit.
    #[error("the value curve has no finite limit to plateau against")]
    NotApplicable,
}

/// The optimal horizon, on the axis documented at the module level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimalHorizon {
    Finite(usize),
    Infinite,
}

/// Limiting value of the curve `n ↦ V[n]`, when known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VInfinity {
    Finite(f64),
    PosInfinity,
    NegInfinity,
    /// No closed form exists in the interior regime; the scan limit
    /// (with a geometric tail correction) is reported as an estimate.
    Unknown { scan_estimate: f64 },
}

impl From<ExtendedValue> for VInfinity {
    fn from(v: ExtendedValue) -> Self {
        match v {
            ExtendedValue::Finite(x) => VInfinity::Finite(x),
            ExtendedValue::PosInfinity => VInfinity::PosInfinity,
            ExtendedValue::NegInfinity => VInfinity::NegInfinity,
        }
    }
}

/// Result of the optimal-horizon search.
#[derive(Debug, Clone, PartialEq)]
pub struct HorizonSolution {
    pub n_star: OptimalHorizon,
    /// Achieved maximum. For a finite star this is `V` at the optimal last
    /// index; for an infinite star it is the value curve's own limit when
    /// that differs from `v_infinity` (undiscounted knife edge), and absent
    /// when the limit is `v_infinity` itself or `+∞`.
    pub v_at_star: Option<f64>,
    pub v_infinity: VInfinity,
    pub phase: PhaseClass,
    /// Smallest `n` with `limit − V[n] ≤ 0.5e-3`, filled when the optimum
    /// is infinite with a finite curve limit ("any horizon beyond this is
    /// as good as infinite at display precision").
    pub plateau_onset: Option<usize>,
    /// Set when a scan hit its ceiling before the tail was decided; the
    /// reported solution is best-so-far, not a verdict.
    pub inconclusive: bool,
    last_index: Option<usize>,
}

impl HorizonSolution {
    /// Index of the last generation of the reported optimum (`None` for an
    /// infinite horizon).
    pub fn optimal_last_index(&self) -> Option<usize> {
        self.last_index
    }
}

/// `V[n]` through the cheapest applicable formula.
fn value_at(params: &ModelParams, n: usize) -> f64 {
    match classify_phase(params).regime {
        Regime::Ak => ak::ak_value(params, n as f64),
        Regime::AkZeroDiscount if unit_productivity(params) => {
            zero_discount::akzd_value(params.initial_capital(), n)
        }
        _ => closed_form::population_value(params, n),
    }
}

fn unit_productivity(params: &ModelParams) -> bool {
    params.productivity().ln().abs() <= model::SIGN_TOLERANCE
}

/// Search with the library defaults (`n_max = 10⁵`, `eps = 1e-9`).
pub fn find_optimal_horizon(params: &ModelParams) -> HorizonSolution {
    find_optimal_horizon_with(params, DEFAULT_N_MAX, DEFAULT_EPS)
}

/// Search for the integer horizon maximizing `V[n]`.
///
/// Regimes with closed-form analytics (linear production; the undiscounted
/// classification; the fully degenerate corner at unit productivity) are
/// decided from candidate enumeration in O(1) evaluations and ignore
/// `n_max`. The remaining regimes scan `V[n]` upward, stopping once
/// increments stay below `eps` (the curve is provably Cauchy for `β < 1`)
/// or, where the value drifts to −∞, once the decline has outlasted the
/// best prefix; `n_max` (clamped to 65 536) bounds that scan.
pub fn find_optimal_horizon_with(
    params: &ModelParams,
    n_max: usize,
    eps: f64,
) -> HorizonSolution {
    let phase = classify_phase(params);
    match phase.regime {
        Regime::Ak => solve_linear_production(params, phase),
        Regime::ZeroDiscount => solve_undiscounted(params, phase, n_max, eps),
        Regime::AkZeroDiscount => solve_degenerate(params, phase, n_max, eps),
        Regime::General => solve_interior(params, phase, n_max, eps),
    }
}

/// Linear production (`θ = 1`, `β < 1`): the stationary points of the
/// continuous value curve bracket every discrete candidate, and the curve
/// limit is closed-form, so no scan is needed.
fn solve_linear_production(params: &ModelParams, phase: PhaseClass) -> HorizonSolution {
    let v_inf = ak::ak_value_infinite(params);
    let report = ak::foc_roots(params);

    let mut candidates = vec![0usize];
    for r in &report.roots {
        candidates.push(r.floor().max(0.0) as usize);
        candidates.push(r.ceil().max(0.0) as usize);
    }
    candidates.sort_unstable();
    candidates.dedup();

    let mut best_idx = candidates[0];
    let mut best_v = ak::ak_value(params, best_idx as f64);
    for &idx in &candidates[1..] {
        let v = ak::ak_value(params, idx as f64);
        if v > best_v + VALUE_TIE {
            best_idx = idx;
            best_v = v;
        }
    }

    if v_inf > best_v + VALUE_TIE {
        HorizonSolution {
            n_star: OptimalHorizon::Infinite,
            v_at_star: None,
            v_infinity: VInfinity::Finite(v_inf),
            phase,
            plateau_onset: onset_against(|n| ak::ak_value(params, n as f64), v_inf, DISPLAY_PLATEAU_EPS),
            inconclusive: !report.scan_complete,
            last_index: None,
        }
    } else {
        HorizonSolution {
            n_star: OptimalHorizon::Finite(best_idx + 1),
            v_at_star: Some(best_v),
            v_infinity: VInfinity::Finite(v_inf),
            phase,
            plateau_onset: None,
            inconclusive: false,
            last_index: Some(best_idx),
        }
    }
}

/// Undiscounted (`β = 1`, `θ < 1`): classified analytically by the dual
/// productivity; only the drift-to-−∞ and knife-edge branches scan.
fn solve_undiscounted(
    params: &ModelParams,
    phase: PhaseClass,
    n_max: usize,
    eps: f64,
) -> HorizonSolution {
    match zero_discount::zd_value_infinite(params) {
        ExtendedValue::PosInfinity => HorizonSolution {
            n_star: OptimalHorizon::Infinite,
            v_at_star: None,
            v_infinity: VInfinity::PosInfinity,
            phase,
            plateau_onset: None,
            inconclusive: false,
            last_index: None,
        },
        ExtendedValue::NegInfinity => {
            let scan = scan_values(|n| value_at(params, n), n_max, eps, true);
            finite_from_scan(scan, phase, VInfinity::NegInfinity, 1)
        }
        ExtendedValue::Finite(analytic) => {
            // Knife edge: truncated optima burn their terminal capital, so
            // the value curve converges to a limit strictly above the
            // sustainable infinite-path value reported as v_infinity.
            let scan = scan_values(|n| value_at(params, n), n_max, eps, false);
            match scan.limit_estimate {
                Some(limit) if limit > scan.best_value + VALUE_TIE => HorizonSolution {
                    n_star: OptimalHorizon::Infinite,
                    v_at_star: Some(limit),
                    v_infinity: VInfinity::Finite(analytic),
                    phase,
                    plateau_onset: scan
                        .values
                        .iter()
                        .position(|&v| limit - v <= DISPLAY_PLATEAU_EPS),
                    inconclusive: false,
                    last_index: None,
                },
                _ => finite_from_scan(scan, phase, VInfinity::Finite(analytic), 1),
            }
        }
    }
}

/// Fully degenerate corner (`β = θ = 1`). At unit productivity the value is
/// `(n+1)·log(k₀/(n+1))` and the optimum sits next to `k₀/e − 1`; off unit
/// productivity the value diverges (`+∞` for `A > 1`, −∞ drift for
/// `A < 1`).
fn solve_degenerate(
    params: &ModelParams,
    phase: PhaseClass,
    n_max: usize,
    eps: f64,
) -> HorizonSolution {
    let log_a = params.productivity().ln();
    if log_a > model::SIGN_TOLERANCE {
        return HorizonSolution {
            n_star: OptimalHorizon::Infinite,
            v_at_star: None,
            v_infinity: VInfinity::PosInfinity,
            phase,
            plateau_onset: None,
            inconclusive: false,
            last_index: None,
        };
    }
    if log_a < -model::SIGN_TOLERANCE {
        let scan = scan_values(|n| value_at(params, n), n_max, eps, true);
        return finite_from_scan(scan, phase, VInfinity::NegInfinity, 0);
    }

    let k0 = params.initial_capital();
    let cont = (k0 / std::f64::consts::E - 1.0).max(0.0);
    let mut best_idx = cont.floor() as usize;
    let mut best_v = zero_discount::akzd_value(k0, best_idx);
    let up = cont.ceil() as usize;
    let v_up = zero_discount::akzd_value(k0, up);
    if v_up > best_v + VALUE_TIE {
        best_idx = up;
        best_v = v_up;
    }
    HorizonSolution {
        n_star: OptimalHorizon::Finite(best_idx),
        v_at_star: Some(best_v),
        v_infinity: VInfinity::NegInfinity,
        phase,
        plateau_onset: None,
        inconclusive: false,
        last_index: Some(best_idx),
    }
}

/// Interior regime (`β < 1`, `θ < 1`): no closed limit exists, but the
/// discounted log-consumption series is summable, so the curve is Cauchy
/// and the scan stops on settled increments.
fn solve_interior(
    params: &ModelParams,
    phase: PhaseClass,
    n_max: usize,
    eps: f64,
) -> HorizonSolution {
    let scan = scan_values(|n| value_at(params, n), n_max, eps, false);
    let estimate = scan
        .limit_estimate
        .unwrap_or_else(|| scan.tail_extrapolation());
    match scan.limit_estimate {
        Some(limit) if limit > scan.best_value + VALUE_TIE => HorizonSolution {
            n_star: OptimalHorizon::Infinite,
            v_at_star: None,
            v_infinity: VInfinity::Unknown {
                scan_estimate: limit,
            },
            phase,
            plateau_onset: None,
            inconclusive: false,
            last_index: None,
        },
        _ => finite_from_scan(
            scan,
            phase,
            VInfinity::Unknown {
                scan_estimate: estimate,
            },
            1,
        ),
    }
}

fn finite_from_scan(
    scan: ScanOutcome,
    phase: PhaseClass,
    v_infinity: VInfinity,
    axis_offset: usize,
) -> HorizonSolution {
    HorizonSolution {
        n_star: OptimalHorizon::Finite(scan.best_index + axis_offset),
        v_at_star: Some(scan.best_value),
        v_infinity,
        phase,
        plateau_onset: None,
        inconclusive: !scan.settled,
        last_index: Some(scan.best_index),
    }
}

struct ScanOutcome {
    values: Vec<f64>,
    best_index: usize,
    best_value: f64,
    /// Converged limit (last value plus a geometric tail correction), when
    /// increments settled below the tolerance.
    limit_estimate: Option<f64>,
    /// False when the scan stopped at its ceiling rather than by rule.
    settled: bool,
}

impl ScanOutcome {
    /// Best-effort limit guess when the scan did not converge.
    fn tail_extrapolation(&self) -> f64 {
        let m = self.values.len();
        if m >= 3 {
            geometric_limit(
                self.values[m - 1],
                self.values[m - 1] - self.values[m - 2],
                self.values[m - 2] - self.values[m - 3],
            )
        } else {
            self.values[m - 1]
        }
    }
}

fn geometric_limit(last: f64, d1: f64, d0: f64) -> f64 {
    let r = d1 / d0;
    if r.is_finite() && r > 0.0 && r < 0.999_999 {
        last + d1 * r / (1.0 - r)
    } else {
        last
    }
}

/// Evaluate `V[0], V[1], …` in parallel batches, tracking the running
/// argmax, until one of the stopping rules fires:
///
/// * **converged** — eight consecutive increments below `eps` in magnitude;
/// * **declining** (only when `allow_decline_stop`) — 64 consecutive
///   decreases and twice the best prefix already scanned, for curves that
///   drift to −∞ and would never converge;
/// * **ceiling** — `min(n_max, 65 536) + 1` evaluations (not settled).
fn scan_values<F: Fn(usize) -> f64 + Sync + Send>(
    value: F,
    n_max: usize,
    eps: f64,
    allow_decline_stop: bool,
) -> ScanOutcome {
    let cap = n_max.min(SCAN_HARD_CAP);
    let mut values: Vec<f64> = Vec::with_capacity(SCAN_BATCH * 4);
    let mut best_index = 0usize;
    let mut best_value = f64::NEG_INFINITY;
    let mut small_streak = 0usize;
    let mut decline_streak = 0usize;

    while values.len() <= cap {
        let start = values.len();
        let count = SCAN_BATCH.min(cap + 1 - start);
        let batch = parallel::map_collect(count, |i| value(start + i));
        for v in batch {
            let n = values.len();
            if v > best_value + VALUE_TIE {
                best_value = v;
                best_index = n;
            }
            if n > 0 {
                let delta = v - values[n - 1];
                small_streak = if delta.abs() < eps { small_streak + 1 } else { 0 };
                decline_streak = if delta < 0.0 { decline_streak + 1 } else { 0 };
            }
            values.push(v);

            if small_streak >= 8 {
                let m = values.len();
                let limit = geometric_limit(
                    values[m - 1],
                    values[m - 1] - values[m - 2],
                    values[m - 2] - values[m - 3],
                );
                return ScanOutcome {
                    values,
                    best_index,
                    best_value,
                    limit_estimate: Some(limit),
                    settled: true,
                };
            }
            if allow_decline_stop
                && decline_streak >= 64
                && values.len() > 2 * best_index + 64
            {
                return ScanOutcome {
                    values,
                    best_index,
                    best_value,
                    limit_estimate: None,
                    settled: true,
                };
            }
        }
    }

    ScanOutcome {
        values,
        best_index,
        best_value,
        limit_estimate: None,
        settled: false,
    }
}

fn onset_against<F: Fn(usize) -> f64>(value: F, limit: f64, eps: f64) -> Option<usize> {
    const ONSET_CAP: usize = 1 << 22;
    (0..=ONSET_CAP).find(|&n| limit - value(n) <= eps)
}

/// Smallest `n` with `limit − V[n] ≤ eps`, where `limit` is the value
/// curve's own finite limit: the closed-form infinite value under linear
/// production, the converged scan limit on the undiscounted knife edge.
/// Errors when the curve has no finite limit (undiscounted off the knife
/// edge, the degenerate corner, or the interior regime where the limit has
/// no closed form).
pub fn plateau_onset(params: &ModelParams, eps: f64) -> Result<usize, HorizonError> {
    match classify_phase(params).regime {
        Regime::Ak => {
            let v_inf = ak::ak_value_infinite(params);
            onset_against(|n| ak::ak_value(params, n as f64), v_inf, eps)
                .ok_or(HorizonError::NotApplicable)
        }
        Regime::ZeroDiscount => match zero_discount::zd_value_infinite(params) {
            ExtendedValue::Finite(_) => {
                let scan = scan_values(|n| value_at(params, n), DEFAULT_N_MAX, DEFAULT_EPS, false);
                let limit = match scan.limit_estimate {
                    Some(l) => l,
                    None => return Err(HorizonError::NotApplicable),
                };
                match scan.values.iter().position(|&v| limit - v <= eps) {
                    Some(n) => Ok(n),
                    // Converged scans end deep in the plateau, so a miss
                    // can only mean eps below the increment floor.
                    None => Err(HorizonError::NotApplicable),
                }
            }
            _ => Err(HorizonError::NotApplicable),
        },
        Regime::AkZeroDiscount | Regime::General => Err(HorizonError::NotApplicable),
    }
}

/// Sampled value curve `n ↦ V[n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueCurve {
    /// `(n, V[n])` pairs, `n = n_from, n_from + stride, …, ≤ n_to`.
    pub points: Vec<(usize, f64)>,
}

/// Evaluate the value curve on `n_from..=n_to` with the given stride
/// (points fan out across threads; each is independent).
pub fn value_curve(params: &ModelParams, n_from: usize, n_to: usize, stride: usize) -> ValueCurve {
    assert!(n_from <= n_to, "curve range must satisfy n_from <= n_to");
    assert!(stride >= 1, "stride must be positive");
    let count = (n_to - n_from) / stride + 1;
    let points = parallel::map_collect(count, |i| {
        let n = n_from + i * stride;
        (n, value_at(params, n))
    });
    ValueCurve { points }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::theta_for_unit_dual;

    fn table(case: usize) -> ModelParams {
        match case {
            1 => ModelParams::new(1.012, 0.992, 1.0, 150.0).unwrap(),
            2 => ModelParams::new(1.01, 0.992, 1.0, 150.0).unwrap(),
            3 => ModelParams::new(1.0 / 0.992, 0.992, 1.0, 150.0).unwrap(),
            4 => ModelParams::new(1.005, 0.992, 1.0, 150.0).unwrap(),
            5 => ModelParams::new(1.05, 1.0, 0.992, 150.0).unwrap(),
            6 => {
                let theta = theta_for_unit_dual(1.2).unwrap();
                ModelParams::new(1.2, 1.0, theta, 150.0).unwrap()
            }
            7 => ModelParams::new(1.05, 1.0, 0.991, 150.0).unwrap(),
            8 => ModelParams::new(1.0, 1.0, 1.0, 150.0).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn growth_dominant_linear_case_is_infinite() {
        let sol = find_optimal_horizon(&table(1));
        assert_eq!(sol.n_star, OptimalHorizon::Infinite);
        assert_eq!(sol.v_at_star, None);
        assert_eq!(sol.optimal_last_index(), None);
        match sol.v_infinity {
            VInfinity::Finite(v) => assert!((v - 84.675_453_1).abs() < 1e-5),
            other => panic!("expected finite limit, got {other:?}"),
        }
        assert_eq!(sol.plateau_onset, Some(1782));
        assert!(!sol.inconclusive);
    }

    #[test]
    fn linear_cases_with_interior_peaks() {
        let expect = [
            (2, 95usize, 59.965_205_0, 53.765_453),
            (3, 73, 55.626_667_5, 23.794_216),
            (4, 58, 50.979_461_0, -23.778_131),
        ];
        for (case, n_star, v, v_inf) in expect {
            let sol = find_optimal_horizon(&table(case));
            assert_eq!(sol.n_star, OptimalHorizon::Finite(n_star), "case {case}");
            assert_eq!(sol.optimal_last_index(), Some(n_star - 1));
            let got = sol.v_at_star.unwrap();
            assert!((got - v).abs() < 1e-5, "case {case}: {got}");
            match sol.v_infinity {
                VInfinity::Finite(g) => assert!((g - v_inf).abs() < 1e-4, "case {case}: {g}"),
                other => panic!("case {case}: {other:?}"),
            }
            assert_eq!(sol.plateau_onset, None);
            assert!(!sol.inconclusive);
        }
    }

    #[test]
    fn undiscounted_expanding_case_is_infinite() {
        let sol = find_optimal_horizon(&table(5));
        assert_eq!(sol.n_star, OptimalHorizon::Infinite);
        assert_eq!(sol.v_at_star, None);
        assert_eq!(sol.v_infinity, VInfinity::PosInfinity);
        assert_eq!(sol.plateau_onset, None);
    }

    #[test]
    fn undiscounted_knife_edge_plateaus() {
        let sol = find_optimal_horizon(&table(6));
        assert_eq!(sol.n_star, OptimalHorizon::Infinite);
        let sup = sol.v_at_star.unwrap();
        assert!((sup - 55.801_292_7).abs() < 1e-5, "curve limit {sup}");
        match sol.v_infinity {
            VInfinity::Finite(v) => assert!((v - 41.687_635).abs() < 1e-4),
            other => panic!("expected finite sustainable value, got {other:?}"),
        }
        assert_eq!(sol.plateau_onset, Some(248));
        assert!(!sol.inconclusive);
    }

    #[test]
    fn undiscounted_contracting_case_has_finite_peak() {
        let sol = find_optimal_horizon(&table(7));
        assert_eq!(sol.n_star, OptimalHorizon::Finite(117));
        assert_eq!(sol.optimal_last_index(), Some(116));
        assert!((sol.v_at_star.unwrap() - 76.718_316_9).abs() < 1e-5);
        assert_eq!(sol.v_infinity, VInfinity::NegInfinity);
        assert!(!sol.inconclusive);
    }

    #[test]
    fn degenerate_corner_reports_the_terminal_index() {
        let sol = find_optimal_horizon(&table(8));
        assert_eq!(sol.n_star, OptimalHorizon::Finite(54));
        assert_eq!(sol.optimal_last_index(), Some(54));
        assert!((sol.v_at_star.unwrap() - 55.181_616_0).abs() < 1e-5);
        assert_eq!(sol.v_infinity, VInfinity::NegInfinity);
        // Index sits next to the continuous optimum k0/e − 1.
        let cont = zero_discount::akzd_optimal_horizon(150.0).unwrap();
        assert!((54.0 - cont).abs() <= 1.0);

        let growing = ModelParams::new(1.3, 1.0, 1.0, 150.0).unwrap();
        let g = find_optimal_horizon(&growing);
        assert_eq!(g.n_star, OptimalHorizon::Infinite);
        assert_eq!(g.v_infinity, VInfinity::PosInfinity);

        let shrinking = ModelParams::new(0.7, 1.0, 1.0, 150.0).unwrap();
        let s = find_optimal_horizon(&shrinking);
        assert!(matches!(s.n_star, OptimalHorizon::Finite(_)));
        assert!(!s.inconclusive);
    }

    #[test]
    fn interior_regime_matches_dense_argmax() {
        let p = ModelParams::new(1.05, 0.95, 0.9, 10.0).unwrap();
        let sol = find_optimal_horizon(&p);
        let curve = value_curve(&p, 0, 400, 1);
        let (dense_idx, dense_v) = curve
            .points
            .iter()
            .copied()
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        match sol.n_star {
            OptimalHorizon::Finite(n) => {
                assert_eq!(n, dense_idx + 1);
                assert!((sol.v_at_star.unwrap() - dense_v).abs() < 1e-12);
                // The reported optimum dominates everything scanned and the
                // tail estimate.
                for &(_, v) in &curve.points {
                    assert!(sol.v_at_star.unwrap() >= v - VALUE_TIE);
                }
                match sol.v_infinity {
                    VInfinity::Unknown { scan_estimate } => {
                        assert!(sol.v_at_star.unwrap() >= scan_estimate - 1e-9);
                    }
                    other => panic!("interior regime must report Unknown, got {other:?}"),
                }
            }
            OptimalHorizon::Infinite => panic!("interior test case has a finite peak"),
        }
        assert!(!sol.inconclusive);
        // Deterministic: identical reruns.
        assert_eq!(sol, find_optimal_horizon(&p));
    }

    #[test]
    fn interior_scan_ceiling_is_reported_not_guessed() {
        let p = ModelParams::new(1.05, 0.95, 0.9, 10.0).unwrap();
        let sol = find_optimal_horizon_with(&p, 10, 1e-9);
        assert!(sol.inconclusive);
        assert!(matches!(sol.n_star, OptimalHorizon::Finite(_)));
    }

    #[test]
    fn plateau_onset_queries() {
        assert_eq!(plateau_onset(&table(1), 0.5e-3), Ok(1782));
        assert_eq!(plateau_onset(&table(1), 1e9), Ok(0));
        assert_eq!(plateau_onset(&table(6), 0.5e-3), Ok(248));
        assert_eq!(plateau_onset(&table(5), 0.5e-3), Err(HorizonError::NotApplicable));
        assert_eq!(plateau_onset(&table(8), 0.5e-3), Err(HorizonError::NotApplicable));
        let interior = ModelParams::new(1.05, 0.95, 0.9, 10.0).unwrap();
        assert_eq!(
            plateau_onset(&interior, 0.5e-3),
            Err(HorizonError::NotApplicable)
        );
    }

    #[test]
    fn single_point_curve() {
        let p = table(2);
        let curve = value_curve(&p, 0, 0, 1);
        let expected = (p.productivity() * p.initial_capital()).ln();
        assert_eq!(curve.points.len(), 1);
        assert_eq!(curve.points[0].0, 0);
        assert!((curve.points[0].1 - expected).abs() < 1e-12);

        let concave = ModelParams::new(1.05, 1.0, 0.992, 150.0).unwrap();
        let c = value_curve(&concave, 0, 0, 1);
        let want = (1.05 * 150f64.powf(0.992)).ln();
        assert!((c.points[0].1 - want).abs() < 1e-12);
    }

    #[test]
    fn marginal_decline_curve_has_unique_interior_max() {
        let curve = value_curve(&table(4), 0, 200, 1);
        let peaks: Vec<usize> = (1..curve.points.len() - 1)
            .filter(|&i| {
                curve.points[i].1 > curve.points[i - 1].1
                    && curve.points[i].1 > curve.points[i + 1].1
            })
            .map(|i| curve.points[i].0)
            .collect();
        assert_eq!(peaks, vec![57]);
    }

    #[test]
    fn rise_fall_rise_curve_has_three_monotone_segments() {
        let curve = value_curve(&table(2), 0, 600, 1);
        let mut segments = 0usize;
        let mut last_sign = 0i8;
        for w in curve.points.windows(2) {
            let d = w[1].1 - w[0].1;
            let sign = if d > 0.0 { 1 } else { -1 };
            if sign != last_sign {
                segments += 1;
                last_sign = sign;
            }
        }
        assert_eq!(segments, 3);
    }

    #[test]
    fn strided_scan_with_refinement_agrees_with_dense_scan() {
        for case in [2usize, 3, 4, 8] {
            let p = table(case);
            let dense = value_curve(&p, 0, 700, 1);
            let dense_best = dense
                .points
                .iter()
                .copied()
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap()
                .0;

            let coarse = value_curve(&p, 0, 700, 7);
            let anchor = coarse
                .points
                .iter()
                .copied()
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap()
                .0;
            let refined = value_curve(&p, anchor.saturating_sub(7), anchor + 7, 1);
            let refined_best = refined
                .points
                .iter()
                .copied()
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap()
                .0;
            assert_eq!(refined_best, dense_best, "case {case}");
        }
    }

    #[test]
    fn linear_peak_sits_next_to_a_stationary_point() {
        for case in [3usize, 4] {
            let p = table(case);
            let report = ak::foc_roots(&p);
            assert!(!report.roots.is_empty());
            let sol = find_optimal_horizon(&p);
            let idx = sol.optimal_last_index().unwrap() as f64;
            assert!((idx - report.roots[0]).abs() <= 1.0, "case {case}");
        }
    }
}
