//! Lorenz curves and Gini indices over optimal consumption streams, plus
//! Gini-versus-horizon curves.
//!
//! The Gini here defaults to a *horizon* normalization: for a stream of
//! `n + 1` generation consumptions the double sum of absolute differences
//! is divided by `2·n·Σc` rather than the conventional `2·(n+1)·Σc`. The
//! two differ by the factor `(n+1)/n`, which matters for short dynasties
//! (a two-generation `(1, 3)` stream scores `0.5` instead of `0.25`); the
//! conventional normalization stays available for comparison output.

use thiserror::Error;

use crate::closed_form::{self, ClosedFormError};
use crate::model::ModelParams;
use crate::numerics::CompensatedSum;
use crate::parallel;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InequalityError {
    #[error("consumption stream is empty")]
    EmptyStream,
    #[error("Gini index needs at least two generations")]
    DegenerateStream,
    #[error("consumption stream must be strictly positive, got {value} at index {index}")]
    NonPositive { index: usize, value: f64 },
}

/// Failure while assembling a Gini curve: either the consumption path or
/// the index computation refused.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error(transparent)]
    Path(#[from] ClosedFormError),
    #[error(transparent)]
    Index(#[from] InequalityError),
}

/// Denominator convention for the Gini index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GiniNormalization {
    /// Divide by `2·n·Σc` where `n = length − 1` (the horizon).
    #[default]
    Horizon,
    /// Divide by `2·(n+1)·Σc` (the conventional index).
    SampleSize,
}

fn checked_sorted(c: &[f64]) -> Result<Vec<f64>, InequalityError> {
    if c.is_empty() {
        return Err(InequalityError::EmptyStream);
    }
    for (index, &value) in c.iter().enumerate() {
        // NaN fails the finiteness arm, so it cannot sneak past the sort.
        if value <= 0.0 || !value.is_finite() {
            return Err(InequalityError::NonPositive { index, value });
        }
    }
    let mut sorted = c.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(sorted)
}

/// Gini index under the default horizon normalization.
pub fn gini(c: &[f64]) -> Result<f64, InequalityError> {
    gini_with(c, GiniNormalization::Horizon)
}

/// Gini index of a consumption stream.
///
/// Computed in O(m log m) from the sorted order statistics:
/// `Σ_i Σ_j |c_i − c_j| = 2·Σ_k (2k − m + 1)·c_(k)`, which the unit tests
/// pin against the literal double sum.
pub fn gini_with(c: &[f64], normalization: GiniNormalization) -> Result<f64, InequalityError> {
    if c.len() < 2 {
        return Err(if c.is_empty() {
            InequalityError::EmptyStream
        } else {
            InequalityError::DegenerateStream
        });
    }
    let sorted = checked_sorted(c)?;
    let m = sorted.len();
    let mut spread = CompensatedSum::new();
    let mut total = CompensatedSum::new();
    for (k, &x) in sorted.iter().enumerate() {
        spread.add((2.0 * k as f64 - m as f64 + 1.0) * x);
        total.add(x);
    }
    let generations = match normalization {
        GiniNormalization::Horizon => (m - 1) as f64,
        GiniNormalization::SampleSize => m as f64,
    };
    Ok(spread.value() / (generations * total.value()))
}

/// Piecewise-linear Lorenz curve on exact generation quantiles.
#[derive(Debug, Clone, PartialEq)]
pub struct LorenzCurve {
    /// `(population share, consumption share)` from `(0, 0)` to `(1, 1)`.
    pub points: Vec<(f64, f64)>,
}

/// Lorenz curve of a consumption stream: point `i` is the share of total
/// consumption held by the `i` poorest generations.
pub fn lorenz(c: &[f64]) -> Result<LorenzCurve, InequalityError> {
    let sorted = checked_sorted(c)?;
    let m = sorted.len();
    let total: f64 = {
        let mut acc = CompensatedSum::new();
        for &x in &sorted {
            acc.add(x);
        }
        acc.value()
    };
    let mut points = Vec::with_capacity(m + 1);
    points.push((0.0, 0.0));
    let mut prefix = CompensatedSum::new();
    for (i, &x) in sorted.iter().enumerate() {
        prefix.add(x);
        points.push(((i + 1) as f64 / m as f64, prefix.value() / total));
    }
    Ok(LorenzCurve { points })
}

/// Sampled Gini-versus-horizon curve.
#[derive(Debug, Clone, PartialEq)]
pub struct GiniCurve {
    /// `(n, G[n])` pairs over the optimal consumption path at each horizon.
    pub points: Vec<(usize, f64)>,
}

/// Gini of the optimal consumption stream at each horizon in
/// `n_from..=n_to` (stride apart), under the default normalization.
pub fn gini_curve(
    params: &ModelParams,
    n_from: usize,
    n_to: usize,
    stride: usize,
) -> Result<GiniCurve, CurveError> {
    gini_curve_with(params, n_from, n_to, stride, GiniNormalization::Horizon)
}

/// [`gini_curve`] with an explicit normalization. Horizons fan out across
/// threads; each point solves its own consumption path.
pub fn gini_curve_with(
    params: &ModelParams,
    n_from: usize,
    n_to: usize,
    stride: usize,
    normalization: GiniNormalization,
) -> Result<GiniCurve, CurveError> {
    assert!(n_from >= 1, "Gini needs at least two generations (n >= 1)");
    assert!(n_from <= n_to, "curve range must satisfy n_from <= n_to");
    assert!(stride >= 1, "stride must be positive");
    let count = (n_to - n_from) / stride + 1;
    let points = parallel::map_collect(count, |i| {
        let n = n_from + i * stride;
        let traj = closed_form::optimal_consumption_path(params, n)?;
        Ok((n, gini_with(&traj.c, normalization)?))
    })
    .into_iter()
    .collect::<Result<Vec<_>, CurveError>>()?;
    Ok(GiniCurve { points })
}
