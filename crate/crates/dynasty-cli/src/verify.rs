//! Self-check suite: reruns the independent oracles and invariant
//! families against freshly drawn parameters and (in full depth) the
//! table goldens. The report is plain `key=value` lines so scripts can
//! grep it, and it is byte-identical for a given seed and depth.

use std::fmt::Write as _;

use dynasty_core::model::{geometric_sum, transition};
use dynasty_core::{closed_form, oracle, ModelParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::table;
use crate::{CliError, CliResult};

const GRID_POINTS: usize = 800;
const GRID_BOUND: f64 = 1e-4;
const POLICY_BOUND: f64 = 1e-3;
const BUDGET_BOUND: f64 = 1e-9;

fn draws(seed: u64, count: usize) -> Vec<ModelParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let a = rng.random_range(0.9..1.2);
            let mut beta = rng.random_range(0.8..1.0);
            let mut theta = rng.random_range(0.8..1.0);
            let k0 = rng.random_range(1.0..200.0);
            // Every fourth draw pins a boundary regime.
            match i % 4 {
                1 => beta = 1.0,
                2 => theta = 1.0,
                3 => {
                    beta = 1.0;
                    theta = 1.0;
                }
                _ => {}
            }
            ModelParams::new(a, beta, theta, k0).unwrap()
        })
        .collect()
}

struct Report {
    text: String,
    all_ok: bool,
}

impl Report {
    fn family(&mut self, name: &str, detail: &str, pass: bool) {
        let status = if pass { "pass" } else { "fail" };
        let _ = writeln!(self.text, "family={name} {detail} status={status}");
        self.all_ok &= pass;
    }
}

pub fn run(full: bool, seed: u64) -> CliResult<()> {
    let depth = if full { "full" } else { "quick" };
    let mut report = Report {
        text: format!("# dynasty verify depth={depth} seed={seed}\n"),
        all_ok: true,
    };
    let params = draws(seed, if full { 20 } else { 10 });

    // Backward-induction oracle against the closed-form value.
    let max_n = if full { 5 } else { 2 };
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    for p in &params {
        for n in 0..=max_n {
            let closed = closed_form::population_value(p, n);
            let got = oracle::brute_force_value(p, n, GRID_POINTS).unwrap().value;
            worst = worst.max((got - closed).abs() / closed.abs().max(1e-12));
            checks += 1;
        }
    }
    report.family(
        "grid_oracle",
        &format!(
            "draws={} max_n={max_n} checks={checks} worst={worst:.3e} bound={GRID_BOUND:e}",
            params.len()
        ),
        worst <= GRID_BOUND,
    );

    // Derivative-free search against the first-order consumption rule.
    let max_n = if full { 3 } else { 2 };
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    for p in &params {
        for n in 1..=max_n {
            let rule = p.productivity() * p.initial_capital().powf(p.elasticity())
                / geometric_sum(n, p);
            let got = oracle::direct_search(p, n, 8).unwrap().consumption[0];
            worst = worst.max((got - rule).abs() / rule);
            checks += 1;
        }
    }
    report.family(
        "policy_search",
        &format!(
            "draws={} max_n={max_n} checks={checks} worst={worst:.3e} bound={POLICY_BOUND:e}",
            params.len()
        ),
        worst <= POLICY_BOUND,
    );

    // Budget identity along materialized plans.
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    for (i, p) in params.iter().enumerate() {
        let n = 3 + (7 * i) % 38;
        let traj = closed_form::optimal_consumption_path(p, n).unwrap();
        for t in 0..=n {
            let out = p.productivity() * traj.k[t].powf(p.elasticity());
            let resid = (transition(traj.k[t], traj.c[t], p) - traj.k[t + 1]).abs();
            worst = worst.max(resid / out.max(1.0));
        }
        assert_eq!(traj.k[n + 1], 0.0);
        checks += 1;
    }
    report.family(
        "budget_identity",
        &format!(
            "draws={} checks={checks} worst={worst:.3e} bound={BUDGET_BOUND:e}",
            params.len()
        ),
        worst <= BUDGET_BOUND,
    );

    if full {
        let mismatches = table::golden_mismatches(&table::builtin_rows());
        report.family(
            "table_goldens",
            &format!("rows=8 mismatches={}", mismatches.len()),
            mismatches.is_empty(),
        );
        for cell in &mismatches {
            let _ = writeln!(report.text, "# mismatch: {cell}");
        }
    }

    let verdict = if report.all_ok { "pass" } else { "fail" };
    let _ = writeln!(report.text, "verdict: {verdict}");
    print!("{}", report.text);
    if report.all_ok {
        Ok(())
    } else {
        Err(CliError::Failure("verification failed".to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_deterministic_and_pin_boundary_regimes() {
        let a = draws(17, 8);
        let b = draws(17, 8);
        assert_eq!(a, b);
        assert_eq!(a[1].discount(), 1.0);
        assert_eq!(a[2].elasticity(), 1.0);
        assert_eq!(a[3].discount(), 1.0);
        assert_eq!(a[3].elasticity(), 1.0);
        assert!(a[0].discount() < 1.0 && a[0].elasticity() < 1.0);
    }

    #[test]
    fn quick_depth_passes() {
        assert!(run(false, 17).is_ok());
    }
}
