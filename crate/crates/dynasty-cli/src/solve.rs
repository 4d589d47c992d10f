//! Trajectory emission: one CSV per scenario with the full optimal plan.

use std::path::Path;

use dynasty_core::horizon::{find_optimal_horizon, plateau_onset};
use dynasty_core::closed_form;

use crate::config::{HorizonSpec, Scenario};
use crate::render::{csv_line, fmt_float};
use crate::{write_text, CliError, CliResult};

const HEADER: &str = "t,c_t,k_t,log_c_t,discounted_contrib";

/// Pick the horizon the trajectory is emitted at. A fixed `n` wins; a
/// search takes the optimal last generation; an infinite optimum falls
/// back to the plateau onset at the scenario's tolerance.
fn resolve_horizon(scenario: &Scenario) -> CliResult<usize> {
    match scenario.horizon {
        HorizonSpec::Fixed(n) => Ok(n),
        HorizonSpec::Range { .. } => Err(CliError::Usage(format!(
            "scenario `{}`: `solve` needs a single horizon; a range belongs to `curves`",
            scenario.name
        ))),
        HorizonSpec::Search => {
            let sol = find_optimal_horizon(&scenario.params);
            if let Some(last) = sol.optimal_last_index() {
                if sol.inconclusive {
                    eprintln!(
                        "scenario `{}`: search hit its scan ceiling; using best horizon found (last index {last})",
                        scenario.name
                    );
                }
                return Ok(last);
            }
            match plateau_onset(&scenario.params, scenario.eps) {
                Ok(onset) => {
                    eprintln!(
                        "scenario `{}`: optimal horizon is infinite; emitting the plateau onset n = {onset} (eps = {})",
                        scenario.name, scenario.eps
                    );
                    Ok(onset)
                }
                Err(_) => Err(CliError::Usage(format!(
                    "scenario `{}`: the value diverges, so no finite trajectory represents it; set `n` explicitly",
                    scenario.name
                ))),
            }
        }
    }
}

pub fn run(scenario: &Scenario, out_dir: &Path, decimals: usize) -> CliResult<()> {
    let n = resolve_horizon(scenario)?;
    let traj = closed_form::optimal_consumption_path(&scenario.params, n)
        .map_err(|e| CliError::Usage(format!("scenario `{}`: {e}", scenario.name)))?;
    let mut out = String::with_capacity(48 * (n + 3));
    out.push_str(HEADER);
    out.push('\n');
    let mut weight = 1.0;
    for t in 0..=n {
        out.push_str(&csv_line(&[
            t.to_string(),
            fmt_float(traj.c[t], decimals),
            fmt_float(traj.k[t], decimals),
            fmt_float(traj.contrib[t], decimals),
            fmt_float(weight * traj.contrib[t], decimals),
        ]));
        out.push('\n');
        weight *= scenario.params.discount();
    }
    // Terminal row: the stock is exhausted, nobody consumes.
    out.push_str(&format!("{},,0,,\n", n + 1));
    write_text(&out_dir.join(&scenario.name).join("trajectory.csv"), &out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dynasty_core::ModelParams;

    fn scenario(horizon: HorizonSpec) -> Scenario {
        Scenario {
            name: "iii".into(),
            params: ModelParams::new(1.0 / 0.992, 0.992, 1.0, 150.0).unwrap(),
            horizon,
            eps: 0.5e-3,
        }
    }

    #[test]
    fn search_uses_the_optimal_last_generation() {
        assert_eq!(resolve_horizon(&scenario(HorizonSpec::Search)).unwrap(), 72);
    }

    #[test]
    fn fixed_horizon_wins_over_search() {
        assert_eq!(
            resolve_horizon(&scenario(HorizonSpec::Fixed(73))).unwrap(),
            73
        );
    }

    #[test]
    fn range_is_rejected() {
        let err = resolve_horizon(&scenario(HorizonSpec::Range {
            from: 1,
            to: 9,
            stride: 1,
        }));
        assert!(matches!(err, Err(CliError::Usage(_))));
    }

    #[test]
    fn infinite_optimum_falls_back_to_the_plateau_onset() {
        let s = Scenario {
            name: "vi".into(),
            params: ModelParams::new(
                1.2,
                1.0,
                dynasty_core::model::theta_for_unit_dual(1.2).unwrap(),
                150.0,
            )
            .unwrap(),
            horizon: HorizonSpec::Search,
            eps: 0.5e-3,
        };
        assert_eq!(resolve_horizon(&s).unwrap(), 248);
    }

    #[test]
    fn divergent_scenarios_need_an_explicit_horizon() {
        let s = Scenario {
            name: "v".into(),
            params: ModelParams::new(1.05, 1.0, 0.992, 150.0).unwrap(),
            horizon: HorizonSpec::Search,
            eps: 0.5e-3,
        };
        assert!(matches!(resolve_horizon(&s), Err(CliError::Usage(_))));
    }
}
