//! Curve artifacts over a horizon range: population value, Gini, and
//! Lorenz data as CSV, each with a companion SVG chart.

use std::path::Path;

use dynasty_core::closed_form;
use dynasty_core::horizon::value_curve;
use dynasty_core::inequality::{gini_curve_with, lorenz, GiniNormalization};

use crate::config::{HorizonSpec, Scenario};
use crate::render::{csv_line, fmt_float};
use crate::svg;
use crate::{write_text, CliError, CliResult};

fn series(
    dir: &Path,
    stem: &str,
    header: &str,
    title: &str,
    labels: (&str, &str),
    points: &[(f64, f64)],
    decimals: usize,
) -> CliResult<()> {
    let mut csv = String::with_capacity(24 * (points.len() + 1));
    csv.push_str(header);
    csv.push('\n');
    for (x, y) in points {
        // The x column is an integer horizon for curves and a share for
        // Lorenz data; trimming keeps the former exact either way.
        csv.push_str(&csv_line(&[
            fmt_float(*x, decimals),
            fmt_float(*y, decimals),
        ]));
        csv.push('\n');
    }
    write_text(&dir.join(format!("{stem}.csv")), &csv)?;
    write_text(
        &dir.join(format!("{stem}.svg")),
        &svg::line_chart(title, labels.0, labels.1, points),
    )
}

pub fn run(
    scenario: &Scenario,
    out_dir: &Path,
    decimals: usize,
    normalization: GiniNormalization,
) -> CliResult<()> {
    let HorizonSpec::Range { from, to, stride } = scenario.horizon else {
        return Err(CliError::Usage(format!(
            "scenario `{}`: `curves` needs a horizon range (n_from/n_to)",
            scenario.name
        )));
    };
    let dir = out_dir.join(&scenario.name);
    let domain_err =
        |e: &dyn std::fmt::Display| CliError::Usage(format!("scenario `{}`: {e}", scenario.name));

    let vc = value_curve(&scenario.params, from, to, stride);
    let pts: Vec<(f64, f64)> = vc.points.iter().map(|&(n, v)| (n as f64, v)).collect();
    series(
        &dir,
        "value_curve",
        "n,value",
        &format!("{}: population value by horizon", scenario.name),
        ("n", "V[n]"),
        &pts,
        decimals,
    )?;

    // Inequality starts at n = 1: a single generation has no spread.
    let g_from = from.max(1);
    if g_from <= to {
        let gc = gini_curve_with(&scenario.params, g_from, to, stride, normalization)
            .map_err(|e| domain_err(&e))?;
        let pts: Vec<(f64, f64)> = gc.points.iter().map(|&(n, g)| (n as f64, g)).collect();
        series(
            &dir,
            "gini_curve",
            "n,gini",
            &format!("{}: consumption Gini by horizon", scenario.name),
            ("n", "G[n]"),
            &pts,
            decimals,
        )?;
    }

    let mut lorenz_at = vec![g_from, to];
    lorenz_at.retain(|&n| (1..=to).contains(&n));
    lorenz_at.dedup();
    for n in lorenz_at {
        let traj =
            closed_form::optimal_consumption_path(&scenario.params, n).map_err(|e| domain_err(&e))?;
        let curve = lorenz(&traj.c).map_err(|e| domain_err(&e))?;
        series(
            &dir,
            &format!("lorenz_n{n}"),
            "p,q",
            &format!("{}: Lorenz curve at n = {n}", scenario.name),
            ("population share", "consumption share"),
            &curve.points,
            decimals,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use dynasty_core::ModelParams;
    use tempfile::tempdir;

    #[test]
    fn emits_the_full_artifact_set() {
        let scenario = Scenario {
            name: "demo".into(),
            params: ModelParams::new(1.01, 0.992, 1.0, 150.0).unwrap(),
            horizon: HorizonSpec::Range {
                from: 0,
                to: 40,
                stride: 2,
            },
            eps: 0.5e-3,
        };
        let dir = tempdir().unwrap();
        run(
            &scenario,
            dir.path(),
            6,
            GiniNormalization::Horizon,
        )
        .unwrap();
        for name in [
            "value_curve.csv",
            "value_curve.svg",
            "gini_curve.csv",
            "gini_curve.svg",
            "lorenz_n1.csv",
            "lorenz_n1.svg",
            "lorenz_n40.csv",
            "lorenz_n40.svg",
        ] {
            assert!(dir.path().join("demo").join(name).exists(), "{name}");
        }
        let csv = std::fs::read_to_string(dir.path().join("demo/value_curve.csv")).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,value");
        assert_eq!(lines.len(), 22); // header + horizons 0,2,...,40
    }

    #[test]
    fn constant_stream_lorenz_is_the_diagonal() {
        // Unit-product linear economy: every generation consumes the same.
        let scenario = Scenario {
            name: "flat".into(),
            params: ModelParams::new(1.25, 0.8, 1.0, 100.0).unwrap(),
            horizon: HorizonSpec::Range {
                from: 5,
                to: 5,
                stride: 1,
            },
            eps: 0.5e-3,
        };
        let dir = tempdir().unwrap();
        run(&scenario, dir.path(), 6, GiniNormalization::Horizon).unwrap();
        let csv = std::fs::read_to_string(dir.path().join("flat/lorenz_n5.csv")).unwrap();
        for line in csv.lines().skip(1) {
            let (p, q) = line.split_once(',').unwrap();
            assert_eq!(p, q, "diagonal expected: {line}");
        }
    }

    #[test]
    fn fixed_horizon_scenarios_are_rejected() {
        let scenario = Scenario {
            name: "bad".into(),
            params: ModelParams::new(1.01, 0.992, 1.0, 150.0).unwrap(),
            horizon: HorizonSpec::Fixed(9),
            eps: 0.5e-3,
        };
        let dir = tempdir().unwrap();
        let err = run(&scenario, dir.path(), 6, GiniNormalization::Horizon);
        assert!(matches!(err, Err(CliError::Usage(_))));
    }
}
