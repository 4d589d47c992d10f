//! Randomized property suites over the public API: feasibility of every
//! materialized plan, structural identities of the closed forms, index
//! invariances, and oracle consistency.

use dynasty_core::model::{dual_productivity, geometric_sum};
use dynasty_core::{ak, closed_form, horizon, inequality, oracle, ModelParams};
use proptest::prelude::*;

fn discount() -> impl Strategy<Value = f64> {
    prop_oneof![3 => 0.7f64..0.9995, 1 => Just(1.0)]
}

fn elasticity() -> impl Strategy<Value = f64> {
    prop_oneof![3 => 0.7f64..0.9995, 1 => Just(1.0)]
}

proptest! {
    #[test]
    fn geometric_sum_increments_are_saving_ratio_powers(
        a in 0.8f64..1.5,
        beta in discount(),
        theta in elasticity(),
        ell in 0usize..300,
    ) {
        let p = ModelParams::new(a, beta, theta, 10.0).unwrap();
        let s_next = geometric_sum(ell + 1, &p);
        let diff = s_next - geometric_sum(ell, &p);
        let expected = p.saving_ratio().powi(ell as i32 + 1);
        prop_assert!((diff - expected).abs() <= 1e-12 * s_next.max(1.0));
    }

    #[test]
    fn dual_productivity_never_exceeds_productivity(
        a in 0.5f64..3.0,
        theta in 0.0f64..=1.0,
    ) {
        let dual = dual_productivity(a, theta);
        prop_assert!(dual <= a * (1.0 + 1e-15));
        prop_assert!(dual > 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn plans_balance_their_budgets(
        a in 0.8f64..1.5,
        beta in discount(),
        theta in elasticity(),
        k0 in 0.5f64..500.0,
        n in 0usize..200,
    ) {
        let p = ModelParams::new(a, beta, theta, k0).unwrap();
        let traj = match closed_form::optimal_consumption_path(&p, n) {
            Ok(t) => t,
            Err(_) => return Ok(()), // level guard refused; nothing to check
        };
        prop_assert_eq!(traj.c.len(), n + 1);
        prop_assert_eq!(traj.k.len(), n + 2);
        prop_assert_eq!(traj.k[n + 1], 0.0);
        for t in 0..=n {
            let output = a * traj.k[t].powf(theta);
            let residual = output - traj.c[t] - traj.k[t + 1];
            prop_assert!(
                residual.abs() <= 1e-9 * output.max(1.0),
                "t={}: residual {}", t, residual
            );
            prop_assert!(traj.c[t] > 0.0);
        }
        // Reported value is the discounted sum of the contributions.
        let mut acc = 0.0;
        let mut w = 1.0;
        for &lc in &traj.contrib {
            acc += w * lc;
            w *= beta;
        }
        prop_assert!((traj.value - acc).abs() <= 1e-9 * acc.abs().max(1.0));
    }

    #[test]
    fn first_consumption_strictly_decreases_with_horizon(
        a in 0.8f64..1.5,
        beta in 0.85f64..=1.0,
        theta in 0.95f64..=1.0,
        k0 in 1.0f64..300.0,
    ) {
        let p = ModelParams::new(a, beta, theta, k0).unwrap();
        let mut prev = closed_form::initial_consumption(&p, 0);
        for n in 1..=60usize {
            let next = closed_form::initial_consumption(&p, n);
            prop_assert!(next < prev, "n={}: {} !< {}", n, next, prev);
            prev = next;
        }
    }

    #[test]
    fn linear_production_contributions_are_affine(
        a in 0.8f64..1.5,
        beta in 0.5f64..0.9995,
        k0 in 1.0f64..10_000.0,
        n in 1usize..300,
    ) {
        let p = ModelParams::new(a, beta, 1.0, k0).unwrap();
        let traj = closed_form::optimal_consumption_path(&p, n).unwrap();
        let slope = a.ln() + beta.ln();
        for t in 0..n {
            let d = traj.contrib[t + 1] - traj.contrib[t];
            prop_assert!((d - slope).abs() < 1e-12, "t={}: {} vs {}", t, d, slope);
        }
    }

    #[test]
    fn stationary_point_reports_are_wellformed(
        a in 0.9f64..1.2,
        beta in 0.9f64..0.9995,
        k0 in 50.0f64..500.0,
    ) {
        let p = ModelParams::new(a, beta, 1.0, k0).unwrap();
        let report = ak::foc_roots(&p);
        prop_assert!(report.roots.len() <= 2);
        for w in report.roots.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for &r in &report.roots {
            prop_assert!(r >= 0.0);
            let h = report.coefficients.rising_branch(r)
                - report.coefficients.saturating_branch(r);
            prop_assert!(h.abs() < 1e-6, "root {} has residual {}", r, h);
        }
        // A non-expanding economy (Aβ ≤ 1) rises once and falls forever:
        // exactly one stationary point.
        if a * beta <= 1.0 {
            prop_assert_eq!(report.roots.len(), 1);
        }
        // The derivative sign agrees with finite differences wherever both
        // are resolvable.
        let co = report.coefficients;
        for i in 0..16 {
            let n = 5.0 * i as f64;
            let h = 1e-4;
            let fd = (ak::ak_value(&p, n + h) - ak::ak_value(&p, n - h)) / (2.0 * h);
            let an = co.value_derivative(n);
            if fd.abs() > 1e-8 && an.abs() > 1e-8 {
                prop_assert!(fd.signum() == an.signum(), "n={}: {} vs {}", n, fd, an);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gini_is_scale_invariant_bounded_and_matches_double_sum(
        c in prop::collection::vec(0.01f64..100.0, 2..200),
        alpha in 0.1f64..1000.0,
        rotate in 0usize..200,
    ) {
        let g = inequality::gini(&c).unwrap();

        let scaled: Vec<f64> = c.iter().map(|x| alpha * x).collect();
        prop_assert!((inequality::gini(&scaled).unwrap() - g).abs() < 1e-12);

        let mut permuted = c.clone();
        permuted.rotate_left(rotate % c.len());
        permuted.reverse();
        prop_assert_eq!(inequality::gini(&permuted).unwrap(), g);
        prop_assert_eq!(
            inequality::lorenz(&permuted).unwrap(),
            inequality::lorenz(&c).unwrap()
        );

        let n = (c.len() - 1) as f64;
        prop_assert!(g >= 0.0);
        prop_assert!(g <= 1.0 + 1.0 / n + 1e-12);

        // Literal double sum, divided by 2nΣc.
        let mut spread = 0.0;
        for &x in &c {
            for &y in &c {
                spread += (x - y).abs();
            }
        }
        let total: f64 = c.iter().sum();
        let slow = spread / (2.0 * n * total);
        prop_assert!((g - slow).abs() <= 1e-12 * slow.max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reported_optimum_dominates_a_dense_rescan(
        a in 0.95f64..1.1,
        beta in 0.85f64..0.95,
        theta in 0.85f64..0.95,
        k0 in 5.0f64..50.0,
    ) {
        let p = ModelParams::new(a, beta, theta, k0).unwrap();
        let sol = horizon::find_optimal_horizon(&p);
        prop_assert!(!sol.inconclusive);
        let curve = horizon::value_curve(&p, 0, 400, 1);
        let dense = curve
            .points
            .iter()
            .map(|&(_, v)| v)
            .fold(f64::NEG_INFINITY, f64::max);
        match sol.n_star {
            horizon::OptimalHorizon::Finite(n) => {
                let v = sol.v_at_star.unwrap();
                prop_assert!(v >= dense - 1e-10, "{} < dense {}", v, dense);
                let at_index = horizon::value_curve(&p, n - 1, n - 1, 1).points[0].1;
                prop_assert!((v - at_index).abs() < 1e-12);
            }
            horizon::OptimalHorizon::Infinite => {
                match sol.v_infinity {
                    horizon::VInfinity::Unknown { scan_estimate } => {
                        prop_assert!(scan_estimate >= dense - 1e-9);
                    }
                    other => prop_assert!(false, "unexpected limit class {:?}", other),
                }
            }
        }
    }

    #[test]
    fn oracles_stay_on_the_feasible_side(
        a in 0.9f64..1.2,
        beta in 0.8f64..=1.0,
        theta in 0.8f64..=1.0,
        k0 in 1.0f64..200.0,
        n in 0usize..=2,
    ) {
        let p = ModelParams::new(a, beta, theta, k0).unwrap();
        let closed = closed_form::population_value(&p, n);

        let bf = oracle::brute_force_value(&p, n, 400).unwrap();
        prop_assert!(bf.value <= closed + 1e-8, "grid oracle above the optimum");

        let ds = oracle::direct_search(&p, n, 6).unwrap();
        prop_assert!(ds.value <= closed + 1e-8, "direct search above the optimum");
        prop_assert!(ds.value >= closed - 1e-4, "direct search too far below");
    }
}
