use proptest::prelude::*;
use resum::numerics::{derivative, find_roots, gamma};
use resum::optimizer::{Condition, OptimizationSolution, SolutionStatus};
use resum::selector::select;
use resum::transforms::{amplitude_factor, transform_coefficients, TransformedSeries};
use resum::{borel_point, fit_iterated_root, marginal_amplitude, Criterion, ScanGrid, TransformKind, TruncatedSeries};
use std::f64::consts::PI;

fn away_from_poles(x: f64) -> bool {
    x > 0.0 || (x - x.round()).abs() > 1e-2
}

fn coefficients(max_order: usize) -> impl Strategy<Value = Vec<f64>> {
    (prop_oneof![0.2f64..3.0, -3.0f64..-0.2], prop::collection::vec(-2.0f64..2.0, 1..=max_order)).prop_map(
        |(a0, rest)| {
            let mut v = vec![a0];
            v.extend(rest);
            v
        },
    )
}

fn transformed(b: Vec<f64>) -> TransformedSeries {
    TransformedSeries { kind: TransformKind::BorelLeroy, u: 0.0, b }
}

fn sol(u: f64) -> OptimizationSolution {
    OptimizationSolution {
        u,
        amplitude: 1.0,
        condition: Condition::MinDifference,
        order: 2,
        status: SolutionStatus::Exact,
        residual: 0.0,
        width: None,
    }
}

proptest! {
    #[test]
    fn gamma_recurrence(x in -6.0f64..20.0) {
        prop_assume!(away_from_poles(x) && away_from_poles(x + 1.0));
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn gamma_reflection(x in 0.01f64..0.99) {
        let lhs = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        let rhs = PI / (PI * x).sin();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-12);
    }

    #[test]
    fn polynomial_roots_found(mut roots in prop::collection::vec(-3.5f64..3.5, 1..5)) {
        roots.sort_by(f64::total_cmp);
        prop_assume!(roots.windows(2).all(|w| w[1] - w[0] > 0.05));
        let grid = ScanGrid::new(-4.0, 4.0, 1601).unwrap();
        // nudge off the grid so that no root sits on a sample
        let shifted: Vec<f64> = roots.iter().map(|r| r + 1e-4 * 0.37).collect();
        let f = |x: f64| Some(shifted.iter().map(|r| x - r).product::<f64>());
        let found = find_roots(f, &grid, 1e-13);
        prop_assert_eq!(found.len(), shifted.len());
        for (a, b) in found.iter().zip(&shifted) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn derivative_fourth_order(u in -2.0f64..2.0) {
        let f = |x: f64| -> Result<f64, ()> { Ok((1.3 * x).sin() + 0.2 * x.exp()) };
        let exact = 1.3 * (1.3 * u).cos() + 0.2 * u.exp();
        let e1 = (derivative(f, u, 0.2).unwrap() - exact).abs();
        let e2 = (derivative(f, u, 0.1).unwrap() - exact).abs();
        prop_assume!(e1 > 1e-11);
        // halving h cuts the error by about 2^4
        prop_assert!(e1 / e2 > 10.0 && e1 / e2 < 24.0, "{e1} {e2}");
    }

    #[test]
    fn reexpansion_reproduces_input(b in coefficients(6), beta in prop_oneof![0.2f64..3.0, -3.0f64..-0.2]) {
        let fit = fit_iterated_root(&transformed(b.clone()), beta).unwrap();
        let back = fit.taylor(b.len() - 1).unwrap();
        for (x, y) in back.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-9 * y.abs().max(b[0].abs()), "{back:?} vs {b:?}");
        }
    }

    #[test]
    fn fit_scaling_covariance(b in coefficients(6), beta in 0.2f64..2.0, c in 0.01f64..100.0) {
        let r1 = fit_iterated_root(&transformed(b.clone()), beta).unwrap();
        let r2 = fit_iterated_root(&transformed(b.iter().map(|x| x * c).collect()), beta).unwrap();
        for (x, y) in r1.a.iter().zip(&r2.a) {
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
        if let (Ok(m1), Ok(m2)) = (marginal_amplitude(&r1), marginal_amplitude(&r2)) {
            prop_assert!((m2.value - c * m1.value).abs() <= 1e-12 * (c * m1.value).abs());
        }
    }

    #[test]
    fn argmin_scale_invariant(a in coefficients(6), us in prop::collection::vec(-3.0f64..-0.05, 1..6), c in 0.01f64..100.0) {
        let s = TruncatedSeries::new(a).unwrap();
        let sols: Vec<OptimizationSolution> = us.iter().map(|&u| sol(u)).collect();
        for crit in Criterion::ALL {
            let x = select(&s, TransformKind::FractionalIntegral, crit, &sols).map(|r| r.chosen.u).ok();
            let y = select(&s.scale(c), TransformKind::FractionalIntegral, crit, &sols).map(|r| r.chosen.u).ok();
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn borel_points_coincide(a in coefficients(8), beta in -0.9f64..3.0) {
        let s = TruncatedSeries::new(a).unwrap();
        let base = transform_coefficients(&s, TransformKind::BorelLeroy, 0.0).unwrap().b;
        let f0 = amplitude_factor(TransformKind::BorelLeroy, beta, 0.0).unwrap();
        for kind in TransformKind::ALL {
            let u0 = borel_point(kind);
            let b = transform_coefficients(&s, kind, u0).unwrap().b;
            for (x, y) in b.iter().zip(&base) {
                prop_assert!((x - y).abs() <= 1e-12 * y.abs());
            }
            let f = amplitude_factor(kind, beta, u0).unwrap();
            prop_assert!((f - f0).abs() <= 1e-12 * f0.abs());
        }
    }

    #[test]
    fn reciprocal_inverts(a in coefficients(8)) {
        let s = TruncatedSeries::new(a).unwrap();
        let k = s.order();
        let p = s.cauchy_product(&s.reciprocal(k).unwrap(), k);
        prop_assert!((p.coeffs()[0] - 1.0).abs() < 1e-12);
        for c in &p.coeffs()[1..] {
            prop_assert!(c.abs() < 1e-9 * s.coeffs().iter().map(|x| x.abs()).fold(1.0, f64::max).powi(k as i32 + 1));
        }
    }
}
