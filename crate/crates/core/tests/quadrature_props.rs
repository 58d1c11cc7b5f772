use std::f64::consts::{PI, TAU};

use approx::assert_abs_diff_eq;
use proptest::prelude::*;

use isoperimetry::quadrature::{
    cumulative_integral, integrate_gauss, integrate_periodic, Interval, PeriodicRule,
};

type Integrand = Box<dyn Fn(f64) -> f64 + Sync>;

fn smooth_integrands() -> Vec<(&'static str, Integrand)> {
    vec![
        ("exp_cos", Box::new(|x: f64| x.cos().exp())),
        ("ellipse_speed", Box::new(|x: f64| (4.0 * x.sin().powi(2) + x.cos().powi(2)).sqrt())),
        ("rational", Box::new(|x: f64| 1.0 / (2.0 + x.sin()))),
        ("trig_poly", Box::new(|x: f64| 1.0 + (3.0 * x).cos() - 0.5 * (5.0 * x).sin())),
    ]
}

#[test]
fn periodic_and_gauss_agree_on_smooth_integrands() {
    for (name, f) in smooth_integrands() {
        let p = integrate_periodic(&f, Interval::symmetric_period(), 64, 1e-12).unwrap();
        let g = integrate_gauss(&f, Interval::symmetric_period(), 16).unwrap();
        let tol = 1e-10_f64.max(10.0 * p.err_estimate.max(g.err_estimate));
        assert!((p.value - g.value).abs() <= tol, "{name}: {} vs {}", p.value, g.value);
    }
}

#[test]
fn cumulative_table_ends_at_full_integral() {
    for (name, f) in smooth_integrands() {
        let interval = Interval::new(0.0, TAU).unwrap();
        let positive = |x: f64| f(x) + 1.0;
        let table = cumulative_integral(positive, interval, 33).unwrap();
        let full = integrate_gauss(positive, interval, 16).unwrap();
        assert_eq!(table[0], (0.0, 0.0));
        assert!(table.windows(2).all(|w| w[1].1 > w[0].1), "{name}");
        assert_abs_diff_eq!(table.last().unwrap().1, full.value, epsilon = 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trapezoid_exact_for_trig_polynomials(
        degree in 1usize..24,
        amps in prop::collection::vec(-1.0f64..1.0, 48),
        c0 in -2.0f64..2.0,
    ) {
        let f = |x: f64| {
            c0 + (1..=degree)
                .map(|k| amps[2 * (k - 1)] * (k as f64 * x).cos() + amps[2 * k - 1] * (k as f64 * x).sin())
                .sum::<f64>()
        };
        let nodes = 2 * degree + 2;
        let r = PeriodicRule::new(nodes, 1e-12).unwrap().integrate(f, Interval::symmetric_period()).unwrap();
        prop_assert!((r.value - TAU * c0).abs() <= 1e-12 * (1.0 + c0.abs()) * 10.0);
    }

    #[test]
    fn periodic_rule_is_linear(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, k in 1u32..6) {
        let f = |x: f64| (x.sin()).exp();
        let g = |x: f64| 1.0 / (1.5 + (k as f64 * x).cos());
        let i = Interval::symmetric_period();
        let int_f = integrate_periodic(f, i, 64, 1e-13).unwrap().value;
        let int_g = integrate_periodic(g, i, 64, 1e-13).unwrap().value;
        let int_h = integrate_periodic(|x| alpha * f(x) + beta * g(x), i, 64, 1e-13).unwrap().value;
        prop_assert!((int_h - (alpha * int_f + beta * int_g)).abs() <= 1e-10);
    }

    #[test]
    fn gauss_is_linear(alpha in -3.0f64..3.0, beta in -3.0f64..3.0, lo in -2.0f64..0.0, hi in 0.5f64..3.0) {
        let f = |x: f64| x.exp();
        let g = |x: f64| (2.0 * x).cos();
        let i = Interval::new(lo, hi).unwrap();
        let int_f = integrate_gauss(f, i, 8).unwrap().value;
        let int_g = integrate_gauss(g, i, 8).unwrap().value;
        let int_h = integrate_gauss(|x| alpha * f(x) + beta * g(x), i, 8).unwrap().value;
        prop_assert!((int_h - (alpha * int_f + beta * int_g)).abs() <= 1e-10);
    }

    #[test]
    fn gauss_integrates_polynomials(c in prop::collection::vec(-1.0f64..1.0, 6), hi in 0.1f64..4.0) {
        let f = |x: f64| c.iter().rev().fold(0.0, |acc, &v| acc * x + v);
        let exact: f64 = c.iter().enumerate().map(|(k, &v)| v * hi.powi(k as i32 + 1) / (k + 1) as f64).sum();
        let r = integrate_gauss(f, Interval::new(0.0, hi).unwrap(), 4).unwrap();
        prop_assert!((r.value - exact).abs() <= 1e-12 * (1.0 + exact.abs()) * 10.0);
    }
}

#[test]
fn circle_speed_table_reaches_two_pi() {
    let table = cumulative_integral(|_| 1.0, Interval::new(0.0, TAU).unwrap(), 5).unwrap();
    for (k, &(t, s)) in table.iter().enumerate() {
        assert_abs_diff_eq!(t, k as f64 * PI / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s, k as f64 * PI / 2.0, epsilon = 1e-12);
    }
}
