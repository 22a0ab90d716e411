use std::f64::consts::PI;

use neel_lab::asymptotics::constants::{a1_with, b0_with, default_settings};
use neel_lab::asymptotics::series::{n0_assembled, n0_printed, n0_printed_term};
use neel_lab::asymptotics::*;
use neel_lab::bcs::{c1_fn, f_bcs_zero, BcsCurve};
use neel_lab::dos::{n0, n_tz0_direct, DosEvaluator};
use neel_lab::gap::m_hat;
use neel_lab::neel::solve_neel;
use neel_lab::numerics::{gamma_fn, QuadratureSettings};
use neel_lab::DoubleDouble as Dd;

fn dd_settings() -> QuadratureSettings<Dd> {
    QuadratureSettings::new(Dd::from(1e-30), Dd::from(1e-28)).with_max_subdivisions(20000)
}

fn dd(x: f64) -> Dd {
    Dd::from(x)
}

#[test]
fn partial_sums_reproduce_leading_log() {
    let eps = 1e-3;
    let (w1, w2) = (-eps / (4.0 - eps), 4.0 / (4.0 - eps));
    let pre = -1.0 / (PI * PI * (4.0 - eps));
    let lead = (16.0 / eps).ln() / (2.0 * PI * PI);
    let first = pre
        * (a_kl(0, 0, w1, w2).unwrap() + a_kl(1, 0, w1, w2).unwrap() + a_kl(0, 1, w1, w2).unwrap());
    assert!((first - lead).abs() < 1e-5);
    // The (0,0) term alone misses an O(ε ln ε) piece.
    let gap = |e: f64| {
        let (w1, w2) = (-e / (4.0 - e), 4.0 / (4.0 - e));
        (-a_kl(0, 0, w1, w2).unwrap() / (PI * PI * (4.0 - e)) - (16.0 / e).ln() / (2.0 * PI * PI))
            .abs()
    };
    let r = gap(1e-3) / gap(1e-4);
    assert!((5.0..20.0).contains(&r), "{r}");
}

#[test]
fn fourth_order_matches_printed_term() {
    assert!(gamma_fn(-0.5).unwrap() < 0.0 && gamma_fn(-1.5).unwrap() > 0.0);
    let eps = 0.05;
    let spec = SeriesSpec::<f64>::assembled(10, 10).unwrap();
    let fourth = n0_assembled(eps, &spec) - n0_printed(eps, 1);
    assert!((fourth - n0_printed_term(eps, 2)).abs() < 1e-10);
}

#[test]
fn printed_series_against_quadrature() {
    let spec = SeriesSpec::<Dd>::printed();
    let err = |e: f64| {
        (n0_series(dd(e), &spec).unwrap() - n0(dd(e), &dd_settings()).unwrap())
            .hi()
            .abs()
    };
    let (e1, e2) = (err(0.1), err(0.2));
    assert!(e1 < 5e-13);
    let r = e2 / e1;
    assert!((4096.0 / 3.0..=3.0 * 4096.0).contains(&r), "ratio {r}");
    // Same check in double.
    let f = n0_series(0.1, &SeriesSpec::<f64>::printed()).unwrap();
    let q = n0(0.1, &QuadratureSettings::new(1e-14, 1e-13)).unwrap();
    assert!((f - q).abs() < 5e-13);
}

#[test]
fn assembled_and_printed_modes_agree() {
    let spec = SeriesSpec::<f64>::assembled(10, 10).unwrap();
    for eps in [0.02, 0.05, 0.1] {
        assert!(
            (n0_assembled(eps, &spec) - n0_printed(eps, 5)).abs() < 1e-13,
            "eps = {eps}"
        );
    }
    // The 5×5 rectangle drops (k, l) terms of combined order ε¹²…ε²⁰ but
    // keeps mixed ones; measured gap at ε = 0.05 is 3.5e-13.
    let small = SeriesSpec::<f64>::assembled(5, 5).unwrap();
    assert!((n0_assembled(0.05, &small) - n0_printed(0.05, 5)).abs() < 1e-12);
}

#[test]
fn series_differentiates_termwise() {
    let s = QuadratureSettings::new(1e-14, 1e-13);
    let h = 1e-4;
    let fd = |h: f64| (n0(0.1 + h, &s).unwrap() - n0(0.1 - h, &s).unwrap()) / (2.0 * h);
    let rich = (4.0 * fd(h / 2.0) - fd(h)) / 3.0;
    assert!((n0_series_derivative(0.1).unwrap() - rich).abs() < 1e-8);
}

#[test]
fn n_tz0_series_against_quadrature() {
    let err = |t: f64| {
        (n_tz0_series(dd(t), 10).unwrap() - n_tz0_direct(dd(t), &dd_settings()).unwrap())
            .hi()
            .abs()
    };
    let (e1, e2) = (err(0.1), err(0.2));
    assert!(e1 < 5e-12);
    let r = e2 / e1;
    assert!((4096.0 / 3.0..=3.0 * 4096.0).contains(&r), "ratio {r}");
    let lead: f64 = n_tz0_series(0.01, 0).unwrap();
    let full = n_tz0_direct(0.01, &QuadratureSettings::new(1e-14, 1e-13)).unwrap();
    assert!((lead - full).abs() < 1e-5);
}

#[test]
fn constants_are_stable_under_tightening() {
    let loose = default_settings();
    let tight = loose.scaled(0.1);
    let a = a1_with(&loose).unwrap().value;
    let b = a1_with(&tight).unwrap().value;
    assert!((a - b).abs() < 1e-6);
    let dos = DosEvaluator::new(0.5).unwrap();
    let a = b0_with(&dos, &loose).unwrap().value;
    let b = b0_with(&dos, &tight).unwrap().value;
    assert!((a - b).abs() < 1e-8);
}

fn monotone_to_one(r: &[f64]) -> bool {
    r.windows(2)
        .all(|w| (w[1] - 1.0).abs() < (w[0] - 1.0).abs())
}

#[test]
fn neel_asymptotes_converge() {
    let d0 = DosEvaluator::new(0.0).unwrap();
    let r2: Vec<f64> = [2.0, 1.0, 0.6, 0.4]
        .iter()
        .map(|&u| tn_asym_2d(u).unwrap() / solve_neel(u, &d0).unwrap().t_n)
        .collect();
    assert!(monotone_to_one(&r2), "{r2:?}");
    assert!((r2[3] - 1.0).abs() < 0.03);
    let d5 = DosEvaluator::new(0.5).unwrap();
    let r3: Vec<f64> = [2.0, 1.3, 1.0, 0.8]
        .iter()
        .map(|&u| tn_asym_3d(u, 0.5, &d5).unwrap() / solve_neel(u, &d5).unwrap().t_n)
        .collect();
    assert!(monotone_to_one(&r3), "{r3:?}");
    assert!((r3[3] - 1.0).abs() < 0.05);
}

#[test]
fn gap_ratio_asymptotes() {
    let curve = BcsCurve::build().unwrap();
    assert_eq!(
        mhat_asym_2d(0.0, 0.5, &curve).unwrap(),
        curve.f(0.5).unwrap()
    );
    assert!((mhat_asym_2d(1e-12, 0.0, &curve).unwrap() - f_bcs_zero()).abs() < 1e-7);

    let d0 = DosEvaluator::new(0.0).unwrap();
    let c1 = c1_fn(0.0, &curve).unwrap();
    let r: Vec<f64> = [1.0, 0.6, 0.4]
        .iter()
        .map(|&u| {
            let t_n = solve_neel(u, &d0).unwrap().t_n;
            (m_hat(u, 0.0, t_n, &d0).unwrap() - f_bcs_zero()) / u.sqrt() / c1
        })
        .collect();
    assert!(monotone_to_one(&r) && (r[2] - 1.0).abs() < 0.25, "{r:?}");

    let d5 = DosEvaluator::new(0.5).unwrap();
    for y in [0.0, 0.5] {
        let mut without = Vec::new();
        for u in [1.2, 1.0, 0.8] {
            let t_n = solve_neel(u, &d5).unwrap().t_n;
            let m = m_hat(u, y * t_n, t_n, &d5).unwrap();
            let plain = mhat_asym_3d(u, 0.5, y, false, t_n, &d5, &curve).unwrap();
            let with_g = mhat_asym_3d(u, 0.5, y, true, t_n, &d5, &curve).unwrap();
            assert_eq!(plain, curve.f(y).unwrap());
            assert!((m - with_g).abs() < (m - plain).abs(), "U = {u}, y = {y}");
            without.push((m - plain).abs());
        }
        assert!(without[2] / without[0] < (0.8f64 / 1.2).powi(3));
    }
}
