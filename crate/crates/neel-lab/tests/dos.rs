use neel_lab::dos::{build_interpolant, n0_fast, n_tz, n_tz0_direct, n_tz_taylor, DosEvaluator};
use neel_lab::numerics::{
    gamma_fn, integrate, integrate_breaks, Endpoint, Ends, QuadratureSettings,
};
use proptest::prelude::*;

fn tight() -> QuadratureSettings<f64> {
    QuadratureSettings::new(1e-14, 1e-13)
}

fn total_weight(ev: &DosEvaluator) -> f64 {
    let s = QuadratureSettings::new(1e-12, 1e-12);
    let ends = if ev.is_two_dimensional() {
        Ends::left(Endpoint::LogSingular)
    } else {
        Ends::REGULAR
    };
    let est = integrate_breaks(|e| ev.eval(e).unwrap(), &ev.breakpoints(), ends, &s).unwrap();
    2.0 * est.value
}

#[test]
fn densities_are_normalised() {
    for t_z in [0.0, 0.2, 0.5, 1.0, 1.5] {
        let ev = DosEvaluator::new(t_z).unwrap();
        let w = total_weight(&ev);
        assert!((w - 1.0).abs() < 1e-8, "t_z = {t_z}: {w}");
    }
}

#[test]
fn arcsine_moments_match_gamma_closed_form() {
    let s = QuadratureSettings::new(1e-14, 1e-13);
    for j in 0..=6 {
        let est = integrate(
            |u: f64| u.powi(j) / (4.0 - u * u).sqrt(),
            0.0,
            2.0,
            Ends::right(Endpoint::SqrtSingular),
            &s,
        )
        .unwrap();
        let lhs = 2.0 * est.value / std::f64::consts::PI;
        let jf = j as f64;
        let rhs = 2f64.powi(j) * gamma_fn(0.5 * (jf + 1.0)).unwrap()
            / (std::f64::consts::PI.sqrt() * gamma_fn(0.5 * jf + 1.0).unwrap());
        assert!(((lhs - rhs) / rhs).abs() < 1e-10, "j = {j}: {lhs} vs {rhs}");
    }
}

#[test]
fn interpolant_with_256_nodes_meets_fit_limit() {
    let ev = build_interpolant(0.5, 256).unwrap();
    let ip = ev.interpolant().unwrap();
    assert!(ip.sup_error() < 1e-8);
    assert_eq!(ip.nodes_per_panel(), 256);
    assert!(build_interpolant(0.5, 32).unwrap_err().is_domain());
}

#[test]
fn interpolant_tracks_direct_quadrature() {
    let ev = DosEvaluator::new(0.7).unwrap();
    for i in 0..57 {
        let e = 5.4 * i as f64 / 56.0;
        let d = n_tz(e, 0.7, &tight()).unwrap();
        assert!((ev.eval(e).unwrap() - d).abs() < 1e-10, "eps = {e}");
    }
}

#[test]
fn second_taylor_coefficient_matches_finite_differences() {
    let t_z = 0.5;
    let c = n_tz_taylor(t_z, 1, &tight()).unwrap();
    let n = |e: f64| n_tz(e, t_z, &tight()).unwrap();
    let n00 = n(0.0);
    // N(h) − N(0) = c₂h² + c₄h⁴ + …, by evenness.
    let d = |h: f64| (n(h) - n00) / (h * h);
    let h = 1e-3;
    let rich = (4.0 * d(h / 2.0) - d(h)) / 3.0;
    let rel = ((c.coefficient(2) - rich) / rich).abs();
    assert!(rel < 1e-5, "{} vs {rich}", c.coefficient(2));
}

#[test]
fn quadratic_truncation_error_scales_like_eps_to_the_fourth() {
    let t_z = 0.5;
    let c = n_tz_taylor(t_z, 1, &tight()).unwrap();
    let err = |e: f64| (n_tz(e, t_z, &tight()).unwrap() - c.eval(e)).abs();
    let (e1, e2, e3) = (err(0.2), err(0.1), err(0.05));
    for r in [e1 / e2, e2 / e3] {
        assert!((8.0..32.0).contains(&r), "ratio {r}");
    }
}

#[test]
fn higher_taylor_coefficients_reproduce_the_density() {
    let t_z = 0.5;
    let c = n_tz_taylor(t_z, 6, &tight()).unwrap();
    let e = 0.3;
    let d = n_tz(e, t_z, &tight()).unwrap();
    // Remainder ~ (ε/radius)^14 with radius min(2t_z, 4 − 2t_z) = 1.
    assert!((c.eval(e) - d).abs() < 1e-8, "{} vs {d}", c.eval(e));
}

#[test]
fn quasi_two_dimensional_limit() {
    // N_tz(0) ≈ ln(16/t_z)/(2π²) for small t_z.
    let v = n_tz0_direct(0.01, &tight()).unwrap();
    let lead = (1600f64).ln() / (2.0 * std::f64::consts::PI.powi(2));
    assert!((v - lead).abs() < 1e-5);
    assert!(DosEvaluator::new(0.0).unwrap().at_zero().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn density_is_even_and_nonnegative(e in -7.0f64..7.0, t_z in 0.05f64..1.95) {
        let s = QuadratureSettings::default();
        let a = n_tz(e, t_z, &s).unwrap();
        let b = n_tz(-e, t_z, &s).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(a >= 0.0);
        if e.abs() >= 4.0 + 2.0 * t_z {
            prop_assert_eq!(a, 0.0);
        }
    }

    #[test]
    fn square_lattice_density_is_even(e in 1e-6f64..5.0) {
        prop_assert_eq!(n0_fast(e), n0_fast(-e));
        prop_assert!(n0_fast(e) >= 0.0);
    }
}
