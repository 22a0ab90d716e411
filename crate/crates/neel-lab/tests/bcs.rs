use std::f64::consts::PI;

use neel_lab::bcs::{
    c1_fn, f_bcs, f_bcs_prime, f_bcs_zero, g_fn, h_fn, j_closed_form, j_fn, BcsCurve,
};
use neel_lab::dos::DosEvaluator;
use neel_lab::neel::solve_neel;
use neel_lab::numerics::EULER_GAMMA;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn curve() -> &'static BcsCurve {
    static CURVE: OnceLock<BcsCurve> = OnceLock::new();
    CURVE.get_or_init(|| BcsCurve::build().unwrap())
}

#[test]
fn closed_form_matches_quadrature_on_grid() {
    for x in [0.5, 1.0, 2.0] {
        for y in [0.2, 0.5, 0.9] {
            let (a, b) = (j_fn(x, y).unwrap(), j_closed_form(x, y).unwrap());
            assert!((a - b).abs() < 1e-8, "({x}, {y}): {a} vs {b}");
        }
    }
    let (x, y) = (1.5, 0.3);
    let lhs = j_fn(x, y).unwrap() + x.ln() + EULER_GAMMA - PI.ln();
    assert!((lhs + h_fn(x / (2.0 * y)).unwrap()).abs() < 1e-8);
}

#[test]
fn rescaling_fixed_point() {
    // x = f(e^J y) e^{−J}, for e^J y inside the window.
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667);
    let draws = std::iter::from_fn(|| Some((rng.gen_range(0.3..2.0), rng.gen_range(0.05..0.9))));
    let mut checked = 0;
    for (x, y) in std::iter::once((1.2, 0.4)).chain(draws).take(500) {
        let j = j_fn(x, y).unwrap();
        let ys = j.exp() * y;
        if ys > 0.95 {
            continue;
        }
        let back = f_bcs(ys).unwrap() * (-j).exp();
        assert!((back - x).abs() < 1e-7, "({x}, {y}): {back}");
        checked += 1;
        if checked == 12 {
            break;
        }
    }
    assert_eq!(checked, 12);
}

#[test]
fn derivative_matches_finite_differences() {
    for y in [0.2, 0.5, 0.8] {
        let h = 1e-4;
        let d = |h: f64| (f_bcs(y + h).unwrap() - f_bcs(y - h).unwrap()) / (2.0 * h);
        let rich = (4.0 * d(h / 2.0) - d(h)) / 3.0;
        let exact = f_bcs_prime(y).unwrap();
        assert!(
            ((exact - rich) / rich).abs() < 1e-6,
            "y = {y}: {exact} vs {rich}"
        );
    }
    assert!(f_bcs_prime(0.5).unwrap() < 0.0);
    let y = 1e-3;
    assert!((y * f_bcs_prime(y).unwrap()).abs() < 1e-4);
}

#[test]
fn curve_invariants() {
    let c = curve();
    assert_eq!(c.nodes.len(), 97);
    assert!(c.interp_error < 1e-7, "{}", c.interp_error);
    assert!((c.f(0.0).unwrap() - f_bcs_zero()).abs() < 1e-8);
    assert!((c.f_values[0] - f_bcs_zero()).abs() < 1e-8);
    // Below y ≈ 0.05 the change in f is under e^{−f/y} and is not
    // representable, so strictness is only required above that.
    for (i, w) in c.f_values.windows(2).enumerate() {
        assert!(w[1] <= w[0]);
        if c.nodes[i] > 0.05 {
            assert!(w[1] < w[0]);
            assert!(c.fprime_values[i] < 0.0);
        }
    }
    assert!(c.fprime_values.iter().all(|&v| v <= 0.0));
    assert!(c.f(0.96).is_err());
}

#[test]
fn correction_amplitude_constants() {
    let c = curve();
    let c1 = c1_fn(0.0, c).unwrap();
    println!(
        "c1(0) = {c1:.8}, alpha0 = {:.8}, curve error = {:.2e}",
        c1 / f_bcs_zero(),
        c.interp_error
    );
    assert!((c1 - 0.04576).abs() < 2e-4, "{c1}");
    let alpha = c1 / f_bcs_zero();
    assert!((alpha - 0.02594).abs() < 2e-4, "{alpha}");
    for y in [0.0, 0.2, 0.4, 0.6, 0.8] {
        let d = c1_fn(y, c).unwrap() - alpha * c.f(y).unwrap();
        assert!((-1e-4..=0.0011).contains(&d), "y = {y}: {d}");
    }
}

#[test]
fn subleading_term_shrinks_with_coupling() {
    let dos = DosEvaluator::new(0.5).unwrap();
    let g = |u: f64| {
        let t_n = solve_neel(u, &dos).unwrap().t_n;
        g_fn(u, 0.5, 0.0, t_n, &dos, curve()).unwrap()
    };
    let (a, b, c) = (g(1.0), g(0.7), g(0.5));
    assert!(a.abs() > b.abs() && b.abs() > c.abs(), "{a} {b} {c}");
    assert!(g_fn(1.0, 0.5, 0.0, -1.0, &dos, curve())
        .unwrap_err()
        .is_domain());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn j_decreases_in_x(x in 0.1f64..3.0, y in 0.0f64..0.95) {
        prop_assert!(j_fn(x + 0.1, y).unwrap() < j_fn(x, y).unwrap());
    }
}
