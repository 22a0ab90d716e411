//! The universal BCS function `f_BCS(y)`, root in `x` of `J(x, y) = 0`, and
//! the correction amplitudes `c₁(y)` (square lattice) and `g(U, t_z, y)`.
//!
//! All three share the kernel
//! `K(ε) = tanh(√(x²+ε²)/2y)/√(x²+ε²) − tanh(ε/2)/ε` (`tanh ≡ 1` at `y = 0`).
//! Beyond `ε_max = max(60, 30(1+x+y))` the tanh factors equal 1 to within
//! `2e^{−60}` and the remaining algebraic tail `1/E − 1/ε` is added in closed
//! form.

use std::f64::consts::PI;

use crate::dos::DosEvaluator;
use crate::error::{Error, Result};
use crate::neel::tanh_over;
use crate::numerics::{
    find_root_monotone, integrate, integrate_breaks, try_integrate_breaks, Chebyshev, Endpoint,
    Ends, QuadratureSettings, RootBracket, EULER_GAMMA,
};

/// Upper end of the `y` window.
pub const Y_MAX: f64 = 0.95;

fn settings() -> QuadratureSettings<f64> {
    QuadratureSettings::new(1e-14, 1e-13).with_max_subdivisions(4000)
}

/// `πe^{−γ} = f_BCS(0)`.
pub fn f_bcs_zero() -> f64 {
    PI * (-EULER_GAMMA).exp()
}

fn check_y(y: f64, lo_open: bool) -> Result<()> {
    let ok = if lo_open { y > 0.0 } else { y >= 0.0 } && y <= Y_MAX;
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "y = {y} outside the window [0, {Y_MAX}]"
        )))
    }
}

fn cutoff(x: f64, y: f64) -> f64 {
    60f64.max(30.0 * (1.0 + x + y))
}

fn kernel(x: f64, y: f64, e: f64) -> f64 {
    let big_e = x.hypot(e);
    let a = if y == 0.0 {
        1.0 / big_e
    } else {
        tanh_over(big_e / (2.0 * y)) / (2.0 * y)
    };
    a - 0.5 * tanh_over(0.5 * e)
}

/// `∫_X^∞ (1/√(x²+ε²) − 1/ε) dε = −ln((1 + √(1 + x²/X²))/2)`.
fn algebraic_tail(x: f64, cut: f64) -> f64 {
    let r2 = (x / cut).powi(2);
    -(0.5 * r2 / ((1.0 + r2).sqrt() + 1.0)).ln_1p()
}

/// `∫_X^∞ ln(ε) (1/√(x²+ε²) − 1/ε) dε` by its expansion in `(x/X)²`.
fn log_weighted_tail(x: f64, cut: f64) -> f64 {
    // ε = x s; the integrand is (ln x + ln s)(1/√(1+s²) − 1/s) ds.
    let s = cut / x;
    let ln_s = s.ln();
    let inv2 = (s * s).recip();
    let mut binom = 1.0;
    let mut p = 1.0;
    let mut with_log = 0.0;
    for k in 1..=30 {
        let kf = k as f64;
        binom *= -(kf - 0.5) / kf;
        p *= inv2;
        with_log += binom * p * (ln_s / (2.0 * kf) + 1.0 / (4.0 * kf * kf));
        if p < 1e-30 {
            break;
        }
    }
    x.ln() * algebraic_tail(x, cut) + with_log
}

fn kernel_points(x: f64, y: f64, cut: f64) -> Vec<f64> {
    let mut pts = vec![0.0];
    let mut p = 0.25 * x.min(1.0).max(y.min(1.0)).max(1e-3);
    while p < cut {
        pts.push(p);
        p *= 2.0;
    }
    pts.push(cut);
    pts
}

/// `J(x, y)`.
pub fn j_fn(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("J needs x > 0, got {x}")));
    }
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::domain(format!("J needs y in [0, 1], got {y}")));
    }
    let cut = cutoff(x, y);
    let est = integrate_breaks(
        |e| kernel(x, y, e),
        &kernel_points(x, y, cut),
        Ends::REGULAR,
        &settings(),
    )?;
    Ok(est.value + algebraic_tail(x, cut))
}

/// `sech² x`, safe for large arguments.
fn sech2(x: f64) -> f64 {
    let e = (-2.0 * x.abs()).exp();
    4.0 * e / ((1.0 + e) * (1.0 + e))
}

/// `H(a) = a ∫₁^∞ acosh(s) sech²(sa) ds`, with `s = 1 + w²`.
pub fn h_fn(a: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::domain(format!("H needs a > 0, got {a}")));
    }
    if a.is_infinite() {
        return Ok(0.0);
    }
    let w_max = (25.0 / a).sqrt();
    let f = |w: f64| {
        let w2 = w * w;
        let acosh = (w2 + w * (w2 + 2.0).sqrt()).ln_1p();
        acosh * sech2((1.0 + w2) * a) * 2.0 * w
    };
    Ok(a * integrate(f, 0.0, w_max, Ends::REGULAR, &settings())?.value)
}

/// `J(x, y) = ln π − γ − H(x/2y) − ln x`.
pub fn j_closed_form(x: f64, y: f64) -> Result<f64> {
    let h = if y == 0.0 { 0.0 } else { h_fn(x / (2.0 * y))? };
    Ok(PI.ln() - EULER_GAMMA - h - x.ln())
}

/// `f_BCS(y)`: the root of `J(·, y)` in `[1e−6, 4]`.
pub fn f_bcs(y: f64) -> Result<f64> {
    check_y(y, false)?;
    if y == 0.0 {
        return Ok(f_bcs_zero());
    }
    let bracket = RootBracket::evaluate(1e-6, 4.0, |x| j_fn(x, y).unwrap_or(f64::NAN))?;
    find_root_monotone(|x| j_fn(x, y).unwrap_or(f64::NAN), bracket, 1e-14)
}

/// `∂J/∂x` by differentiating under the integral.
fn j_dx(x: f64, y: f64) -> Result<f64> {
    let cut = cutoff(x, y);
    let f = |e: f64| {
        let big_e = x.hypot(e);
        if y == 0.0 {
            -x / big_e.powi(3)
        } else {
            let z = big_e / (2.0 * y);
            x / big_e * (sech2(z) / (2.0 * y * big_e) - z.tanh() / (big_e * big_e))
        }
    };
    let est = integrate_breaks(f, &kernel_points(x, y, cut), Ends::REGULAR, &settings())?;
    // ∫_X^∞ x/E³ dε = (1 − X/√(X²+x²))/x
    let r = x / cut;
    let tail = r * r / ((1.0 + r * r).sqrt() * ((1.0 + r * r).sqrt() + 1.0)) / x;
    Ok(est.value - tail)
}

/// `∂J/∂y = −(1/2y²) ∫₀^∞ sech²(E/2y) dε`.
fn j_dy(x: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Ok(0.0);
    }
    let cut = cutoff(x, y);
    let f = |e: f64| sech2(x.hypot(e) / (2.0 * y));
    let est = integrate_breaks(f, &kernel_points(x, y, cut), Ends::REGULAR, &settings())?;
    Ok(-est.value / (2.0 * y * y))
}

/// `f′_BCS(y) = −J_y/J_x` at `x = f_BCS(y)`; zero at `y = 0`.
pub fn f_bcs_prime(y: f64) -> Result<f64> {
    check_y(y, false)?;
    let x = f_bcs(y)?;
    f_bcs_prime_at(x, y)
}

fn f_bcs_prime_at(x: f64, y: f64) -> Result<f64> {
    let jx = j_dx(x, y)?;
    if !(jx.abs() > 1e-300) {
        return Err(Error::NoConvergence("dJ/dx vanishes".into()));
    }
    Ok(-j_dy(x, y)? / jx)
}

/// Chebyshev nodes used by [`BcsCurve::build`] by default.
pub const CURVE_NODES: usize = 97;

/// Sampled `f_BCS` and `f′_BCS` on `[0, y_max]` with interpolation.
#[derive(Clone, Debug)]
pub struct BcsCurve {
    pub y_max: f64,
    /// Ascending Chebyshev nodes.
    pub nodes: Vec<f64>,
    pub f_values: Vec<f64>,
    pub fprime_values: Vec<f64>,
    /// Sup-error of the `f_BCS` interpolant against direct solves on a grid
    /// three times finer than the nodes.
    pub interp_error: f64,
    f_fit: Chebyshev<f64>,
    fprime_fit: Chebyshev<f64>,
}

impl BcsCurve {
    pub fn build() -> Result<Self> {
        Self::with_nodes(CURVE_NODES, Y_MAX)
    }

    pub fn with_nodes(n: usize, y_max: f64) -> Result<Self> {
        if n < 8 || !(y_max > 0.0 && y_max <= Y_MAX) {
            return Err(Error::domain(
                "BcsCurve needs n >= 8 and y_max in (0, 0.95]",
            ));
        }
        let mut nodes = Chebyshev::<f64>::nodes(0.0, y_max, n);
        nodes.reverse();
        let mut f_values = Vec::with_capacity(n);
        let mut fprime_values = Vec::with_capacity(n);
        for &y in &nodes {
            let x = f_bcs(y)?;
            f_values.push(x);
            fprime_values.push(if y == 0.0 { 0.0 } else { f_bcs_prime_at(x, y)? });
        }
        // Chebyshev::from_values takes the nodes in descending order.
        let rev = |v: &[f64]| v.iter().rev().copied().collect::<Vec<_>>();
        let f_fit = Chebyshev::from_values(0.0, y_max, &rev(&f_values));
        let fprime_fit = Chebyshev::from_values(0.0, y_max, &rev(&fprime_values));
        let m = 3 * n;
        let mut sup = 0.0f64;
        for i in 0..m {
            let y = y_max * (i as f64 + 0.5) / m as f64;
            sup = sup.max((f_fit.eval(y) - f_bcs(y)?).abs());
        }
        Ok(BcsCurve {
            y_max,
            nodes,
            f_values,
            fprime_values,
            interp_error: sup,
            f_fit,
            fprime_fit,
        })
    }

    fn check(&self, y: f64) -> Result<()> {
        if (0.0..=self.y_max).contains(&y) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "y = {y} outside [0, {}]",
                self.y_max
            )))
        }
    }

    pub fn f(&self, y: f64) -> Result<f64> {
        self.check(y)?;
        Ok(if y == 0.0 {
            f_bcs_zero()
        } else {
            self.f_fit.eval(y)
        })
    }

    pub fn fprime(&self, y: f64) -> Result<f64> {
        self.check(y)?;
        Ok(if y == 0.0 {
            0.0
        } else {
            self.fprime_fit.eval(y)
        })
    }

    /// `f_BCS(y) − y f′_BCS(y)`.
    pub fn prefactor(&self, y: f64) -> Result<f64> {
        Ok(self.f(y)? - y * self.fprime(y)?)
    }
}

/// `c₁(y) = (f − y f′) ∫₀^∞ ln(16/ε)/(2π) K(ε) dε` with `x = f_BCS(y)`.
pub fn c1_fn(y: f64, curve: &BcsCurve) -> Result<f64> {
    let x = curve.f(y)?;
    let cut = cutoff(x, y);
    let w = |e: f64| (16.0 / e).ln() / (2.0 * PI);
    let est = integrate_breaks(
        |e| w(e) * kernel(x, y, e),
        &kernel_points(x, y, cut),
        Ends::left(Endpoint::LogSingular),
        &settings(),
    )?;
    let tail = (16f64.ln() * algebraic_tail(x, cut) - log_weighted_tail(x, cut)) / (2.0 * PI);
    Ok(curve.prefactor(y)? * (est.value + tail))
}

/// Subleading term of the cubic-lattice gap ratio:
/// `g = (f − y f′) ∫₀^∞ [(N(t_N ε) − N(0))/N(0)] K(ε) dε`.
/// Beyond `ε = (4+2t_z)/t_N` the bracket equals −1 and that part is
/// integrated in closed form.
pub fn g_fn(
    u: f64,
    t_z: f64,
    y: f64,
    t_n: f64,
    dos: &DosEvaluator,
    curve: &BcsCurve,
) -> Result<f64> {
    if !(t_z > 0.0 && t_z < 2.0) || dos.is_two_dimensional() {
        return Err(Error::domain("g is defined for t_z in (0, 2)"));
    }
    if t_z != dos.t_z() {
        return Err(Error::domain(format!(
            "density built for t_z = {}, asked for {t_z}",
            dos.t_z()
        )));
    }
    if !(t_n > 0.0) {
        return Err(Error::domain(format!("g needs T_N > 0, got {t_n}")));
    }
    if !(u > 0.0) {
        return Err(Error::domain("g needs U > 0"));
    }
    let x = curve.f(y)?;
    let n0 = dos.at_zero()?;
    let edge = dos.band_edge() / t_n;
    let cut = cutoff(x, y);
    let mut pts = kernel_points(x, y, cut.min(edge));
    for b in dos.breakpoints() {
        let s = b / t_n;
        if s > 0.0 && s < edge {
            pts.push(s);
        }
    }
    if cut < edge {
        let mut p = cut;
        while p < edge {
            pts.push(p);
            p *= 2.0;
        }
        pts.push(edge);
    }
    pts.sort_by(|a, b| a.total_cmp(b));
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs().max(1.0));
    let f = |e: f64| Ok((dos.eval(t_n * e)? - n0) / n0 * kernel(x, y, e));
    let est = try_integrate_breaks(f, &pts, Ends::REGULAR, &settings())?;
    // On [edge, ∞) the weight is −1 and the tanh factors are 1.
    let outside = -algebraic_tail(x, edge);
    Ok(curve.prefactor(y)? * (est.value + outside))
}
