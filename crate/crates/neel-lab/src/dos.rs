//! Densities of states of the square and anisotropic cubic lattices.
//!
//! With `t = 1` the band energy is `ε(k) = −2(cos k₁ + cos k₂) − 2t_z cos k₃`.
//! `N₀` is the square-lattice density, `N_tz` its convolution with the
//! arcsine density of `2t_z cos k₃`. Both are even; `N₀` diverges
//! logarithmically at `ε = 0` and `N_tz` is analytic there for `t_z > 0`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{
    integrate, integrate_breaks, try_integrate_breaks, Chebyshev, Endpoint, Ends,
    QuadratureSettings,
};
use crate::Real;

/// Point of the complex plane at which the continuation of `N₀` is evaluated.
pub type ComplexPoint = Complex64;

/// Arithmetic–geometric mean of two positive numbers.
pub fn agm<T: Real>(a: T, b: T) -> T {
    let (mut a, mut b) = (a, b);
    let half = T::of(0.5);
    for _ in 0..64 {
        if (a - b).abs() <= T::epsilon() * a {
            break;
        }
        let next = half * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    half * (a + b)
}

/// Complex AGM with the branch of each geometric mean chosen so that
/// `|a − b| ≤ |a + b|`; for `Re b > 0` this is the principal value.
pub fn agm_complex(a: Complex64, b: Complex64) -> Complex64 {
    let (mut a, mut b) = (a, b);
    for _ in 0..64 {
        if (a - b).norm() <= 4.0 * f64::EPSILON * a.norm() {
            break;
        }
        let next = 0.5 * (a + b);
        let mut g = (a * b).sqrt();
        if (next - g).norm() > (next + g).norm() {
            g = -g;
        }
        a = next;
        b = g;
    }
    0.5 * (a + b)
}

/// `N₀(ε)` by quadrature of the u-integral.
///
/// After `u = −2 + (4−|ε|) sin²θ` both endpoint singularities cancel and
/// `N₀(ε) = (2/π²) ∫₀^{π/2} dθ / √((ε + (4−ε)cos²θ)(ε + (4−ε)sin²θ))`.
/// The integrand is symmetric about `π/4`, so only half the range is used.
pub fn n0<T: Real>(eps: T, settings: &QuadratureSettings<T>) -> Result<T> {
    if !eps.is_finite() {
        return Err(Error::domain("n0 argument must be finite"));
    }
    let e = eps.abs();
    let four = T::of(4.0);
    if e >= four {
        return Ok(T::zero());
    }
    if e == T::zero() {
        return Err(Error::Singularity(
            "N0 diverges logarithmically at eps = 0".into(),
        ));
    }
    let w = four - e;
    let f = |th: T| {
        let (s, c) = (th.sin(), th.cos());
        ((e + w * c * c) * (e + w * s * s)).sqrt().recip()
    };
    let quarter = T::frac_pi_2() * T::of(0.5);
    // The peak at θ = 0 has width ~ √(ε/(4−ε)).
    let peak = (e / w).sqrt();
    let mut points = vec![T::zero()];
    let mut p = peak;
    while p < quarter {
        points.push(p);
        p *= T::of(4.0);
    }
    points.push(quarter);
    let est = integrate_breaks(f, &points, Ends::REGULAR, settings)?;
    let pi = T::pi();
    Ok(est.value * T::of(4.0) / (pi * pi))
}

/// `N₀(ε) = 1 / (4π AGM(1, |ε|/4))`, the complete-elliptic-integral form.
/// Infinite at `ε = 0`, zero for `|ε| ≥ 4`.
pub fn n0_fast<T: Real>(eps: T) -> T {
    let e = eps.abs();
    let four = T::of(4.0);
    if e >= four {
        return T::zero();
    }
    if e == T::zero() {
        return T::of(f64::INFINITY);
    }
    (four * T::pi() * agm(T::one(), e / four)).recip()
}

fn check_tilde_domain(z: ComplexPoint) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.im < 0.0 {
        return Err(Error::domain("n0_tilde needs a finite z with Im z >= 0"));
    }
    if z.im == 0.0 && (z.re <= 0.0 || z.re >= 4.0) {
        return Err(Error::domain(format!(
            "n0_tilde is undefined on the real axis at {}",
            z.re
        )));
    }
    Ok(())
}

/// Continuation `Ñ₀(z)` of `N₀` into the closed upper half-plane, by
/// quadrature of the v-integral
/// `(1/π²)(4−z)⁻¹ ∫₀¹ v^{-1/2}(v−w₁)^{-1/2}(w₂−v)^{-1/2}(1−v)^{-1/2} dv`,
/// `w₁ = −z/(4−z)`, `w₂ = 4/(4−z)`, with `v = sin²θ`.
pub fn n0_tilde(z: ComplexPoint, settings: &QuadratureSettings<f64>) -> Result<Complex64> {
    check_tilde_domain(z)?;
    let four = Complex64::new(4.0, 0.0);
    let w1 = -z / (four - z);
    let w2 = four / (four - z);
    let f = |th: f64| {
        let s2 = th.sin().powi(2);
        let s2c = Complex64::new(s2, 0.0);
        ((s2c - w1).sqrt() * (w2 - s2c).sqrt()).inv()
    };
    // For z close to (−4, 0) the branch points w₁, w₂ approach (0, 1); the
    // panels are split there and treated as square-root endpoints.
    let mut cuts: Vec<f64> = [w1, w2]
        .iter()
        .filter(|w| w.re > 0.0 && w.re < 1.0)
        .map(|w| w.re.sqrt().asin())
        .collect();
    cuts.sort_by(|a, b| a.total_cmp(b));
    let mut points = vec![0.0];
    points.extend(cuts.iter().copied().filter(|&c| c > 0.0 && c < FRAC_PI_2));
    points.push(FRAC_PI_2);
    let mut total = Complex64::new(0.0, 0.0);
    let n = points.len() - 1;
    for i in 0..n {
        let l = if i == 0 {
            Endpoint::Regular
        } else {
            Endpoint::SqrtSingular
        };
        let r = if i == n - 1 {
            Endpoint::Regular
        } else {
            Endpoint::SqrtSingular
        };
        total += integrate(f, points[i], points[i + 1], Ends::new(l, r), settings)?.value;
    }
    Ok(total * 2.0 / (PI * PI) / (four - z))
}

/// Analytic continuation of `N₀` from the upper half-plane, extended across
/// `(−4, 0)` and `(0, ∞)` into the lower half-plane, in closed AGM form:
///
/// * `Re z ≥ 0`: `1 / (4π AGM(1, z/4))`
/// * `Re z < 0`: `1 / (4π AGM(1, −z/4)) − 2i / (4π AGM(1, √(1 − z²/16)))`
///
/// Both agree with [`n0_tilde`] on the upper half-plane. The function is
/// analytic away from `0` and the rays `(−∞, −4]` and `Re z = 0, Im z < 0`.
pub fn n0_continued(z: ComplexPoint) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) || z == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("n0_continued needs a finite nonzero z"));
    }
    let one = Complex64::new(1.0, 0.0);
    let c = 1.0 / (4.0 * PI);
    if z.re >= 0.0 {
        return Ok(c / agm_complex(one, z / 4.0));
    }
    if z.im == 0.0 && z.re <= -4.0 {
        return Err(Error::domain("n0_continued has a cut on (-inf, -4]"));
    }
    let k = (one - z * z / 16.0).sqrt();
    Ok(c / agm_complex(one, -z / 4.0) - Complex64::new(0.0, 2.0) * c / agm_complex(one, k))
}

fn check_tz_open(t_z: f64) -> Result<()> {
    if t_z > 0.0 && t_z < 2.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "t_z = {t_z} outside (0, 2); use n0 for the square lattice"
        )))
    }
}

/// Upper end of the support of `N_tz`.
pub fn band_edge(t_z: f64) -> f64 {
    4.0 + 2.0 * t_z
}

/// `N_tz(ε) = (1/π) ∫₀^π N₀(2t_z cos φ + |ε|) dφ` by direct quadrature.
///
/// The arcsine weight of the u-form is absorbed by `u = 2 cos φ`. The range is
/// cut where the argument reaches 4 (where `N₀` jumps to zero) and split at
/// the logarithmic point `φ₀ = acos(−|ε|/2t_z)`; the argument is evaluated
/// in product form around `φ₀` to keep relative accuracy.
pub fn n_tz(eps: f64, t_z: f64, settings: &QuadratureSettings<f64>) -> Result<f64> {
    check_tz_open(t_z)?;
    if !eps.is_finite() {
        return Err(Error::domain("n_tz argument must be finite"));
    }
    let e = eps.abs();
    if e >= band_edge(t_z) {
        return Ok(0.0);
    }
    let c1 = (4.0 - e) / (2.0 * t_z);
    let start = if c1 < 1.0 { c1.acos() } else { 0.0 };
    let value = if e < 2.0 * t_z {
        let phi0 = (-e / (2.0 * t_z)).acos();
        let arg = |phi: f64| -4.0 * t_z * (0.5 * (phi + phi0)).sin() * (0.5 * (phi - phi0)).sin();
        let f = |phi: f64| n0_fast(arg(phi));
        let left = if start < phi0 {
            integrate(f, start, phi0, Ends::right(Endpoint::LogSingular), settings)?.value
        } else {
            0.0
        };
        let right = integrate(f, phi0, PI, Ends::left(Endpoint::LogSingular), settings)?.value;
        left + right
    } else {
        // Minimum argument e − 2t_z at φ = π.
        let gap = e - 2.0 * t_z;
        let f = |phi: f64| n0_fast(gap + 4.0 * t_z * (0.5 * phi).cos().powi(2));
        let ends = if gap < 1e-3 {
            Ends::right(Endpoint::LogSingular)
        } else {
            Ends::REGULAR
        };
        integrate(f, start, PI, ends, settings)?.value
    };
    Ok(value / PI)
}

/// `N_tz(0) = (2/π) ∫₀^{π/2} N₀(2t_z sin d) dd`, generic over the scalar so
/// that it can be evaluated in extended precision.
pub fn n_tz0_direct<T: Real>(t_z: T, settings: &QuadratureSettings<T>) -> Result<T> {
    check_tz_open(t_z.as_f64())?;
    let two = T::of(2.0);
    let f = |d: T| n0_fast(two * t_z * d.sin());
    let half_pi = T::frac_pi_2();
    let est = integrate(
        f,
        T::zero(),
        half_pi,
        Ends::left(Endpoint::LogSingular),
        settings,
    )?;
    Ok(two * est.value / T::pi())
}

/// Even Taylor coefficients of `N_tz` at `ε = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorCoefficients {
    pub t_z: f64,
    /// `even[j] = N_tz^{(2j)}(0) / (2j)!`
    pub even: Vec<f64>,
}

impl TaylorCoefficients {
    /// Coefficient of `εⁿ`; zero for odd `n`.
    pub fn coefficient(&self, n: usize) -> f64 {
        if n % 2 == 1 {
            0.0
        } else {
            self.even.get(n / 2).copied().unwrap_or(0.0)
        }
    }

    /// Truncated series `Σ_j even[j] ε^{2j}`.
    pub fn eval(&self, eps: f64) -> f64 {
        let e2 = eps * eps;
        self.even.iter().rev().fold(0.0, |acc, &c| acc * e2 + c)
    }
}

const CAUCHY_POINTS: usize = 64;

/// Taylor coefficients `Ñ₀^{(n)}(z)/n!` for `n = 0..=n_max` by the
/// trapezoidal rule on a circle of radius `0.4·dist(z, {0, 4, −4})`.
fn cauchy_coefficients(z: Complex64, n_max: usize) -> Result<Vec<Complex64>> {
    let dist = z.norm().min((z - 4.0).norm()).min((z + 4.0).norm());
    let r = 0.4 * dist;
    if !(r > 0.0) {
        return Err(Error::domain("contour point hits a singularity of N0"));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); n_max + 1];
    for k in 0..CAUCHY_POINTS {
        let w = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / CAUCHY_POINTS as f64);
        let fv = n0_continued(z + r * w)?;
        let winv = w.conj();
        let mut p = fv;
        for c in out.iter_mut() {
            *c += p;
            p *= winv;
        }
    }
    let mut scale = 1.0 / CAUCHY_POINTS as f64;
    for c in out.iter_mut() {
        *c *= scale;
        scale /= r;
    }
    Ok(out)
}

/// Even Taylor coefficients of `N_tz` at zero up to order `2·j_max`, from
/// contour integrals over the upper semicircle `u = 2e^{iθ}`:
/// `N_tz^{(n)}(0)/n! = Re (1/π) ∫_γ Ñ₀^{(n)}(t_z u)/n! du/√(4−u²)`.
pub fn n_tz_taylor(
    t_z: f64,
    j_max: usize,
    settings: &QuadratureSettings<f64>,
) -> Result<TaylorCoefficients> {
    if !(0.05..=1.95).contains(&t_z) {
        return Err(Error::domain(format!(
            "n_tz_taylor needs t_z in [0.05, 1.95], got {t_z}"
        )));
    }
    if j_max > 8 {
        return Err(Error::domain("n_tz_taylor supports j_max <= 8"));
    }
    let mut even = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let n = 2 * j;
        // du/√(4−u²) = e^{i(θ/2 + 3π/4)} dθ / √(2 sin θ) on the semicircle.
        let f = |th: f64| -> Result<Complex64> {
            let z = Complex64::from_polar(2.0 * t_z, th);
            let a = cauchy_coefficients(z, n)?[n];
            let weight =
                Complex64::from_polar((2.0 * th.sin()).sqrt().recip(), 0.5 * th + 0.75 * PI);
            Ok(a * weight)
        };
        // θ runs from π down to 0 (clockwise).
        let est = try_integrate_breaks(f, &[PI, 0.0], Ends::SQRT_BOTH, settings)?;
        even.push(est.value.re / PI);
    }
    Ok(TaylorCoefficients { t_z, even })
}

/// Chebyshev node count per panel used by [`DosEvaluator::new`].
pub const DEFAULT_NODES: usize = 64;

/// Limit on the recorded sup-error of an interpolant.
pub const FIT_LIMIT: f64 = 1e-8;

#[derive(Clone, Debug)]
struct Panel {
    lo: f64,
    hi: f64,
    cheb: Chebyshev<f64>,
}

impl Panel {
    /// Panel variable `φ ∈ [0, π/2]` with `ε = lo + (hi − lo) sin²φ`, which
    /// smooths square-root behaviour at both panel ends.
    fn phi(&self, e: f64) -> f64 {
        (e - self.lo)
            .max(0.0)
            .sqrt()
            .atan2((self.hi - e).max(0.0).sqrt())
    }

    fn eps(lo: f64, hi: f64, phi: f64) -> f64 {
        let s = phi.sin();
        let c = phi.cos();
        if s <= c {
            lo + (hi - lo) * s * s
        } else {
            hi - (hi - lo) * c * c
        }
    }
}

/// Piecewise Chebyshev fit of `N_tz` on `[0, 4 + 2t_z]`.
#[derive(Clone, Debug)]
pub struct Interpolant {
    panels: Vec<Panel>,
    sup_error: f64,
    nodes_per_panel: usize,
}

impl Interpolant {
    pub fn sup_error(&self) -> f64 {
        self.sup_error
    }

    pub fn nodes_per_panel(&self) -> usize {
        self.nodes_per_panel
    }

    fn eval(&self, e: f64) -> f64 {
        let i = self
            .panels
            .iter()
            .position(|p| e <= p.hi)
            .unwrap_or(self.panels.len() - 1);
        let p = &self.panels[i];
        p.cheb.eval(p.phi(e))
    }
}

/// Density of states for a fixed `t_z`: direct quadrature, optionally backed
/// by a cached interpolant. `t_z = 0` is answered by `N₀`.
#[derive(Clone, Debug)]
pub struct DosEvaluator {
    t_z: f64,
    settings: QuadratureSettings<f64>,
    interpolant: Option<Interpolant>,
}

impl DosEvaluator {
    /// Evaluator with an interpolant of [`DEFAULT_NODES`] nodes per panel
    /// (none is needed for `t_z = 0`).
    pub fn new(t_z: f64) -> Result<Self> {
        if t_z == 0.0 {
            Self::direct(0.0, QuadratureSettings::default())
        } else {
            build_interpolant(t_z, DEFAULT_NODES)
        }
    }

    /// Evaluator that always integrates directly.
    pub fn direct(t_z: f64, settings: QuadratureSettings<f64>) -> Result<Self> {
        if !(0.0..2.0).contains(&t_z) {
            return Err(Error::domain(format!("t_z = {t_z} outside [0, 2)")));
        }
        settings.validate()?;
        Ok(DosEvaluator {
            t_z,
            settings,
            interpolant: None,
        })
    }

    pub fn t_z(&self) -> f64 {
        self.t_z
    }

    pub fn settings(&self) -> &QuadratureSettings<f64> {
        &self.settings
    }

    pub fn interpolant(&self) -> Option<&Interpolant> {
        self.interpolant.as_ref()
    }

    pub fn is_two_dimensional(&self) -> bool {
        self.t_z == 0.0
    }

    pub fn band_edge(&self) -> f64 {
        band_edge(self.t_z)
    }

    /// Points in `[0, band edge]` where the density is not smooth: `0` and
    /// `4` for the square lattice, `{2t_z, 4 − 2t_z, 4 + 2t_z}` otherwise.
    pub fn breakpoints(&self) -> Vec<f64> {
        let t = self.t_z;
        let mut pts = if t == 0.0 {
            vec![0.0, 4.0]
        } else {
            vec![0.0, 2.0 * t, 4.0 - 2.0 * t, 4.0 + 2.0 * t]
        };
        pts.sort_by(|a, b| a.total_cmp(b));
        pts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        pts
    }

    /// Integration points on `[0, band edge]` for kernels that vary on the
    /// scale `scale` near zero: the breakpoints plus `scale·4ᵏ`.
    pub fn energy_grid(&self, scale: f64) -> Vec<f64> {
        let edge = self.band_edge();
        let mut pts = self.breakpoints();
        if scale > 0.0 && scale.is_finite() {
            let mut x = scale;
            while x < edge {
                pts.push(x);
                x *= 4.0;
            }
        }
        pts.sort_by(|a, b| a.total_cmp(b));
        pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs().max(1e-300));
        pts
    }

    /// `N_tz(ε)`; `+∞` at `ε = 0` in the square-lattice case.
    pub fn eval(&self, eps: f64) -> Result<f64> {
        let e = eps.abs();
        if !e.is_finite() {
            return Err(Error::domain("density argument must be finite"));
        }
        if e >= self.band_edge() {
            return Ok(0.0);
        }
        if self.t_z == 0.0 {
            return Ok(n0_fast(e));
        }
        match &self.interpolant {
            Some(ip) => Ok(ip.eval(e)),
            None => n_tz(e, self.t_z, &self.settings),
        }
    }

    /// `N_tz(0)`; errors for the square lattice where it diverges.
    pub fn at_zero(&self) -> Result<f64> {
        if self.t_z == 0.0 {
            return Err(Error::Singularity(
                "the square-lattice density diverges at 0".into(),
            ));
        }
        n_tz0_direct(self.t_z, &self.settings)
    }
}

/// Builds a [`DosEvaluator`] whose `N_tz` comes from Chebyshev fits on the
/// panels between consecutive breakpoints, `n_nodes` nodes each. The
/// sup-error is measured against direct quadrature on a grid three times
/// finer than the node set.
pub fn build_interpolant(t_z: f64, n_nodes: usize) -> Result<DosEvaluator> {
    check_tz_open(t_z)?;
    if n_nodes < 64 {
        return Err(Error::domain("build_interpolant needs at least 64 nodes"));
    }
    let fit_settings = QuadratureSettings::new(1e-14, 1e-13);
    let mut ev = DosEvaluator::direct(t_z, QuadratureSettings::default())?;
    let bps = ev.breakpoints();
    let mut panels = Vec::with_capacity(bps.len() - 1);
    for w in bps.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let cheb = Chebyshev::try_fit(0.0, FRAC_PI_2, n_nodes, |phi| {
            n_tz(Panel::eps(lo, hi, phi), t_z, &fit_settings)
        })?;
        panels.push(Panel { lo, hi, cheb });
    }
    let mut ip = Interpolant {
        panels,
        sup_error: 0.0,
        nodes_per_panel: n_nodes,
    };
    let m = 3 * n_nodes;
    let mut sup = 0.0f64;
    for p in &ip.panels {
        for i in 0..m {
            let phi = FRAC_PI_2 * (i as f64 + 0.5) / m as f64;
            let e = Panel::eps(p.lo, p.hi, phi);
            let exact = n_tz(e, t_z, &fit_settings)?;
            sup = sup.max((p.cheb.eval(phi) - exact).abs());
        }
    }
    ip.sup_error = sup;
    if !(sup <= FIT_LIMIT) {
        return Err(Error::Fit {
            sup_error: sup,
            limit: FIT_LIMIT,
        });
    }
    ev.interpolant = Some(ip);
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DoubleDouble;

    fn s() -> QuadratureSettings<f64> {
        QuadratureSettings::new(1e-13, 1e-12)
    }

    #[test]
    fn n0_support_and_evenness() {
        assert_eq!(n0(4.5, &s()).unwrap(), 0.0);
        assert_eq!(n0(-1.3, &s()).unwrap(), n0(1.3, &s()).unwrap());
        assert!(matches!(n0(0.0, &s()), Err(Error::Singularity(_))));
    }

    #[test]
    fn agm_form_matches_quadrature_on_grid() {
        for i in 0..100 {
            let e = 0.02 + 3.96 * i as f64 / 99.0;
            let q = n0(e, &s()).unwrap();
            assert!((n0_fast(e) - q).abs() < 1e-10 * q.max(1.0), "eps = {e}");
        }
    }

    #[test]
    fn n0_in_double_double() {
        let ss = QuadratureSettings::new(DoubleDouble::from(1e-30), DoubleDouble::from(1e-30));
        let e = DoubleDouble::from(0.1);
        let q = n0(e, &ss).unwrap();
        let f = n0_fast(e);
        assert!((q - f).abs().as_f64() < 1e-29);
    }

    #[test]
    fn continuation_examples() {
        let st = s();
        let v = n0_tilde(Complex64::new(2.0, 0.0), &st).unwrap();
        assert!((v.re - n0_fast(2.0)).abs() < 1e-12 && v.im.abs() < 1e-14);
        for r in [0.5, 1.5, 3.0] {
            let v = n0_tilde(Complex64::new(-r, 1e-6), &st).unwrap();
            assert!((v.re - n0_fast(r)).abs() < 1e-5, "r = {r}");
        }
        assert!(n0_tilde(Complex64::new(-1.0, 0.0), &st).is_err());
        assert!(n0_tilde(Complex64::new(5.0, 0.0), &st).is_err());
    }

    #[test]
    fn closed_form_continuation_matches_v_integral() {
        let st = s();
        for z in [
            Complex64::new(0.0, 2.0),
            Complex64::new(-1.0, 1.0),
            Complex64::new(-3.0, 0.2),
            Complex64::new(1.0, 0.5),
            Complex64::new(-0.5, 0.01),
        ] {
            let a = n0_tilde(z, &st).unwrap();
            let b = n0_continued(z).unwrap();
            assert!((a - b).norm() < 1e-10, "z = {z}: {a} vs {b}");
        }
    }

    #[test]
    fn n_tz_support_evenness_and_domain() {
        assert_eq!(n_tz(5.1, 0.5, &s()).unwrap(), 0.0);
        assert_eq!(
            n_tz(-0.3, 0.5, &s()).unwrap(),
            n_tz(0.3, 0.5, &s()).unwrap()
        );
        assert!(n_tz(0.3, 0.0, &s()).unwrap_err().is_domain());
        assert!(n_tz(0.3, 2.0, &s()).is_err());
    }

    #[test]
    fn n_tz_at_zero_agrees_with_direct_form() {
        for t in [0.1, 0.5, 1.3] {
            let a = n_tz(0.0, t, &s()).unwrap();
            let b = n_tz0_direct(t, &s()).unwrap();
            assert!((a - b).abs() < 1e-11, "t_z = {t}");
        }
    }

    #[test]
    fn taylor_zeroth_and_odd_coefficients() {
        let c = n_tz_taylor(0.5, 2, &s()).unwrap();
        let v = n_tz0_direct(0.5, &s()).unwrap();
        assert!(
            (c.coefficient(0) - v).abs() < 1e-9,
            "{} vs {v}",
            c.coefficient(0)
        );
        assert_eq!(c.coefficient(1), 0.0);
        assert_eq!(c.coefficient(3), 0.0);
        assert!(n_tz_taylor(0.01, 2, &s()).is_err());
        assert!(n_tz_taylor(0.5, 9, &s()).is_err());
    }

    #[test]
    fn interpolant_breakpoints_and_support() {
        let ev = build_interpolant(0.5, 64).unwrap();
        assert_eq!(ev.breakpoints(), vec![0.0, 1.0, 3.0, 5.0]);
        assert!(ev.interpolant().unwrap().sup_error() < 1e-8);
        assert_eq!(ev.eval(5.2).unwrap(), 0.0);
        assert_eq!(ev.eval(-1.7).unwrap(), ev.eval(1.7).unwrap());
        let d = DosEvaluator::new(1.0).unwrap();
        assert_eq!(d.breakpoints(), vec![0.0, 2.0, 6.0]);
    }
}
