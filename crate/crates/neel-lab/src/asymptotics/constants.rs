//! The constants `a₀`, `a₁` and `b₀(t_z)` entering the Néel asymptotes.

use std::f64::consts::{LN_2, PI};
use std::sync::OnceLock;

use crate::dos::{n0_fast, DosEvaluator};
use crate::error::{Error, Result};
use crate::numerics::{
    integrate_breaks, try_integrate_breaks, Endpoint, Ends, QuadratureSettings, EULER_GAMMA,
};

use super::series::n0_printed;

/// A quadrature value with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NamedConstant {
    pub value: f64,
    pub error: f64,
}

/// `a₀`, `a₁` and `b₀` at a list of `t_z`.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedConstants {
    pub a0: NamedConstant,
    pub a1: NamedConstant,
    pub b0: Vec<(f64, NamedConstant)>,
}

impl NamedConstants {
    pub fn compute(t_zs: &[f64]) -> Result<Self> {
        let s = default_settings();
        let mut b0 = Vec::with_capacity(t_zs.len());
        for &t_z in t_zs {
            let dos = DosEvaluator::new(t_z)?;
            b0.push((t_z, b0_with(&dos, &s)?));
        }
        Ok(NamedConstants {
            a0: a0_with(&s)?,
            a1: a1_with(&s)?,
            b0,
        })
    }
}

/// Tolerances for the constants; ten times tighter still converges in `f64`.
pub fn default_settings() -> QuadratureSettings<f64> {
    QuadratureSettings::new(1e-13, 1e-12).with_max_subdivisions(4000)
}

fn lead(eps: f64) -> f64 {
    (16.0 / eps).ln() / (2.0 * PI * PI)
}

/// `(N₀(ε) − ln(16/ε)/2π²)/ε`; below 0.1 the difference is taken from the
/// series, whose remainder there is `~1e-21`.
fn a0_integrand(eps: f64) -> f64 {
    let diff = if eps <= 0.1 {
        n0_printed(eps, 5) - n0_printed(eps, 0)
    } else {
        n0_fast(eps) - lead(eps)
    };
    diff / eps
}

pub fn a0_with(s: &QuadratureSettings<f64>) -> Result<NamedConstant> {
    let est = integrate_breaks(
        a0_integrand,
        &[0.0, 0.1, 1.0, 2.0, 3.0, 4.0],
        Ends::REGULAR,
        s,
    )?;
    Ok(NamedConstant {
        value: est.value,
        error: est.error,
    })
}

/// `∫₀^∞ (ln x)² sech²(x) dx`.
pub fn log_square_sech_moment(s: &QuadratureSettings<f64>) -> Result<NamedConstant> {
    let f = |x: f64| {
        let e = (-2.0 * x).exp();
        let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
        let l = x.ln();
        l * l * sech2
    };
    let est = integrate_breaks(
        f,
        &[0.0, 1.0, 4.0, 10.0, 20.0, 40.0],
        Ends::left(Endpoint::LogSingular),
        s,
    )?;
    Ok(NamedConstant {
        value: est.value,
        error: est.error,
    })
}

pub fn a1_with(s: &QuadratureSettings<f64>) -> Result<NamedConstant> {
    let a0 = a0_with(s)?;
    let m = log_square_sech_moment(s)?;
    let c = EULER_GAMMA + 2.0 * LN_2 - PI.ln();
    Ok(NamedConstant {
        value: -4.0 * PI * PI * a0.value - m.value + (2.0 * LN_2).powi(2) + c * c,
        error: 4.0 * PI * PI * a0.error + m.error,
    })
}

pub fn b0_with(dos: &DosEvaluator, s: &QuadratureSettings<f64>) -> Result<NamedConstant> {
    if dos.is_two_dimensional() {
        return Err(Error::domain("b0 is defined for t_z in (0, 2)"));
    }
    let n00 = dos.at_zero()?;
    let f = |e: f64| -> Result<f64> {
        if e == 0.0 {
            return Ok(0.0);
        }
        Ok((dos.eval(e)? - n00) / e)
    };
    let est = try_integrate_breaks(f, &dos.breakpoints(), Ends::REGULAR, s)?;
    Ok(NamedConstant {
        value: est.value,
        error: est.error,
    })
}

/// `a₀ = ∫₀⁴ (N₀(ε) − ln(16/ε)/2π²)/ε dε`.
pub fn const_a0() -> Result<f64> {
    static A0: OnceLock<f64> = OnceLock::new();
    cached(&A0, || Ok(a0_with(&default_settings())?.value))
}

/// `a₁ = −4π²a₀ − ∫₀^∞ (ln x)²/cosh²x dx + (2 ln 2)² + (γ + 2 ln 2 − ln π)²`.
pub fn const_a1() -> Result<f64> {
    static A1: OnceLock<f64> = OnceLock::new();
    cached(&A1, || Ok(a1_with(&default_settings())?.value))
}

/// `b₀(t_z) = ∫₀^{4+2t_z} (N_tz(ε) − N_tz(0))/ε dε`.
pub fn const_b0(t_z: f64, dos: &DosEvaluator) -> Result<f64> {
    if t_z != dos.t_z() {
        return Err(Error::domain(format!(
            "density built for t_z = {}, asked for {t_z}",
            dos.t_z()
        )));
    }
    Ok(b0_with(dos, &default_settings())?.value)
}

fn cached(cell: &OnceLock<f64>, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
    if let Some(&v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(*cell.get_or_init(|| v))
}
