//! Asymptotic formulas for the densities, the Néel temperature and the gap
//! ratio, for comparison with the direct solvers.

pub mod constants;
pub mod golden;
pub mod series;

use std::f64::consts::PI;

use crate::bcs::{c1_fn, g_fn, BcsCurve};
use crate::dos::DosEvaluator;
use crate::error::{Error, Result};
use crate::numerics::EULER_GAMMA;

pub use constants::{const_a0, const_a1, const_b0, NamedConstant, NamedConstants};
pub use golden::{GoldenEntry, GoldenFile};
pub use series::{a_kl, n0_series, n0_series_derivative, n_tz0_series, SeriesMode, SeriesSpec};

/// `πe^{−γ}`.
fn pi_e_gamma() -> f64 {
    PI * (-EULER_GAMMA).exp()
}

/// `T_N(U, 0) ≈ (32/πe^{−γ}) exp(−√(4π²/U + a₁))`.
pub fn tn_asym_2d(u: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::domain(format!("U must be positive, got {u}")));
    }
    let a1 = const_a1()?;
    Ok(32.0 / pi_e_gamma() * (-(4.0 * PI * PI / u + a1).sqrt()).exp())
}

/// `T_N(U, t_z) ≈ ((8+4t_z)/πe^{−γ}) exp(−(1/U − b₀)/N_tz(0))`.
pub fn tn_asym_3d(u: f64, t_z: f64, dos: &DosEvaluator) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::domain(format!("U must be positive, got {u}")));
    }
    let b0 = const_b0(t_z, dos)?;
    let n00 = dos.at_zero()?;
    Ok(tn_prefactor_3d(t_z) * (-(1.0 / u - b0) / n00).exp())
}

/// `(8+4t_z)/πe^{−γ}`.
pub fn tn_prefactor_3d(t_z: f64) -> f64 {
    (8.0 + 4.0 * t_z) / pi_e_gamma()
}

/// `m̂(U, 0, yT_N) ≈ f_BCS(y) + c₁(y)√U`.
pub fn mhat_asym_2d(u: f64, y: f64, curve: &BcsCurve) -> Result<f64> {
    if !(u >= 0.0) {
        return Err(Error::domain(format!("U must be non-negative, got {u}")));
    }
    let f = curve.f(y)?;
    if u == 0.0 {
        return Ok(f);
    }
    Ok(f + c1_fn(y, curve)? * u.sqrt())
}

/// `m̂(U, t_z, yT_N) ≈ f_BCS(y)`, plus `g(U, t_z, y)` when `include_g`.
pub fn mhat_asym_3d(
    u: f64,
    t_z: f64,
    y: f64,
    include_g: bool,
    t_n: f64,
    dos: &DosEvaluator,
    curve: &BcsCurve,
) -> Result<f64> {
    if !(t_z > 0.0 && t_z < 2.0) {
        return Err(Error::domain(format!("t_z must lie in (0, 2), got {t_z}")));
    }
    let f = curve.f(y)?;
    if !include_g {
        return Ok(f);
    }
    Ok(f + g_fn(u, t_z, y, t_n, dos, curve)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn asymptote_shapes() {
        assert!(tn_asym_2d(0.3).unwrap() < tn_asym_2d(0.5).unwrap());
        assert!((tn_prefactor_3d(0.5) - 10.0 / pi_e_gamma()).abs() < 1e-15);
        assert!(tn_asym_2d(0.0).is_err());
    }
}
