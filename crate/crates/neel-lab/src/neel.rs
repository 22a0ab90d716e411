//! Néel temperature: the unique `T_N > 0` with `f_tz(T_N) = 1/U`.

use crate::dos::DosEvaluator;
use crate::error::{Error, Result};
use crate::numerics::{
    solve_monotone, try_integrate_breaks, Endpoint, Ends, QuadratureSettings, RootBracket,
};

/// Quadrature settings shared by the temperature and gap integrals.
pub fn solver_settings() -> QuadratureSettings<f64> {
    QuadratureSettings::new(1e-14, 1e-13).with_max_subdivisions(4000)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NeelResult {
    pub u: f64,
    pub t_z: f64,
    pub t_n: f64,
    /// Final bracket in `T`.
    pub bracket: RootBracket<f64>,
    /// `|1/U − f_tz(t_n)|`
    pub residual: f64,
    pub iterations: usize,
}

/// `tanh(x)/x`, exact at 0.
pub(crate) fn tanh_over(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 3.0
    } else {
        x.tanh() / x
    }
}

/// `f_tz(T) = ∫₀^{4+2t_z} N_tz(ε) tanh(ε/2T)/ε dε`.
///
/// The integrand is `≈ N(0)/2T` below `ε ~ T` and `≈ N(ε)/ε` above, so the
/// range is split at `10T` and geometrically beyond; the first panel carries
/// the logarithmic substitution (needed for the square lattice).
pub fn f_tz(t: f64, dos: &DosEvaluator) -> Result<f64> {
    f_tz_with(t, dos, &solver_settings())
}

pub fn f_tz_with(t: f64, dos: &DosEvaluator, settings: &QuadratureSettings<f64>) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("f_tz needs T > 0, got {t}")));
    }
    let half_inv = 0.5 / t;
    let f = |e: f64| Ok(dos.eval(e)? * tanh_over(e * half_inv) * half_inv);
    let points = dos.energy_grid(10.0 * t);
    Ok(try_integrate_breaks(f, &points, Ends::left(Endpoint::LogSingular), settings)?.value)
}

/// Smallest coupling accepted by [`solve_neel`] for a given density.
pub fn underflow_guard(dos: &DosEvaluator) -> Result<f64> {
    if dos.is_two_dimensional() {
        Ok(0.3)
    } else {
        Ok(1.0 / (25.0 * dos.at_zero()?))
    }
}

/// Solves `f_tz(T) = 1/U` on `[T_lo, U/2]`, with `T_lo` halved from 0.1
/// until `f_tz(T_lo) > 1/U`. The root is located in `ln T`.
pub fn solve_neel(u: f64, dos: &DosEvaluator) -> Result<NeelResult> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::domain(format!("U must be positive, got {u}")));
    }
    let u_min = underflow_guard(dos)?;
    if u < u_min {
        return Err(Error::UnderflowGuard {
            u,
            t_z: dos.t_z(),
            u_min,
        });
    }
    let g = |t: f64| -> Result<f64> { Ok(f_tz(t, dos)? - 1.0 / u) };
    let t_hi = 0.5 * u;
    let mut t_lo = 0.1f64.min(0.5 * t_hi);
    let mut halvings = 0;
    while g(t_lo)? <= 0.0 {
        t_lo *= 0.5;
        halvings += 1;
        if halvings > 200 || t_lo < 1e-300 {
            return Err(Error::NoConvergence(
                "Néel bracket expansion exhausted".into(),
            ));
        }
    }
    let mut r = solve_neel_bracketed(u, dos, t_lo, t_hi)?;
    r.iterations += halvings;
    Ok(r)
}

/// Solves `f_tz(T) = 1/U` inside a caller-supplied bracket `[t_lo, t_hi]`.
pub fn solve_neel_bracketed(
    u: f64,
    dos: &DosEvaluator,
    t_lo: f64,
    t_hi: f64,
) -> Result<NeelResult> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::domain(format!("U must be positive, got {u}")));
    }
    if !(t_lo > 0.0 && t_lo < t_hi && t_hi.is_finite()) {
        return Err(Error::domain(format!("bad bracket [{t_lo}, {t_hi}]")));
    }
    let target = 1.0 / u;
    let g = |t: f64| -> Result<f64> { Ok(f_tz(t, dos)? - target) };
    let bracket = RootBracket {
        lo: t_lo.ln(),
        hi: t_hi.ln(),
        f_lo: g(t_lo)?,
        f_hi: g(t_hi)?,
    };
    bracket.validate()?;
    let out = solve_monotone(|x: f64| g(x.exp()), bracket, 1e-13)?;
    let t_n = out.root.exp();
    let residual = g(t_n)?.abs();
    Ok(NeelResult {
        u,
        t_z: dos.t_z(),
        t_n,
        bracket: RootBracket {
            lo: out.bracket.lo.exp(),
            hi: out.bracket.hi.exp(),
            f_lo: out.bracket.f_lo,
            f_hi: out.bracket.f_hi,
        },
        residual,
        iterations: out.iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_tz_bounds_and_monotonicity() {
        let dos = DosEvaluator::new(0.5).unwrap();
        for t in [0.05, 0.2, 1.0] {
            let f = f_tz(t, &dos).unwrap();
            assert!(f <= 0.5 / t);
            assert!(f_tz(2.0 * t, &dos).unwrap() < f);
        }
        assert!(f_tz(0.0, &dos).unwrap_err().is_domain());
    }

    #[test]
    fn solve_neel_examples() {
        let d0 = DosEvaluator::new(0.0).unwrap();
        let r = solve_neel(2.0, &d0).unwrap();
        assert!(r.t_n > 0.0 && r.t_n <= 1.0 && r.residual < 1e-9);
        let d5 = DosEvaluator::new(0.5).unwrap();
        let a = solve_neel(1.0, &d5).unwrap().t_n;
        let b = solve_neel(2.0, &d5).unwrap().t_n;
        assert!(a < b);
        assert!(matches!(
            solve_neel(0.2, &d0),
            Err(Error::UnderflowGuard { .. })
        ));
    }
}
