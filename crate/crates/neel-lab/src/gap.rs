//! Antiferromagnetic gap equation `1/U = F_T(Δ)` and the mean-field free
//! energy whose minimiser it is.

use crate::dos::DosEvaluator;
use crate::error::{Error, Result};
use crate::neel::{solver_settings, tanh_over};
use crate::numerics::{solve_monotone, try_integrate_breaks, Endpoint, Ends, RootBracket};

/// Temperatures below this are treated as zero (`tanh ≡ 1`).
pub const ZERO_TEMPERATURE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct GapSolution {
    pub u: f64,
    pub t_z: f64,
    pub t: f64,
    pub delta_af: f64,
    /// `2Δ_AF/U`
    pub m_af: f64,
    /// `Δ_AF/T_N`
    pub m_hat: f64,
    /// `|1/U − F_T(Δ_AF)|`, zero when the gap is closed.
    pub residual: f64,
    pub t_n_used: f64,
    pub iterations: usize,
}

fn effective_t(t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("temperature must be >= 0, got {t}")));
    }
    Ok(if t < ZERO_TEMPERATURE { 0.0 } else { t })
}

/// `F_T(Δ) = ∫₀^{4+2t_z} N_tz(ε) tanh(E/2T)/E dε`, `E = √(Δ²+ε²)`, with
/// `tanh ≡ 1` at `T = 0`.
pub fn f_big_t(delta: f64, t: f64, dos: &DosEvaluator) -> Result<f64> {
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::domain(format!("gap must be >= 0, got {delta}")));
    }
    let t = effective_t(t)?;
    if delta == 0.0 && t == 0.0 {
        return Err(Error::Singularity("F_T diverges at delta = T = 0".into()));
    }
    let settings = solver_settings();
    let points = dos.energy_grid(delta.max(2.0 * t));
    let ends = Ends::left(Endpoint::LogSingular);
    let value = if t == 0.0 {
        let f = |e: f64| Ok(dos.eval(e)? / delta.hypot(e));
        try_integrate_breaks(f, &points, ends, &settings)?.value
    } else {
        let h = 0.5 / t;
        let f = |e: f64| Ok(dos.eval(e)? * tanh_over(delta.hypot(e) * h) * h);
        try_integrate_breaks(f, &points, ends, &settings)?.value
    };
    Ok(value)
}

/// `ln(2cosh(x/2))·2 − x = 2 ln(1 + e^{−x})` for `x ≥ 0`.
fn log_cosh_excess(x: f64) -> f64 {
    2.0 * (-x).exp().ln_1p()
}

/// Mean-field free energy per site restricted to antiferromagnetic fields:
/// `G_T(Δ) = −4T ∫ N ln(2cosh(E/2T)) + Δ²/U`, which at `T = 0` becomes
/// `−2∫ N E + Δ²/U`. Evaluated as the `T = 0` form minus `4T∫N ln(1+e^{−E/T})`.
pub fn free_energy(delta: f64, u: f64, t: f64, dos: &DosEvaluator) -> Result<f64> {
    if !(delta >= 0.0) || !(u > 0.0) {
        return Err(Error::domain("free_energy needs delta >= 0 and U > 0"));
    }
    let t = effective_t(t)?;
    let settings = solver_settings();
    let points = dos.energy_grid(delta.max(2.0 * t).max(1e-3));
    let ends = Ends::left(Endpoint::LogSingular);
    let band = try_integrate_breaks(
        |e: f64| Ok(dos.eval(e)? * delta.hypot(e)),
        &points,
        ends,
        &settings,
    )?
    .value;
    let thermal = if t == 0.0 {
        0.0
    } else {
        try_integrate_breaks(
            |e: f64| Ok(dos.eval(e)? * log_cosh_excess(delta.hypot(e) / t)),
            &points,
            ends,
            &settings,
        )?
        .value
    };
    Ok(-2.0 * band - 2.0 * t * thermal + delta * delta / u)
}

/// Solves the gap equation at `(U, T)` for the density `dos`, given the
/// Néel temperature `t_n` for the same `(U, t_z)`.
pub fn solve_gap(u: f64, t: f64, t_n: f64, dos: &DosEvaluator) -> Result<GapSolution> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::domain(format!("U must be positive, got {u}")));
    }
    if !(t_n > 0.0) {
        return Err(Error::domain(format!("T_N must be positive, got {t_n}")));
    }
    let t_eff = effective_t(t)?;
    let mut sol = GapSolution {
        u,
        t_z: dos.t_z(),
        t,
        delta_af: 0.0,
        m_af: 0.0,
        m_hat: 0.0,
        residual: 0.0,
        t_n_used: t_n,
        iterations: 0,
    };
    if t >= t_n {
        return Ok(sol);
    }
    let target = 1.0 / u;
    let g = |x: f64| -> Result<f64> { Ok(f_big_t(x.exp(), t_eff, dos)? - target) };
    let lo = 1e-14f64;
    let hi = 0.5 * u * (1.0 - 1e-12);
    let (g_lo, g_hi) = (g(lo.ln())?, g(hi.ln())?);
    if g_lo <= 0.0 {
        return Err(Error::NoConvergence(format!(
            "F_T(0) <= 1/U at T = {t} < T_N = {t_n}: T_N and the gap quadrature disagree"
        )));
    }
    let bracket = RootBracket {
        lo: lo.ln(),
        hi: hi.ln(),
        f_lo: g_lo,
        f_hi: g_hi,
    };
    bracket.validate()?;
    let out = solve_monotone(g, bracket, 1e-14)?;
    let delta = out.root.exp();
    sol.delta_af = delta;
    sol.m_af = 2.0 * delta / u;
    sol.m_hat = delta / t_n;
    sol.residual = g(out.root)?.abs();
    sol.iterations = out.iterations;
    Ok(sol)
}

/// `m̂ = Δ_AF/T_N`.
pub fn m_hat(u: f64, t: f64, t_n: f64, dos: &DosEvaluator) -> Result<f64> {
    if !(t_n > 0.0) {
        return Err(Error::domain("m_hat needs T_N > 0"));
    }
    Ok(solve_gap(u, t, t_n, dos)?.m_hat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neel::solve_neel;

    #[test]
    fn gap_examples() {
        let dos = DosEvaluator::new(0.5).unwrap();
        let t_n = solve_neel(2.0, &dos).unwrap().t_n;
        assert_eq!(solve_gap(2.0, 1.1 * t_n, t_n, &dos).unwrap().delta_af, 0.0);
        let s = solve_gap(2.0, 0.0, t_n, &dos).unwrap();
        assert!(s.delta_af > 0.0 && s.delta_af < 1.0);
        assert!(s.residual < 1e-10);
        assert!(m_hat(2.0, t_n, t_n, &dos).unwrap() == 0.0);
    }

    #[test]
    fn f_big_t_properties() {
        let dos = DosEvaluator::new(0.5).unwrap();
        assert!(f_big_t(50.0, 1.0, &dos).unwrap() < f_big_t(1.0, 1.0, &dos).unwrap());
        assert!(f_big_t(1.0, 0.1, &dos).unwrap() < 0.5);
        let d0 = DosEvaluator::new(0.0).unwrap();
        assert!(f_big_t(0.0, 0.0, &d0).unwrap_err().is_domain());
    }

    #[test]
    fn free_energy_derivative_identity() {
        let dos = DosEvaluator::new(0.5).unwrap();
        let (u, t, d) = (2.0, 0.1, 0.2);
        let h = 1e-4;
        let g = |x| free_energy(x, u, t, &dos).unwrap();
        let fd = (g(d + h) - g(d - h)) / (2.0 * h);
        let exact = 2.0 * d * (1.0 / u - f_big_t(d, t, &dos).unwrap());
        assert!((fd - exact).abs() < 1e-6, "{fd} vs {exact}");
    }
}
