//! Small-ε expansion of `N₀` and small-`t_z` expansion of `N_tz(0)`.
//!
//! `N₀(ε) ∼ −1/(π²(4−ε)) Σ_{k,l} A_{k,l}(−ε/(4−ε), 4/(4−ε))` with
//!
//! ```text
//! A_{k,l}(w₁, w₂) = w₁^k (w₂−1)^l Γ(k+½)Γ(k+l+1) / (Γ(k+1)² Γ(½−l) Γ(l+1)²)
//!     · { ln(−w₁) + ln(w₂−1) + 2(ψ(k+l+1) − ψ(k+1) − ψ(l+1)) + ψ(k+½) + ψ(½−l) }.
//! ```

use crate::error::{Error, Result};
use crate::numerics::{digamma_fn, gamma_fn};
use crate::Real;

/// How [`n0_series`] evaluates the expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMode {
    /// The closed polynomial in `ε` and `ln(16/ε)` through `ε¹⁰`.
    Printed,
    /// The double sum over `A_{k,l}` truncated at `k ≤ k_max`, `l ≤ l_max`.
    Assembled,
}

/// Truncation and mode for [`n0_series`]. The coefficient table (the Γ ratio
/// and the ψ combination of each `A_{k,l}`) is built once.
#[derive(Clone, Debug)]
pub struct SeriesSpec<T> {
    pub k_max: usize,
    pub l_max: usize,
    pub mode: SeriesMode,
    assembled: Vec<(usize, usize, T, T)>,
}

/// Default truncation of the assembled sum.
pub const DEFAULT_TRUNCATION: usize = 10;

impl<T: Real> SeriesSpec<T> {
    pub fn new(k_max: usize, l_max: usize, mode: SeriesMode) -> Result<Self> {
        let mut assembled = Vec::with_capacity((k_max + 1) * (l_max + 1));
        for k in 0..=k_max {
            for l in 0..=l_max {
                let (g, d) = kl_coefficients::<T>(k, l)?;
                if !(g.is_finite() && d.is_finite()) {
                    return Err(Error::NoConvergence(format!("A_{{{k},{l}}} overflows")));
                }
                assembled.push((k, l, g, d));
            }
        }
        Ok(SeriesSpec {
            k_max,
            l_max,
            mode,
            assembled,
        })
    }

    pub fn printed() -> Self {
        Self::new(DEFAULT_TRUNCATION, DEFAULT_TRUNCATION, SeriesMode::Printed)
            .expect("finite table")
    }

    pub fn assembled(k_max: usize, l_max: usize) -> Result<Self> {
        Self::new(k_max, l_max, SeriesMode::Assembled)
    }
}

impl<T: Real> Default for SeriesSpec<T> {
    fn default() -> Self {
        Self::printed()
    }
}

fn kl_coefficients<T: Real>(k: usize, l: usize) -> Result<(T, T)> {
    let (kf, lf) = (T::of(k as f64), T::of(l as f64));
    let (one, half) = (T::one(), T::of(0.5));
    let gk1 = gamma_fn(kf + one)?;
    let gl1 = gamma_fn(lf + one)?;
    let g = gamma_fn(kf + half)? * gamma_fn(kf + lf + one)?
        / (gk1 * gk1 * gamma_fn(half - lf)? * gl1 * gl1);
    let two = T::of(2.0);
    let d = two * (digamma_fn(kf + lf + one)? - digamma_fn(kf + one)? - digamma_fn(lf + one)?)
        + digamma_fn(kf + half)?
        + digamma_fn(half - lf)?;
    Ok((g, d))
}

/// `A_{k,l}(w₁, w₂)` on the real branch `w₁ < 0`, `w₂ > 1`.
pub fn a_kl<T: Real>(k: usize, l: usize, w1: T, w2: T) -> Result<T> {
    if !(w1 < T::zero()) || !(w2 > T::one()) {
        return Err(Error::domain(format!(
            "A_kl needs w1 < 0 and w2 > 1, got ({w1}, {w2})"
        )));
    }
    let (g, d) = kl_coefficients::<T>(k, l)?;
    let w21 = w2 - T::one();
    Ok(w1.powi(k as i32) * w21.powi(l as i32) * g * ((-w1).ln() + w21.ln() + d))
}

fn check_unit<T: Real>(x: T, what: &str) -> Result<()> {
    if x > T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} must lie in (0, 1], got {x}")))
    }
}

/// `(numerator, denominator, a, b)` for `ε^{2j}·(n/d)·(a·L − b)/π²`, `L = ln(16/ε)`.
const N0_TERMS: [(f64, f64, f64, f64); 6] = [
    (1.0, 2.0, 1.0, 0.0),
    (1.0, 128.0, 1.0, 1.0),
    (3.0, 65_536.0, 6.0, 7.0),
    (5.0, 3.0 * 4_194_304.0, 30.0, 37.0),
    (35.0, 3.0 * 8_589_934_592.0, 420.0, 533.0),
    (63.0, 5.0 * 549_755_813_888.0, 1260.0, 1627.0),
];

const NTZ0_TERMS: [(f64, f64, f64, f64); 6] = [
    (1.0, 2.0, 1.0, 0.0),
    (1.0, 128.0, 2.0, 3.0),
    (27.0, 65_536.0, 4.0, 7.0),
    (25.0, 2_097_152.0, 20.0, 37.0),
    (1225.0, 8_589_934_592.0, 280.0, 533.0),
    (11907.0, 5.0 * 274_877_906_944.0, 840.0, 1627.0),
];

fn log_polynomial<T: Real>(x: T, terms: &[(f64, f64, f64, f64)]) -> T {
    let l = (T::of(16.0) / x).ln();
    let x2 = x * x;
    let mut p = T::one();
    let mut s = T::zero();
    for &(n, d, a, b) in terms {
        s += p * T::of(n) / T::of(d) * (T::of(a) * l - T::of(b));
        p *= x2;
    }
    s / (T::pi() * T::pi())
}

/// One term `ε^{2j}(n/d)(aL − b)/π²` of the printed `N₀` polynomial.
pub fn n0_printed_term<T: Real>(eps: T, j: usize) -> T {
    let (n, d, a, b) = N0_TERMS[j];
    let l = (T::of(16.0) / eps).ln();
    eps.powi(2 * j as i32) * T::of(n) / T::of(d) * (T::of(a) * l - T::of(b)) / (T::pi() * T::pi())
}

/// The printed polynomial through `ε^{2 max_j}`.
pub fn n0_printed<T: Real>(eps: T, max_j: usize) -> T {
    log_polynomial(eps, &N0_TERMS[..=max_j.min(5)])
}

/// The `A_{k,l}` double sum.
pub fn n0_assembled<T: Real>(eps: T, spec: &SeriesSpec<T>) -> T {
    let four = T::of(4.0);
    let q = eps / (four - eps);
    let lq = q.ln() + q.ln();
    let mut s = T::zero();
    for &(k, l, g, d) in &spec.assembled {
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        s += sign * q.powi((k + l) as i32) * g * (lq + d);
    }
    -s / (T::pi() * T::pi() * (four - eps))
}

/// Small-ε expansion of `N₀(ε)` for `ε ∈ (0, 1]`.
pub fn n0_series<T: Real>(eps: T, spec: &SeriesSpec<T>) -> Result<T> {
    check_unit(eps, "eps")?;
    Ok(match spec.mode {
        SeriesMode::Printed => n0_printed(eps, 5),
        SeriesMode::Assembled => n0_assembled(eps, spec),
    })
}

/// Termwise derivative of the printed `N₀` polynomial.
pub fn n0_series_derivative<T: Real>(eps: T) -> Result<T> {
    check_unit(eps, "eps")?;
    let l = (T::of(16.0) / eps).ln();
    let mut s = T::zero();
    for (j, &(n, d, a, b)) in N0_TERMS.iter().enumerate() {
        let c = T::of(n) / T::of(d);
        let (a, b) = (T::of(a), T::of(b));
        // d/dε [ε^{2j}(aL − b)] = ε^{2j−1}(2j(aL − b) − a)
        let jj = T::of(2.0 * j as f64);
        s += c * eps.powi(2 * j as i32 - 1) * (jj * (a * l - b) - a);
    }
    Ok(s / (T::pi() * T::pi()))
}

/// `N_tz(0)` through `t_z^{order}` (`order` even, at most 10).
pub fn n_tz0_series<T: Real>(t_z: T, order: usize) -> Result<T> {
    check_unit(t_z, "t_z")?;
    if order > 10 {
        return Err(Error::domain(format!(
            "order must be at most 10, got {order}"
        )));
    }
    Ok(log_polynomial(t_z, &NTZ0_TERMS[..=order / 2]))
}
