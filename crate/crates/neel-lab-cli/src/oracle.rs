//! Brute-force square-lattice oracle: the gap and Néel equations written as
//! averages over a midpoint grid on `[−π, π]²`,
//! `1/U = ½⟨tanh(E_k/2T)/E_k⟩` with `E_k = √(Δ² + ε_k²)`,
//! `ε_k = −2(cos k₁ + cos k₂)`.
//!
//! The summands are smooth and periodic, so the midpoint rule converges
//! geometrically; each estimate is reported at `n` and `2n` points per axis.

use std::f64::consts::PI;

use neel_lab::numerics::{find_root_monotone, RootBracket};
use neel_lab::Result;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridEstimate {
    /// Value on the finer grid.
    pub value: f64,
    /// Change from the coarser grid.
    pub change: f64,
}

/// Band energies on one quadrant of an `n × n` midpoint grid (`n` even);
/// the other quadrants repeat them by `k ↦ −k`.
fn quadrant(n: usize) -> Vec<f64> {
    assert!(n >= 2 && n % 2 == 0, "grid size must be even");
    let h = 2.0 * PI / n as f64;
    let c: Vec<f64> = (0..n / 2)
        .map(|i| (-PI + (i as f64 + 0.5) * h).cos())
        .collect();
    let mut e = Vec::with_capacity(c.len() * c.len());
    for &a in &c {
        for &b in &c {
            e.push(-2.0 * (a + b));
        }
    }
    e
}

fn tanh_over(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 3.0
    } else {
        x.tanh() / x
    }
}

/// `½⟨tanh(E/2T)/E⟩`, with `tanh ≡ 1` at `T = 0`.
fn average(band: &[f64], delta: f64, t: f64) -> f64 {
    let s: f64 = if t == 0.0 {
        band.iter().map(|&e| 1.0 / delta.hypot(e)).sum()
    } else {
        let h = 0.5 / t;
        band.iter()
            .map(|&e| tanh_over(delta.hypot(e) * h) * h)
            .sum()
    };
    0.5 * s / band.len() as f64
}

fn gap_on(band: &[f64], u: f64, t: f64) -> Result<f64> {
    let g = |x: f64| average(band, x.exp(), t) - 1.0 / u;
    let b = RootBracket::evaluate(1e-8f64.ln(), (0.5 * u).ln(), g)?;
    Ok(find_root_monotone(g, b, 1e-14)?.exp())
}

fn neel_on(band: &[f64], u: f64) -> Result<f64> {
    let g = |x: f64| average(band, 0.0, x.exp()) - 1.0 / u;
    let b = RootBracket::evaluate(1e-4f64.ln(), (0.5 * u).ln(), g)?;
    Ok(find_root_monotone(g, b, 1e-14)?.exp())
}

fn refine(n: usize, f: impl Fn(&[f64]) -> Result<f64>) -> Result<GridEstimate> {
    let coarse = f(&quadrant(n))?;
    let fine = f(&quadrant(2 * n))?;
    Ok(GridEstimate {
        value: fine,
        change: (fine - coarse).abs(),
    })
}

/// `Δ_AF(U, T)` on grids of `n` and `2n` points per axis.
pub fn grid_gap(u: f64, t: f64, n: usize) -> Result<GridEstimate> {
    refine(n, |b| gap_on(b, u, t))
}

/// `T_N(U)` on grids of `n` and `2n` points per axis.
pub fn grid_neel(u: f64, n: usize) -> Result<GridEstimate> {
    refine(n, |b| neel_on(b, u))
}
