//! Γ and ψ for real arguments.

use crate::error::{Error, Result};
use crate::Real;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Euler's constant as a typed value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerGamma {
    pub value: f64,
}

impl Default for EulerGamma {
    fn default() -> Self {
        EulerGamma { value: EULER_GAMMA }
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

/// sin(πx) with the argument reduced to [-1/2, 1/2] first.
fn sin_pi<T: Real>(x: T) -> T {
    let n = (x + T::of(0.5)).floor();
    let r = x - n;
    let s = (T::pi() * r).sin();
    if n.as_f64().rem_euclid(2.0) == 0.0 {
        s
    } else {
        -s
    }
}

fn cos_pi<T: Real>(x: T) -> T {
    sin_pi(x + T::of(0.5))
}

/// Γ(x) by the Lanczos approximation (g = 7, 9 terms), reflected for x < 1/2.
pub fn gamma_fn<T: Real>(x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::domain("gamma_fn argument must be finite"));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "gamma",
            x: x.as_f64(),
        });
    }
    if x < T::of(0.5) {
        let g = gamma_fn(T::one() - x)?;
        return Ok(T::pi() / (sin_pi(x) * g));
    }
    Ok(lanczos(x))
}

fn lanczos<T: Real>(x: T) -> T {
    let x = x - T::one();
    let mut a = T::of(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += T::of(c) / (x + T::of(i as f64));
    }
    let t = x + T::of(LANCZOS_G + 0.5);
    let two_pi = T::pi() + T::pi();
    two_pi.sqrt() * ((x + T::of(0.5)) * t.ln() - t).exp() * a
}

/// ψ(x) = Γ′(x)/Γ(x): recurrence up to x ≥ 10, then the asymptotic series;
/// reflection for negative arguments.
pub fn digamma_fn<T: Real>(x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::domain("digamma_fn argument must be finite"));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            function: "digamma",
            x: x.as_f64(),
        });
    }
    if x < T::zero() {
        // ψ(x) = ψ(1 − x) − π cot(πx)
        let cot = cos_pi(x) / sin_pi(x);
        return Ok(digamma_fn(T::one() - x)? - T::pi() * cot);
    }
    let mut x = x;
    let mut acc = T::zero();
    let ten = T::of(10.0);
    while x < ten {
        acc -= x.recip();
        x += T::one();
    }
    // B_{2k}/(2k) for k = 1..7
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let inv2 = (x * x).recip();
    let mut p = inv2;
    let mut series = T::zero();
    for c in C {
        series += T::of(c) * p;
        p *= inv2;
    }
    Ok(acc + x.ln() - T::of(0.5) / x - series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_examples() {
        assert!(rel(gamma_fn(1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel(gamma_fn(0.5).unwrap(), 1.772_453_850_905_516) < 1e-14);
        assert!(rel(gamma_fn(5.0).unwrap(), 24.0) < 1e-14);
        // Γ(−1/2) = −2√π, Γ(−5/2) = −8√π/15
        let sp = std::f64::consts::PI.sqrt();
        assert!(rel(gamma_fn(-0.5).unwrap(), -2.0 * sp) < 1e-13);
        assert!(rel(gamma_fn(-2.5).unwrap(), -8.0 * sp / 15.0) < 1e-13);
    }

    #[test]
    fn gamma_poles() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma_fn(x), Err(Error::Pole { .. })));
            assert!(matches!(digamma_fn(x), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn digamma_examples() {
        let g = EULER_GAMMA;
        let d1 = digamma_fn(1.0).unwrap();
        assert!((d1 + g).abs() < 1e-13, "{d1}");
        assert!((digamma_fn(0.5).unwrap() + g + 2.0 * 2f64.ln()).abs() < 1e-13);
        assert!((digamma_fn(2.0).unwrap() - (1.0 - g)).abs() < 1e-13);
        // ψ(1/2 − l) = ψ(1/2 + l) for integer l (reflection with cot = 0)
        for l in 1..8 {
            let a = digamma_fn(0.5 - l as f64).unwrap();
            let b = digamma_fn(0.5 + l as f64).unwrap();
            assert!((a - b).abs() < 1e-12, "l = {l}: {a} vs {b}");
        }
    }

    #[test]
    fn recurrences_on_grid() {
        for x in [0.1, 0.25, 0.5, 1.5, 3.7] {
            let g0 = gamma_fn(x).unwrap();
            let g1 = gamma_fn(x + 1.0).unwrap();
            assert!(rel(g1, x * g0) < 1e-12);
            let p0 = digamma_fn(x).unwrap();
            let p1 = digamma_fn(x + 1.0).unwrap();
            assert!(rel(p1, p0 + 1.0 / x) < 1e-12);
        }
    }

    #[test]
    fn euler_constant() {
        assert!((EulerGamma::default().value - 0.5772156649015329).abs() < 1e-15);
    }
}
