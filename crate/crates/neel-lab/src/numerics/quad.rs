//! Globally adaptive Gauss–Kronrod (7/15) quadrature with endpoint maps.
//!
//! Square-root endpoint singularities are removed by the substitutions
//! `x = a + w sin²θ` (both ends) or `x = a + w s²` (one end); logarithmic
//! endpoint singularities by `x = a + w e^{-t}`. All panels of one call share a
//! single priority queue, so the error budget is global.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::Zero;

use super::gk::{WG, WGK, XGK};
use crate::error::{Error, Result};
use crate::Real;

/// Values that can be integrated: real scalars and complex numbers.
pub trait QuadValue<T: Real>:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<T, Output = Self> + Zero
{
    fn norm(self) -> T;
}

impl<T: Real> QuadValue<T> for T {
    fn norm(self) -> T {
        self.abs()
    }
}

impl<T: Real> QuadValue<T> for Complex<T> {
    fn norm(self) -> T {
        (self.re * self.re + self.im * self.im).sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSettings<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_subdivisions: usize,
    /// Relative width of the panel next to a flagged endpoint that receives
    /// the singular substitution when the interval is split.
    pub singularity_split: T,
}

impl<T: Real> Default for QuadratureSettings<T> {
    fn default() -> Self {
        QuadratureSettings {
            abs_tol: T::of(1e-11),
            rel_tol: T::of(1e-10),
            max_subdivisions: 2000,
            singularity_split: T::of(1e-3),
        }
    }
}

impl<T: Real> QuadratureSettings<T> {
    pub fn new(abs_tol: T, rel_tol: T) -> Self {
        QuadratureSettings {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    /// Both tolerances multiplied by `factor`.
    pub fn scaled(mut self, factor: T) -> Self {
        self.abs_tol *= factor;
        self.rel_tol *= factor;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let half = T::of(0.5);
        if !(self.abs_tol > T::zero() && self.rel_tol > T::zero()) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        if !(self.singularity_split > T::zero() && self.singularity_split <= half) {
            return Err(Error::domain("singularity_split must lie in (0, 1/2]"));
        }
        Ok(())
    }

    fn target(&self, magnitude: T) -> T {
        self.abs_tol.max(self.rel_tol * magnitude)
    }
}

/// Behaviour of the integrand at an endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Endpoint {
    #[default]
    Regular,
    /// Integrable `|x - c|^{-1/2}` type behaviour, or a `|x - c|^{1/2}` kink.
    SqrtSingular,
    /// Integrable `ln|x - c|` type behaviour.
    LogSingular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Ends {
    pub left: Endpoint,
    pub right: Endpoint,
}

impl Ends {
    pub const REGULAR: Ends = Ends::new(Endpoint::Regular, Endpoint::Regular);
    pub const SQRT_BOTH: Ends = Ends::new(Endpoint::SqrtSingular, Endpoint::SqrtSingular);

    pub const fn new(left: Endpoint, right: Endpoint) -> Self {
        Ends { left, right }
    }
    pub const fn left(left: Endpoint) -> Self {
        Ends::new(left, Endpoint::Regular)
    }
    pub const fn right(right: Endpoint) -> Self {
        Ends::new(Endpoint::Regular, right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate<T, V> {
    pub value: V,
    pub error: T,
    pub evaluations: usize,
    pub subdivisions: usize,
}

/// ∫_a^b f(x) dx with the given endpoint behaviour.
pub fn integrate<T, V, F>(
    mut f: F,
    a: T,
    b: T,
    ends: Ends,
    settings: &QuadratureSettings<T>,
) -> Result<Estimate<T, V>>
where
    T: Real,
    V: QuadValue<T>,
    F: FnMut(T) -> V,
{
    try_integrate_breaks(|x| Ok(f(x)), &[a, b], ends, settings)
}

/// Like [`integrate`] but over the panels delimited by `points`; interior
/// points are treated as regular breakpoints, `ends` applies to the outer two.
pub fn integrate_breaks<T, V, F>(
    mut f: F,
    points: &[T],
    ends: Ends,
    settings: &QuadratureSettings<T>,
) -> Result<Estimate<T, V>>
where
    T: Real,
    V: QuadValue<T>,
    F: FnMut(T) -> V,
{
    try_integrate_breaks(|x| Ok(f(x)), points, ends, settings)
}

/// ∫_a^∞ f(x) dx. `tail(X)` must bound |∫_X^∞ f|; the range is cut at the
/// first X (doubling outward) where the bound drops below abs_tol/10.
pub fn integrate_to_infinity<T, V, F, B>(
    mut f: F,
    a: T,
    left: Endpoint,
    mut tail: B,
    settings: &QuadratureSettings<T>,
) -> Result<Estimate<T, V>>
where
    T: Real,
    V: QuadValue<T>,
    F: FnMut(T) -> V,
    B: FnMut(T) -> T,
{
    let points = tail_breaks(a, &mut tail, settings)?;
    try_integrate_breaks(|x| Ok(f(x)), &points, Ends::left(left), settings)
}

pub(crate) fn tail_breaks<T: Real, B: FnMut(T) -> T>(
    a: T,
    tail: &mut B,
    settings: &QuadratureSettings<T>,
) -> Result<Vec<T>> {
    let target = settings.abs_tol / T::of(10.0);
    let h = T::one().max(a.abs());
    let mut points = vec![a, a + h];
    let mut width = h;
    while tail(a + width) > target {
        width = width + width;
        points.push(a + width);
        if points.len() > 200 {
            return Err(Error::domain("tail bound never drops below the tolerance"));
        }
    }
    Ok(points)
}

/// Fallible-integrand version of [`integrate_breaks`]; the first error raised
/// by `f` aborts the integration.
pub fn try_integrate_breaks<T, V, F>(
    mut f: F,
    points: &[T],
    ends: Ends,
    settings: &QuadratureSettings<T>,
) -> Result<Estimate<T, V>>
where
    T: Real,
    V: QuadValue<T>,
    F: FnMut(T) -> Result<V>,
{
    settings.validate()?;
    if points.len() < 2 {
        return Err(Error::domain("need at least two integration points"));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::domain("integration limits must be finite"));
    }
    let (a, b) = (points[0], points[points.len() - 1]);
    if a == b && points.len() == 2 {
        return Ok(Estimate {
            value: V::zero(),
            error: T::zero(),
            evaluations: 0,
            subdivisions: 0,
        });
    }
    if b < a {
        let rev: Vec<T> = points.iter().rev().copied().collect();
        let flipped = Ends::new(ends.right, ends.left);
        let mut est = try_integrate_breaks(f, &rev, flipped, settings)?;
        est.value = V::zero() - est.value;
        return Ok(est);
    }
    if points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain(
            "integration points must be strictly increasing",
        ));
    }
    let n = points.len() - 1;
    let mut pieces = Vec::new();
    for i in 0..n {
        let l = if i == 0 { ends.left } else { Endpoint::Regular };
        let r = if i == n - 1 {
            ends.right
        } else {
            Endpoint::Regular
        };
        split_panel(points[i], points[i + 1], l, r, settings, &mut pieces);
    }
    adapt(&mut f, &pieces, settings)
}

#[derive(Clone, Copy, Debug)]
enum Map<T> {
    Id,
    /// x = a + w sin²θ, θ ∈ [0, π/2]
    SinSq {
        a: T,
        b: T,
        w: T,
    },
    /// x = a + w s², s ∈ [0, 1]
    SqLeft {
        a: T,
        w: T,
    },
    /// x = b − w s², s ∈ [0, 1]
    SqRight {
        b: T,
        w: T,
    },
    /// x = a + w e^{-t}
    ExpLeft {
        a: T,
        w: T,
    },
    /// x = b − w e^{-t}
    ExpRight {
        b: T,
        w: T,
    },
}

impl<T: Real> Map<T> {
    #[inline]
    fn apply(&self, t: T) -> (T, T) {
        let two = T::of(2.0);
        match *self {
            Map::Id => (t, T::one()),
            Map::SinSq { a, b, w } => {
                let (s, c) = (t.sin(), t.cos());
                let x = if s <= c { a + w * s * s } else { b - w * c * c };
                (x, two * w * s * c)
            }
            Map::SqLeft { a, w } => (a + w * t * t, two * w * t),
            Map::SqRight { b, w } => (b - w * t * t, two * w * t),
            Map::ExpLeft { a, w } => {
                let e = (-t).exp();
                (a + w * e, w * e)
            }
            Map::ExpRight { b, w } => {
                let e = (-t).exp();
                (b - w * e, w * e)
            }
        }
    }
}

struct Piece<T> {
    map: Map<T>,
    breaks: Vec<T>,
}

fn exp_breaks<T: Real>(anchor: T, w: T) -> Vec<T> {
    // Stop before x rounds onto the singular anchor.
    let eps = T::epsilon();
    let mut t_max = T::of(2.0) * (T::one() / eps).ln();
    if anchor != T::zero() {
        let cap = (w / (T::of(4.0) * eps * anchor.abs())).ln();
        t_max = t_max.min(cap);
    }
    let t_max = t_max.max(T::one());
    let mut breaks = vec![T::zero()];
    let mut t = T::one();
    while t < t_max {
        breaks.push(t);
        t = t + t;
    }
    breaks.push(t_max);
    breaks
}

fn split_panel<T: Real>(
    a: T,
    b: T,
    l: Endpoint,
    r: Endpoint,
    settings: &QuadratureSettings<T>,
    out: &mut Vec<Piece<T>>,
) {
    use Endpoint::*;
    let w = b - a;
    let one = T::one();
    match (l, r) {
        (Regular, Regular) => out.push(Piece {
            map: Map::Id,
            breaks: vec![a, b],
        }),
        (SqrtSingular, SqrtSingular) => {
            let q = T::frac_pi_2();
            out.push(Piece {
                map: Map::SinSq { a, b, w },
                breaks: vec![T::zero(), q / T::of(2.0), q],
            })
        }
        (SqrtSingular, Regular) => out.push(Piece {
            map: Map::SqLeft { a, w },
            breaks: vec![T::zero(), one],
        }),
        (Regular, SqrtSingular) => out.push(Piece {
            map: Map::SqRight { b, w },
            breaks: vec![T::zero(), one],
        }),
        _ => {
            let d = settings.singularity_split * w;
            let lo = if l == Regular { a } else { a + d };
            let hi = if r == Regular { b } else { b - d };
            match l {
                SqrtSingular => out.push(Piece {
                    map: Map::SqLeft { a, w: d },
                    breaks: vec![T::zero(), one],
                }),
                LogSingular => out.push(Piece {
                    map: Map::ExpLeft { a, w: d },
                    breaks: exp_breaks(a, d),
                }),
                Regular => {}
            }
            if lo < hi {
                out.push(Piece {
                    map: Map::Id,
                    breaks: vec![lo, hi],
                });
            }
            match r {
                SqrtSingular => out.push(Piece {
                    map: Map::SqRight { b, w: d },
                    breaks: vec![T::zero(), one],
                }),
                LogSingular => out.push(Piece {
                    map: Map::ExpRight { b, w: d },
                    breaks: exp_breaks(b, d),
                }),
                Regular => {}
            }
        }
    }
}

struct Rule<T> {
    xgk: [T; 8],
    wgk: [T; 8],
    wg: [T; 4],
}

impl<T: Real> Rule<T> {
    fn new() -> Self {
        Rule {
            xgk: XGK.map(|(h, l)| T::from_pair(h, l)),
            wgk: WGK.map(|(h, l)| T::from_pair(h, l)),
            wg: WG.map(|(h, l)| T::from_pair(h, l)),
        }
    }
}

struct Seg<T, V> {
    piece: usize,
    t0: T,
    t1: T,
    value: V,
    err: T,
}

impl<T: Real, V> PartialEq for Seg<T, V> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T: Real, V> Eq for Seg<T, V> {}
impl<T: Real, V> PartialOrd for Seg<T, V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real, V> Ord for Seg<T, V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(Ordering::Equal)
    }
}

struct Worker<'a, T, F> {
    f: &'a mut F,
    pieces: &'a [Piece<T>],
    rule: Rule<T>,
    evaluations: usize,
}

impl<T, F> Worker<'_, T, F>
where
    T: Real,
{
    fn eval<V>(&mut self, piece: usize, t: T) -> Result<V>
    where
        V: QuadValue<T>,
        F: FnMut(T) -> Result<V>,
    {
        let (x, jac) = self.pieces[piece].map.apply(t);
        self.evaluations += 1;
        if jac == T::zero() {
            return Ok(V::zero());
        }
        let y = (self.f)(x)?;
        if !y.norm().is_finite() {
            return Err(Error::Singularity(format!(
                "integrand is not finite at x = {:e}",
                x.as_f64()
            )));
        }
        Ok(y * jac)
    }

    fn gk15<V>(&mut self, piece: usize, t0: T, t1: T) -> Result<Seg<T, V>>
    where
        V: QuadValue<T>,
        F: FnMut(T) -> Result<V>,
    {
        let two = T::of(2.0);
        let centr = (t0 + t1) / two;
        let hlgth = (t1 - t0) / two;
        let dhlgth = hlgth.abs();
        let fc: V = self.eval(piece, centr)?;
        let mut resg = fc * self.rule.wg[3];
        let mut resk = fc * self.rule.wgk[7];
        let mut resabs = fc.norm() * self.rule.wgk[7];
        let mut fv1 = [V::zero(); 7];
        let mut fv2 = [V::zero(); 7];
        for j in 0..7 {
            let dx = hlgth * self.rule.xgk[j];
            let f1: V = self.eval(piece, centr - dx)?;
            let f2: V = self.eval(piece, centr + dx)?;
            fv1[j] = f1;
            fv2[j] = f2;
            let w = self.rule.wgk[j];
            resk = resk + (f1 + f2) * w;
            resabs += w * (f1.norm() + f2.norm());
            if j % 2 == 1 {
                resg = resg + (f1 + f2) * self.rule.wg[j / 2];
            }
        }
        let reskh = resk * T::of(0.5);
        let mut resasc = self.rule.wgk[7] * (fc - reskh).norm();
        for j in 0..7 {
            resasc += self.rule.wgk[j] * ((fv1[j] - reskh).norm() + (fv2[j] - reskh).norm());
        }
        let value = resk * hlgth;
        resabs *= dhlgth;
        resasc *= dhlgth;
        let mut err = ((resk - resg) * hlgth).norm();
        if resasc != T::zero() && err != T::zero() {
            let r = T::of(200.0) * err / resasc;
            err = resasc * T::one().min(r * r.sqrt());
        }
        let eps = T::epsilon();
        if resabs > T::of(f64::MIN_POSITIVE) / (T::of(50.0) * eps) {
            err = err.max(T::of(50.0) * eps * resabs);
        }
        Ok(Seg {
            piece,
            t0,
            t1,
            value,
            err,
        })
    }
}

fn adapt<T, V, F>(
    f: &mut F,
    pieces: &[Piece<T>],
    settings: &QuadratureSettings<T>,
) -> Result<Estimate<T, V>>
where
    T: Real,
    V: QuadValue<T>,
    F: FnMut(T) -> Result<V>,
{
    let mut worker = Worker {
        f,
        pieces,
        rule: Rule::new(),
        evaluations: 0,
    };
    let mut heap: BinaryHeap<Seg<T, V>> = BinaryHeap::new();
    let mut frozen: Vec<Seg<T, V>> = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        for w in p.breaks.windows(2) {
            heap.push(worker.gk15(i, w[0], w[1])?);
        }
    }
    let mut subdivisions = 0usize;
    loop {
        let mut value = V::zero();
        let mut error = T::zero();
        for s in heap.iter().chain(frozen.iter()) {
            value = value + s.value;
            error += s.err;
        }
        if error <= settings.target(value.norm()) {
            return Ok(Estimate {
                value,
                error,
                evaluations: worker.evaluations,
                subdivisions,
            });
        }
        let exhausted = subdivisions >= settings.max_subdivisions;
        let worst = match heap.pop() {
            Some(s) if !exhausted => s,
            _ => {
                return Err(Error::Quadrature {
                    estimate: value.norm().as_f64(),
                    error: error.as_f64(),
                    subdivisions,
                })
            }
        };
        let mid = (worst.t0 + worst.t1) / T::of(2.0);
        let scale = worst.t0.abs().max(worst.t1.abs());
        if !(worst.t0 < mid && mid < worst.t1)
            || worst.t1 - worst.t0 <= T::of(100.0) * T::epsilon() * scale
        {
            frozen.push(worst);
            continue;
        }
        let left = worker.gk15(worst.piece, worst.t0, mid)?;
        let right = worker.gk15(worst.piece, mid, worst.t1)?;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DoubleDouble;

    fn s64() -> QuadratureSettings<f64> {
        QuadratureSettings::new(1e-13, 1e-13)
    }

    #[test]
    fn arcsine_integral_with_sqrt_endpoint() {
        let est = integrate(
            |u: f64| 1.0 / (4.0 - u * u).sqrt(),
            0.0,
            2.0,
            Ends::right(Endpoint::SqrtSingular),
            &s64(),
        )
        .unwrap();
        assert!((est.value - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
        assert!(est.error <= 1e-13_f64.max(1e-13 * est.value));
    }

    #[test]
    fn log_endpoint() {
        let est = integrate(
            |x: f64| -x.ln(),
            0.0,
            1.0,
            Ends::left(Endpoint::LogSingular),
            &s64(),
        )
        .unwrap();
        assert!((est.value - 1.0).abs() < 1e-13);
    }

    #[test]
    fn log_over_cosh_squared_to_infinity() {
        // ln(pi/4) - gamma
        let exact = (std::f64::consts::PI / 4.0).ln() - 0.5772156649015329;
        let est = integrate_to_infinity(
            |x: f64| x.ln() / x.cosh().powi(2),
            0.0,
            Endpoint::LogSingular,
            |x: f64| 4.0 * (x + 1.0) * (-2.0 * x).exp(),
            &s64(),
        )
        .unwrap();
        assert!((est.value - exact).abs() < 1e-12, "{}", est.value - exact);
    }

    #[test]
    fn sech_squared_normalisation() {
        let est = integrate_to_infinity(
            |e: f64| 0.5 / (e / 2.0).cosh().powi(2),
            0.0,
            Endpoint::Regular,
            |x: f64| 2.0 * (-x).exp(),
            &QuadratureSettings::default(),
        )
        .unwrap();
        assert!((est.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn sqrt_both_ends_and_reversed_limits() {
        let s = s64();
        let f = |u: f64| 1.0 / ((u + 1.0) * (2.0 - u)).sqrt();
        let fwd = integrate(f, -1.0, 2.0, Ends::SQRT_BOTH, &s).unwrap();
        let back = integrate(f, 2.0, -1.0, Ends::SQRT_BOTH, &s).unwrap();
        assert!((fwd.value - std::f64::consts::PI).abs() < 1e-13);
        assert_eq!(fwd.value, -back.value);
    }

    #[test]
    fn mixed_endpoints_split() {
        // ∫_0^1 ln(x)/sqrt(1-x) dx = 4 ln 2 - 4
        let exact = 4.0 * 2f64.ln() - 4.0;
        let est = integrate(
            |x: f64| x.ln() / (1.0 - x).sqrt(),
            0.0,
            1.0,
            Ends::new(Endpoint::LogSingular, Endpoint::SqrtSingular),
            &s64(),
        )
        .unwrap();
        assert!((est.value - exact).abs() < 1e-12, "{}", est.value - exact);
    }

    #[test]
    fn complex_values() {
        let est = integrate(
            |t: f64| Complex::new(t.cos(), t.sin()),
            0.0,
            std::f64::consts::PI,
            Ends::REGULAR,
            &s64(),
        )
        .unwrap();
        assert!(est.value.re.abs() < 1e-13);
        assert!((est.value.im - 2.0).abs() < 1e-13);
    }

    #[test]
    fn nonconvergence_carries_partial_estimate() {
        let s = QuadratureSettings::new(1e-14, 1e-14).with_max_subdivisions(3);
        let err = integrate(|x: f64| (1.0 / x).sin(), 1e-3, 1.0, Ends::REGULAR, &s).unwrap_err();
        assert!(matches!(
            err,
            Error::Quadrature {
                subdivisions: 3,
                ..
            }
        ));
    }

    #[test]
    fn invalid_settings_are_rejected() {
        let s = QuadratureSettings::<f64>::new(0.0, 1e-10);
        assert!(integrate(|x: f64| x, 0.0, 1.0, Ends::REGULAR, &s).is_err());
    }

    #[test]
    fn double_double_arcsine() {
        let s = QuadratureSettings::new(DoubleDouble::from(1e-29), DoubleDouble::from(1e-29));
        let est = integrate(
            |u: DoubleDouble| Real::recip(Real::sqrt(DoubleDouble::from(4.0) - u * u)),
            DoubleDouble::from(0.0),
            DoubleDouble::from(2.0),
            Ends::right(Endpoint::SqrtSingular),
            &s,
        )
        .unwrap();
        let d = est.value - DoubleDouble::frac_pi_2();
        assert!(d.abs().as_f64() < 1e-29, "{:e}", d.as_f64());
    }
}
