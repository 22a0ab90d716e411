//! Bracketed root finding for monotone functions.

use crate::error::{Error, Result};
use crate::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootBracket<T> {
    pub lo: T,
    pub hi: T,
    pub f_lo: T,
    pub f_hi: T,
}

impl<T: Real> RootBracket<T> {
    /// Evaluates `f` at both ends and validates the bracket.
    pub fn evaluate<F: FnMut(T) -> T>(lo: T, hi: T, mut f: F) -> Result<Self> {
        let b = RootBracket {
            lo,
            hi,
            f_lo: f(lo),
            f_hi: f(hi),
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.lo < self.hi
            && self.f_lo.is_finite()
            && self.f_hi.is_finite()
            && (self.f_lo * self.f_hi <= T::zero())
            && !(self.f_lo == T::zero() && self.f_hi == T::zero());
        if ok {
            Ok(())
        } else {
            Err(self.invalid())
        }
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    fn invalid(&self) -> Error {
        Error::InvalidBracket {
            lo: self.lo.as_f64(),
            hi: self.hi.as_f64(),
            f_lo: self.f_lo.as_f64(),
            f_hi: self.f_hi.as_f64(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOutcome<T> {
    pub root: T,
    /// Final bracket; its endpoints still straddle the root.
    pub bracket: RootBracket<T>,
    pub iterations: usize,
}

/// Root of a strictly monotone `f` inside `bracket`, to a bracket width of `tol`.
pub fn find_root_monotone<T, F>(mut f: F, bracket: RootBracket<T>, tol: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    solve_monotone(|x| Ok(f(x)), bracket, tol).map(|o| o.root)
}

/// Fallible-function version of [`find_root_monotone`] returning diagnostics.
///
/// Illinois-modified false position; a bisection step is forced whenever two
/// consecutive steps fail to halve the bracket. Every new value must lie
/// between the current end values, which detects non-monotone functions.
/// Excursions below `1e-9` of the initial end values are read as evaluation
/// noise: the function is resolved as far as it can be and the current point
/// is returned.
pub fn solve_monotone<T, F>(mut f: F, bracket: RootBracket<T>, tol: T) -> Result<RootOutcome<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    bracket.validate()?;
    if !(tol > T::zero()) {
        return Err(Error::domain("root tolerance must be positive"));
    }
    let mut b = bracket;
    let half = T::of(0.5);
    let mut g_lo = b.f_lo;
    let mut g_hi = b.f_hi;
    let mut last_side = 0i8;
    let mut width_two_back = b.width();
    let mut width_one_back = b.width();
    let mut iterations = 0;
    let noise = T::of(1e-9) * b.f_lo.abs().max(b.f_hi.abs());

    let exact = |x: T, b: &RootBracket<T>, iterations| {
        Ok(RootOutcome {
            root: x,
            bracket: *b,
            iterations,
        })
    };
    if b.f_lo == T::zero() {
        return exact(b.lo, &b, 0);
    }
    if b.f_hi == T::zero() {
        return exact(b.hi, &b, 0);
    }

    while b.width() > tol {
        iterations += 1;
        if iterations > 400 {
            return Err(Error::NoConvergence(format!(
                "bracket width {:e} after 400 iterations",
                b.width().as_f64()
            )));
        }
        let w = b.width();
        let bisect = iterations % 3 == 0 && w > half * width_two_back;
        let mut x = if bisect {
            b.lo + half * w
        } else {
            b.lo - g_lo * w / (g_hi - g_lo)
        };
        let guard = w * T::of(1e-3);
        if !(x > b.lo + guard && x < b.hi - guard) {
            x = x.max(b.lo + guard).min(b.hi - guard);
        }
        if !(x > b.lo && x < b.hi) {
            break;
        }
        let fx = f(x)?;
        if !fx.is_finite() {
            return Err(Error::NoConvergence(format!(
                "function not finite at x = {:e}",
                x.as_f64()
            )));
        }
        let (mn, mx) = if b.f_lo < b.f_hi {
            (b.f_lo, b.f_hi)
        } else {
            (b.f_hi, b.f_lo)
        };
        if fx < mn - noise || fx > mx + noise {
            return Err(Error::NotMonotone { x: x.as_f64() });
        }
        if fx < mn || fx > mx {
            return exact(x, &b, iterations);
        }
        if fx == T::zero() {
            b.lo = x;
            b.hi = x;
            b.f_lo = fx;
            b.f_hi = fx;
            return exact(x, &b, iterations);
        }
        if (fx < T::zero()) == (b.f_lo < T::zero()) {
            b.lo = x;
            b.f_lo = fx;
            g_lo = fx;
            if last_side == -1 {
                g_hi *= half;
            }
            last_side = -1;
        } else {
            b.hi = x;
            b.f_hi = fx;
            g_hi = fx;
            if last_side == 1 {
                g_lo *= half;
            }
            last_side = 1;
        }
        width_two_back = width_one_back;
        width_one_back = w;
    }
    let root = b.lo - b.f_lo * b.width() / (b.f_hi - b.f_lo);
    let root = root.max(b.lo).min(b.hi);
    Ok(RootOutcome {
        root,
        bracket: b,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots() {
        let b = RootBracket::evaluate(0.0, 2.0, |x: f64| x - 1.0).unwrap();
        assert!((find_root_monotone(|x| x - 1.0, b, 1e-14).unwrap() - 1.0).abs() < 1e-14);

        let f = |x: f64| x.tanh() - 0.5;
        let b = RootBracket::evaluate(0.0, 2.0, f).unwrap();
        let r = find_root_monotone(f, b, 1e-14).unwrap();
        assert!((r - 0.5f64.atanh()).abs() < 1e-13);

        let b = RootBracket::evaluate(0.1, 3.0, |x: f64| x.ln()).unwrap();
        assert!((find_root_monotone(|x: f64| x.ln(), b, 1e-14).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn invalid_bracket() {
        assert!(matches!(
            RootBracket::evaluate(2.0, 3.0, |x: f64| x - 1.0),
            Err(Error::InvalidBracket { .. })
        ));
        assert!(RootBracket::evaluate(3.0, 2.0, |x: f64| x - 2.5).is_err());
    }

    #[test]
    fn detects_non_monotone() {
        // Decreasing overall but increasing on [0, 1.5).
        let f = |x: f64| if x < 1.5 { 2.0 + x } else { -1.0 };
        let b = RootBracket::evaluate(0.0, 3.0, f).unwrap();
        assert!(matches!(
            find_root_monotone(f, b, 1e-12),
            Err(Error::NotMonotone { .. })
        ));
    }

    #[test]
    fn final_bracket_straddles_root() {
        let f = |x: f64| (-x).exp() - 0.3;
        let b = RootBracket::evaluate(0.0, 5.0, f).unwrap();
        let out = solve_monotone(|x| Ok(f(x)), b, 1e-12).unwrap();
        assert!(out.bracket.f_lo * out.bracket.f_hi <= 0.0);
        assert!(out.bracket.lo <= out.root && out.root <= out.bracket.hi);
        assert!(out.bracket.width() <= 1e-12);
    }
}
