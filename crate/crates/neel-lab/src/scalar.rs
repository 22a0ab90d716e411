//! Scalar abstraction shared by the precision-generic kernels.
//!
//! The quadrature, the two-dimensional density of states and the printed
//! asymptotic series are written against [`Real`], which is implemented for
//! `f32`, `f64` and [`DoubleDouble`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use crate::dd::{self as ddops, DoubleDouble};
use num_traits::{FromPrimitive, Num, NumAssignOps, ToPrimitive};

/// Real scalar with the handful of elementary functions the kernels need.
///
/// Constants are given as `(hi, lo)` pairs so that extended types can absorb
/// the low word; `f64` and `f32` simply round `hi + lo`.
pub trait Real:
    Copy
    + Send
    + Sync
    + Debug
    + Display
    + PartialOrd
    + Num
    + NumAssignOps
    + Neg<Output = Self>
    + FromPrimitive
    + ToPrimitive
    + 'static
{
    /// Builds a value from an unevaluated sum `hi + lo`.
    fn from_pair(hi: f64, lo: f64) -> Self;
    /// Nearest value to the double `x`.
    fn of(x: f64) -> Self {
        Self::from_pair(x, 0.0)
    }
    /// Leading double of the value.
    fn as_f64(self) -> f64;
    /// Unit roundoff of the type.
    fn epsilon() -> Self;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn floor(self) -> Self;

    fn is_finite(self) -> bool {
        self.as_f64().is_finite()
    }
    fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { Self::one() / self } else { self };
        let mut k = n.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }
    fn recip(self) -> Self {
        Self::one() / self
    }
    fn tanh(self) -> Self {
        let a = self.abs();
        let e = (-(a + a)).exp();
        let t = (Self::one() - e) / (Self::one() + e);
        if self < Self::zero() {
            -t
        } else {
            t
        }
    }

    fn pi() -> Self {
        Self::from_pair(PI.0, PI.1)
    }
    fn frac_pi_2() -> Self {
        Self::from_pair(FRAC_PI_2.0, FRAC_PI_2.1)
    }
    fn ln_2() -> Self {
        Self::from_pair(LN_2.0, LN_2.1)
    }
    fn euler_gamma() -> Self {
        Self::from_pair(EULER_GAMMA.0, EULER_GAMMA.1)
    }
}

pub(crate) const PI: (f64, f64) = (std::f64::consts::PI, 1.2246467991473532e-16);
pub(crate) const FRAC_PI_2: (f64, f64) = (std::f64::consts::FRAC_PI_2, 6.123233995736766e-17);
pub(crate) const LN_2: (f64, f64) = (std::f64::consts::LN_2, 2.3190468138462996e-17);
pub(crate) const EULER_GAMMA: (f64, f64) = (0.5772156649015329, -4.942915152430645e-18);

macro_rules! impl_real_prim {
    ($t:ty) => {
        impl Real for $t {
            fn from_pair(hi: f64, lo: f64) -> Self {
                (hi + lo) as $t
            }
            fn as_f64(self) -> f64 {
                self as f64
            }
            fn epsilon() -> Self {
                <$t>::EPSILON
            }
            fn abs(self) -> Self {
                <$t>::abs(self)
            }
            fn sqrt(self) -> Self {
                <$t>::sqrt(self)
            }
            fn exp(self) -> Self {
                <$t>::exp(self)
            }
            fn ln(self) -> Self {
                <$t>::ln(self)
            }
            fn sin(self) -> Self {
                <$t>::sin(self)
            }
            fn cos(self) -> Self {
                <$t>::cos(self)
            }
            fn floor(self) -> Self {
                <$t>::floor(self)
            }
            fn is_finite(self) -> bool {
                <$t>::is_finite(self)
            }
            fn powi(self, n: i32) -> Self {
                <$t>::powi(self, n)
            }
            fn tanh(self) -> Self {
                <$t>::tanh(self)
            }
        }
    };
}

impl_real_prim!(f32);
impl_real_prim!(f64);

impl Real for DoubleDouble {
    fn from_pair(hi: f64, lo: f64) -> Self {
        DoubleDouble::new(hi, lo)
    }
    fn as_f64(self) -> f64 {
        self.hi() + self.lo()
    }
    fn epsilon() -> Self {
        DoubleDouble::from(f64::EPSILON * f64::EPSILON / 2.0)
    }
    fn abs(self) -> Self {
        if self.hi() < 0.0 {
            -self
        } else {
            self
        }
    }
    fn sqrt(self) -> Self {
        dd::sqrt(self)
    }
    fn exp(self) -> Self {
        dd::exp(self)
    }
    fn ln(self) -> Self {
        dd::ln(self)
    }
    fn sin(self) -> Self {
        dd::sin_cos(self).0
    }
    fn cos(self) -> Self {
        dd::sin_cos(self).1
    }
    fn floor(self) -> Self {
        ddops::floor(self)
    }
}

/// Double-double elementary functions.
mod dd {
    use super::{DoubleDouble, Real};

    pub fn sqrt(x: DoubleDouble) -> DoubleDouble {
        let h = x.hi();
        if h <= 0.0 {
            return if h == 0.0 {
                DoubleDouble::from(0.0)
            } else {
                DoubleDouble::from(f64::NAN)
            };
        }
        if !h.is_finite() {
            return DoubleDouble::from(h.sqrt());
        }
        let y = h.sqrt();
        let yy = DoubleDouble::from(y) * y;
        DoubleDouble::from(y) + (x - yy) / (2.0 * y)
    }

    pub fn exp(x: DoubleDouble) -> DoubleDouble {
        let h = x.hi();
        if h.is_nan() {
            return x;
        }
        if h > 709.0 {
            return DoubleDouble::from(f64::INFINITY);
        }
        if h < -745.0 {
            return DoubleDouble::from(0.0);
        }
        let k = (h / std::f64::consts::LN_2).round();
        let r = (x - DoubleDouble::ln_2() * k) / 256.0;
        // expm1 by Taylor, then (1+p)^256 via p <- 2p + p^2.
        let mut term = r;
        let mut p = r;
        for n in 2..=12 {
            term = term * r / (n as f64);
            p += term;
        }
        for _ in 0..8 {
            p = p * 2.0 + p * p;
        }
        let one_p = p + 1.0;
        scale2(one_p, k as i32)
    }

    fn scale2(x: DoubleDouble, k: i32) -> DoubleDouble {
        x.ldexp(k)
    }

    pub fn ln(x: DoubleDouble) -> DoubleDouble {
        let h = x.hi();
        if h <= 0.0 {
            return DoubleDouble::from(if h == 0.0 {
                f64::NEG_INFINITY
            } else {
                f64::NAN
            });
        }
        if !h.is_finite() {
            return x;
        }
        let y0 = DoubleDouble::from(h.ln());
        y0 + x * exp(-y0) - 1.0
    }

    pub fn sin_cos(x: DoubleDouble) -> (DoubleDouble, DoubleDouble) {
        let h = x.hi();
        if !h.is_finite() {
            return (DoubleDouble::from(f64::NAN), DoubleDouble::from(f64::NAN));
        }
        let q = (h / std::f64::consts::FRAC_PI_2).round();
        let r = x - DoubleDouble::frac_pi_2() * q;
        let r2 = r * r;
        let mut s = r;
        let mut ts = r;
        let mut c = DoubleDouble::from(1.0);
        let mut tc = DoubleDouble::from(1.0);
        for n in 1..=14 {
            let n2 = (2 * n) as f64;
            ts = -ts * r2 / (n2 * (n2 + 1.0));
            s += ts;
            tc = -tc * r2 / ((n2 - 1.0) * n2);
            c += tc;
        }
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
}
