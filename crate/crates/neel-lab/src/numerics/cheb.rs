//! Chebyshev interpolation on an interval.

use crate::Real;

/// Chebyshev series on `[a, b]` fitted at first-kind Chebyshev nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct Chebyshev<T> {
    a: T,
    b: T,
    coeffs: Vec<T>,
}

impl<T: Real> Chebyshev<T> {
    /// Interpolates `f` at `n` Chebyshev points of `[a, b]`.
    pub fn fit<F: FnMut(T) -> T>(a: T, b: T, n: usize, f: F) -> Self {
        let values = Self::sample(a, b, n, f);
        Self::from_values(a, b, &values)
    }

    /// Fallible variant of [`Chebyshev::fit`].
    pub fn try_fit<E, F: FnMut(T) -> Result<T, E>>(
        a: T,
        b: T,
        n: usize,
        mut f: F,
    ) -> Result<Self, E> {
        let nodes = Self::nodes(a, b, n);
        let mut values = Vec::with_capacity(n);
        for x in nodes {
            values.push(f(x)?);
        }
        Ok(Self::from_values(a, b, &values))
    }

    /// The `n` first-kind nodes mapped to `[a, b]`, in the order expected by
    /// [`Chebyshev::from_values`].
    pub fn nodes(a: T, b: T, n: usize) -> Vec<T> {
        let half = T::of(0.5);
        let (mid, rad) = (half * (a + b), half * (b - a));
        (0..n)
            .map(|k| {
                let th = T::pi() * (T::of(k as f64) + half) / T::of(n as f64);
                mid + rad * th.cos()
            })
            .collect()
    }

    fn sample<F: FnMut(T) -> T>(a: T, b: T, n: usize, mut f: F) -> Vec<T> {
        Self::nodes(a, b, n).into_iter().map(&mut f).collect()
    }

    pub fn from_values(a: T, b: T, values: &[T]) -> Self {
        let n = values.len();
        let half = T::of(0.5);
        let scale = T::of(2.0) / T::of(n as f64);
        let coeffs = (0..n)
            .map(|j| {
                let mut s = T::zero();
                for (k, &v) in values.iter().enumerate() {
                    let th = T::pi() * T::of(j as f64) * (T::of(k as f64) + half) / T::of(n as f64);
                    s += v * th.cos();
                }
                s * scale
            })
            .collect();
        Chebyshev { a, b, coeffs }
    }

    pub fn domain(&self) -> (T, T) {
        (self.a, self.b)
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// Clenshaw evaluation; arguments outside the domain are extrapolated.
    pub fn eval(&self, x: T) -> T {
        let two = T::of(2.0);
        let u = (two * x - self.a - self.b) / (self.b - self.a);
        let mut b1 = T::zero();
        let mut b2 = T::zero();
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = two * u * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        u * b1 - b2 + T::of(0.5) * self.coeffs[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_smooth_function() {
        let c = Chebyshev::fit(0.0, 2.0, 40, |x: f64| (x * 1.3).exp() * x.cos());
        for i in 0..=50 {
            let x = 2.0 * i as f64 / 50.0;
            assert!((c.eval(x) - (x * 1.3).exp() * x.cos()).abs() < 1e-13);
        }
    }

    #[test]
    fn polynomial_is_exact() {
        let c = Chebyshev::fit(-1.0, 3.0, 6, |x: f64| 1.0 - 2.0 * x + x.powi(4));
        assert!((c.eval(0.7) - (1.0 - 1.4 + 0.7f64.powi(4))).abs() < 1e-13);
        assert!(c.coefficients()[5].abs() < 1e-13);
    }
}
