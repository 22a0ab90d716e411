//! `start:stop:count` parameter ranges.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn single(x: f64) -> Self {
        Range {
            start: x,
            stop: x,
            count: 1,
        }
    }

    /// Evenly spaced values including both ends.
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("not a finite number: {t:?}"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        let r = match parts.as_slice() {
            [x] => Range::single(num(x)?),
            [a, b, n] => Range {
                start: num(a)?,
                stop: num(b)?,
                count: n.trim().parse().map_err(|_| format!("bad count: {n:?}"))?,
            },
            _ => return Err(format!("expected a value or start:stop:count, got {s:?}")),
        };
        if r.count == 0 {
            return Err("count must be at least 1".into());
        }
        if r.start > r.stop {
            return Err(format!("start {} exceeds stop {}", r.start, r.stop));
        }
        Ok(r)
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}
