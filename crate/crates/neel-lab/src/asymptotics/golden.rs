//! Frozen regression bounds for asymptote-versus-solver residuals.
//!
//! One record per line, `name,parameters,value,tolerance`; `parameters` is a
//! `;`-separated list such as `u=0.4;tz=0`. Blank lines and lines starting
//! with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenEntry {
    pub name: String,
    pub parameters: String,
    /// The residual recorded when the bound was frozen.
    pub value: f64,
    /// Allowed drift from `value`.
    pub tolerance: f64,
}

impl GoldenEntry {
    /// Whether `measured` stays within `tolerance` of the recorded value.
    pub fn accepts(&self, measured: f64) -> bool {
        (measured - self.value).abs() <= self.tolerance
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct GoldenFile {
    pub entries: Vec<GoldenEntry>,
}

impl GoldenFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |why: &str| Error::domain(format!("golden line {}: {why}: {line:?}", n + 1));
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 4 {
                return Err(bad("expected 4 fields"));
            }
            let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("not a number"));
            let value = num(fields[2])?;
            let tolerance = num(fields[3])?;
            if !value.is_finite() || !(tolerance >= 0.0) {
                return Err(bad("value must be finite and tolerance non-negative"));
            }
            entries.push(GoldenEntry {
                name: fields[0].trim().to_string(),
                parameters: fields[1].trim().to_string(),
                value,
                tolerance,
            });
        }
        Ok(GoldenFile { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("# name,parameters,value,tolerance\n");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{},{},{:.12e},{:.3e}",
                e.name, e.parameters, e.value, e.tolerance
            );
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render())
            .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))
    }

    pub fn get(&self, name: &str, parameters: &str) -> Option<&GoldenEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name && e.parameters == parameters)
    }

    /// Inserts or replaces the record for `(name, parameters)`.
    pub fn record(&mut self, entry: GoldenEntry) {
        match self
            .entries
            .iter_mut()
            .find(|e| e.name == entry.name && e.parameters == entry.parameters)
        {
            Some(e) => *e = entry,
            None => self.entries.push(entry),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut g = GoldenFile::default();
        g.record(GoldenEntry {
            name: "tn_2d".into(),
            parameters: "u=0.4;tz=0".into(),
            value: 1.25e-3,
            tolerance: 1e-6,
        });
        let back = GoldenFile::parse(&g.render()).unwrap();
        assert_eq!(back, g);
        assert!(back.get("tn_2d", "u=0.4;tz=0").unwrap().accepts(1.2505e-3));
        assert!(!back.get("tn_2d", "u=0.4;tz=0").unwrap().accepts(1.3e-3));
    }

    #[test]
    fn rejects_corruption() {
        assert!(GoldenFile::parse("a,b,1.0\n").is_err());
        assert!(GoldenFile::parse("a,b,x,1e-3\n").is_err());
        assert!(GoldenFile::parse("a,b,1.0,-1\n").is_err());
    }
}
