//! Numeric CSV tables: one header line, comma separated, LF endings, every
//! value in scientific notation with 12 significant digits.

use std::io::Write;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// `x` with 12 significant digits, e.g. `1.76387699404e0`.
pub fn format_value(x: f64) -> String {
    format!("{x:.11e}")
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        CsvTable {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<(), CliError> {
        if row.len() != self.header.len() {
            return Err(CliError::Usage(format!(
                "row has {} fields, header has {}",
                row.len(),
                self.header.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write_to<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w);
        out.write_record(&self.header)?;
        for row in &self.rows {
            out.write_record(row.iter().map(|&x| format_value(x)))?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut rdr = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let header = rdr
            .headers()?
            .iter()
            .map(str::to_string)
            .collect::<Vec<_>>();
        let mut table = CsvTable {
            header,
            rows: Vec::new(),
        };
        for rec in rdr.records() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|_| CliError::Usage(format!("bad number {f:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            table.push(row)?;
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_has_twelve_digits() {
        assert_eq!(format_value(std::f64::consts::PI), "3.14159265359e0");
        assert_eq!(format_value(-2.5e-7), "-2.50000000000e-7");
    }

    #[test]
    fn rejects_ragged_rows() {
        let mut t = CsvTable::new(&["a", "b"]);
        assert!(t.push(vec![1.0]).is_err());
        t.push(vec![1.0, 2.0]).unwrap();
        assert_eq!(t.render(), "a,b\n1.00000000000e0,2.00000000000e0\n");
    }
}
