//! Data series behind the eight figures.
//!
//! Solver-backed figures carry a `status` column: 0 for a good row, otherwise
//! the exit code of the error that row hit (2 for domain and underflow-guard
//! violations, 3 for convergence failures), with `NaN` in the value columns.

use std::f64::consts::PI;

use neel_lab::asymptotics::series::n0_printed;
use neel_lab::asymptotics::{mhat_asym_2d, mhat_asym_3d, n_tz0_series, tn_asym_2d, tn_asym_3d};
use neel_lab::bcs::{c1_fn, f_bcs_zero, BcsCurve};
use neel_lab::dos::{n0_fast, n_tz0_direct, DosEvaluator};
use neel_lab::gap::solve_gap;
use neel_lab::neel::{solve_neel, solver_settings};
use rayon::prelude::*;

use crate::error::CliError;
use crate::range::Range;
use crate::table::CsvTable;

fn grid(start: f64, stop: f64, count: usize) -> Vec<f64> {
    Range { start, stop, count }.values()
}

fn leading_log(x: f64) -> f64 {
    (16.0 / x).ln() / (2.0 * PI * PI)
}

/// Runs `f` on each point; a failing row becomes `[x.., NaN.., code]`.
fn status_rows<P, F>(points: Vec<P>, keys: fn(&P) -> Vec<f64>, width: usize, f: F) -> Vec<Vec<f64>>
where
    P: Send + Sync,
    F: Fn(&P) -> Result<Vec<f64>, CliError> + Sync,
{
    points
        .par_iter()
        .map(|p| {
            let mut row = keys(p);
            match f(p) {
                Ok(v) => {
                    row.extend(v);
                    row.push(0.0);
                }
                Err(e) => {
                    row.resize(width - 1, f64::NAN);
                    row.push(e.exit_code() as f64);
                }
            }
            row
        })
        .collect()
}

fn table(header: &[&str], rows: Vec<Vec<f64>>) -> Result<CsvTable, CliError> {
    let mut t = CsvTable::new(header);
    for r in rows {
        t.push(r)?;
    }
    Ok(t)
}

pub fn emit_figure(id: u32) -> Result<CsvTable, CliError> {
    match id {
        1 => figure_densities(),
        2 => figure_bcs(),
        3 => figure_square_lattice(),
        4 => figure_density_at_zero(),
        5 => figure_neel(),
        6 => figure_mhat(0.0, false),
        7 => figure_mhat(0.5, false),
        8 => figure_mhat(0.5, true),
        _ => Err(CliError::Usage(format!(
            "figure id must be 1..=8, got {id}"
        ))),
    }
}

fn figure_densities() -> Result<CsvTable, CliError> {
    let d0 = DosEvaluator::new(0.0)?;
    let d5 = DosEvaluator::new(0.5)?;
    let rows = grid(0.025, 6.0, 240)
        .into_par_iter()
        .map(|e| Ok(vec![e, d0.eval(e)?, d5.eval(e)?]))
        .collect::<Result<Vec<_>, CliError>>()?;
    table(&["eps", "n_tz_0", "n_tz_0.5"], rows)
}

fn figure_bcs() -> Result<CsvTable, CliError> {
    let curve = BcsCurve::build()?;
    let alpha0 = c1_fn(0.0, &curve)? / f_bcs_zero();
    let rows = grid(0.0, 0.95, 96)
        .into_par_iter()
        .map(|y| {
            let f = curve.f(y)?;
            let c1 = c1_fn(y, &curve)?;
            Ok(vec![y, f, curve.fprime(y)?, c1, c1 - alpha0 * f])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    table(
        &["y", "f_bcs", "f_bcs_prime", "c1", "c1_minus_alpha0_f"],
        rows,
    )
}

fn figure_square_lattice() -> Result<CsvTable, CliError> {
    let rows = grid(0.01, 1.0, 100)
        .into_iter()
        .map(|e| vec![e, n0_fast(e), leading_log(e), n0_printed(e, 5)])
        .collect();
    table(&["eps", "n_0", "leading_log", "series"], rows)
}

fn figure_density_at_zero() -> Result<CsvTable, CliError> {
    let s = solver_settings();
    let rows = grid(0.01, 1.0, 100)
        .into_par_iter()
        .map(|t| {
            Ok(vec![
                t,
                n_tz0_direct(t, &s)?,
                leading_log(t),
                n_tz0_series(t, 10)?,
            ])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    table(&["t_z", "n_tz0", "leading_log", "series"], rows)
}

fn figure_neel() -> Result<CsvTable, CliError> {
    let d0 = DosEvaluator::new(0.0)?;
    let d5 = DosEvaluator::new(0.5)?;
    let mut points: Vec<(f64, f64)> = grid(0.2, 3.0, 29).into_iter().map(|u| (0.0, u)).collect();
    points.extend(grid(0.2, 3.0, 29).into_iter().map(|u| (0.5, u)));
    let rows = status_rows(
        points,
        |&(tz, u)| vec![tz, u],
        6,
        |&(tz, u)| {
            let dos = if tz == 0.0 { &d0 } else { &d5 };
            let t_n = solve_neel(u, dos)?.t_n;
            let asym = if tz == 0.0 {
                tn_asym_2d(u)?
            } else {
                tn_asym_3d(u, tz, dos)?
            };
            Ok(vec![t_n, asym, asym / t_n])
        },
    );
    table(&["t_z", "u", "t_n", "t_n_asym", "ratio", "status"], rows)
}

fn figure_mhat(t_z: f64, include_g: bool) -> Result<CsvTable, CliError> {
    let dos = DosEvaluator::new(t_z)?;
    let curve = BcsCurve::build()?;
    let points: Vec<(f64, f64)> = [0.0, 0.5]
        .iter()
        .flat_map(|&y| grid(0.2, 3.0, 29).into_iter().map(move |u| (y, u)))
        .collect();
    let rows = status_rows(
        points,
        |&(y, u)| vec![y, u],
        6,
        |&(y, u)| {
            let t_n = solve_neel(u, &dos)?.t_n;
            let m = solve_gap(u, y * t_n, t_n, &dos)?.m_hat;
            let pred = if t_z == 0.0 {
                mhat_asym_2d(u, y, &curve)?
            } else {
                mhat_asym_3d(u, t_z, y, include_g, t_n, &dos, &curve)?
            };
            Ok(vec![t_n, m, pred])
        },
    );
    table(&["y", "u", "t_n", "m_hat", "prediction", "status"], rows)
}
