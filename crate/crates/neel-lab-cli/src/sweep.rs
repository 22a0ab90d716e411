//! Parameter sweeps over the library solvers.

use std::path::PathBuf;

use neel_lab::asymptotics::{tn_asym_2d, tn_asym_3d};
use neel_lab::bcs::{c1_fn, f_bcs_prime, BcsCurve};
use neel_lab::dos::DosEvaluator;
use neel_lab::gap::solve_gap;
use neel_lab::neel::solve_neel;
use neel_lab::numerics::QuadratureSettings;
use rayon::prelude::*;

use crate::error::CliError;
use crate::range::Range;
use crate::table::CsvTable;

#[derive(Clone, Debug, PartialEq)]
pub enum Sweep {
    Dos { tz: f64, eps: Range },
    Neel { tz: f64, u: Range },
    Gap { tz: f64, u: Range, t: Range },
    Mhat { tz: f64, u: Range, y: Range },
    Bcs { y: Range },
    Asym { tz: f64, u: Range },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRequest {
    pub sweep: Sweep,
    /// Replaces the interpolated density with direct quadrature at this
    /// tolerance.
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
}

pub fn density(tz: f64, tol: Option<f64>) -> Result<DosEvaluator, CliError> {
    Ok(match tol {
        None => DosEvaluator::new(tz)?,
        Some(t) if t > 0.0 => DosEvaluator::direct(tz, QuadratureSettings::new(t, t))?,
        Some(t) => return Err(CliError::Usage(format!("--tol must be positive, got {t}"))),
    })
}

/// Evaluates `f` on every point, concurrently, keeping input order.
fn rows<P, F>(points: Vec<P>, f: F) -> Result<Vec<Vec<f64>>, CliError>
where
    P: Send,
    F: Fn(P) -> Result<Vec<f64>, CliError> + Sync + Send,
{
    points.into_par_iter().map(f).collect()
}

fn product(a: &Range, b: &Range) -> Vec<(f64, f64)> {
    let bv = b.values();
    a.values()
        .into_iter()
        .flat_map(|x| bv.iter().map(move |&y| (x, y)))
        .collect()
}

pub fn run_sweep(req: &SweepRequest) -> Result<CsvTable, CliError> {
    let (header, body): (&[&str], _) = match &req.sweep {
        Sweep::Dos { tz, eps } => {
            let dos = density(*tz, req.tol)?;
            (
                &["eps", "n_tz"][..],
                rows(eps.values(), |e| Ok(vec![e, dos.eval(e)?]))?,
            )
        }
        Sweep::Neel { tz, u } => {
            let dos = density(*tz, req.tol)?;
            (
                &["u", "t_n", "residual"][..],
                rows(u.values(), |u| {
                    let r = solve_neel(u, &dos)?;
                    Ok(vec![u, r.t_n, r.residual])
                })?,
            )
        }
        Sweep::Gap { tz, u, t } => {
            let dos = density(*tz, req.tol)?;
            (
                &["u", "t", "t_n", "delta_af", "m_af", "m_hat", "residual"][..],
                rows(product(u, t), |(u, t)| {
                    let t_n = solve_neel(u, &dos)?.t_n;
                    let s = solve_gap(u, t, t_n, &dos)?;
                    Ok(vec![u, t, t_n, s.delta_af, s.m_af, s.m_hat, s.residual])
                })?,
            )
        }
        Sweep::Mhat { tz, u, y } => {
            let dos = density(*tz, req.tol)?;
            (
                &["u", "y", "t_n", "m_hat"][..],
                rows(product(u, y), |(u, y)| {
                    let t_n = solve_neel(u, &dos)?.t_n;
                    let s = solve_gap(u, y * t_n, t_n, &dos)?;
                    Ok(vec![u, y, t_n, s.m_hat])
                })?,
            )
        }
        Sweep::Bcs { y } => {
            let curve = BcsCurve::build()?;
            (
                &["y", "f_bcs", "f_bcs_prime", "c1"][..],
                rows(y.values(), |y| {
                    let fp = if y == 0.0 { 0.0 } else { f_bcs_prime(y)? };
                    Ok(vec![y, curve.f(y)?, fp, c1_fn(y, &curve)?])
                })?,
            )
        }
        Sweep::Asym { tz, u } => {
            let dos = density(*tz, req.tol)?;
            (
                &["u", "t_n", "t_n_asym", "ratio"][..],
                rows(u.values(), |u| {
                    let t_n = solve_neel(u, &dos)?.t_n;
                    let asym = if dos.is_two_dimensional() {
                        tn_asym_2d(u)?
                    } else {
                        tn_asym_3d(u, *tz, &dos)?
                    };
                    Ok(vec![u, t_n, asym, asym / t_n])
                })?,
            )
        }
    };
    let mut table = CsvTable::new(header);
    for r in body {
        table.push(r)?;
    }
    Ok(table)
}
