//! The acceptance suite: ten criteria, each reported as one pass/fail line
//! with measured values against their bounds and the runtime budget.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::time::Instant;

use neel_lab::asymptotics::series::{n0_series, SeriesSpec};
use neel_lab::asymptotics::{
    const_a0, const_a1, mhat_asym_3d, n_tz0_series, tn_asym_2d, tn_asym_3d, GoldenEntry, GoldenFile,
};
use neel_lab::bcs::{c1_fn, f_bcs, f_bcs_prime, f_bcs_zero, h_fn, j_fn, BcsCurve};
use neel_lab::dos::{n0, n_tz0_direct, DosEvaluator};
use neel_lab::gap::{f_big_t, free_energy, solve_gap};
use neel_lab::neel::{solve_neel, solve_neel_bracketed};
use neel_lab::numerics::{
    find_root_monotone, gamma_fn, integrate, integrate_breaks, Endpoint, Ends, QuadratureSettings,
    RootBracket, EULER_GAMMA,
};
use neel_lab::{Dd, SettingsDd};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::oracle::{grid_gap, grid_neel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Criteria 1, 2, 3, 4 and 6.
    Quick,
    Full,
}

impl Level {
    pub fn criteria(self) -> Vec<u32> {
        match self {
            Level::Quick => vec![1, 2, 3, 4, 6],
            Level::Full => (1..=10).collect(),
        }
    }
}

/// Where the frozen asymptote residuals live, and whether missing or stale
/// records are (re)written.
#[derive(Clone, Debug)]
pub struct GoldenStore {
    pub path: PathBuf,
    pub record: bool,
}

/// Drift allowed between a recorded residual and a new measurement.
pub const GOLDEN_DRIFT: f64 = 1e-9;

impl GoldenStore {
    /// `$NEEL_LAB_GOLDEN/asymptotes.csv`, or the copy shipped with the crate.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("NEEL_LAB_GOLDEN")
            .map(PathBuf::from)
            .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"));
        GoldenStore {
            path: dir.join("asymptotes.csv"),
            record: false,
        }
    }

    fn load(&self) -> Result<GoldenFile, String> {
        if !self.path.exists() {
            return Ok(GoldenFile::default());
        }
        GoldenFile::load(&self.path).map_err(|e| format!("golden file corrupted: {e}"))
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub budget: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {}: {} [{:.2} s of {} s]",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.seconds,
            self.budget
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub results: Vec<CriterionResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn render(&self) -> String {
        let mut s: String = self.results.iter().map(|r| r.line() + "\n").collect();
        let n = self.results.iter().filter(|r| r.passed).count();
        s += &format!("{n}/{} criteria passed\n", self.results.len());
        s
    }
}

pub fn run_verify(level: Level, golden: &GoldenStore) -> Report {
    Report {
        results: level
            .criteria()
            .into_iter()
            .map(|id| run_criterion(id, golden))
            .collect(),
    }
}

#[derive(Default)]
struct Checks {
    ok: bool,
    notes: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            ok: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, pass: bool, note: String) {
        self.ok &= pass;
        if !pass {
            self.notes.push(format!("FAILED {note}"));
        } else {
            self.notes.push(note);
        }
    }

    /// `|measured − target| ≤ tol`.
    fn near(&mut self, name: &str, measured: f64, target: f64, tol: f64) {
        let d = (measured - target).abs();
        self.check(
            d <= tol,
            format!("{name} = {measured:.6e} (|diff| {d:.1e} <= {tol:e})"),
        );
    }

    fn below(&mut self, name: &str, measured: f64, bound: f64) {
        self.check(
            measured < bound,
            format!("{name} {measured:.2e} < {bound:e}"),
        );
    }
}

type Outcome = Result<Checks, CliError>;

pub fn run_criterion(id: u32, golden: &GoldenStore) -> CriterionResult {
    let (title, budget, f): (&'static str, f64, fn(&GoldenStore) -> Outcome) = match id {
        1 => ("printed constants", 10.0, |_| printed_constants()),
        2 => ("density normalisation", 5.0, |_| normalisation()),
        3 => ("series against quadrature", 5.0, |_| series_vs_quadrature()),
        4 => ("arcsine moments", 1.0, |_| moments()),
        5 => ("gap and Néel equation properties", 60.0, |_| lemma_suite()),
        6 => ("BCS identities", 30.0, |_| bcs_identities()),
        7 => ("Néel asymptotes", 120.0, neel_asymptotes),
        8 => ("2D universality breaking", 300.0, |_| universality_2d()),
        9 => ("3D universality", 300.0, |_| universality_3d()),
        10 => ("momentum-grid oracle", 60.0, |_| momentum_oracle()),
        _ => ("unknown criterion", 0.0, |_| {
            Err(CliError::Usage("no such criterion".into()))
        }),
    };
    let start = Instant::now();
    let outcome = f(golden);
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, mut detail) = match outcome {
        Ok(c) => (c.ok, c.notes.join("; ")),
        Err(e) => (false, format!("error: {e}")),
    };
    if seconds > budget {
        passed = false;
        detail += &format!("; FAILED runtime {seconds:.1} s exceeds {budget} s");
    }
    CriterionResult {
        id,
        title,
        passed,
        detail,
        seconds,
        budget,
    }
}

fn printed_constants() -> Outcome {
    let mut c = Checks::new();
    let j0 = |x: f64| j_fn(x, 0.0).unwrap_or(f64::NAN);
    let root = find_root_monotone(j0, RootBracket::evaluate(1e-6, 4.0, j0)?, 1e-15)?;
    c.near("f_bcs(0)", root, PI * (-EULER_GAMMA).exp(), 1e-8);
    let curve = BcsCurve::build()?;
    let c1 = c1_fn(0.0, &curve)?;
    c.near("c1(0)", c1, 0.04576, 2e-4);
    c.near("alpha0", c1 / f_bcs_zero(), 0.02594, 2e-4);
    c.near("a0", const_a0()?, 0.007013, 1e-5);
    c.near("a1", const_a1()?, 0.3260, 5e-4);
    Ok(c)
}

fn normalisation() -> Outcome {
    let mut c = Checks::new();
    let s = QuadratureSettings::new(1e-12, 1e-12);
    for t_z in [0.0, 0.2, 0.5, 1.0, 1.5] {
        let dos = DosEvaluator::new(t_z)?;
        let ends = if dos.is_two_dimensional() {
            Ends::left(Endpoint::LogSingular)
        } else {
            Ends::REGULAR
        };
        let w = 2.0
            * integrate_breaks(
                |e| dos.eval(e).unwrap_or(f64::NAN),
                &dos.breakpoints(),
                ends,
                &s,
            )?
            .value;
        c.near(&format!("weight(t_z={t_z})"), w, 1.0, 1e-8);
    }
    Ok(c)
}

fn dd_settings() -> SettingsDd {
    QuadratureSettings::new(Dd::from(1e-30), Dd::from(1e-28)).with_max_subdivisions(20000)
}

fn ratio_window(c: &mut Checks, name: &str, e1: f64, e2: f64) {
    let r = e2 / e1;
    let (lo, hi) = (4096.0 / 3.0, 3.0 * 4096.0);
    c.check(
        (lo..=hi).contains(&r),
        format!("{name} error ratio {r:.0} in [{lo:.0}, {hi:.0}]"),
    );
}

fn series_vs_quadrature() -> Outcome {
    let mut c = Checks::new();
    let s = dd_settings();
    let spec = SeriesSpec::<Dd>::printed();
    let e = |x: f64| -> Result<f64, CliError> {
        Ok((n0_series(Dd::from(x), &spec)? - n0(Dd::from(x), &s)?)
            .hi()
            .abs())
    };
    let (e1, e2) = (e(0.1)?, e(0.2)?);
    c.below("|N0 series - N0|(0.1)", e1, 5e-13);
    ratio_window(&mut c, "N0", e1, e2);
    let e = |t: f64| -> Result<f64, CliError> {
        Ok(
            (n_tz0_series(Dd::from(t), 10)? - n_tz0_direct(Dd::from(t), &s)?)
                .hi()
                .abs(),
        )
    };
    let (e1, e2) = (e(0.1)?, e(0.2)?);
    c.below("|N_tz(0) series - N_tz(0)|(0.1)", e1, 5e-12);
    ratio_window(&mut c, "N_tz(0)", e1, e2);
    Ok(c)
}

fn moments() -> Outcome {
    let mut c = Checks::new();
    let s = QuadratureSettings::new(1e-14, 1e-13);
    let mut worst = 0.0f64;
    for j in 0..=6 {
        let est = integrate(
            |u: f64| u.powi(j) / (4.0 - u * u).sqrt(),
            0.0,
            2.0,
            Ends::right(Endpoint::SqrtSingular),
            &s,
        )?;
        let lhs = 2.0 * est.value / PI;
        let jf = j as f64;
        let rhs =
            2f64.powi(j) * gamma_fn(0.5 * (jf + 1.0))? / (PI.sqrt() * gamma_fn(0.5 * jf + 1.0)?);
        worst = worst.max(((lhs - rhs) / rhs).abs());
    }
    c.check(
        worst < 1e-10,
        format!("max relative moment error {worst:.1e} < 1e-10 (j = 0..6)"),
    );
    Ok(c)
}

fn lemma_suite() -> Outcome {
    let mut c = Checks::new();
    for (t_z, t) in [(0.0, 0.05), (0.5, 0.0), (1.0, 0.2)] {
        let dos = DosEvaluator::new(t_z)?;
        let v = (1..=10)
            .map(|i| f_big_t(0.1 * i as f64, t, &dos))
            .collect::<Result<Vec<_>, _>>()?;
        c.check(
            v.windows(2).all(|w| w[1] < w[0]),
            format!("F_T decreasing (t_z={t_z}, T={t})"),
        );
    }

    let dos = DosEvaluator::new(0.5)?;
    let t_n = solve_neel(1.5, &dos)?.t_n;
    let mut spread = 0.0f64;
    for i in 0..16 {
        let lo = t_n * (0.05 + 0.05 * i as f64);
        let hi = 0.75 * (1.0 + 0.1 * i as f64);
        spread = spread.max((solve_neel_bracketed(1.5, &dos, lo, hi)?.t_n - t_n).abs() / t_n);
    }
    c.check(
        spread < 1e-9,
        format!("T_N spread over 16 brackets {spread:.1e} < 1e-9"),
    );

    for (t_z, u) in [(0.0, 2.0), (0.5, 1.5)] {
        let dos = DosEvaluator::new(t_z)?;
        let t_n = solve_neel(u, &dos)?.t_n;
        let mut inside = true;
        for y in [0.0, 0.3, 0.6, 0.9, 0.999] {
            let d = solve_gap(u, y * t_n, t_n, &dos)?.delta_af;
            inside &= d > 0.0 && d < 0.5 * u;
        }
        let mut closed = true;
        for y in [1.001, 1.5, 3.0] {
            closed &= solve_gap(u, y * t_n, t_n, &dos)?.delta_af == 0.0;
        }
        c.check(
            inside && closed,
            format!("0 < Δ < U/2 below T_N, Δ = 0 above (t_z={t_z}, U={u})"),
        );

        let grid: Vec<f64> = (1..=20).map(|i| 0.5 * u * i as f64 / 21.0).collect();
        let t = 0.5 * t_n;
        let d = solve_gap(u, t, t_n, &dos)?.delta_af;
        let g_min = free_energy(d, u, t, &dos)?;
        let mut below = g_min < free_energy(0.0, u, t, &dos)?;
        for &x in &grid {
            below &= g_min <= free_energy(x, u, t, &dos)? + 1e-14;
        }
        let t = 1.5 * t_n;
        let g0 = free_energy(0.0, u, t, &dos)?;
        let mut above = true;
        for &x in &grid {
            above &= free_energy(x, u, t, &dos)? > g0;
        }
        c.check(
            below && above,
            format!("free energy minimised by Δ_AF (t_z={t_z}, U={u})"),
        );
    }
    Ok(c)
}

fn bcs_identities() -> Outcome {
    let mut c = Checks::new();
    let mut worst = 0.0f64;
    for x in [0.5, 1.0, 2.0] {
        for y in [0.2, 0.5, 0.9] {
            let closed = PI.ln() - EULER_GAMMA - h_fn(x / (2.0 * y))? - x.ln();
            worst = worst.max((j_fn(x, y)? - closed).abs());
        }
    }
    c.below("closed-form J max error", worst, 1e-8);

    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667);
    let (mut n, mut worst, mut draws) = (0, 0.0f64, 0);
    while n < 12 && draws < 1000 {
        draws += 1;
        let (x, y) = (rng.gen_range(0.3..2.0), rng.gen_range(0.05..0.9));
        let j = j_fn(x, y)?;
        if j.exp() * y > 0.95 {
            continue;
        }
        worst = worst.max((f_bcs(j.exp() * y)? * (-j).exp() - x).abs());
        n += 1;
    }
    c.check(
        n == 12 && worst < 1e-7,
        format!("rescaling fixed point on {n} points, max error {worst:.1e} < 1e-7"),
    );

    let mut worst = 0.0f64;
    for y in [0.2, 0.5, 0.8] {
        let h = 1e-4;
        let d =
            |h: f64| -> Result<f64, CliError> { Ok((f_bcs(y + h)? - f_bcs(y - h)?) / (2.0 * h)) };
        let rich = (4.0 * d(h / 2.0)? - d(h)?) / 3.0;
        worst = worst.max(((f_bcs_prime(y)? - rich) / rich).abs());
    }
    c.below("f_bcs_prime relative error", worst, 1e-6);
    Ok(c)
}

fn sci(v: &[f64]) -> String {
    let items: Vec<String> = v.iter().map(|x| format!("{x:.2e}")).collect();
    format!("[{}]", items.join(", "))
}

fn monotone_to_zero(r: &[f64]) -> bool {
    r.windows(2).all(|w| w[1] < w[0])
}

fn neel_asymptotes(golden: &GoldenStore) -> Outcome {
    let mut c = Checks::new();
    let mut file = match golden.load() {
        Ok(f) => f,
        Err(e) => {
            c.check(false, e);
            return Ok(c);
        }
    };
    let mut dirty = false;
    let cases: [(f64, [f64; 4], f64); 2] = [
        (0.0, [2.0, 1.0, 0.6, 0.4], 0.03),
        (0.5, [2.0, 1.3, 1.0, 0.8], 0.05),
    ];
    for (t_z, us, bound) in cases {
        let dos = DosEvaluator::new(t_z)?;
        let name = if t_z == 0.0 {
            "tn_asym_2d"
        } else {
            "tn_asym_3d"
        };
        let mut res = Vec::new();
        for u in us {
            let t_n = solve_neel(u, &dos)?.t_n;
            let asym = if t_z == 0.0 {
                tn_asym_2d(u)?
            } else {
                tn_asym_3d(u, t_z, &dos)?
            };
            let r = (asym / t_n - 1.0).abs();
            res.push(r);
            let params = format!("u={u};tz={t_z}");
            match file.get(name, &params) {
                Some(g) if !golden.record => c.check(
                    g.accepts(r),
                    format!(
                        "{name}({params}) {r:.3e} vs frozen {:.3e}±{:.0e}",
                        g.value, g.tolerance
                    ),
                ),
                _ => {
                    file.record(GoldenEntry {
                        name: name.into(),
                        parameters: params,
                        value: r,
                        tolerance: GOLDEN_DRIFT,
                    });
                    dirty = true;
                }
            }
        }
        c.check(
            monotone_to_zero(&res),
            format!("{name} |ratio-1| decreasing {}", sci(&res)),
        );
        c.below(&format!("{name} final |ratio-1|"), res[3], bound);
    }
    if dirty {
        if let Some(dir) = golden.path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        file.save(&golden.path)?;
        c.notes
            .push(format!("recorded residuals in {}", golden.path.display()));
    }
    Ok(c)
}

fn universality_2d() -> Outcome {
    let mut c = Checks::new();
    let dos = DosEvaluator::new(0.0)?;
    let curve = BcsCurve::build()?;
    for y in [0.0, 0.5] {
        let c1 = c1_fn(y, &curve)?;
        let f = curve.f(y)?;
        let mut dev = Vec::new();
        for u in [1.0, 0.6, 0.4] {
            let t_n = solve_neel(u, &dos)?.t_n;
            let m = solve_gap(u, y * t_n, t_n, &dos)?.m_hat;
            dev.push(((m - f) / u.sqrt() / c1 - 1.0).abs());
        }
        c.check(
            monotone_to_zero(&dev),
            format!("y={y}: |(m-f)/(c1 sqrt U) - 1| decreasing {}", sci(&dev)),
        );
        c.below(&format!("y={y}: relative deviation at U=0.4"), dev[2], 0.25);
    }
    Ok(c)
}

fn universality_3d() -> Outcome {
    let mut c = Checks::new();
    let t_z = 0.5;
    let dos = DosEvaluator::new(t_z)?;
    let curve = BcsCurve::build()?;
    let us = [1.2, 1.0, 0.8];
    for y in [0.0, 0.5] {
        let mut plain = Vec::new();
        let mut with_g = Vec::new();
        for u in us {
            let t_n = solve_neel(u, &dos)?.t_n;
            let m = solve_gap(u, y * t_n, t_n, &dos)?.m_hat;
            plain.push((m - curve.f(y)?).abs());
            with_g.push((m - mhat_asym_3d(u, t_z, y, true, t_n, &dos, &curve)?).abs());
        }
        let faster = (0..2).all(|i| plain[i + 1] / plain[i] < (us[i + 1] / us[i]).powi(3));
        c.check(
            faster,
            format!("y={y}: |m-f| {} falls faster than U^3", sci(&plain)),
        );
        let better = (0..3).all(|i| with_g[i] < plain[i]);
        c.check(better, format!("y={y}: with g {}", sci(&with_g)));
    }
    Ok(c)
}

/// Grid points per axis for the coarse oracle grid (the fine grid doubles it).
pub const ORACLE_GRID: usize = 512;

fn momentum_oracle() -> Outcome {
    let mut c = Checks::new();
    let dos = DosEvaluator::new(0.0)?;
    for (u, t) in [(2.0, 0.0), (3.0, 0.2)] {
        let t_n = solve_neel(u, &dos)?.t_n;
        let d = solve_gap(u, t, t_n, &dos)?.delta_af;
        let g = grid_gap(u, t, ORACLE_GRID)?;
        c.check(
            (d - g.value).abs() < 1e-6 && g.change < 1e-8,
            format!(
                "Δ(U={u}, T={t}) {d:.10} vs grid {:.10} (grid change {:.0e})",
                g.value, g.change
            ),
        );
        let g = grid_neel(u, ORACLE_GRID)?;
        c.check(
            (t_n - g.value).abs() < 1e-6 && g.change < 1e-8,
            format!(
                "T_N(U={u}) {t_n:.10} vs grid {:.10} (grid change {:.0e})",
                g.value, g.change
            ),
        );
    }
    Ok(c)
}
