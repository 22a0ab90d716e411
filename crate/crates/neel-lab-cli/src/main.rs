use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use neel_lab_cli::{
    emit_figure, exit, run_sweep, run_verify, CliError, CsvTable, GoldenStore, Level, Range, Sweep,
    SweepRequest,
};

/// Hartree–Fock sweeps for the half-filled Hubbard model.
///
/// Exit status: 0 success, 1 verification failure or I/O error, 2 domain
/// error, 3 convergence failure, 64 usage error. Ranges are a single value
/// or start:stop:count.
#[derive(Parser, Debug)]
#[command(name = "neel-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Use direct quadrature at this tolerance for the density of states.
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Density of states N_tz(eps): columns eps,n_tz.
    Dos {
        #[arg(long, default_value_t = 0.0)]
        tz: f64,
        #[arg(long)]
        eps: Range,
    },
    /// Néel temperature: columns u,t_n,residual.
    Neel {
        #[arg(long, default_value_t = 0.0)]
        tz: f64,
        #[arg(long)]
        u: Range,
    },
    /// Antiferromagnetic gap over a (U, T) grid.
    Gap {
        #[arg(long, default_value_t = 0.0)]
        tz: f64,
        #[arg(long)]
        u: Range,
        #[arg(long)]
        t: Range,
    },
    /// Gap ratio Δ/T_N at T = y·T_N.
    Mhat {
        #[arg(long, default_value_t = 0.0)]
        tz: f64,
        #[arg(long)]
        u: Range,
        #[arg(long)]
        y: Range,
    },
    /// BCS function and 2D correction amplitude: columns y,f_bcs,f_bcs_prime,c1.
    Bcs {
        #[arg(long)]
        y: Range,
    },
    /// Néel temperature against its small-U asymptote.
    Asym {
        #[arg(long, default_value_t = 0.0)]
        tz: f64,
        #[arg(long)]
        u: Range,
    },
    /// Run the acceptance criteria and report pass/fail per criterion.
    Verify {
        #[arg(value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
        /// Rewrite the frozen asymptote residuals from this run.
        #[arg(long)]
        record: bool,
    },
    /// Data behind figure 1 to 8.
    Figure {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=8))]
        id: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

fn write_table(table: &CsvTable, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => table.write_to(BufWriter::new(File::create(p)?)),
        None => table.write_to(io::stdout().lock()),
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let sweep = match cli.command {
        Command::Dos { tz, eps } => Sweep::Dos { tz, eps },
        Command::Neel { tz, u } => Sweep::Neel { tz, u },
        Command::Gap { tz, u, t } => Sweep::Gap { tz, u, t },
        Command::Mhat { tz, u, y } => Sweep::Mhat { tz, u, y },
        Command::Bcs { y } => Sweep::Bcs { y },
        Command::Asym { tz, u } => Sweep::Asym { tz, u },
        Command::Figure { id } => {
            write_table(&emit_figure(id)?, cli.out.as_ref())?;
            return Ok(exit::OK);
        }
        Command::Verify { level, record } => {
            let level = match level {
                VerifyLevel::Quick => Level::Quick,
                VerifyLevel::Full => Level::Full,
            };
            let golden = GoldenStore {
                record,
                ..GoldenStore::from_env()
            };
            let report = run_verify(level, &golden);
            let text = report.render();
            match cli.out.as_ref() {
                Some(p) => std::fs::write(p, &text)?,
                None => io::stdout().lock().write_all(text.as_bytes())?,
            }
            return Ok(if report.all_passed() {
                exit::OK
            } else {
                exit::FAILURE
            });
        }
    };
    let req = SweepRequest {
        sweep,
        tol: cli.tol,
        out: cli.out,
    };
    write_table(&run_sweep(&req)?, req.out.as_ref())?;
    Ok(exit::OK)
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("neel-lab: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
