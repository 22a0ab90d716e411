//! Sweeps, figure data and the verification suite behind the `neel-lab`
//! command.

pub mod error;
pub mod figures;
pub mod oracle;
pub mod range;
pub mod sweep;
pub mod table;
pub mod verify;

pub use error::{exit, CliError};
pub use figures::emit_figure;
pub use range::Range;
pub use sweep::{run_sweep, Sweep, SweepRequest};
pub use table::CsvTable;
pub use verify::{run_verify, GoldenStore, Level, Report};
