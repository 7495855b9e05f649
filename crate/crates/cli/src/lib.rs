//! Command implementations behind the `qmono` binary.

pub mod compute;
pub mod config;
pub mod csv;
pub mod figures;
pub mod oracle;
pub mod verify;

mod error;

pub use compute::{run_compute, ComputeArgs, Measure};
pub use config::{Family, RunConfig};
pub use csv::CsvCurve;
pub use error::CliError;
pub use figures::{fig1, fig2, FigureReport};
pub use oracle::{run_oracle_check, OracleReport};
pub use verify::{run_verify, VerifySummary};
