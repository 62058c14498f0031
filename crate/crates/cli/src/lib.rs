//! Command-line front end for `primpoints`.

pub mod config;
pub mod error;
pub mod parse;
pub mod report;
pub mod run;

pub use config::RunConfig;
pub use error::CliError;
pub use run::{run, run_with};
