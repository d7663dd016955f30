//! Command-line front end: argument parsing, report rendering and the exit
//! code contract. The binary in `main.rs` is a thin wrapper over [`run`].

pub mod commands;
pub mod config;
pub mod error;
pub mod number;

pub use commands::{load_graph, run, Output};
pub use config::{Cli, Command, Format, Input, RunConfig, DATA_DIR_ENV};
pub use error::{CliError, EXIT_INPUT, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE};
