//! Command-line front end: JSON formats and subcommands.

pub mod commands;
pub mod format;

pub use commands::{run, Outcome};
