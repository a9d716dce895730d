//! File formats, reports and command implementations for the `mhalg` tool.

pub mod commands;
pub mod error;
pub mod format;
pub mod instance;
pub mod report;

pub use error::CliError;
