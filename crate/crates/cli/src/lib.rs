//! File formats, reports and the command-line front end over `linetw-core`.
//!
//! Files use 1-indexed vertices (PACE convention); everything in memory is
//! 0-indexed and conversion happens only in [`gr`], [`td`] and [`sidecar`].

pub mod cli;
mod error;
pub mod gr;
pub mod report;
pub mod sidecar;
pub mod spec;
pub mod td;
pub mod verify;

pub use error::{CliError, ExitCode};
