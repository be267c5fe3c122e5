//! Command-line front end for `ph-helix`: curve specification documents,
//! reports, point sampling, the built-in worked examples and random helix
//! families.

pub mod commands;
pub mod error;
pub mod format;
pub mod paper;
pub mod report;
pub mod spec;

pub use commands::{run, Outcome};
pub use error::CliError;
