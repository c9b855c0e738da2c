//! Command-line front end for `curvebetti-core`: JSON wire formats, text
//! tables, golden-file checks and parallel enumeration.

pub mod app;
pub mod error;
pub mod golden;
pub mod parallel;
pub mod render;
pub mod wire;

pub use app::{run_from, Outcome};
pub use error::CliError;
