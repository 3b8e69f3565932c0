//! Library half of the `dynnikov` command-line tool.

pub mod commands;
pub mod int;
pub mod record;
pub mod render;
pub mod verify;

pub use commands::{CliError, Outcome, Status};
pub use int::Int;
pub use record::OutputRecord;
