//! Command-line front end: reads a matrix polynomial from a JSON file and
//! runs one stage of the stability pipeline on it.

pub mod commands;
pub mod error;
pub mod input;

pub use commands::{run_command, Command, Format, Options, Outcome};
pub use error::CliError;
pub use input::{parse_input, parse_input_path, PolynomialFile};
