//! Command-line front-end for `whfact-core`.

pub mod commands;
pub mod document;
pub mod parse;

pub use commands::{run_command, CommandOutput};
pub use document::{parse_matrix, DocumentError, FactorizationWire, InputDocument};
pub use parse::{parse_polynomial, parse_rational_function, ParseError};
