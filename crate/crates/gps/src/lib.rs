//! File formats and the `gps` command line on top of `gps-core`.

pub mod cli;
pub mod parse;
pub mod render;

pub use cli::{dispatch, Cli, Outcome};
pub use parse::{parse_model, render_model, ParseError};
