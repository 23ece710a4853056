//! File formats, report rendering and commands for the `nekbounds` CLI.

pub mod commands;
pub mod format;
pub mod output;

pub use commands::{cmd_bounds, cmd_classify, cmd_sweep, cmd_table, CliError, OutputRecord};
pub use format::{
    parse_matrix, read_matrix, render_plain, InputFormat, ParseError, ParseErrorKind,
};
pub use output::OutputFormat;
