//! Command-line front end for `atiyah-kring`.

mod app;
pub mod expr;
pub mod render;

pub use app::{run, Cli, Format, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};
pub use expr::{parse_expression, Expr, ParseError};

/// JSON schema for `classify` and `p1` reports.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");
