//! Command-line front end for `binframe-core`.

pub mod app;
pub mod formats;

pub use app::{run, EXIT_NO, EXIT_USAGE, EXIT_YES};
pub use formats::{detect_format, parse_matrix, render_matrix, Format, ParseError};
