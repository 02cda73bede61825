//! Text formats and command-line front end for `pasch-core`.

pub mod cli;
pub mod format;

pub use cli::run;
pub use format::{parse_geometry, parse_map, serialize_geometry, serialize_map, MapDocument, ParseError, ParseErrorKind};
