//! Command-line front end: the algebra file format, the built-in examples
//! and the commands behind the `supercohom` binary.

pub mod builtins;
pub mod commands;
pub mod format;
pub mod report;

pub use builtins::{builtin, builtin_examples, Example, BUILTIN_NAMES};
pub use commands::{CliError, Input};
pub use format::{parse_algebra, serialize, AlgebraDocument};
pub use report::RunReport;
