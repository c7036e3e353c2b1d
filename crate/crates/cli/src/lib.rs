//! Command-line front end for `mdcodes`.
//!
//! Every subcommand is a plain function from a config to a [`CommandOutput`]
//! so the binary and the tests share one code path.

pub mod commands;
pub mod config;
pub mod error;
pub mod render;

pub use commands::{cmd_canonical, cmd_generate, cmd_idempotents, cmd_root, cmd_verify, CommandOutput, RootConfig};
pub use config::{load_text, Format, JobConfig, MethodChoice};
pub use error::{CliError, ErrorKind};
