//! Command line front end for `fd_core`: the expression parser, the
//! subcommands and the JSON report format.

pub mod cli;
pub mod imj;
pub mod json;
pub mod parse;

pub use cli::{run, Cli, Outcome};
pub use json::emit_json;
pub use parse::{parse, SyntaxError};
