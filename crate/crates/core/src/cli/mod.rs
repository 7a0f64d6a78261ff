//! File formats and the commands behind the `qalg` binary. Commands take
//! parsed inputs and return reports as text, so they are testable without
//! touching the file system.

mod commands;
mod format;

pub use commands::{certify, module, poset_compare, sttilt, tensor, CommandError, Options, Output, Status, DEFAULT_SEED};
pub use format::{
    parse_algebra, parse_algebra_over, parse_field, parse_relation, parse_rep, serialize_algebra, serialize_rep, AnyAlgebra,
    ParseError,
};
