//! Front end for `hopfpow`: the algebra-spec grammar, element input, table
//! emitters and the subcommands.

pub mod build;
pub mod commands;
pub mod element;
pub mod emit;
pub mod spec;

pub use build::{build, Builder, Built};
pub use commands::{Outcome, Suite};
pub use emit::Format;
pub use spec::{parse_spec, AlgebraSpec};
