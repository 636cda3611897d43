//! Structure documents and the `relpoisson` command-line tool.

pub mod commands;
mod convert;
pub mod document;
pub mod format;

pub use commands::{run, Outcome};
pub use document::{Kind, StructureDocument};
