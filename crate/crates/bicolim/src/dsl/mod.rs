//! The text format: abstract syntax, parser, canonical printer, and
//! resolution into library values.

pub mod ast;
pub mod parse;
pub mod resolve;

pub use ast::{Block, Document};
pub use parse::parse;
pub use resolve::{resolve, Env};
