//! Concrete syntax: lexer, parser and printer.

pub mod lexer;
mod parser;
mod pretty;

pub use lexer::{Span, Tok};
pub use parser::{parse_expr, parse_module, Definition, ParseError, SourceModule};
pub use pretty::{pretty_expr, pretty_module};
