//! Type and kind checking.

mod context;
mod conv;
mod error;
mod judge;
mod module;
mod rewrite;

pub use context::{Context, Global, Level};
pub use error::{CheckResult, ErrorCode, TypeError};
pub use module::{check_module, DefOutcome, DefRecord, LoadError, ModuleReport, Session, Source};
pub use rewrite::rho_rewrite;
