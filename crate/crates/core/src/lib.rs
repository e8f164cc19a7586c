//! A small Curry-style dependent type theory with erasure: annotated terms,
//! their erasure to the untyped λ-calculus, a bidirectional checker and a
//! normalizer with β-step accounting.

pub mod check;
pub mod cli;
pub mod corpus;
pub mod cost;
pub mod erasure;
pub mod pure;
pub mod reduction;
pub mod surface;
pub mod syntax;

pub use erasure::erase;
pub use pure::PureTerm;
pub use reduction::{apply_and_count, beta_eta_eq, normalize, Fuel, NormalizeOutcome};
pub use syntax::{Expr, Name};
