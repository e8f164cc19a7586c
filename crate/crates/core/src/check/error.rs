use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::reduction::FuelExhausted;
use crate::surface::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ErrorCode {
    UnboundName,
    KindMismatch,
    TypeMismatch,
    ErasedVarOccursFree,
    IntersectionErasureMismatch,
    RhoNoOccurrence,
    PhiEqMismatch,
    EqSidesUntypeable,
    NotAFunction,
    NotAnIntersection,
    FuelExhausted,
}

impl ErrorCode {
    pub const ALL: [ErrorCode; 11] = [
        ErrorCode::UnboundName,
        ErrorCode::KindMismatch,
        ErrorCode::TypeMismatch,
        ErrorCode::ErasedVarOccursFree,
        ErrorCode::IntersectionErasureMismatch,
        ErrorCode::RhoNoOccurrence,
        ErrorCode::PhiEqMismatch,
        ErrorCode::EqSidesUntypeable,
        ErrorCode::NotAFunction,
        ErrorCode::NotAnIntersection,
        ErrorCode::FuelExhausted,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::UnboundName => "UnboundName",
            ErrorCode::KindMismatch => "KindMismatch",
            ErrorCode::TypeMismatch => "TypeMismatch",
            ErrorCode::ErasedVarOccursFree => "ErasedVarOccursFree",
            ErrorCode::IntersectionErasureMismatch => "IntersectionErasureMismatch",
            ErrorCode::RhoNoOccurrence => "RhoNoOccurrence",
            ErrorCode::PhiEqMismatch => "PhiEqMismatch",
            ErrorCode::EqSidesUntypeable => "EqSidesUntypeable",
            ErrorCode::NotAFunction => "NotAFunction",
            ErrorCode::NotAnIntersection => "NotAnIntersection",
            ErrorCode::FuelExhausted => "FuelExhausted",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A rejection. Exactly one code; `span` is the enclosing definition.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{code}: {message}")]
pub struct TypeError {
    pub code: ErrorCode,
    pub message: String,
    pub span: Option<Span>,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

impl TypeError {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        TypeError {
            code,
            message: message.into(),
            span: None,
            expected: None,
            actual: None,
        }
    }

    pub fn mismatch(
        code: ErrorCode,
        message: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        TypeError {
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            ..TypeError::new(code, message)
        }
    }

    pub fn at(mut self, span: Span) -> Self {
        self.span.get_or_insert(span);
        self
    }
}

impl From<FuelExhausted> for TypeError {
    fn from(e: FuelExhausted) -> Self {
        TypeError::new(ErrorCode::FuelExhausted, e.to_string())
    }
}

pub type CheckResult<T> = Result<T, TypeError>;
