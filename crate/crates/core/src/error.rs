//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-computation operations.
///
/// Mathematical outcomes that the callers are expected to handle (a zero
/// Hessian, a non-smooth form, an inconsistent linear system) are *not*
/// errors; they are reported in the respective result types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live over different numbers of variables or incompatible
    /// dimensions.
    ArityMismatch { expected: usize, found: usize },
    /// Operands have incompatible scalar kinds (two distinct cyclotomic
    /// orders; rationals promote silently).
    ScalarMismatch,
    /// Cyclotomic arithmetic between elements of different orders.
    OrderMismatch { left: u32, right: u32 },
    /// Exact division by zero (scalar inverse of zero).
    DivisionByZero,
    /// Variable index out of range.
    IndexError { index: usize, nvars: usize },
    /// Text input does not conform to the polynomial grammar.
    ParseError { position: usize, message: String },
    /// Input violates a documented precondition.
    DomainError(String),
    /// Family parameters violate the constructor invariants.
    SpecError(String),
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { limit: u64, requested: u64 },
    /// Zero polynomial where a nonzero one is required.
    ZeroInput,
    /// Singular matrix where an invertible one is required.
    SingularMatrix,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected} variables, found {found}")
            }
            Error::ScalarMismatch => write!(f, "incompatible scalar kinds"),
            Error::OrderMismatch { left, right } => {
                write!(f, "cyclotomic order mismatch: {left} vs {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::IndexError { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variables")
            }
            Error::ParseError { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::DomainError(msg) => write!(f, "domain error: {msg}"),
            Error::SpecError(msg) => write!(f, "invalid family parameters: {msg}"),
            Error::BudgetExceeded { limit, requested } => {
                write!(f, "budget exceeded: {requested} > {limit}")
            }
            Error::ZeroInput => write!(f, "zero input not allowed"),
            Error::SingularMatrix => write!(f, "matrix is singular"),
        }
    }
}

impl core::error::Error for Error {}
