use crate::gaussint::GaussInt;
use thiserror::Error;

/// Errors raised by the arithmetic and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is undefined for zero")]
    UndefinedForZero(&'static str),
    #[error("modulus {0} is a unit")]
    UnitModulus(GaussInt),
    /// No element of the remainder set hits the coset of `a` modulo `b`.
    /// Seeing this means the minimal-function characterization is false
    /// for `b`, so callers must never paper over it.
    #[error("no remainder representative for {a} modulo {b}")]
    NoRepresentative { a: GaussInt, b: GaussInt },
    #[error("residue system for {0} is incomplete")]
    IncompleteResidueSystem(GaussInt),
}

pub type Result<T> = std::result::Result<T, Error>;
