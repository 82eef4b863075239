//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field exponent must be at least 1")]
    ExponentTooSmall,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what}: need {need} objects, guard allows {limit}")]
    GuardExceeded {
        what: &'static str,
        need: u128,
        limit: u64,
    },
    #[error("the zero element has no multiplicative order")]
    ZeroHasNoOrder,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands belong to different parameter sets")]
    ParamsMismatch,
    #[error("degree {got} of component '{component}' exceeds bound {bound}")]
    DegreeBound {
        component: char,
        got: usize,
        bound: u64,
    },
    #[error("q = {q} is not a power of the characteristic p = {p}")]
    CharacteristicMismatch { p: u64, q: u64 },
    #[error("element handle {0} is outside the group")]
    NotInGroup(u32),
    #[error("not a group law: {0}")]
    NotAGroup(String),
    #[error("no classification type matches a group of order {order}")]
    Unclassifiable { order: u64 },
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u64),
    #[error("rational function has a pole at x = {0}")]
    PoleAt(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
