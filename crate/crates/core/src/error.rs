use thiserror::Error;

use crate::ring::AxiomReport;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("malformed ring spec: {0}")]
    Malformed(String),
    #[error("tables do not define a ring: {}", .0.summary())]
    Axioms(AxiomReport),
    #[error("unknown builtin ring `{name}` (known: {known})")]
    UnknownBuiltin { name: String, known: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("element index {index} out of range for ring of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("ideal belongs to a different ring")]
    RingMismatch,
    #[error("ideal enumeration exceeded the cap of {cap} ideals")]
    CapExceeded { cap: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MalcevError {
    #[error(
        "search space {exponent}^{degree} exceeds the cap of {cap} candidates \
         (additive exponent {exponent}, degree bound {degree})"
    )]
    SearchSpace {
        exponent: u64,
        degree: usize,
        cap: u64,
    },
    #[error("degree bound must be at least 1")]
    ZeroDegree,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZzError {
    #[error("divisibility precondition violated: {divisor} does not divide {value}")]
    Divisibility { divisor: String, value: String },
    #[error("pair ({u}, {v}) is not an element of {c}Z x {d}Z")]
    OutsideRing {
        u: String,
        v: String,
        c: String,
        d: String,
    },
    #[error("sweep of {requested} grid evaluations exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: u128 },
}
