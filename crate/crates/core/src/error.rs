use thiserror::Error;

/// Errors raised by table construction, constructors, the verifier, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("element {value} out of range 1..={k} at position {position}")]
    OutOfRange { value: u32, k: u32, position: usize },

    #[error("tuple has length {got}, expected {expected}")]
    ArityMismatch { got: usize, expected: usize },

    #[error("tuple code {code} out of range 0..{size}")]
    CodeOutOfRange { code: usize, size: usize },

    #[error("table needs {expected} values, got {got}")]
    WrongTableSize { got: usize, expected: usize },

    #[error("operations live on different chains: k={left} vs k={right}")]
    ChainMismatch { left: u32, right: u32 },

    #[error("expected an operation of arity {expected}, got arity {got}")]
    WrongArity { got: usize, expected: usize },

    #[error("sequence is not a permutation of 1..={k}: {reason}")]
    NotAPermutation { k: u32, reason: String },

    #[error("invalid g-map: {0}")]
    InvalidGMap(String),

    #[error("precondition failed: operation is not {property}")]
    Precondition { property: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation has no neutral element")]
    NoNeutralElement,

    #[error("relation x <= y iff H(x,y)=y is not a linear order: {0}")]
    NotALinearOrder(String),

    #[error("instance exceeds resource guard: {what} needs {estimate} but the bound is {guard}")]
    ResourceGuard {
        what: String,
        estimate: u128,
        guard: u64,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown gallery entry `{name}`; valid names: {valid}")]
    UnknownGallery { name: String, valid: String },

    #[error("unknown suite `{name}`; valid names: {valid}")]
    UnknownSuite { name: String, valid: String },
}

pub type Result<T> = std::result::Result<T, Error>;
