use thiserror::Error;

use crate::report::VerificationReport;
use crate::scalar::FieldDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("modulus {0} is not a supported prime")]
    NotPrime(u64),
    #[error("unknown field descriptor {0:?} (expected \"Q\" or \"Fp:<p>\")")]
    BadField(String),
    #[error("cannot parse {text:?} as an element of {field}")]
    Parse { text: String, field: FieldDescriptor },
    #[error("zero is not a root of unity")]
    ZeroRoot,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("group order must be at least 1, got {0}")]
    InvalidOrder(i64),
    #[error("group element {element:?} does not belong to Z{orders:?}")]
    ElementOutOfRange { element: Vec<i64>, orders: Vec<u32> },
    #[error("group mismatch: Z{0:?} vs Z{1:?}")]
    GroupMismatch(Vec<u32>, Vec<u32>),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("{what} entry at ({x}, {y}) is zero")]
    ZeroEntry { what: &'static str, x: String, y: String },
    #[error("{what} entry at ({x}, {y}) is given twice")]
    DuplicateEntry { what: &'static str, x: String, y: String },
    #[error("{0} is not a primitive {1}-th root of unity")]
    NotPrimitiveRoot(String, u64),
    #[error("exponent matrix must be {expected}x{expected}")]
    ExponentShape { expected: usize },
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("basis index {index} out of range for a basis of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("span not closed under the bracket: [{left}, {right}] has a component along {escaped}")]
    NotClosed {
        left: String,
        right: String,
        escaped: String,
    },
    #[error("{operation}: precondition failed ({})", .report.failed_ids().join(", "))]
    Precondition {
        operation: &'static str,
        report: Box<VerificationReport>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
