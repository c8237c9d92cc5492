use thiserror::Error;

use crate::signature::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature ({p},{q}): need 1 <= p+q <= {max}")]
    InvalidSignature { p: u32, q: u32, max: u32 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("coframe index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("grade {grade} out of range 0..={n}")]
    GradeOutOfRange { grade: u32, n: u32 },

    #[error(
        "triangle product undefined for grade {left} against grade {right} (needs left <= right)"
    )]
    TriangleGradeOrder { left: u32, right: u32 },

    #[error("unsupported signature {sig}: {reason}")]
    UnsupportedSignature {
        sig: Signature,
        reason: &'static str,
    },

    #[error("form is not in {space}")]
    NotInSubspace { space: &'static str },

    #[error("size budget exceeded: n = {n} > {max}")]
    Budget { n: u32, max: u32 },

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("evaluation error: {0}")]
    Eval(String),
}
