use thiserror::Error;

/// Errors raised by field construction, synthesis and circuit handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} has no ghost-bit basis (m+1 must be prime with 2 as a generator)")]
    UnsupportedDegree(usize),
    #[error("degree {0} is too small for this operation")]
    DegreeTooSmall(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("no Gaussian normal basis of type <= {max_type} exists for degree {m}")]
    NoGnbFound { m: usize, max_type: usize },
    #[error("invalid Gaussian normal basis parameters: {0}")]
    InvalidParams(String),
    #[error("exponent {r} out of range 0..={max}")]
    ExponentOutOfRange { r: usize, max: usize },
    #[error("Gauss period construction failed: {0}")]
    ConstructionFailed(String),
    #[error("input has {found} bits but the circuit has {expected} wires")]
    WidthMismatch { expected: usize, found: usize },
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("invalid register: {0}")]
    InvalidRegister(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Netlist parse failure, pointing at a 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, reason: impl Into<String>) -> Self {
        Self {
            line,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
