use thiserror::Error;

/// Errors reported by the library.
///
/// Everything here is an input-contract violation or a loud internal
/// invariant failure; the combinatorial operations themselves are total
/// once their preconditions hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least {min} marked points, got n={n}")]
    TooFewPoints { n: usize, min: usize },

    #[error("{what} supports n <= {cap}, got n={n}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("duplicate label {label}")]
    DuplicateLabel { label: usize },

    #[error("expected a permutation of 1..={n}, got {len} labels")]
    NotAPermutation { n: usize, len: usize },

    #[error("subset of size {size} is not a boundary divisor for n={n} (need 2 <= size <= n-2)")]
    SubsetSize { size: usize, n: usize },

    #[error("mismatched marked-point counts: {left} vs {right}")]
    MismatchedPoints { left: usize, right: usize },

    #[error("divisor {divisor} is not consecutive for the given order")]
    ExpectedConsecutive { divisor: String },

    #[error("divisor {divisor} is consecutive for the given order, expected a basis element")]
    ExpectedNonAdjacent { divisor: String },

    #[error("one-step relation produced the adjacent subset {subset}; notation invariant violated")]
    OracleTermAdjacent { subset: String },

    #[error("one-step relation produced inadmissible subset {subset} (size outside 2..=n-2)")]
    OracleTermSize { subset: String },

    #[error("vector length {got} does not match matrix column count {expected}")]
    RowLengthMismatch { expected: usize, got: usize },

    #[error("cannot parse label list {text:?} (expected comma-separated integers)")]
    BadLabelList { text: String },

    #[error("io error: {message}")]
    Io { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
