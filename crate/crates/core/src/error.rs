use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("(N, N') = ({n}, {nprime}) violates the Nikulin inequalities (r <= 20, a >= 0, g >= 0, k >= 0)")]
    OutOfRange { n: i64, nprime: i64 },

    #[error("(N, N') = ({n}, {nprime}) passes the inequalities but is not an admissible fixed-locus pair")]
    Inadmissible { n: i64, nprime: i64 },

    #[error("r - a = {r} - {a} is odd")]
    Parity { r: i64, a: i64 },

    #[error("odd numerator {numerator} in {what}")]
    OddNumerator { what: &'static str, numerator: i64 },

    #[error("inconsistent Beauville data (t11, c, d) = ({t11}, {c}, {d}): component count b = {b} is negative")]
    NegativeComponentCount { t11: i64, c: i64, d: i64, b: i64 },

    #[error("t11 = {0} outside [0, 21]")]
    T11Range(i64),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("exponent {exponent} outside [0, {p})")]
    ExponentRange { exponent: u32, p: u32 },

    #[error("spectrum has odd length {0}; the ambient hyperkahler dimension is even")]
    OddLength(usize),

    #[error("spectrum length {len} does not match ambient dimension 2n = {expected}")]
    LengthMismatch { len: usize, expected: usize },

    #[error("not volume-preserving at this component: sum of exponents {sum} is not divisible by {p}")]
    NotVolumePreserving { sum: u32, p: u32 },

    #[error("fixed component dimension {dim} outside [0, {max}]")]
    ComponentDimension { dim: u32, max: u32 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Gram matrix is not symmetric")]
    NotSymmetric,

    #[error("Gram matrix has odd diagonal entry {0}")]
    OddDiagonal(i64),

    #[error("odd self-intersection {0} on a K3 surface")]
    OddSelfIntersection(i64),

    #[error("h0 formula is not integral for (H.H) = {0}")]
    NonIntegral(i64),

    #[error("{0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
