use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(m0,d) must be 1, got gcd({m0},{d}) = {gcd}")]
    Gcd { m0: u64, d: u64, gcd: u64 },

    #[error("generator m_{index} = {value} is a combination of the others: {representation:?}")]
    NotMinimal {
        index: usize,
        value: u64,
        /// Multiplicities of m_0..m_p (the entry at `index` is zero).
        representation: Vec<u64>,
    },

    #[error("parameter hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("index {what} out of range: {detail}")]
    Index { what: &'static str, detail: String },

    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
