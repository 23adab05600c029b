use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings: {0}")]
    RingMismatch(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("negative exponent {0} rejected")]
    NegativeExponent(i64),

    #[error("colon by the zero ideal")]
    ZeroDivisorIdeal,

    #[error("ideal is not zero-dimensional at the origin: no power of `{variable}` lies in the ideal up to degree {cap}")]
    NotZeroDimensional { variable: String, cap: u32 },

    #[error("monomial degree {degree} exceeds the configured ceiling {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("containment failure: generator `{witness}` is not in the larger ideal")]
    NotContained { witness: String },

    #[error("insufficient window: Hilbert polynomial fit does not predict value at n = {index}")]
    InsufficientWindow { index: usize },

    #[error("no stabilization up to {cap}")]
    NoStabilization { cap: usize },

    #[error("not a reduction up to N = {checked}: I^(r+1) != Q I^r for all r <= {checked}")]
    NotAReduction { checked: usize },

    #[error("numerator evaluates to zero at z = 1")]
    BadNumerator,

    #[error("non-integral Hilbert coefficient fit")]
    NonIntegralFit,

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Input errors map to CLI exit code 2, resource and stabilization
    /// failures to exit code 3.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::DegreeCap { .. }
                | Error::NoStabilization { .. }
                | Error::InsufficientWindow { .. }
                | Error::NotAReduction { .. }
        )
    }
}
