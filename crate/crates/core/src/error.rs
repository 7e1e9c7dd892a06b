use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Each variant maps to a stable short code (see [`Error::code`]) that the CLI
/// prints on its error line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("primitive polynomial {poly:#x} does not have degree {m}")]
    DegreeMismatch { m: u32, poly: u32 },
    #[error("polynomial {poly:#x} is not primitive: x has order {order}, expected {expected}")]
    NotPrimitive {
        poly: u32,
        order: usize,
        expected: usize,
    },
    #[error("extension degree {0} out of range 1..=16")]
    UnsupportedDegree(u32),
    #[error("division by zero")]
    DivideByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("need at least two codewords, got {0}")]
    TooFewWords(usize),
    #[error(
        "minimum distance {distance} differs from minimum weight {weight}; code is not linear"
    )]
    NotLinear { distance: usize, weight: usize },
    #[error("generator does not divide x^{n} - 1")]
    NotADivisor { n: usize },
    #[error("designed distance {delta} out of range 2..={max}")]
    DeltaOutOfRange { delta: usize, max: usize },
    #[error("bad format: {0}")]
    BadFormat(String),
    #[error("bad code dimensions n={n}, k={k} for field of order {q}")]
    BadDimensions { n: usize, k: usize, q: usize },
    #[error("too many errors to correct")]
    DecodeFailure,
    #[error("unsupported QR version {0}")]
    UnsupportedVersion(u32),
    #[error("text of {len} bytes exceeds capacity {capacity}")]
    Overflow { len: usize, capacity: usize },
    #[error("codeword count does not match the layout: {0}")]
    LayoutMismatch(String),
    #[error("format information unreadable")]
    FormatUnreadable,
    #[error("block {block} has too many errors")]
    BlockDecodeFailure { block: usize },
    #[error("unsupported segment mode {0:#06b}")]
    UnsupportedMode(u8),
    #[error("codeword sets were built for different configurations")]
    ConfigMismatch,
    #[error("plan verification failed: {0}")]
    VerificationFailed(String),
    #[error("search results depend on the probe text")]
    TextDependence,
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::NotPrimitive { .. } => "not-primitive",
            Error::UnsupportedDegree(_) => "unsupported-degree",
            Error::DivideByZero => "divide-by-zero",
            Error::FieldMismatch => "field-mismatch",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::TooFewWords(_) => "too-few-words",
            Error::NotLinear { .. } => "not-linear",
            Error::NotADivisor { .. } => "not-a-divisor",
            Error::DeltaOutOfRange { .. } => "delta-out-of-range",
            Error::BadFormat(_) => "bad-format",
            Error::BadDimensions { .. } => "bad-dimensions",
            Error::DecodeFailure => "decode-failure",
            Error::UnsupportedVersion(_) => "unsupported-version",
            Error::Overflow { .. } => "overflow",
            Error::LayoutMismatch(_) => "layout-mismatch",
            Error::FormatUnreadable => "format-unreadable",
            Error::BlockDecodeFailure { .. } => "block-decode-failure",
            Error::UnsupportedMode(_) => "unsupported-mode",
            Error::ConfigMismatch => "config-mismatch",
            Error::VerificationFailed(_) => "verification-failed",
            Error::TextDependence => "text-dependence",
        }
    }
}
