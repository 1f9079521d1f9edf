use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Curve data violates the model hypotheses; the message lists the
    /// violations found by validation.
    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    /// Genus came out negative or 2g-2 odd: the multiplicity data cannot
    /// belong to a curve.
    #[error("corrupt curve data: {0}")]
    CorruptCurve(String),

    #[error("place {index} of class {class} does not exist")]
    PlaceOutOfRange { class: usize, index: u64 },

    #[error("class {class} is not totally ramified (gcd(m, lambda) > 1)")]
    NotTotallyRamified { class: usize },

    #[error("places in a query must be pairwise distinct")]
    DuplicatePlace,

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("t = {t} outside [0, {max}]")]
    TOutOfRange { t: i128, max: i128 },

    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: i128 },

    #[error("{what} = {value} outside [{lo}, {hi}]")]
    ParamOutOfRange {
        what: &'static str,
        value: i128,
        lo: i128,
        hi: i128,
    },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("{n} is not a gap")]
    NotAGap { n: i128 },

    #[error("empty box: lower bound exceeds upper bound at coordinate {index}")]
    EmptyBox { index: usize },

    #[error("design rejected: deg(G) = {deg_g} not strictly between {lo} and {hi}")]
    DesignRejected { deg_g: i128, lo: i128, hi: i128 },

    #[error("unknown place selector: {0}")]
    UnknownPlace(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
