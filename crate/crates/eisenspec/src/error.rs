use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide error type. Every fallible public operation returns this;
/// the message names the violated precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point is not in the upper half-plane (y = {y})")]
    NotUpperHalfPlane { y: f64 },

    #[error("matrix ({a}, {b}; {c}, {d}) has determinant {det}, expected 1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64, det: i64 },

    #[error("fundamental-domain reduction exceeded {0} iterations (numerically degenerate input)")]
    ReductionStalled(usize),

    #[error("transform entries overflowed i64 during composition")]
    TransformOverflow,

    #[error("{func}: argument {arg} lies within {radius:e} of a pole")]
    PoleProximity {
        func: &'static str,
        arg: Complex64,
        radius: f64,
    },

    #[error("{0}")]
    OutOfDomain(String),

    #[error("Richardson extrapolation did not settle (last correction {0:e})")]
    ExtrapolationDiverged(f64),

    #[error("contour of radius {radius} around {center} leaves the admissible region")]
    ContourLeavesRegion { center: Complex64, radius: f64 },

    #[error("invalid group datum: {0}")]
    InvalidGroupDatum(String),

    #[error("invalid mode span: {0}")]
    InvalidModeSpan(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("refusing to emit an empty table")]
    EmptyTable,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn out_of_domain(msg: impl Into<String>) -> Self {
        Error::OutOfDomain(msg.into())
    }
}
