//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration oracle was asked for a ground set beyond its cap.
    #[error("enumeration size {n} exceeds cap {cap} (set DERIVKIT_ORACLE_CAP to raise it)")]
    CapExceeded { n: usize, cap: usize },

    /// The verification registry has no identity with this name.
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    /// A verification range violates the identity's structural bounds.
    #[error("invalid range {lo}..={hi} for `{identity}` (minimum index {min})")]
    InvalidRange {
        identity: String,
        lo: u32,
        hi: u32,
        min: u32,
    },

    /// The requested serialization format does not apply to this object.
    #[error("unsupported format `{format}` for {object}")]
    UnsupportedFormat { object: String, format: String },

    /// Malformed textual input (rational strings, json payloads).
    #[error("parse error: {0}")]
    Parse(String),

    /// A gamma expansion produced a negative or non-integral entry.
    #[error("gamma expansion violation for {kind} n={n}: entry k={k} is {value}")]
    GammaViolation {
        kind: String,
        n: usize,
        k: usize,
        value: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
