use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A state or density matrix violates one of its invariants beyond tolerance.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A scalar parameter lies outside its admissible range.
    #[error("{name} = {value} is outside {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A state has support above the requested photon-number truncation.
    #[error("truncation {truncation} cannot hold manifold N = {required}")]
    TruncationTooSmall { truncation: usize, required: usize },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, range: &'static str) -> Self {
        Error::Domain { name, value, range }
    }
}

/// Checks `0 <= s <= 1`, the range of every Rényi exponent in this crate.
pub(crate) fn check_exponent(s: f64) -> Result<()> {
    if (0.0..=1.0).contains(&s) {
        Ok(())
    } else {
        Err(Error::domain("s", s, "[0, 1]"))
    }
}
