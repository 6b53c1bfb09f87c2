//! Error types shared across the toolkit.

use thiserror::Error;

/// Everything that can go wrong in the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at x = {x}")]
    GammaPole { x: f64 },

    /// A precondition on the inputs failed; the message names the condition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature or differencing could not reach the requested accuracy.
    #[error("accuracy not reached: achieved {achieved:.3e}, requested {requested:.3e}")]
    Accuracy { achieved: f64, requested: f64 },

    /// Time stepping produced a non-finite value.
    #[error("solver instability detected at time layer {layer}")]
    Instability { layer: usize },

    /// Input is outside the class of expressions the symbolic engine closes over.
    #[error("unsupported form: {0}")]
    UnsupportedForm(String),

    /// Unknown catalog / reduced-equation identifier.
    #[error("unknown entry: {0}")]
    UnknownEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
