use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a model invariant. The message names the invariant.
    #[error("{0}")]
    Domain(String),

    #[error("quadrature did not reach tolerance {tolerance:e} within depth {max_depth} (estimate {estimate})")]
    Quadrature {
        tolerance: f64,
        max_depth: u32,
        estimate: f64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Fails with `"<name> violated (...)"` unless `ok` holds.
pub(crate) fn ensure(ok: bool, invariant: &str, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{invariant} violated ({})",
            detail()
        )))
    }
}
