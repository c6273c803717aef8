use thiserror::Error;

/// Errors raised by set arithmetic, structure detection and certificate construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty set")]
    EmptySet,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid set literal: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// The longest maximal subinterval of `hA` is not unique.
    #[error("structure has not emerged at h = {h}: {count} maximal subintervals share the longest length {length}")]
    AmbiguousStructure { h: u32, length: u64, count: usize },

    #[error("no stabilization within window {window} up to hmax = {hmax}")]
    NoStabilization { window: u32, hmax: u32 },

    #[error("h = {h} is below the certificate threshold h1 = {h1}")]
    HBelowThreshold { h: u32, h1: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
