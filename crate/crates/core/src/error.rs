use thiserror::Error;

use crate::report::LawReport;

/// Failures that are not law violations.
///
/// A checker that finds wrong mathematics returns `Ok(report)` with a failing
/// verdict; the variants here cover broken data and exhausted budgets.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("unsupported tier: {0}")]
    UnsupportedTier(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumerating {what} needs about {estimate} items, cap is {cap}")]
    Resource {
        what: String,
        estimate: u128,
        cap: usize,
    },

    #[error("law violation in {}: {} failing instance(s)", .0.subject, .0.violation_count())]
    Law(Box<LawReport>),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}
