use thiserror::Error;

/// Errors raised across the crate. Each variant names the offending item so
/// front ends can point at the input that caused it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("relation {0}∘{1} is not a composable pair of arrows")]
    NonComposableRelation(String, String),
    #[error("vertex `{vertex}` has {count} {side} arrows (at most 2 allowed)")]
    FanOutExceeded {
        vertex: String,
        side: &'static str,
        count: usize,
    },
    #[error("gentleness violated at arrow `{arrow}`: {reason}")]
    GentlenessViolation { arrow: String, reason: String },
    #[error("algebra is infinite dimensional: relation-free cycle through `{0}`")]
    InfiniteDimensional(String),
    #[error("paths do not compose: {0}")]
    EndpointMismatch(String),
    #[error("illegal junction at letter index {index}: {reason}")]
    IllegalJunction { index: usize, reason: String },
    #[error("not a band: {0}")]
    NotABand(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no rational {k}-th root of {value}")]
    IrrationalRoot { value: String, k: u32 },
    #[error("root of unity of order {order} does not embed: {reason}")]
    OrderMismatch { order: u64, reason: String },
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("case not applicable: {0}")]
    CaseNotApplicable(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
