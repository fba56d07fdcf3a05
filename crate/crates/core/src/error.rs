use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the support or domain of the operation.
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An iterative routine stopped without meeting its tolerance.
    #[error("{routine} did not converge after {iterations} iterations (achieved {achieved:e})")]
    NoConvergence {
        routine: &'static str,
        iterations: usize,
        achieved: f64,
    },

    #[error("quantity is undefined: {0}")]
    Undefined(&'static str),

    /// Dataset ingestion failure; `row` is 1-based when known.
    #[error("{}", match .row { Some(r) => format!("row {r}: {}", .message), None => .message.clone() })]
    Ingestion { row: Option<usize>, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// A broken internal invariant (a bug, not a user error).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(what: &'static str, value: f64, domain_desc: &'static str) -> Error {
    Error::Domain {
        what,
        value,
        domain: domain_desc,
    }
}
