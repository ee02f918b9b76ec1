use thiserror::Error;

/// Errors raised by the partlab engine.
///
/// Verification failures are never errors; they are report content.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid concave composition: {0}")]
    InvalidComposition(String),

    #[error("invalid signed triple: {0}")]
    InvalidTriple(String),

    #[error("outside the domain of {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("sum did not stabilise below order {order} within {cap} terms")]
    Divergence { order: usize, cap: usize },

    #[error("unknown statistic key `{0}`")]
    UnknownStatistic(String),

    #[error("statistic `{key}` requires parameter m")]
    MissingParameter { key: String },

    #[error("statistic `{key}` takes no parameter")]
    UnexpectedParameter { key: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown series `{0}`")]
    UnknownSeries(String),

    #[error("order {requested} is not feasible for `{id}`; use at most {max}")]
    Infeasible {
        id: String,
        requested: usize,
        max: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}
