use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {order} exceeds the cap of {cap} for {what}")]
    OverCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("{what} requires a connected graph")]
    Disconnected { what: &'static str },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph spec {spec:?}: {reason}")]
    GraphSpec { spec: String, reason: String },

    #[error("family file line {line}: {reason}")]
    FamilyFile { line: usize, reason: String },

    #[error("enumeration of minimum bases exceeded the limit of {limit}")]
    TooManyBases { limit: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
