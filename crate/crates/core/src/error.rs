use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TGraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("elements belong to different bounds ({left:?} vs {right:?})")]
    IncompatibleElements { left: Vec<u32>, right: Vec<u32> },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// Union-find and Laplacian nullity disagree. This is always a bug in
    /// this crate, never a property of the input.
    #[error("component oracles diverge on bounds {bounds:?}, t={t}: union-find {union_find}, nullity {nullity}")]
    OracleDivergence {
        bounds: Vec<u32>,
        t: u32,
        union_find: usize,
        nullity: usize,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl TGraphError {
    pub(crate) fn size(
        what: &'static str,
        actual: impl Into<u128>,
        limit: impl Into<u128>,
    ) -> Self {
        TGraphError::SizeLimit {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }
}

impl From<std::io::Error> for TGraphError {
    fn from(err: std::io::Error) -> Self {
        TGraphError::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, TGraphError>;
