use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("unknown named graph `{0}`")]
    UnknownGraph(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParameters { name: String, reason: String },
    #[error("factors share variable namespace {0}")]
    SharedNamespace(u32),
    #[error("term is not part of the chain")]
    TermNotInChain,
    #[error("coefficient overflow")]
    Overflow,
    #[error("size cap exceeded: {requested} vertices requested, limit {limit}")]
    SizeCap { requested: usize, limit: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
