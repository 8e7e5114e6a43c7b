use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex id {id} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { id: usize, vertex_count: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is disconnected: vertex {0} is unreachable")]
    Disconnected(usize),
    #[error("malformed orbit specification: {0}")]
    MalformedOrbits(String),
    #[error("need at least {needed} distinct samples for degree {degree}, got {got}")]
    InsufficientSamples { degree: usize, needed: usize, got: usize },
    #[error("sample parameter {0} appears more than once")]
    DuplicateSampleParameter(u64),
    #[error("fitted polynomial does not reproduce the sample at m = {m}, k = {k}")]
    SampleNotReproduced { m: u64, k: usize },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
