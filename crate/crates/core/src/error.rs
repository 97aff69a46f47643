use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooLarge { n: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("theta is undefined at isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("not a Laplacian characteristic polynomial: {0}")]
    InvalidCharPoly(String),

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("structural precondition failed: {0}")]
    Structure(String),

    #[error("enumeration budget exceeded: n = {n} is above the guard of {guard} (use force to override)")]
    Budget { n: usize, guard: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
