use thiserror::Error;

use crate::cycles::Cycle;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("search budget of {limit} nodes exceeded in {stage}")]
    BudgetExceeded { stage: &'static str, limit: u64 },
    #[error("graph has {n} vertices; exact solvers support at most {max}")]
    GraphTooLarge { n: usize, max: usize },
    #[error("invalid cycle family: {0}")]
    InvalidSpec(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph has a cycle of length {} >= {ell}", .evidence.len())]
    LongCycle { ell: usize, evidence: Cycle },
    #[error("vertex {0} is both added to every bag and present in the decomposition")]
    IdCollision(usize),
    #[error("bound violated: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
