use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: vertex id {id} exceeds the supported maximum {max}")]
    VertexOverflow { line: usize, id: String, max: u64 },

    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("letter {letter} is outside the alphabet 0..{alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("oracle size guard: n = {n} exceeds the limit {max}")]
    OracleSizeGuard { n: usize, max: usize },

    #[error("clique solver failed: {0}")]
    Solver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
