use thiserror::Error;

/// Errors raised by the geometric and combinatorial routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty polyhedron")]
    EmptyPolyhedron,
    #[error("not pointed")]
    NotPointed,
    #[error("not simple: {0}")]
    NotSimple(String),
    #[error("objective not generic")]
    ObjectiveNotGeneric,
    #[error("objective unbounded on polyhedron")]
    ObjectiveUnbounded,
    #[error("point outside polyhedron (row {row})")]
    PointOutside { row: usize },
    #[error("instance too large for brute force: {subsets} subsets exceed budget {budget}")]
    BruteForceBudget { subsets: u128, budget: u128 },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("far face required; use moebius_generation")]
    FarFaceRequired,
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// The innermost error, with stage annotations removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |e| Error::Stage { stage, source: Box::new(e) }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
