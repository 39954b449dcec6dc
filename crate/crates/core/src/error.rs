use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("operation requires {expected} variable(s), polynomial has {found}")]
    WrongVariableCount { expected: String, found: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero coordinate at position {0}")]
    ZeroCoordinate(usize),
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("exact division failed")]
    InexactDivision,
    #[error("enumeration bound exceeded: {what} is {found}, limit {limit}")]
    EnumerationBound {
        what: &'static str,
        found: usize,
        limit: usize,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("singular sublattice basis")]
    SingularLattice,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("not planar: {0}")]
    NonPlanar(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("braid has {0} strands, an even count is required")]
    OddStrandCount(usize),
    #[error("invalid braid generator {index} for {strands} strands")]
    InvalidGenerator { index: i64, strands: usize },
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
