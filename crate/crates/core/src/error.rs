use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("pattern of size {pattern} is longer than permutation of size {word}")]
    PatternTooLong { pattern: usize, word: usize },
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("permutation {0} is not binomial (contains 1243 or 2143)")]
    NotBinomial(String),
    #[error("diagram component at {corner:?} is not a translated Young diagram")]
    NonYoungComponent { corner: (usize, usize) },
    #[error("diagram component at {corner:?} has essential boxes of unequal rank")]
    UnequalComponentRank { corner: (usize, usize) },
    #[error("bipartite graph is disconnected")]
    DisconnectedGraph,
    #[error("monomial generator {0} is not squarefree")]
    NonSquarefree(String),
    #[error("generator sets share variables")]
    OverlappingSupports,
    #[error("malformed polynomial: {0}")]
    PolynomialSyntax(String),
    #[error("extremal family needs n >= 3, got {0}")]
    ExtremalTooSmall(usize),
}

impl Error {
    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
