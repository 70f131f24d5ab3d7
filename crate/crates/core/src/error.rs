use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("finite sets must be nonempty")]
    EmptySet,

    #[error("invalid grid parameters: {0}")]
    InvalidGrid(String),

    #[error("word has {word} exponents but there are {generators} generators")]
    WordLength { word: usize, generators: usize },

    #[error("monomial has {found} variables, the context has {expected}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("the order does not rank {0} above the kept variables")]
    NotAnEliminationOrder(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid semigroup description: {0}")]
    InvalidSpec(String),

    #[error("generator {set} is not a singleton or {{c}}+A_(n,m) for k={k}, a={a}, b={b}")]
    Unrecognized { set: String, k: u64, a: u64, b: u64 },

    #[error("the ideal is not strongly reduced")]
    NotStronglyReduced,

    #[error("{target}^{power} is not expressible without {target}")]
    NotExpressible { target: String, power: u64 },
}
