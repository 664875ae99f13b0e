use thiserror::Error;

/// Errors raised while parsing inputs or evaluating operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("undeclared vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` declared free with no letters")]
    EmptyLetterList(String),
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("invalid exponent in `{0}`")]
    BadExponent(String),
    #[error("malformed expression `{0}`")]
    Malformed(String),
    #[error("invalid payload for vertex `{0}`")]
    InvalidPayload(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("no common left multiple")]
    NoCommonMultiple,
    #[error("operation undefined on zero")]
    ZeroInput,
    #[error("graph group arithmetic requires every component to be monogenic")]
    NotMonogenic,
    #[error("expression is not reduced")]
    NotReduced,
    #[error("oracle bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
