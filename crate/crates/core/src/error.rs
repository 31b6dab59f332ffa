use thiserror::Error;

/// Errors raised anywhere in the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("reserved word used as a variable name at byte {offset}: `{name}`")]
    ReservedWord { offset: usize, name: String },

    #[error("dialect violation ({dialect}): {message}")]
    Dialect { dialect: &'static str, message: String },

    #[error("unknown world `{0}`")]
    UnknownWorld(String),

    #[error("model file, line {line}: {message}")]
    ModelFormat { line: usize, message: String },

    #[error("invalid weights: {0}")]
    Weights(String),

    #[error("measure table has no entry for {0}")]
    MissingMeasure(String),

    #[error("too many variables: {found} exceeds the cap of {cap}")]
    TooManyVariables { found: usize, cap: usize },

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("side condition failed: {0}")]
    SideCondition(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("proof file, line {line}: {message}")]
    ProofFormat { line: usize, message: String },
}

impl Error {
    /// Whether the error comes from a resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::TooManyVariables { .. } | Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
