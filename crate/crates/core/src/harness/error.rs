use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("{kind} generator did not connect source and target within {attempts} attempts")]
    GenerationFailed { kind: String, attempts: usize },
    #[error(transparent)]
    Network(#[from] crate::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
