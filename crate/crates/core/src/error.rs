use thiserror::Error;

use crate::network::{NodeId, ValidationReport};

/// Failure modes shared by the simulators and the reference algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid network: {0}")]
    Invalid(ValidationReport),
    #[error("target {to} is not reachable from source {from}")]
    Unreachable { from: NodeId, to: NodeId },
    #[error("string ({u}, {v}) has length {length}, lift step requires uniform length {expected}")]
    NonUniform {
        u: NodeId,
        v: NodeId,
        length: String,
        expected: String,
    },
    #[error("cost parameter {name} must be positive, got {value}")]
    NonPositiveParam { name: &'static str, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
