//! Generators, file formats and batch verification.

mod error;
pub mod generate;
pub mod io;
pub mod oracle;
pub mod trace;
pub mod verify;

pub use error::HarnessError;
pub use generate::{generate, GeneratorKind, GeneratorSpec};
pub use io::{network_from_str, network_to_string, read_network, write_network};
pub use verify::{verify_batch, verify_network, BatchEntry, BatchFailure, BatchFile, BatchReport};
