//! Simulation of shortest-path finding with a physical string network.
//!
//! Knots are nodes and strings are edges. Grabbing the source knot and
//! lifting it off a table in steps of the string length `d` raises the
//! network layer by layer; the target leaves the table after as many steps as
//! its hop distance, hanging from the source along a shortest path. The crate
//! simulates that procedure with exact work accounting, runs the symbolic
//! breadth-first search variants it mirrors with exact time accounting, and
//! evaluates the closed-form cost sums both are expected to match.
//!
//! - [`network`]: data model, validation, hop layers.
//! - [`lift_discrete`]: grab and step-wise lift with node- and string-weight work.
//! - [`bfs_ref`]: naive set BFS, enumerating BFS, frontier BFS, Dijkstra.
//! - [`lift_continuous`]: lift-off heights for arbitrary lengths and the two-point pull-apart.
//! - [`formulas`]: closed-form work and time sums and the cross-model check.
//! - [`harness`]: generators, file formats, batch verification.

pub mod bfs_ref;
pub mod error;
pub mod fixtures;
pub mod formulas;
pub mod harness;
pub mod lift_continuous;
pub mod lift_discrete;
pub mod network;
pub mod rational;

pub use error::{Error, Result};
pub use network::{CostParams, LayerDecomposition, NodeId, StringEdge, StringNetwork};
pub use rational::Rational;
