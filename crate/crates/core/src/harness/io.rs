//! Network file format.
//!
//! ```json
//! {
//!   "nodes": 3,
//!   "source": 0,
//!   "target": 2,
//!   "edges": [
//!     [0, 1, "1"],
//!     [1, 2, "3/2"]
//!   ]
//! }
//! ```
//!
//! Lengths are exact rationals written as `"p/q"` or `"p"`; bare JSON integers
//! are accepted on input. An optional `"uniform_length"` declares the common
//! string length.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use super::HarnessError;
use crate::network::{NodeId, StringEdge, StringNetwork};
use crate::rational::{self, Rational};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNetwork {
    nodes: usize,
    edges: Vec<(u32, u32, Value)>,
    source: u32,
    target: u32,
    #[serde(default)]
    uniform_length: Option<Value>,
}

fn parse_length(value: &Value, field: &str) -> Result<Rational, HarnessError> {
    let err = |message: String| HarnessError::Parse {
        location: field.to_string(),
        message,
    };
    match value {
        Value::String(s) => rational::parse(s).map_err(|e| err(e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(rational::int)
            .ok_or_else(|| err(format!("length {n} is not an integer; write fractions as \"p/q\""))),
        other => Err(err(format!("expected rational string, found {other}"))),
    }
}

/// Parses a network without validating it; call [`StringNetwork::validate`]
/// on the result.
pub fn network_from_str(text: &str) -> Result<StringNetwork, HarnessError> {
    let raw: RawNetwork = serde_json::from_str(text).map_err(|e| HarnessError::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let edges = raw
        .edges
        .iter()
        .enumerate()
        .map(|(i, (u, v, len))| {
            Ok(StringEdge::new(
                NodeId(*u),
                NodeId(*v),
                parse_length(len, &format!("edges[{i}][2]"))?,
            ))
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    let uniform = raw
        .uniform_length
        .as_ref()
        .map(|v| parse_length(v, "uniform_length"))
        .transpose()?;
    Ok(StringNetwork::from_parts_unchecked(
        raw.nodes,
        edges,
        NodeId(raw.source),
        NodeId(raw.target),
        uniform,
    ))
}

pub fn network_to_string(net: &StringNetwork) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"nodes\": {},", net.node_count());
    let _ = writeln!(out, "  \"source\": {},", net.source());
    let _ = writeln!(out, "  \"target\": {},", net.target());
    if let Some(d) = net.declared_uniform_length() {
        let _ = writeln!(out, "  \"uniform_length\": \"{d}\",");
    }
    if net.edges().is_empty() {
        let _ = writeln!(out, "  \"edges\": []");
    } else {
        let _ = writeln!(out, "  \"edges\": [");
        let last = net.edges().len() - 1;
        for (i, e) in net.edges().iter().enumerate() {
            let sep = if i == last { "" } else { "," };
            let _ = writeln!(out, "    [{}, {}, \"{}\"]{sep}", e.u, e.v, e.length);
        }
        let _ = writeln!(out, "  ]");
    }
    out.push_str("}\n");
    out
}

pub fn read_network(path: impl AsRef<Path>) -> Result<StringNetwork, HarnessError> {
    network_from_str(&fs::read_to_string(path)?)
}

pub fn write_network(net: &StringNetwork, path: impl AsRef<Path>) -> Result<(), HarnessError> {
    fs::write(path, network_to_string(net))?;
    Ok(())
}
