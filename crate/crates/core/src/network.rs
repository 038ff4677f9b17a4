//! String networks: nodes joined by strings of exact rational length, with
//! the two grabbed endpoints, plus hop-layer decomposition around the source.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn from_index(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("node index exceeds u32"))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An undirected string between two knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub length: Rational,
}

impl StringEdge {
    pub fn new(u: NodeId, v: NodeId, length: Rational) -> Self {
        StringEdge { u, v, length }
    }

    /// Endpoints in ascending order; `(u, v)` and `(v, u)` share a key.
    pub fn key(&self) -> (NodeId, NodeId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn other(&self, x: NodeId) -> NodeId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SelfLoop { edge: usize, node: NodeId },
    NonPositiveLength { edge: usize, length: Rational },
    DuplicateEdge { first: usize, second: usize },
    EndpointOutOfRange { edge: usize, node: NodeId },
    SourceOutOfRange(NodeId),
    TargetOutOfRange(NodeId),
    SourceEqualsTarget(NodeId),
    NonPositiveUniformLength(Rational),
    UniformLengthMismatch { edge: usize, declared: Rational, length: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfLoop { edge, node } => write!(f, "edge #{edge} is a self-loop on node {node}"),
            Violation::NonPositiveLength { edge, length } => {
                write!(f, "edge #{edge} has non-positive length {length}")
            }
            Violation::DuplicateEdge { first, second } => {
                write!(f, "edge #{second} duplicates edge #{first}")
            }
            Violation::EndpointOutOfRange { edge, node } => {
                write!(f, "edge #{edge} references node {node} out of range")
            }
            Violation::SourceOutOfRange(x) => write!(f, "source {x} out of range"),
            Violation::TargetOutOfRange(x) => write!(f, "target {x} out of range"),
            Violation::SourceEqualsTarget(x) => write!(f, "source and target are both {x}"),
            Violation::NonPositiveUniformLength(len) => {
                write!(f, "declared uniform length {len} is not positive")
            }
            Violation::UniformLengthMismatch { edge, declared, length } => write!(
                f,
                "edge #{edge} has length {length} but declared uniform length is {declared}"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Undirected network of knots and strings with grabbed endpoints A′ (source)
/// and B′ (target).
///
/// Construction through [`StringNetwork::new`] validates; networks built with
/// [`StringNetwork::from_parts_unchecked`] may violate invariants and should be
/// passed through [`StringNetwork::validate`] before simulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringNetwork {
    node_count: usize,
    edges: Vec<StringEdge>,
    source: NodeId,
    target: NodeId,
    declared_uniform: Option<Rational>,
    // (neighbor, edge index), sorted by neighbor id
    adjacency: Vec<Vec<(NodeId, usize)>>,
}

impl StringNetwork {
    pub fn new(node_count: usize, edges: Vec<StringEdge>, source: NodeId, target: NodeId) -> Result<Self> {
        let net = Self::from_parts_unchecked(node_count, edges, source, target, None);
        net.ensure_valid()?;
        Ok(net)
    }

    /// Builds a network with `uniform_length` declared up front; validation
    /// then also checks every string against it.
    pub fn with_uniform_length(
        node_count: usize,
        edges: Vec<StringEdge>,
        source: NodeId,
        target: NodeId,
        uniform_length: Rational,
    ) -> Result<Self> {
        let net = Self::from_parts_unchecked(node_count, edges, source, target, Some(uniform_length));
        net.ensure_valid()?;
        Ok(net)
    }

    pub fn from_parts_unchecked(
        node_count: usize,
        edges: Vec<StringEdge>,
        source: NodeId,
        target: NodeId,
        declared_uniform: Option<Rational>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); node_count];
        for (i, e) in edges.iter().enumerate() {
            if e.u.index() >= node_count || e.v.index() >= node_count || e.u == e.v {
                continue;
            }
            adjacency[e.u.index()].push((e.v, i));
            adjacency[e.v.index()].push((e.u, i));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        StringNetwork {
            node_count,
            edges,
            source,
            target,
            declared_uniform,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[StringEdge] {
        &self.edges
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    pub fn target(&self) -> NodeId {
        self.target
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count).map(NodeId::from_index)
    }

    /// Declared uniform length, if any was given at construction.
    pub fn declared_uniform_length(&self) -> Option<&Rational> {
        self.declared_uniform.as_ref()
    }

    /// The common string length `d`, if every string has the same length.
    pub fn uniform_length(&self) -> Option<Rational> {
        if let Some(d) = &self.declared_uniform {
            return Some(d.clone());
        }
        let first = self.edges.first()?;
        self.edges
            .iter()
            .all(|e| e.length == first.length)
            .then(|| first.length.clone())
    }

    /// Neighbors of `x` with the index of the connecting edge, ascending by id.
    pub fn neighbors(&self, x: NodeId) -> &[(NodeId, usize)] {
        &self.adjacency[x.index()]
    }

    pub fn edge(&self, index: usize) -> &StringEdge {
        &self.edges[index]
    }

    /// Same network with endpoints replaced.
    pub fn with_endpoints(&self, source: NodeId, target: NodeId) -> Self {
        let mut net = self.clone();
        net.source = source;
        net.target = target;
        net
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let in_range = |x: NodeId| x.index() < self.node_count;
        if !in_range(self.source) {
            violations.push(Violation::SourceOutOfRange(self.source));
        }
        if !in_range(self.target) {
            violations.push(Violation::TargetOutOfRange(self.target));
        }
        if self.source == self.target {
            violations.push(Violation::SourceEqualsTarget(self.source));
        }
        if let Some(d) = &self.declared_uniform {
            if !rational::is_positive(d) {
                violations.push(Violation::NonPositiveUniformLength(d.clone()));
            }
        }
        let mut seen: BTreeMap<(NodeId, NodeId), usize> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if !in_range(x) {
                    violations.push(Violation::EndpointOutOfRange { edge: i, node: x });
                }
            }
            if e.u == e.v {
                violations.push(Violation::SelfLoop { edge: i, node: e.u });
            }
            if !rational::is_positive(&e.length) {
                violations.push(Violation::NonPositiveLength {
                    edge: i,
                    length: e.length.clone(),
                });
            }
            if let Some(first) = seen.insert(e.key(), i) {
                seen.insert(e.key(), first);
                violations.push(Violation::DuplicateEdge { first, second: i });
            }
            if let Some(d) = &self.declared_uniform {
                if &e.length != d {
                    violations.push(Violation::UniformLengthMismatch {
                        edge: i,
                        declared: d.clone(),
                        length: e.length.clone(),
                    });
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(report))
        }
    }
}

/// Undirected degree `g(x)`: the number of strings tied to `x`.
pub fn degree(net: &StringNetwork, x: NodeId) -> usize {
    net.neighbors(x).len()
}

/// Degrees of all nodes, indexed by node id.
pub fn degrees(net: &StringNetwork) -> Vec<usize> {
    net.nodes().map(|x| degree(net, x)).collect()
}

/// Positive weight, lift-step and per-addition time constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostParams {
    #[serde(with = "rational")]
    pub w: Rational,
    #[serde(with = "rational")]
    pub d: Rational,
    #[serde(with = "rational")]
    pub t: Rational,
}

impl CostParams {
    pub fn new(w: Rational, d: Rational, t: Rational) -> Result<Self> {
        for (name, value) in [("w", &w), ("d", &d), ("t", &t)] {
            if !rational::is_positive(value) {
                return Err(Error::NonPositiveParam {
                    name,
                    value: value.to_string(),
                });
            }
        }
        Ok(CostParams { w, d, t })
    }

    pub fn unit() -> Self {
        CostParams {
            w: rational::one(),
            d: rational::one(),
            t: rational::one(),
        }
    }

    /// `w·d`, the work to raise one node by one step.
    pub fn lift_unit(&self) -> Rational {
        &self.w * &self.d
    }
}

impl Default for CostParams {
    fn default() -> Self {
        Self::unit()
    }
}

/// Hop-distance layers `N(0), N(1), …` around the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    /// Each layer sorted by node id. Only nodes reachable from the source appear.
    pub layers: Vec<Vec<NodeId>>,
    /// Hop distance of the target.
    pub n: usize,
    hop: Vec<Option<usize>>,
    parent: Vec<Option<NodeId>>,
}

impl LayerDecomposition {
    /// `l(i)` for every layer.
    pub fn counts(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// `l(i)`, zero beyond the last layer.
    pub fn count(&self, i: usize) -> usize {
        self.layers.get(i).map_or(0, Vec::len)
    }

    pub fn layer(&self, i: usize) -> &[NodeId] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn hop(&self, x: NodeId) -> Option<usize> {
        self.hop.get(x.index()).copied().flatten()
    }

    /// Smallest-id neighbor one layer closer to the source; `None` for the
    /// source and for unreachable nodes.
    pub fn parent_choice(&self, x: NodeId) -> Option<NodeId> {
        self.parent.get(x.index()).copied().flatten()
    }

    pub fn reachable_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }
}

/// Frontier expansion from the source. Fails with [`Error::Unreachable`] when
/// the target has no hop path from the source.
pub fn hop_layers(net: &StringNetwork) -> Result<LayerDecomposition> {
    let mut hop = vec![None; net.node_count()];
    let mut parent = vec![None; net.node_count()];
    hop[net.source().index()] = Some(0);
    let mut layers = vec![vec![net.source()]];
    loop {
        let depth = layers.len();
        let mut next = Vec::new();
        // the current layer is ascending, so the first discoverer of a node is
        // its smallest-id neighbor one layer up
        for &x in &layers[depth - 1] {
            for &(y, _) in net.neighbors(x) {
                if hop[y.index()].is_none() {
                    hop[y.index()] = Some(depth);
                    parent[y.index()] = Some(x);
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        layers.push(next);
    }
    let n = hop[net.target().index()].ok_or(Error::Unreachable {
        from: net.source(),
        to: net.target(),
    })?;
    Ok(LayerDecomposition { layers, n, hop, parent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};

    #[test]
    fn minimal_network_is_valid() {
        assert!(fixtures::p2().validate().is_valid());
    }

    #[test]
    fn reports_self_loop() {
        let net = StringNetwork::from_parts_unchecked(
            2,
            vec![StringEdge::new(NodeId(0), NodeId(0), int(1))],
            NodeId(0),
            NodeId(1),
            None,
        );
        let report = net.validate();
        assert_eq!(
            report.violations,
            vec![Violation::SelfLoop { edge: 0, node: NodeId(0) }]
        );
    }

    #[test]
    fn reports_non_positive_length() {
        let net = StringNetwork::from_parts_unchecked(
            2,
            vec![StringEdge::new(NodeId(0), NodeId(1), int(-2))],
            NodeId(0),
            NodeId(1),
            None,
        );
        assert_eq!(
            net.validate().violations,
            vec![Violation::NonPositiveLength { edge: 0, length: int(-2) }]
        );
    }

    #[test]
    fn reports_duplicates_range_and_endpoints() {
        let net = StringNetwork::from_parts_unchecked(
            2,
            vec![
                StringEdge::new(NodeId(0), NodeId(1), int(1)),
                StringEdge::new(NodeId(1), NodeId(0), int(1)),
                StringEdge::new(NodeId(1), NodeId(5), int(1)),
            ],
            NodeId(1),
            NodeId(1),
            Some(ratio(1, 2)),
        );
        let v = net.validate().violations;
        assert!(v.contains(&Violation::SourceEqualsTarget(NodeId(1))));
        assert!(v.contains(&Violation::DuplicateEdge { first: 0, second: 1 }));
        assert!(v.contains(&Violation::EndpointOutOfRange { edge: 2, node: NodeId(5) }));
        assert!(v.iter().any(|x| matches!(x, Violation::UniformLengthMismatch { edge: 0, .. })));
        assert!(StringNetwork::new(2, vec![], NodeId(0), NodeId(2)).is_err());
    }

    #[test]
    fn hop_layers_on_path_and_star() {
        let layers = hop_layers(&fixtures::p3()).unwrap();
        assert_eq!(layers.counts(), vec![1, 1, 1]);
        assert_eq!(layers.n, 2);

        let layers = hop_layers(&fixtures::star3()).unwrap();
        assert_eq!(layers.counts(), vec![1, 3]);
        assert_eq!(layers.n, 1);
        assert_eq!(layers.layer(1), &[NodeId(1), NodeId(2), NodeId(3)]);
    }

    #[test]
    fn parent_choice_prefers_smallest_id() {
        let layers = hop_layers(&fixtures::c4()).unwrap();
        assert_eq!(layers.parent_choice(NodeId(2)), Some(NodeId(1)));
        assert_eq!(layers.parent_choice(NodeId(0)), None);
    }

    #[test]
    fn unreachable_target_is_reported() {
        let net = StringNetwork::new(
            3,
            vec![StringEdge::new(NodeId(0), NodeId(1), int(1))],
            NodeId(0),
            NodeId(2),
        )
        .unwrap();
        assert_eq!(
            hop_layers(&net),
            Err(Error::Unreachable { from: NodeId(0), to: NodeId(2) })
        );
    }

    #[test]
    fn degrees_on_fixtures() {
        assert_eq!(degree(&fixtures::p3(), NodeId(1)), 2);
        assert_eq!(degree(&fixtures::star3(), NodeId(0)), 3);
    }

    #[test]
    fn uniform_length_detection() {
        assert_eq!(fixtures::p3().uniform_length(), Some(int(1)));
        assert_eq!(fixtures::tri_w().uniform_length(), None);
    }

    #[test]
    fn cost_params_must_be_positive() {
        assert!(CostParams::new(int(1), int(0), int(1)).is_err());
        assert!(CostParams::new(int(1), ratio(1, 3), int(1)).is_ok());
    }
}
