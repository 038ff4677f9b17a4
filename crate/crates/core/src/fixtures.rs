//! Small hand-checkable networks used throughout the tests and the CLI docs.

use crate::network::{NodeId, StringEdge, StringNetwork};
use crate::rational::{int, Rational};

fn build(node_count: usize, edges: &[(u32, u32, Rational)], source: u32, target: u32) -> StringNetwork {
    let edges = edges
        .iter()
        .map(|(u, v, len)| StringEdge::new(NodeId(*u), NodeId(*v), len.clone()))
        .collect();
    StringNetwork::new(node_count, edges, NodeId(source), NodeId(target)).expect("fixture is valid")
}

/// Single string 0–1 of length `d`.
pub fn p2_with(d: Rational) -> StringNetwork {
    build(2, &[(0, 1, d)], 0, 1)
}

pub fn p2() -> StringNetwork {
    p2_with(int(1))
}

/// Path 0–1–2, source 0, target 2.
pub fn p3_with(d: Rational) -> StringNetwork {
    build(3, &[(0, 1, d.clone()), (1, 2, d)], 0, 2)
}

pub fn p3() -> StringNetwork {
    p3_with(int(1))
}

/// Center 0 joined to 1, 2, 3; source 0, target 1.
pub fn star3_with(d: Rational) -> StringNetwork {
    build(4, &[(0, 1, d.clone()), (0, 2, d.clone()), (0, 3, d)], 0, 1)
}

pub fn star3() -> StringNetwork {
    star3_with(int(1))
}

/// Cycle 0–1–2–3–0, source 0, target 2.
pub fn c4_with(d: Rational) -> StringNetwork {
    build(
        4,
        &[(0, 1, d.clone()), (1, 2, d.clone()), (2, 3, d.clone()), (3, 0, d)],
        0,
        2,
    )
}

pub fn c4() -> StringNetwork {
    c4_with(int(1))
}

/// Triangle with a long shortcut: 0–1 (1), 1–2 (1), 0–2 (3); source 0, target 2.
pub fn tri_w() -> StringNetwork {
    build(3, &[(0, 1, int(1)), (1, 2, int(1)), (0, 2, int(3))], 0, 2)
}
