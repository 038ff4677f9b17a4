//! Continuous lift for arbitrary string lengths, and the two-point pull-apart.
//!
//! On a frictionless table a knot stays put until the chain of strings
//! joining it to the rising source is taut, so it leaves the table exactly
//! when the source height exceeds its shortest chain length. The schedule is
//! computed as a discrete-event simulation: lifting a knot at height `h`
//! schedules a "string becomes taut" event at `h + len` for each of its
//! strings, and events fire in (height, knot id) order.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bfs_ref::{shortest_distances, shortest_path_from};
use crate::error::{Error, Result};
use crate::network::{NodeId, StringEdge, StringNetwork};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftoffEvent {
    pub node: NodeId,
    #[serde(serialize_with = "rational::serialize")]
    pub height: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftoffSchedule {
    /// Sorted by height, then node id. The source comes first at height 0.
    pub events: Vec<LiftoffEvent>,
    /// Knots with no chain to the source; they never leave the table.
    pub unreachable: Vec<NodeId>,
}

impl LiftoffSchedule {
    /// Lift-off height per node id.
    pub fn heights(&self, node_count: usize) -> Vec<Option<Rational>> {
        let mut heights = vec![None; node_count];
        for ev in &self.events {
            heights[ev.node.index()] = Some(ev.height.clone());
        }
        heights
    }

    /// Knots off the table while the source is at `height` (strictly above
    /// their lift-off height).
    pub fn off_surface_at(&self, height: &Rational) -> Vec<NodeId> {
        let mut nodes: Vec<NodeId> = self
            .events
            .iter()
            .take_while(|ev| &ev.height < height)
            .map(|ev| ev.node)
            .collect();
        nodes.sort_unstable();
        nodes
    }
}

pub fn liftoff_schedule(net: &StringNetwork) -> LiftoffSchedule {
    let mut lifted = vec![false; net.node_count()];
    let mut pending: BTreeSet<(Rational, NodeId)> = BTreeSet::new();
    let mut events = Vec::new();
    pending.insert((rational::zero(), net.source()));
    while let Some((height, x)) = pending.pop_first() {
        if lifted[x.index()] {
            continue;
        }
        lifted[x.index()] = true;
        for &(y, e) in net.neighbors(x) {
            if !lifted[y.index()] {
                pending.insert((&height + &net.edge(e).length, y));
            }
        }
        events.push(LiftoffEvent { node: x, height });
    }
    let unreachable = net.nodes().filter(|x| !lifted[x.index()]).collect();
    LiftoffSchedule { events, unreachable }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullApartResult {
    /// Distance between the two grabbed knots once the network is taut.
    pub separation: Rational,
    /// Strings pulled straight, in input order.
    pub taut_edges: Vec<StringEdge>,
    pub path: Vec<NodeId>,
}

/// Pull source and target apart until taut. A string is taut iff some
/// shortest source–target chain runs through it.
pub fn pull_apart(net: &StringNetwork) -> Result<PullApartResult> {
    let (from_source, _, _) = shortest_distances(net, net.source());
    let (from_target, _, _) = shortest_distances(net, net.target());
    let separation = from_source[net.target().index()].clone().ok_or(Error::Unreachable {
        from: net.source(),
        to: net.target(),
    })?;
    let through = |a: NodeId, b: NodeId, len: &Rational| -> Option<Rational> {
        Some(from_source[a.index()].as_ref()? + len + from_target[b.index()].as_ref()?)
    };
    let taut_edges = net
        .edges()
        .iter()
        .filter(|e| {
            [through(e.u, e.v, &e.length), through(e.v, e.u, &e.length)]
                .into_iter()
                .flatten()
                .min()
                .is_some_and(|m| m == separation)
        })
        .cloned()
        .collect();
    let path = shortest_path_from(net, &from_source, net.target());
    Ok(PullApartResult {
        separation,
        taut_edges,
        path,
    })
}
