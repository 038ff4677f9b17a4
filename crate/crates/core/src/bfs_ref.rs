//! Symbolic counterparts of the lift: breadth-first search in three flavours
//! and Dijkstra, each with exact cost counters.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{CostParams, NodeId, StringNetwork};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BfsVariant {
    /// Re-expands the whole lift set every iteration, stores a set.
    NaiveSet,
    /// Re-expands the whole lift set and pays for every adjacency visited.
    Enumerating,
    /// Expands only the previous frontier; marked nodes are never re-added.
    Marked,
}

impl BfsVariant {
    pub fn name(self) -> &'static str {
        match self {
            BfsVariant::NaiveSet => "naive-set",
            BfsVariant::Enumerating => "enumerating",
            BfsVariant::Marked => "marked",
        }
    }
}

impl fmt::Display for BfsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfsIteration {
    pub iteration: usize,
    /// Size of `lift` after the iteration.
    pub lift_size: usize,
    /// Node additions attempted, duplicates included.
    pub additions: usize,
    #[serde(serialize_with = "rational::serialize")]
    pub cost: Rational,
    /// Nodes new to `lift` in this iteration, ascending.
    pub added: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsRun {
    pub variant: BfsVariant,
    /// Loop iterations until the target is in `lift`.
    pub n: usize,
    /// Charge for initializing `lift` with the source.
    pub init_cost: Rational,
    pub iterations: Vec<BfsIteration>,
    /// `init_cost` plus all iteration costs.
    pub time_units: Rational,
}

impl BfsRun {
    /// Contents of `lift` after `iteration` (0 is the initial `{source}`).
    pub fn lift_after(&self, source: NodeId, iteration: usize) -> Vec<NodeId> {
        let mut lift: Vec<NodeId> = std::iter::once(source)
            .chain(self.iterations.iter().take(iteration).flat_map(|it| it.added.iter().copied()))
            .collect();
        lift.sort_unstable();
        lift
    }

    pub fn iteration_costs(&self) -> Vec<Rational> {
        self.iterations.iter().map(|it| it.cost.clone()).collect()
    }
}

fn unreachable(net: &StringNetwork) -> Error {
    Error::Unreachable {
        from: net.source(),
        to: net.target(),
    }
}

/// `lift = {A′}`; repeat until `B′ ∈ lift`: for each element of `lift` add all
/// its neighbors. Each iteration costs `t` per element of the resulting set,
/// initialization costs `t`.
pub fn naive_set_bfs(net: &StringNetwork, params: &CostParams) -> Result<BfsRun> {
    let mut lift = BTreeSet::from([net.source()]);
    let init_cost = params.t.clone();
    let mut time_units = init_cost.clone();
    let mut iterations = Vec::new();
    while !lift.contains(&net.target()) {
        if iterations.len() >= net.node_count() {
            return Err(unreachable(net));
        }
        let snapshot: Vec<NodeId> = lift.iter().copied().collect();
        let mut added = Vec::new();
        let mut additions = 0;
        for &x in &snapshot {
            for &(y, _) in net.neighbors(x) {
                additions += 1;
                if lift.insert(y) {
                    added.push(y);
                }
            }
        }
        added.sort_unstable();
        let cost = &params.t * rational::from_count(lift.len());
        time_units += &cost;
        iterations.push(BfsIteration {
            iteration: iterations.len() + 1,
            lift_size: lift.len(),
            additions,
            cost,
            added,
        });
    }
    Ok(BfsRun {
        variant: BfsVariant::NaiveSet,
        n: iterations.len(),
        init_cost,
        iterations,
        time_units,
    })
}

/// Same loop as [`naive_set_bfs`], but every neighbor visit of every element
/// of the pre-iteration `lift` costs `t`, duplicates included.
pub fn enumerating_bfs(net: &StringNetwork, params: &CostParams) -> Result<BfsRun> {
    let mut lift = BTreeSet::from([net.source()]);
    let mut time_units = rational::zero();
    let mut iterations = Vec::new();
    while !lift.contains(&net.target()) {
        if iterations.len() >= net.node_count() {
            return Err(unreachable(net));
        }
        let snapshot: Vec<NodeId> = lift.iter().copied().collect();
        let mut added = Vec::new();
        let mut additions = 0;
        for &x in &snapshot {
            for &(y, _) in net.neighbors(x) {
                additions += 1;
                if lift.insert(y) {
                    added.push(y);
                }
            }
        }
        added.sort_unstable();
        let cost = &params.t * rational::from_count(additions);
        time_units += &cost;
        iterations.push(BfsIteration {
            iteration: iterations.len() + 1,
            lift_size: lift.len(),
            additions,
            cost,
            added,
        });
    }
    Ok(BfsRun {
        variant: BfsVariant::Enumerating,
        n: iterations.len(),
        init_cost: rational::zero(),
        iterations,
        time_units,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedBfsRun {
    pub run: BfsRun,
    pub path: Vec<NodeId>,
}

/// Frontier BFS: each iteration expands only the nodes added in the previous
/// one. Cost is one unit per stored node, initialization included. The
/// returned path uses the smallest-id parent at every hop.
pub fn marked_bfs(net: &StringNetwork) -> Result<MarkedBfsRun> {
    let mut depth: Vec<Option<usize>> = vec![None; net.node_count()];
    let mut parent: Vec<Option<NodeId>> = vec![None; net.node_count()];
    depth[net.source().index()] = Some(0);
    let mut frontier = vec![net.source()];
    let mut iterations = Vec::new();
    let mut lift_size = 1;
    while depth[net.target().index()].is_none() {
        if frontier.is_empty() {
            return Err(unreachable(net));
        }
        let level = iterations.len() + 1;
        let mut added = Vec::new();
        let mut additions = 0;
        for &x in &frontier {
            for &(y, _) in net.neighbors(x) {
                match depth[y.index()] {
                    None => {
                        depth[y.index()] = Some(level);
                        parent[y.index()] = Some(x);
                        additions += 1;
                        added.push(y);
                    }
                    Some(l) if l == level => {
                        let p = parent[y.index()].as_mut().unwrap();
                        *p = (*p).min(x);
                    }
                    Some(_) => {}
                }
            }
        }
        added.sort_unstable();
        lift_size += added.len();
        iterations.push(BfsIteration {
            iteration: level,
            lift_size,
            additions,
            cost: rational::from_count(additions),
            added: added.clone(),
        });
        frontier = added;
    }
    let mut path = vec![net.target()];
    while let Some(p) = parent[path.last().unwrap().index()] {
        path.push(p);
    }
    path.reverse();
    let time_units = rational::from_count(lift_size);
    Ok(MarkedBfsRun {
        run: BfsRun {
            variant: BfsVariant::Marked,
            n: iterations.len(),
            init_cost: rational::one(),
            iterations,
            time_units,
        },
        path,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DijkstraRun {
    pub distance: Rational,
    /// Settled nodes in (distance, id) order.
    pub settle_order: Vec<NodeId>,
    /// Distance from the source; `None` for unreachable nodes.
    pub dist_map: Vec<Option<Rational>>,
    pub path: Vec<NodeId>,
    /// Successful relaxations (tentative distance improved).
    pub relaxations: usize,
}

/// Single-source exact distances plus settle order and relaxation count.
pub fn shortest_distances(net: &StringNetwork, source: NodeId) -> (Vec<Option<Rational>>, Vec<NodeId>, usize) {
    let mut dist: Vec<Option<Rational>> = vec![None; net.node_count()];
    let mut settled = vec![false; net.node_count()];
    let mut order = Vec::new();
    let mut relaxations = 0;
    let mut heap = BinaryHeap::new();
    dist[source.index()] = Some(rational::zero());
    heap.push(Reverse((rational::zero(), source)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if settled[x.index()] {
            continue;
        }
        settled[x.index()] = true;
        order.push(x);
        for &(y, e) in net.neighbors(x) {
            if settled[y.index()] {
                continue;
            }
            let candidate = &d + &net.edge(e).length;
            if dist[y.index()].as_ref().is_none_or(|cur| &candidate < cur) {
                relaxations += 1;
                dist[y.index()] = Some(candidate.clone());
                heap.push(Reverse((candidate, y)));
            }
        }
    }
    (dist, order, relaxations)
}

/// Smallest-id predecessor walk over a distance map, source first.
pub(crate) fn shortest_path_from(net: &StringNetwork, dist: &[Option<Rational>], target: NodeId) -> Vec<NodeId> {
    let mut path = vec![target];
    let mut x = target;
    while x != net.source() {
        let dx = dist[x.index()].as_ref().expect("target is reachable");
        x = net
            .neighbors(x)
            .iter()
            .find(|&&(y, e)| {
                dist[y.index()]
                    .as_ref()
                    .is_some_and(|dy| &(dy + &net.edge(e).length) == dx)
            })
            .map(|&(y, _)| y)
            .expect("every reached node has a tight predecessor");
        path.push(x);
    }
    path.reverse();
    path
}

pub fn dijkstra(net: &StringNetwork) -> Result<DijkstraRun> {
    let (dist_map, settle_order, relaxations) = shortest_distances(net, net.source());
    let distance = dist_map[net.target().index()].clone().ok_or_else(|| unreachable(net))?;
    let path = shortest_path_from(net, &dist_map, net.target());
    Ok(DijkstraRun {
        distance,
        settle_order,
        dist_map,
        path,
        relaxations,
    })
}
