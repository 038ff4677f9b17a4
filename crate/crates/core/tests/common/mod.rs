//! Independent oracles and corpus builders shared by the integration tests.
//! Nothing here calls into the algorithms under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stringlift::harness::{generate, GeneratorKind, GeneratorSpec};
use stringlift::rational::{self, Rational};
use stringlift::{CostParams, NodeId, StringEdge, StringNetwork};

/// Hop distances by repeated edge relaxation (Bellman–Ford with unit weights).
pub fn brute_hops(net: &StringNetwork) -> Vec<Option<usize>> {
    let mut dist: Vec<Option<usize>> = vec![None; net.node_count()];
    dist[net.source().index()] = Some(0);
    for _ in 0..net.node_count() {
        let mut changed = false;
        for e in net.edges() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if let Some(da) = dist[a.index()] {
                    if dist[b.index()].is_none_or(|db| da + 1 < db) {
                        dist[b.index()] = Some(da + 1);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

/// Length-weighted distances by repeated edge relaxation.
pub fn brute_distances(net: &StringNetwork, source: NodeId) -> Vec<Option<Rational>> {
    let mut dist: Vec<Option<Rational>> = vec![None; net.node_count()];
    dist[source.index()] = Some(rational::zero());
    for _ in 0..net.node_count() {
        let mut changed = false;
        for e in net.edges() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                if let Some(da) = dist[a.index()].clone() {
                    let cand = da + &e.length;
                    if dist[b.index()].as_ref().is_none_or(|db| &cand < db) {
                        dist[b.index()] = Some(cand);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

pub fn brute_degree(net: &StringNetwork, x: NodeId) -> usize {
    net.edges().iter().filter(|e| e.u == x || e.v == x).count()
}

pub struct Enumeration {
    pub min_length: Rational,
    pub min_hops: usize,
    /// Canonical (low, high) endpoint keys of edges on a minimum-length path.
    pub shortest_edge_keys: BTreeSet<(u32, u32)>,
    pub shortest_paths: Vec<Vec<NodeId>>,
}

/// Every simple source–target path by DFS over the raw edge list.
pub fn enumerate_simple_paths(net: &StringNetwork) -> Option<Enumeration> {
    fn dfs(
        net: &StringNetwork,
        x: NodeId,
        len: Rational,
        path: &mut Vec<NodeId>,
        found: &mut Vec<(Rational, Vec<NodeId>)>,
    ) {
        if x == net.target() {
            found.push((len, path.clone()));
            return;
        }
        for e in net.edges() {
            let y = if e.u == x {
                e.v
            } else if e.v == x {
                e.u
            } else {
                continue;
            };
            if path.contains(&y) {
                continue;
            }
            path.push(y);
            dfs(net, y, &len + &e.length, path, found);
            path.pop();
        }
    }
    let mut found = Vec::new();
    let mut path = vec![net.source()];
    dfs(net, net.source(), rational::zero(), &mut path, &mut found);
    let min_length = found.iter().map(|(l, _)| l.clone()).min()?;
    let min_hops = found.iter().map(|(_, p)| p.len() - 1).min()?;
    let shortest_paths: Vec<Vec<NodeId>> = found
        .into_iter()
        .filter(|(l, _)| *l == min_length)
        .map(|(_, p)| p)
        .collect();
    let shortest_edge_keys = shortest_paths
        .iter()
        .flat_map(|p| p.windows(2).map(|w| (w[0].0.min(w[1].0), w[0].0.max(w[1].0))))
        .collect();
    Some(Enumeration {
        min_length,
        min_hops,
        shortest_edge_keys,
        shortest_paths,
    })
}

/// Length of a node path if consecutive nodes are joined by strings.
pub fn walk_length(net: &StringNetwork, path: &[NodeId]) -> Option<Rational> {
    let mut total = rational::zero();
    for w in path.windows(2) {
        let e = net
            .edges()
            .iter()
            .find(|e| (e.u == w[0] && e.v == w[1]) || (e.u == w[1] && e.v == w[0]))?;
        total += &e.length;
    }
    Some(total)
}

pub fn is_shortest_path(net: &StringNetwork, path: &[NodeId], shortest: &Rational) -> bool {
    path.first() == Some(&net.source())
        && path.last() == Some(&net.target())
        && walk_length(net, path).as_ref() == Some(shortest)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational::ratio(rng.gen_range(1..=9), rng.gen_range(1..=5))
}

pub fn random_params(rng: &mut ChaCha8Rng) -> CostParams {
    CostParams::new(small_rational(rng), small_rational(rng), small_rational(rng)).unwrap()
}

/// Random spec from the mixed uniform corpus, |V| ≤ 200, fully connected.
pub fn uniform_spec(rng: &mut ChaCha8Rng, d: Rational) -> GeneratorSpec {
    let seed = rng.gen();
    let spec = match rng.gen_range(0..7) {
        0 => GeneratorSpec::new(GeneratorKind::Path, rng.gen_range(2..=60), seed),
        1 => GeneratorSpec::new(GeneratorKind::Cycle, rng.gen_range(3..=60), seed),
        2 => GeneratorSpec::new(GeneratorKind::Star, rng.gen_range(1..=60), seed),
        3 => GeneratorSpec::new(GeneratorKind::Complete, rng.gen_range(2..=25), seed),
        4 => GeneratorSpec::new(GeneratorKind::Grid, rng.gen_range(2..=14), seed),
        5 => {
            let n = rng.gen_range(10..=200);
            let p = (2.0 * (n as f64).ln() / n as f64).min(1.0);
            GeneratorSpec::erdos_renyi(n, p, seed)
        }
        _ => {
            let n = rng.gen_range(10..=200);
            let r = (3.0 * (n as f64).ln() / (std::f64::consts::PI * n as f64)).sqrt();
            GeneratorSpec::geometric(n, r, seed)
        }
    };
    let spec = spec.with_length(d).connected();
    // random endpoints for the deterministic kinds
    let nodes = match spec.kind {
        GeneratorKind::Star => spec.size + 1,
        GeneratorKind::Grid => spec.size * spec.size,
        _ => spec.size,
    };
    let source = rng.gen_range(0..nodes);
    let mut target = rng.gen_range(0..nodes - 1);
    if target >= source {
        target += 1;
    }
    spec.with_endpoints(NodeId::from_index(source), NodeId::from_index(target))
}

pub fn uniform_corpus(seed: u64, count: usize) -> Vec<(StringNetwork, CostParams)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let params = random_params(&mut rng);
            let spec = uniform_spec(&mut rng, params.d.clone());
            (generate(&spec).expect("corpus spec generates"), params)
        })
        .collect()
}

/// Connected network on `n` nodes with random positive lengths: a random
/// spanning tree plus extra edges with probability `extra`.
pub fn random_weighted(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> StringNetwork {
    let mut keys = BTreeSet::new();
    let mut edges = Vec::new();
    let mut push = |u: usize, v: usize, rng: &mut ChaCha8Rng, edges: &mut Vec<StringEdge>| {
        let key = (u.min(v), u.max(v));
        if keys.insert(key) {
            edges.push(StringEdge::new(
                NodeId::from_index(u),
                NodeId::from_index(v),
                rational::ratio(rng.gen_range(1..=6), rng.gen_range(1..=3)),
            ));
        }
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        push(u, v, rng, &mut edges);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                push(u, v, rng, &mut edges);
            }
        }
    }
    let source = rng.gen_range(0..n);
    let mut target = rng.gen_range(0..n - 1);
    if target >= source {
        target += 1;
    }
    StringNetwork::new(n, edges, NodeId::from_index(source), NodeId::from_index(target)).unwrap()
}

/// Same as [`random_weighted`] with every length set to `d`.
pub fn random_uniform(rng: &mut ChaCha8Rng, n: usize, extra: f64, d: &Rational) -> StringNetwork {
    let net = random_weighted(rng, n, extra);
    let edges = net
        .edges()
        .iter()
        .map(|e| StringEdge::new(e.u, e.v, d.clone()))
        .collect();
    StringNetwork::new(n, edges, net.source(), net.target()).unwrap()
}
