//! Seeded network generators. Every generator is a pure function of its spec.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::network::{NodeId, StringEdge, StringNetwork};
use crate::rational::{self, Rational};

/// Retries for random generators whose draw leaves the endpoints apart.
pub const MAX_ATTEMPTS: usize = 1000;

/// Coordinates of geometric graphs live on an integer grid of this side, and
/// Euclidean lengths are rounded to multiples of its reciprocal.
const GEOMETRIC_RESOLUTION: i64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Path,
    Cycle,
    Star,
    Complete,
    Grid,
    ErdosRenyi,
    Geometric,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GeneratorKind::Path => "path",
            GeneratorKind::Cycle => "cycle",
            GeneratorKind::Star => "star",
            GeneratorKind::Complete => "complete",
            GeneratorKind::Grid => "grid",
            GeneratorKind::ErdosRenyi => "erdos_renyi",
            GeneratorKind::Geometric => "geometric",
        };
        f.write_str(name)
    }
}

fn default_length() -> Rational {
    rational::one()
}

/// `size` is the node count, except for `star` (number of leaves) and `grid`
/// (side length of a square grid).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_probability: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    /// Length of every string unless `weighted` is set.
    #[serde(default = "default_length", with = "rational")]
    pub uniform_length: Rational,
    /// Random lengths instead: Euclidean for `geometric`, small random
    /// fractions otherwise.
    #[serde(default)]
    pub weighted: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<NodeId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<NodeId>,
    /// Random generators retry until the whole network is connected, not
    /// just the endpoints.
    #[serde(default)]
    pub connected: bool,
    /// Zeroes the first string length after generation. Used to check that
    /// batch verification reports broken inputs.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub inject_fault: bool,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, size: usize, seed: u64) -> Self {
        GeneratorSpec {
            kind,
            size,
            edge_probability: None,
            radius: None,
            uniform_length: rational::one(),
            weighted: false,
            seed,
            source: None,
            target: None,
            connected: false,
            inject_fault: false,
        }
    }

    pub fn erdos_renyi(size: usize, p: f64, seed: u64) -> Self {
        GeneratorSpec {
            edge_probability: Some(p),
            ..Self::new(GeneratorKind::ErdosRenyi, size, seed)
        }
    }

    pub fn geometric(size: usize, radius: f64, seed: u64) -> Self {
        GeneratorSpec {
            radius: Some(radius),
            ..Self::new(GeneratorKind::Geometric, size, seed)
        }
    }

    pub fn with_length(mut self, d: Rational) -> Self {
        self.uniform_length = d;
        self
    }

    pub fn weighted(mut self) -> Self {
        self.weighted = true;
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn with_endpoints(mut self, source: NodeId, target: NodeId) -> Self {
        self.source = Some(source);
        self.target = Some(target);
        self
    }
}

type Pairs = Vec<(usize, usize)>;

fn node_count(spec: &GeneratorSpec) -> usize {
    match spec.kind {
        GeneratorKind::Star => spec.size + 1,
        GeneratorKind::Grid => spec.size * spec.size,
        _ => spec.size,
    }
}

fn check_spec(spec: &GeneratorSpec) -> Result<(), HarnessError> {
    let min = match spec.kind {
        GeneratorKind::Cycle => 3,
        GeneratorKind::Star => 1,
        _ => 2,
    };
    if spec.size < min {
        return Err(HarnessError::InvalidSpec(format!(
            "{} needs size >= {min}, got {}",
            spec.kind, spec.size
        )));
    }
    if !rational::is_positive(&spec.uniform_length) {
        return Err(HarnessError::InvalidSpec("uniform_length must be positive".into()));
    }
    match spec.kind {
        GeneratorKind::ErdosRenyi => match spec.edge_probability {
            Some(p) if (0.0..=1.0).contains(&p) => {}
            _ => return Err(HarnessError::InvalidSpec("erdos_renyi needs edge_probability in [0, 1]".into())),
        },
        GeneratorKind::Geometric => match spec.radius {
            Some(r) if r > 0.0 => {}
            _ => return Err(HarnessError::InvalidSpec("geometric needs a positive radius".into())),
        },
        _ => {}
    }
    Ok(())
}

fn deterministic_pairs(kind: GeneratorKind, size: usize) -> Pairs {
    match kind {
        GeneratorKind::Path => (1..size).map(|i| (i - 1, i)).collect(),
        GeneratorKind::Cycle => (0..size).map(|i| (i, (i + 1) % size)).collect(),
        GeneratorKind::Star => (1..=size).map(|i| (0, i)).collect(),
        GeneratorKind::Complete => (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect(),
        GeneratorKind::Grid => {
            let mut pairs = Vec::new();
            for r in 0..size {
                for c in 0..size {
                    let x = r * size + c;
                    if c + 1 < size {
                        pairs.push((x, x + 1));
                    }
                    if r + 1 < size {
                        pairs.push((x, x + size));
                    }
                }
            }
            pairs
        }
        GeneratorKind::ErdosRenyi | GeneratorKind::Geometric => unreachable!("random kinds"),
    }
}

fn gnp_pairs(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Pairs {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

fn geometric_pairs(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> (Pairs, Vec<Rational>) {
    let points: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            (
                rng.gen_range(0..=GEOMETRIC_RESOLUTION),
                rng.gen_range(0..=GEOMETRIC_RESOLUTION),
            )
        })
        .collect();
    let reach = radius * GEOMETRIC_RESOLUTION as f64;
    let mut pairs = Vec::new();
    let mut euclid = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (points[i].0 - points[j].0, points[i].1 - points[j].1);
            let dist = ((dx * dx + dy * dy) as f64).sqrt();
            if dist <= reach {
                pairs.push((i, j));
                // coincident points still get a positive string
                let units = (dist.round() as i64).max(1);
                euclid.push(rational::ratio(units, GEOMETRIC_RESOLUTION));
            }
        }
    }
    (pairs, euclid)
}

fn random_length(rng: &mut ChaCha8Rng) -> Rational {
    rational::ratio(rng.gen_range(1..=12), rng.gen_range(1..=4))
}

fn reachable_from(n: usize, pairs: &Pairs, source: usize) -> Vec<bool> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    seen[source] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn generate(spec: &GeneratorSpec) -> Result<StringNetwork, HarnessError> {
    check_spec(spec)?;
    let n = node_count(spec);
    let source = spec.source.unwrap_or(NodeId(0));
    let target = spec.target.unwrap_or_else(|| NodeId::from_index(n - 1));
    if source.index() >= n || target.index() >= n || source == target {
        return Err(HarnessError::InvalidSpec(format!(
            "endpoints {source}, {target} invalid for {n} nodes"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let (pairs, euclid) = match spec.kind {
        GeneratorKind::ErdosRenyi | GeneratorKind::Geometric => {
            let mut attempt = 0;
            loop {
                if attempt == MAX_ATTEMPTS {
                    return Err(HarnessError::GenerationFailed {
                        kind: spec.kind.to_string(),
                        attempts: MAX_ATTEMPTS,
                    });
                }
                attempt += 1;
                let (pairs, euclid) = if spec.kind == GeneratorKind::ErdosRenyi {
                    (gnp_pairs(&mut rng, n, spec.edge_probability.unwrap()), None)
                } else {
                    let (p, e) = geometric_pairs(&mut rng, n, spec.radius.unwrap());
                    (p, Some(e))
                };
                let seen = reachable_from(n, &pairs, source.index());
                let ok = if spec.connected {
                    seen.iter().all(|&s| s)
                } else {
                    seen[target.index()]
                };
                if ok {
                    break (pairs, euclid);
                }
            }
        }
        kind => (deterministic_pairs(kind, spec.size), None),
    };

    let mut edges: Vec<StringEdge> = pairs
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let length = match (&euclid, spec.weighted) {
                (_, false) => spec.uniform_length.clone(),
                (Some(e), true) => e[i].clone(),
                (None, true) => random_length(&mut rng),
            };
            StringEdge::new(NodeId::from_index(u), NodeId::from_index(v), length)
        })
        .collect();
    if spec.inject_fault {
        if let Some(e) = edges.first_mut() {
            e.length = rational::zero();
        }
        return Ok(StringNetwork::from_parts_unchecked(n, edges, source, target, None));
    }
    Ok(StringNetwork::new(n, edges, source, target)?)
}
