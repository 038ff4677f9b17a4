//! Batch property verification over generated networks.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{generate, GeneratorSpec};
use super::oracle::{enumerate_paths, path_length, ORACLE_MAX_NODES};
use crate::bfs_ref::{dijkstra, enumerating_bfs, marked_bfs, naive_set_bfs};
use crate::formulas::{eq1_work, eq2_time, eq3_time, eq4_work};
use crate::lift_continuous::{liftoff_schedule, pull_apart};
use crate::lift_discrete::run_lift;
use crate::network::{degrees, hop_layers, CostParams, StringNetwork};
use crate::rational::{self, Rational};

fn one() -> usize {
    1
}

/// One line of a batch file: a spec repeated over consecutive seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchEntry {
    pub spec: GeneratorSpec,
    #[serde(default = "one")]
    pub repeat: usize,
}

/// Batch file contents, e.g.
/// `{"entries": [{"spec": {"kind": "erdos_renyi", "size": 50, "edge_probability": 0.1, "seed": 1}, "repeat": 20}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchFile {
    pub entries: Vec<BatchEntry>,
}

impl BatchFile {
    /// Specs in file order, seeds `seed, seed + 1, …` for repeated entries.
    pub fn expand(&self) -> Vec<GeneratorSpec> {
        self.entries
            .iter()
            .flat_map(|entry| {
                (0..entry.repeat as u64).map(move |k| GeneratorSpec {
                    seed: entry.spec.seed.wrapping_add(k),
                    ..entry.spec.clone()
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchFailure {
    pub index: usize,
    pub seed: u64,
    pub spec: GeneratorSpec,
    pub property: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<BatchFailure>,
}

/// Checks a single network and returns the name of the first property that
/// fails. Uniform networks get the full lift/BFS/formula suite; every network
/// gets the continuous-model checks, and tiny ones the brute-force oracles.
pub fn verify_network(net: &StringNetwork, params: &CostParams) -> Result<(), &'static str> {
    fn check(ok: bool, name: &'static str) -> Result<(), &'static str> {
        if ok {
            Ok(())
        } else {
            Err(name)
        }
    }

    check(net.validate().is_valid(), "validate")?;
    let layers = hop_layers(net).map_err(|_| "target_reachable")?;
    let marked = marked_bfs(net).map_err(|_| "marked_bfs")?;
    let dij = dijkstra(net).map_err(|_| "dijkstra")?;
    check(marked.run.n == layers.n, "hop_distance_agreement")?;
    check(
        marked.path.len() == layers.n + 1 && path_length(net, &marked.path).is_some(),
        "marked_path_valid",
    )?;

    if let Some(d) = net.uniform_length() {
        let params = CostParams { d: d.clone(), ..params.clone() };
        let deg = degrees(net);
        let lift = run_lift(net, &params).map_err(|_| "run_lift")?;
        let naive = naive_set_bfs(net, &params).map_err(|_| "naive_set_bfs")?;
        let enumerating = enumerating_bfs(net, &params).map_err(|_| "enumerating_bfs")?;

        check(lift.work_node_model == eq1_work(&layers, &params), "eq1_node_work")?;
        check(naive.time_units == eq2_time(&layers, &params), "eq2_naive_time")?;
        check(enumerating.time_units == eq3_time(&layers, &deg, &params), "eq3_enumerating_time")?;
        check(lift.work_string_model == eq4_work(&layers, &deg, &params), "eq4_string_work")?;
        check(
            &lift.work_node_model * &params.t == &naive.time_units * params.lift_unit()
                && &lift.work_string_model * &params.t == &enumerating.time_units * params.lift_unit(),
            "correspondence",
        )?;
        check(
            [lift.n, naive.n, enumerating.n].iter().all(|&k| k == layers.n),
            "hop_distance_agreement",
        )?;
        check(dij.distance == rational::from_count(layers.n) * &d, "uniform_dijkstra_distance")?;
        let structural = (0..=layers.n).all(|k| {
            lift.trace.off_surface_after(k) == Some(naive.lift_after(net.source(), k).as_slice())
        });
        check(structural, "structural_equivalence")?;
        check(
            lift.path.len() == layers.n + 1 && path_length(net, &lift.path).is_some(),
            "hanging_path_valid",
        )?;
    }

    let schedule = liftoff_schedule(net);
    check(schedule.heights(net.node_count()) == dij.dist_map, "liftoff_dijkstra")?;
    check(
        same_order_up_to_ties(&schedule.events.iter().map(|e| (e.height.clone(), e.node.0)).collect::<Vec<_>>(), &dij),
        "liftoff_order",
    )?;

    let pulled = pull_apart(net).map_err(|_| "pull_apart")?;
    check(pulled.separation == dij.distance, "pull_apart_separation")?;

    if net.node_count() <= ORACLE_MAX_NODES {
        let brute = enumerate_paths(net).ok_or("oracle_reachable")?;
        check(brute.min_length == pulled.separation, "separation_oracle")?;
        let taut: BTreeSet<_> = pulled.taut_edges.iter().map(|e| e.key()).collect();
        let expected: BTreeSet<_> = brute.shortest_edges.iter().map(|&i| net.edge(i).key()).collect();
        check(taut == expected, "taut_edges_oracle")?;
        check(brute.min_hops == layers.n, "hop_distance_oracle")?;
        check(path_length(net, &dij.path) == Some(brute.min_length.clone()), "dijkstra_path_oracle")?;
    }
    Ok(())
}

fn same_order_up_to_ties(events: &[(Rational, u32)], dij: &crate::bfs_ref::DijkstraRun) -> bool {
    let settled: Vec<(Rational, u32)> = dij
        .settle_order
        .iter()
        .map(|x| (dij.dist_map[x.index()].clone().unwrap(), x.0))
        .collect();
    if settled.len() != events.len() {
        return false;
    }
    let groups = |v: &[(Rational, u32)]| -> Vec<(Rational, BTreeSet<u32>)> {
        let mut out: Vec<(Rational, BTreeSet<u32>)> = Vec::new();
        for (h, x) in v {
            match out.last_mut() {
                Some((last, set)) if last == h => {
                    set.insert(*x);
                }
                _ => out.push((h.clone(), BTreeSet::from([*x]))),
            }
        }
        out
    };
    groups(events) == groups(&settled)
}

fn verify_one(index: usize, spec: &GeneratorSpec, params: &CostParams) -> Option<BatchFailure> {
    let outcome = match generate(spec) {
        Ok(net) => verify_network(&net, params),
        Err(_) => Err("generate"),
    };
    outcome.err().map(|property| BatchFailure {
        index,
        seed: spec.seed,
        spec: spec.clone(),
        property: property.to_string(),
    })
}

/// Generates and checks every spec. With `workers > 1` networks are checked
/// on a dedicated thread pool; results are merged by spec index, so the
/// report does not depend on the worker count.
pub fn verify_batch(specs: &[GeneratorSpec], params: &CostParams, workers: usize) -> BatchReport {
    let outcomes: Vec<Option<BatchFailure>> = if workers <= 1 {
        specs.iter().enumerate().map(|(i, s)| verify_one(i, s, params)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| {
            specs
                .par_iter()
                .enumerate()
                .map(|(i, s)| verify_one(i, s, params))
                .collect()
        })
    };
    let failures: Vec<BatchFailure> = outcomes.into_iter().flatten().collect();
    BatchReport {
        total: specs.len(),
        passed: specs.len() - failures.len(),
        failures,
    }
}
