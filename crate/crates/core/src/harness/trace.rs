//! Line-delimited JSON trace records, one object per line, tagged by
//! `"record"`. Rationals are written as `"p/q"` strings.

use std::io::{self, Write};

use serde::Serialize;

use crate::bfs_ref::{BfsRun, DijkstraRun};
use crate::formulas::ComplexityReport;
use crate::lift_continuous::{LiftoffSchedule, PullApartResult};
use crate::lift_discrete::LiftResult;
use crate::network::NodeId;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum TraceRecord {
    LiftStep {
        iteration: usize,
        newly_lifted: Vec<NodeId>,
        #[serde(serialize_with = "rational::serialize")]
        delta_work_node_model: Rational,
        #[serde(serialize_with = "rational::serialize")]
        delta_work_string_model: Rational,
    },
    LiftSummary {
        n: usize,
        #[serde(serialize_with = "rational::serialize")]
        height: Rational,
        #[serde(serialize_with = "rational::serialize")]
        work_node_model: Rational,
        #[serde(serialize_with = "rational::serialize")]
        work_string_model: Rational,
        path: Vec<NodeId>,
    },
    BfsIteration {
        algorithm: &'static str,
        iteration: usize,
        lift_size: usize,
        additions: usize,
        #[serde(serialize_with = "rational::serialize")]
        cost: Rational,
        added: Vec<NodeId>,
    },
    BfsSummary {
        algorithm: &'static str,
        n: usize,
        #[serde(serialize_with = "rational::serialize")]
        init_cost: Rational,
        #[serde(serialize_with = "rational::serialize")]
        time_units: Rational,
        #[serde(skip_serializing_if = "Option::is_none")]
        path: Option<Vec<NodeId>>,
    },
    Settle {
        node: NodeId,
        #[serde(serialize_with = "rational::serialize")]
        distance: Rational,
    },
    DijkstraSummary {
        #[serde(serialize_with = "rational::serialize")]
        distance: Rational,
        relaxations: usize,
        path: Vec<NodeId>,
    },
    Liftoff {
        node: NodeId,
        #[serde(serialize_with = "rational::serialize")]
        height: Rational,
    },
    NeverLifted {
        node: NodeId,
    },
    TautEdge {
        u: NodeId,
        v: NodeId,
        #[serde(serialize_with = "rational::serialize")]
        length: Rational,
    },
    PullApartSummary {
        #[serde(serialize_with = "rational::serialize")]
        separation: Rational,
        path: Vec<NodeId>,
    },
    Complexity(Box<ComplexityReport>),
}

pub fn lift_records(result: &LiftResult) -> Vec<TraceRecord> {
    let mut records: Vec<TraceRecord> = result
        .trace
        .steps
        .iter()
        .map(|s| TraceRecord::LiftStep {
            iteration: s.iteration,
            newly_lifted: s.newly_lifted.clone(),
            delta_work_node_model: s.delta_work_node_model.clone(),
            delta_work_string_model: s.delta_work_string_model.clone(),
        })
        .collect();
    records.push(TraceRecord::LiftSummary {
        n: result.n,
        height: result.state.height().clone(),
        work_node_model: result.work_node_model.clone(),
        work_string_model: result.work_string_model.clone(),
        path: result.path.clone(),
    });
    records
}

pub fn bfs_records(run: &BfsRun, path: Option<&[NodeId]>) -> Vec<TraceRecord> {
    let algorithm = run.variant.name();
    let mut records: Vec<TraceRecord> = run
        .iterations
        .iter()
        .map(|it| TraceRecord::BfsIteration {
            algorithm,
            iteration: it.iteration,
            lift_size: it.lift_size,
            additions: it.additions,
            cost: it.cost.clone(),
            added: it.added.clone(),
        })
        .collect();
    records.push(TraceRecord::BfsSummary {
        algorithm,
        n: run.n,
        init_cost: run.init_cost.clone(),
        time_units: run.time_units.clone(),
        path: path.map(<[NodeId]>::to_vec),
    });
    records
}

pub fn dijkstra_records(run: &DijkstraRun) -> Vec<TraceRecord> {
    let mut records: Vec<TraceRecord> = run
        .settle_order
        .iter()
        .map(|&x| TraceRecord::Settle {
            node: x,
            distance: run.dist_map[x.index()].clone().expect("settled nodes have a distance"),
        })
        .collect();
    records.push(TraceRecord::DijkstraSummary {
        distance: run.distance.clone(),
        relaxations: run.relaxations,
        path: run.path.clone(),
    });
    records
}

pub fn liftoff_records(schedule: &LiftoffSchedule) -> Vec<TraceRecord> {
    schedule
        .events
        .iter()
        .map(|ev| TraceRecord::Liftoff {
            node: ev.node,
            height: ev.height.clone(),
        })
        .chain(schedule.unreachable.iter().map(|&node| TraceRecord::NeverLifted { node }))
        .collect()
}

pub fn pull_apart_records(result: &PullApartResult) -> Vec<TraceRecord> {
    result
        .taut_edges
        .iter()
        .map(|e| TraceRecord::TautEdge {
            u: e.u,
            v: e.v,
            length: e.length.clone(),
        })
        .chain(std::iter::once(TraceRecord::PullApartSummary {
            separation: result.separation.clone(),
            path: result.path.clone(),
        }))
        .collect()
}

pub fn write_records<W: Write>(mut out: W, records: &[TraceRecord]) -> io::Result<()> {
    for record in records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
