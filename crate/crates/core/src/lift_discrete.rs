//! Step-wise lift of a uniform string network.
//!
//! The source knot is grabbed and raised in increments of the string length
//! `d`. Each increment pulls every resting knot that is tied to a hanging knot
//! off the table, so after step `k` exactly the knots within `k` hops hang.
//! Two work ledgers run side by side:
//!
//! - node-weight: knots weigh `w`, strings nothing. The grab costs `w·d` and
//!   every step costs `w·d` per hanging knot, including the ones it just
//!   lifted.
//! - string-weight: strings weigh `w`, knots nothing. The grab is free and a
//!   step costs `w·d·g(x)` for every knot `x` that was already hanging before
//!   the step.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{degree, CostParams, NodeId, StringNetwork};
use crate::rational::{self, Rational};

/// Lift in progress: height of the source and which knots hang.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftState {
    height: Rational,
    lifted_at: Vec<Option<usize>>,
    off_surface: Vec<NodeId>,
    off_surface_degree: usize,
    work_node_model: Rational,
    work_string_model: Rational,
    iteration: usize,
}

/// One entry of the lift record. Iteration 0 is the grab.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftStep {
    pub iteration: usize,
    pub newly_lifted: Vec<NodeId>,
    /// Every knot raised by this step, i.e. all hanging knots after it.
    pub nodes_raised: Vec<NodeId>,
    #[serde(serialize_with = "rational::serialize")]
    pub delta_work_node_model: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub delta_work_string_model: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LiftTrace {
    pub steps: Vec<LiftStep>,
}

impl LiftTrace {
    /// Hanging knots after `iteration`, ascending by id.
    pub fn off_surface_after(&self, iteration: usize) -> Option<&[NodeId]> {
        self.steps.get(iteration).map(|s| s.nodes_raised.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult {
    /// Steps after the grab; equals the hop distance of the target.
    pub n: usize,
    pub trace: LiftTrace,
    pub work_node_model: Rational,
    pub work_string_model: Rational,
    pub path: Vec<NodeId>,
    pub state: LiftState,
}

fn ensure_uniform(net: &StringNetwork, d: &Rational) -> Result<()> {
    match net.edges().iter().find(|e| &e.length != d) {
        Some(e) => Err(Error::NonUniform {
            u: e.u,
            v: e.v,
            length: e.length.to_string(),
            expected: d.to_string(),
        }),
        None => Ok(()),
    }
}

impl LiftState {
    /// Grabs the source and raises it by one step `d`.
    pub fn grab(net: &StringNetwork, params: &CostParams) -> Result<Self> {
        net.ensure_valid()?;
        ensure_uniform(net, &params.d)?;
        let mut lifted_at = vec![None; net.node_count()];
        lifted_at[net.source().index()] = Some(0);
        Ok(LiftState {
            height: params.d.clone(),
            lifted_at,
            off_surface: vec![net.source()],
            off_surface_degree: degree(net, net.source()),
            work_node_model: params.lift_unit(),
            work_string_model: rational::zero(),
            iteration: 0,
        })
    }

    /// The grab as a trace entry.
    pub fn grab_step(&self, params: &CostParams) -> LiftStep {
        LiftStep {
            iteration: 0,
            newly_lifted: self.off_surface.clone(),
            nodes_raised: self.off_surface.clone(),
            delta_work_node_model: params.lift_unit(),
            delta_work_string_model: rational::zero(),
        }
    }

    /// Raises the source by `d` once more.
    pub fn lift_step(&mut self, net: &StringNetwork, params: &CostParams) -> LiftStep {
        let unit = params.lift_unit();
        let delta_string = &unit * rational::from_count(self.off_surface_degree);

        let mut newly_lifted = Vec::new();
        for &x in &self.off_surface {
            for &(y, _) in net.neighbors(x) {
                if self.lifted_at[y.index()].is_none() {
                    self.lifted_at[y.index()] = Some(self.iteration + 1);
                    newly_lifted.push(y);
                }
            }
        }
        newly_lifted.sort_unstable();

        self.iteration += 1;
        self.height += &params.d;
        self.off_surface_degree += newly_lifted.iter().map(|&y| degree(net, y)).sum::<usize>();
        self.off_surface.extend_from_slice(&newly_lifted);
        self.off_surface.sort_unstable();

        let delta_node = &unit * rational::from_count(self.off_surface.len());
        self.work_node_model += &delta_node;
        self.work_string_model += &delta_string;

        LiftStep {
            iteration: self.iteration,
            newly_lifted,
            nodes_raised: self.off_surface.clone(),
            delta_work_node_model: delta_node,
            delta_work_string_model: delta_string,
        }
    }

    pub fn height(&self) -> &Rational {
        &self.height
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    /// Hanging knots, ascending by id.
    pub fn off_surface(&self) -> &[NodeId] {
        &self.off_surface
    }

    pub fn is_lifted(&self, x: NodeId) -> bool {
        self.lifted_at[x.index()].is_some()
    }

    /// Step in which `x` left the table (0 for the source).
    pub fn lifted_at(&self, x: NodeId) -> Option<usize> {
        self.lifted_at[x.index()]
    }

    pub fn work_node_model(&self) -> &Rational {
        &self.work_node_model
    }

    pub fn work_string_model(&self) -> &Rational {
        &self.work_string_model
    }
}

/// Grab the source and lift until the target leaves the table.
pub fn run_lift(net: &StringNetwork, params: &CostParams) -> Result<LiftResult> {
    let mut state = LiftState::grab(net, params)?;
    let mut steps = vec![state.grab_step(params)];
    let unreachable = Error::Unreachable {
        from: net.source(),
        to: net.target(),
    };
    while !state.is_lifted(net.target()) {
        if state.iteration >= net.node_count() {
            return Err(unreachable);
        }
        let step = state.lift_step(net, params);
        if step.newly_lifted.is_empty() {
            // nothing left within reach, further steps only raise the same chain
            return Err(unreachable);
        }
        steps.push(step);
    }
    let path = hanging_path(&state, net)?;
    Ok(LiftResult {
        n: state.iteration,
        trace: LiftTrace { steps },
        work_node_model: state.work_node_model.clone(),
        work_string_model: state.work_string_model.clone(),
        path,
        state,
    })
}

/// The chain of strings the target hangs from, listed source first.
///
/// Walks down from the target, each time to the smallest-id neighbor that
/// left the table one step earlier.
pub fn hanging_path(state: &LiftState, net: &StringNetwork) -> Result<Vec<NodeId>> {
    let mut x = net.target();
    let Some(mut level) = state.lifted_at(x) else {
        return Err(Error::Unreachable {
            from: net.source(),
            to: net.target(),
        });
    };
    let mut path = vec![x];
    while level > 0 {
        let (parent, parent_level) = net
            .neighbors(x)
            .iter()
            .find_map(|&(y, _)| state.lifted_at(y).filter(|&l| l < level).map(|l| (y, l)))
            .expect("a knot lifted after the grab hangs from an earlier one");
        path.push(parent);
        x = parent;
        level = parent_level;
    }
    path.reverse();
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;

    fn ids(v: &[u32]) -> Vec<NodeId> {
        v.iter().map(|&x| NodeId(x)).collect()
    }

    #[test]
    fn grab_charges_node_model_only() {
        let state = LiftState::grab(&fixtures::p3(), &CostParams::unit()).unwrap();
        assert_eq!(state.height(), &int(1));
        assert_eq!(state.off_surface(), &ids(&[0])[..]);
        assert_eq!(state.work_node_model(), &int(1));
        assert_eq!(state.work_string_model(), &int(0));

        let params = CostParams::new(int(2), int(3), int(1)).unwrap();
        let state = LiftState::grab(&fixtures::star3_with(int(3)), &params).unwrap();
        assert_eq!(state.work_node_model(), &int(6));
        assert_eq!(state.work_string_model(), &int(0));
    }

    #[test]
    fn grab_rejects_non_uniform() {
        let err = LiftState::grab(&fixtures::tri_w(), &CostParams::unit()).unwrap_err();
        assert!(matches!(err, Error::NonUniform { .. }));
        // uniform network but lift step differs from the string length
        let params = CostParams::new(int(1), int(2), int(1)).unwrap();
        assert!(matches!(
            LiftState::grab(&fixtures::p3(), &params),
            Err(Error::NonUniform { .. })
        ));
    }

    #[test]
    fn path_steps_by_hand() {
        let net = fixtures::p3();
        let params = CostParams::unit();
        let mut state = LiftState::grab(&net, &params).unwrap();
        let s1 = state.lift_step(&net, &params);
        assert_eq!(s1.newly_lifted, ids(&[1]));
        assert_eq!(s1.delta_work_node_model, int(2));
        assert_eq!(s1.delta_work_string_model, int(1));
        let s2 = state.lift_step(&net, &params);
        assert_eq!(s2.newly_lifted, ids(&[2]));
        assert_eq!(s2.delta_work_node_model, int(3));
        assert_eq!(s2.delta_work_string_model, int(3));
        assert_eq!(state.height(), &int(3));
    }

    #[test]
    fn star_lifts_leaves_together() {
        let net = fixtures::star3();
        let params = CostParams::unit();
        let mut state = LiftState::grab(&net, &params).unwrap();
        let s1 = state.lift_step(&net, &params);
        assert_eq!(s1.newly_lifted, ids(&[1, 2, 3]));
        assert_eq!(s1.delta_work_node_model, int(4));
        assert_eq!(s1.delta_work_string_model, int(3));
    }

    #[test]
    fn run_lift_totals() {
        let r = run_lift(&fixtures::p3(), &CostParams::unit()).unwrap();
        assert_eq!(r.n, 2);
        assert_eq!(r.work_node_model, int(6));
        assert_eq!(r.work_string_model, int(4));
        assert_eq!(r.path, ids(&[0, 1, 2]));

        let r = run_lift(&fixtures::star3(), &CostParams::unit()).unwrap();
        assert_eq!(r.n, 1);
        assert_eq!(r.work_node_model, int(5));
        assert_eq!(r.work_string_model, int(3));
        assert_eq!(r.path, ids(&[0, 1]));
    }

    #[test]
    fn trace_deltas_sum_to_totals() {
        let r = run_lift(&fixtures::c4(), &CostParams::unit()).unwrap();
        let node: Rational = r.trace.steps.iter().map(|s| s.delta_work_node_model.clone()).sum();
        let string: Rational = r.trace.steps.iter().map(|s| s.delta_work_string_model.clone()).sum();
        assert_eq!(node, r.work_node_model);
        assert_eq!(string, r.work_string_model);
    }

    #[test]
    fn cycle_tie_break() {
        let r = run_lift(&fixtures::c4(), &CostParams::unit()).unwrap();
        assert_eq!(r.path, ids(&[0, 1, 2]));
    }

    #[test]
    fn unreachable_target() {
        let net = StringNetwork::new(
            3,
            vec![crate::StringEdge::new(NodeId(0), NodeId(1), int(1))],
            NodeId(0),
            NodeId(2),
        )
        .unwrap();
        assert!(matches!(
            run_lift(&net, &CostParams::unit()),
            Err(Error::Unreachable { .. })
        ));
    }
}
