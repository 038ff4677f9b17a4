//! Closed-form work and time sums over hop layers, and the check that the
//! simulated counters reproduce them.
//!
//! With `n` the hop distance of the target, `l(i)` the size of layer `N(i)`
//! and `g(x)` the degree of `x`:
//!
//! ```text
//! eq1  lift work, node weights      w·d · Σ_{i=0..n}   (n−i+1)·l(i)
//! eq2  naive set BFS time           t   · Σ_{i=0..n}   (n−i+1)·l(i)
//! eq3  enumerating BFS time         t   · Σ_{i=0..n−1} (n−i)·Σ_{x∈N(i)} g(x)
//! eq4  lift work, string weights    w·d · Σ_{i=0..n−1} (n−i)·Σ_{x∈N(i)} g(x)
//! ```

use serde::Serialize;

use crate::bfs_ref::{enumerating_bfs, naive_set_bfs};
use crate::error::Result;
use crate::lift_discrete::run_lift;
use crate::network::{degrees, hop_layers, CostParams, LayerDecomposition, StringNetwork};
use crate::rational::{self, Rational};

fn node_layer_sum(layers: &LayerDecomposition) -> Rational {
    let n = layers.n;
    (0..=n)
        .map(|i| rational::from_count((n - i + 1) * layers.count(i)))
        .sum()
}

fn degree_layer_sum(layers: &LayerDecomposition, degrees: &[usize]) -> Rational {
    let n = layers.n;
    (0..n)
        .map(|i| {
            let g: usize = layers.layer(i).iter().map(|x| degrees[x.index()]).sum();
            rational::from_count((n - i) * g)
        })
        .sum()
}

/// Lift work with weighted knots and weightless strings.
pub fn eq1_work(layers: &LayerDecomposition, params: &CostParams) -> Rational {
    params.lift_unit() * node_layer_sum(layers)
}

/// Naive set BFS time.
pub fn eq2_time(layers: &LayerDecomposition, params: &CostParams) -> Rational {
    &params.t * node_layer_sum(layers)
}

/// Enumerating BFS time. `degrees` is indexed by node id.
pub fn eq3_time(layers: &LayerDecomposition, degrees: &[usize], params: &CostParams) -> Rational {
    &params.t * degree_layer_sum(layers, degrees)
}

/// Lift work with weighted strings and weightless knots.
pub fn eq4_work(layers: &LayerDecomposition, degrees: &[usize], params: &CostParams) -> Rational {
    params.lift_unit() * degree_layer_sum(layers, degrees)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    #[serde(serialize_with = "rational::serialize")]
    pub eq1: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub eq2: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub eq3: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub eq4: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub lift_work_node_model: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub naive_set_time: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub enumerating_time: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub lift_work_string_model: Rational,
    /// eq1 / eq2
    #[serde(serialize_with = "rational::serialize")]
    pub ratio_node: Rational,
    /// eq4 / eq3
    #[serde(serialize_with = "rational::serialize")]
    pub ratio_string: Rational,
    pub correspondence_ok: bool,
}

impl ComplexityReport {
    /// Rows of (label, formula value, simulated counter).
    pub fn rows(&self) -> [(&'static str, &Rational, &Rational); 4] {
        [
            ("eq1 lift work, node weights", &self.eq1, &self.lift_work_node_model),
            ("eq2 naive set BFS time", &self.eq2, &self.naive_set_time),
            ("eq3 enumerating BFS time", &self.eq3, &self.enumerating_time),
            ("eq4 lift work, string weights", &self.eq4, &self.lift_work_string_model),
        ]
    }
}

/// Runs all four formulas and all four simulations on `net`.
pub fn check_correspondence(net: &StringNetwork, params: &CostParams) -> Result<ComplexityReport> {
    let layers = hop_layers(net)?;
    let deg = degrees(net);
    let lift = run_lift(net, params)?;
    let naive = naive_set_bfs(net, params)?;
    let enumerating = enumerating_bfs(net, params)?;

    let eq1 = eq1_work(&layers, params);
    let eq2 = eq2_time(&layers, params);
    let eq3 = eq3_time(&layers, &deg, params);
    let eq4 = eq4_work(&layers, &deg, params);
    let ratio_node = &eq1 / &eq2;
    let ratio_string = &eq4 / &eq3;
    let expected_ratio = params.lift_unit() / &params.t;

    let counters_match = lift.work_node_model == eq1
        && naive.time_units == eq2
        && enumerating.time_units == eq3
        && lift.work_string_model == eq4;
    let correspondence_ok = counters_match && ratio_node == expected_ratio && ratio_string == expected_ratio;

    Ok(ComplexityReport {
        eq1,
        eq2,
        eq3,
        eq4,
        lift_work_node_model: lift.work_node_model,
        naive_set_time: naive.time_units,
        enumerating_time: enumerating.time_units,
        lift_work_string_model: lift.work_string_model,
        ratio_node,
        ratio_string,
        correspondence_ok,
    })
}
