//! Bottleneck network flow solvers.
//!
//! All four solvers search the weight ladder for the smallest rung whose
//! threshold graph carries the full supply, and differ in how they get there:
//!
//! * [`solve_binary_threshold`] binary searches rungs with an exact max flow
//!   per probe;
//! * [`solve_bnfp_augmenting`] augments on the current threshold graph and
//!   activates the next rung whenever no path remains;
//! * [`solve_large_capacity`] does the same but only accepts paths carrying
//!   at least `⌈(δ - v)/m*⌉`;
//! * [`solve_abst`] (unit capacities) binary searches with truncated
//!   shortest-path probes to get a lower bound and a partial flow, then
//!   finishes with rung-by-rung augmentation.

mod abst;
mod augmenting;
mod large_capacity;
mod result;
mod threshold;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use abst::{solve_abst, AbstProbe, AbstReport, DepthRule};
pub use augmenting::solve_bnfp_augmenting;
pub use large_capacity::solve_large_capacity;
pub use result::{SolveResult, SolveStats, Status};
pub use threshold::solve_binary_threshold;

use crate::graph::{AuxGraph, FlowState, FlowViolation, Instance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("algorithm requires unit capacities on every arc")]
    NotUnitCapacity,
    #[error("algorithm requires a simple graph (each node has at most one incoming or at most one outgoing arc)")]
    NotSimple,
    #[error("explicit depth must be at least 1")]
    InvalidDepth,
    #[error("flow value {value} is below the total supply {supply}")]
    IncompleteFlow { value: i64, supply: i64 },
    #[error("internal flow invariant violated: {0}")]
    Invariant(#[from] FlowViolation),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Threshold,
    Augmenting,
    LargeCapacity,
    Abst(DepthRule),
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Threshold,
        Algorithm::Augmenting,
        Algorithm::LargeCapacity,
        Algorithm::Abst(DepthRule::Edge),
        Algorithm::Abst(DepthRule::Node),
        Algorithm::Abst(DepthRule::Simple),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Threshold => "threshold",
            Algorithm::Augmenting => "augment",
            Algorithm::LargeCapacity => "largecap",
            Algorithm::Abst(DepthRule::Edge) => "abst-edge",
            Algorithm::Abst(DepthRule::Node) => "abst-node",
            Algorithm::Abst(DepthRule::Simple) => "abst-simple",
        }
    }

    /// Whether the algorithm accepts `instance` (ABST needs unit capacities,
    /// and the simple rule a simple graph).
    pub fn applies_to(self, instance: &Instance) -> bool {
        match self {
            Algorithm::Abst(rule) => {
                instance.is_unit_capacity() && (rule != DepthRule::Simple || AuxGraph::new(instance).is_simple())
            }
            _ => true,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = SolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| SolveError::UnknownAlgorithm(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub algorithm: Algorithm,
    /// Replaces the ABST depth rule's `D`; ignored by the other solvers.
    pub depth: Option<usize>,
}

impl SolverConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        Self { algorithm, depth: None }
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.depth = Some(depth);
        self
    }
}

pub fn solve(instance: &Instance, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    match config.algorithm {
        Algorithm::Threshold => Ok(solve_binary_threshold(instance)),
        Algorithm::Augmenting => Ok(solve_bnfp_augmenting(instance)),
        Algorithm::LargeCapacity => Ok(solve_large_capacity(instance)),
        Algorithm::Abst(rule) => solve_abst(instance, rule, config.depth),
    }
}

/// Drops the source and sink arcs of a full-value flow and reports the
/// largest weight carrying flow.
pub fn extract_solution(aux: &AuxGraph, state: &FlowState) -> Result<SolveResult, SolveError> {
    let supply = aux.total_supply();
    if state.value() < supply {
        return Err(SolveError::IncompleteFlow {
            value: state.value(),
            supply,
        });
    }
    state.check(aux)?;
    let flow = state.flows()[..aux.base_arc_count()].to_vec();
    if supply == 0 {
        return Ok(SolveResult::zero_demand(flow.len()));
    }
    let bottleneck = flow
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x > 0)
        .map(|(a, _)| aux.weight(a))
        .max();
    Ok(SolveResult {
        status: Status::Optimal,
        bottleneck,
        flow,
        flow_value: state.value(),
        stats: SolveStats::default(),
    })
}

/// Augments on the active graph, activating rungs in ascending order until
/// the flow reaches the supply or the ladder runs out. Returns the number
/// of augmentations performed.
pub(crate) fn augment_through_rungs(aux: &AuxGraph, state: &mut FlowState, stats: &mut SolveStats) -> usize {
    let supply = aux.total_supply();
    let mut augmentations = 0;
    loop {
        let trace = crate::maxflow::labeling_maxflow(aux, state, supply);
        augmentations += trace.augmentations();
        if state.value() >= supply || state.active_rung() == aux.ladder().len() {
            break;
        }
        let next = state.active_rung() + 1;
        state.activate_rung(aux, next).expect("next rung");
    }
    stats.augmentations += augmentations;
    stats.thresholds_probed = stats.thresholds_probed.max(state.active_rung());
    augmentations
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::{Arc, Instance};

    pub fn instance_a() -> Instance {
        Instance::new(
            3,
            vec![Arc::new(1, 2, 1, 5), Arc::new(2, 3, 1, 3), Arc::new(1, 3, 1, 7)],
            &[1, 0, -1],
        )
        .unwrap()
    }

    pub fn instance_b() -> Instance {
        Instance::new(2, vec![Arc::new(1, 2, 2, 4)], &[2, -2]).unwrap()
    }

    pub fn wrong_way() -> Instance {
        Instance::new(2, vec![Arc::new(2, 1, 1, 1)], &[1, -1]).unwrap()
    }

    pub fn zero_demand() -> Instance {
        Instance::new(3, vec![Arc::new(1, 2, 1, 1)], &[]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::maxflow::labeling_maxflow;

    #[test]
    fn extract_from_instance_b() {
        let aux = AuxGraph::new(&instance_b());
        let mut state = FlowState::at_rung(&aux, 1);
        labeling_maxflow(&aux, &mut state, 2);
        let result = extract_solution(&aux, &state).unwrap();
        assert_eq!(result.flow, vec![2]);
        assert_eq!(result.bottleneck, Some(4));
    }

    #[test]
    fn extract_from_instance_a() {
        let aux = AuxGraph::new(&instance_a());
        let mut state = FlowState::at_rung(&aux, 2);
        labeling_maxflow(&aux, &mut state, 1);
        let result = extract_solution(&aux, &state).unwrap();
        assert_eq!(result.flow, vec![1, 1, 0]);
        assert_eq!(result.bottleneck, Some(5));
    }

    #[test]
    fn extract_rejects_incomplete_flow() {
        let aux = AuxGraph::new(&instance_b());
        let state = FlowState::at_rung(&aux, 1);
        assert_eq!(
            extract_solution(&aux, &state).unwrap_err(),
            SolveError::IncompleteFlow { value: 0, supply: 2 }
        );
    }

    #[test]
    fn algorithm_names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
        }
        assert!("dinic".parse::<Algorithm>().is_err());
    }

    #[test]
    fn every_solver_handles_the_fixtures() {
        for algo in Algorithm::ALL {
            let config = SolverConfig::new(algo);
            let a = solve(&instance_a(), &config).unwrap();
            assert_eq!(a.bottleneck, Some(5), "{algo}");
            assert_eq!(a.flow, vec![1, 1, 0], "{algo}");
            let wrong = solve(&wrong_way(), &config).unwrap();
            assert_eq!(wrong.status, Status::Infeasible, "{algo}");
            assert_eq!(wrong.flow_value, 0);
            let zero = solve(&zero_demand(), &config).unwrap();
            assert_eq!(zero.status, Status::ZeroDemand, "{algo}");
            assert_eq!(zero.stats.augmentations, 0);
            if !algo.applies_to(&instance_b()) {
                assert_eq!(solve(&instance_b(), &config).unwrap_err(), SolveError::NotUnitCapacity);
            } else {
                assert_eq!(solve(&instance_b(), &config).unwrap().bottleneck, Some(4), "{algo}");
            }
        }
    }
}
