use std::fmt;

use super::abst::AbstReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Optimal,
    Infeasible,
    ZeroDemand,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::ZeroDemand => "zero_demand",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Work counters of one solve.
///
/// `augmentations` counts every augmentation of the search itself; the
/// up-front feasibility max flow some solvers run is only reflected in
/// `maxflow_calls`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub thresholds_probed: usize,
    pub maxflow_calls: usize,
    pub augmentations: usize,
    pub extension_augmentations: usize,
    pub abst: Option<AbstReport>,
}

/// Outcome of a solve. `flow` is indexed like the instance arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    /// `c*`, present only when optimal.
    pub bottleneck: Option<i64>,
    pub flow: Vec<i64>,
    /// Source-sink flow value reached; for an infeasible instance this is the
    /// maximum flow of the full auxiliary graph.
    pub flow_value: i64,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn zero_demand(arc_count: usize) -> Self {
        Self {
            status: Status::ZeroDemand,
            bottleneck: None,
            flow: vec![0; arc_count],
            flow_value: 0,
            stats: SolveStats::default(),
        }
    }

    pub fn infeasible(arc_count: usize, max_flow: i64) -> Self {
        Self {
            status: Status::Infeasible,
            bottleneck: None,
            flow: vec![0; arc_count],
            flow_value: max_flow,
            stats: SolveStats::default(),
        }
    }

    pub fn with_stats(mut self, stats: SolveStats) -> Self {
        self.stats = stats;
        self
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}
