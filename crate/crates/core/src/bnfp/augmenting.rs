use super::{augment_through_rungs, extract_solution, SolveResult, SolveStats};
use crate::graph::{AuxGraph, FlowState, Instance};

/// Generic augmenting paths on `G*(c_1)`, adding the next weight class each
/// time the current threshold graph has no augmenting path left.
pub fn solve_bnfp_augmenting(instance: &Instance) -> SolveResult {
    let aux = AuxGraph::new(instance);
    let supply = aux.total_supply();
    if supply == 0 {
        return SolveResult::zero_demand(instance.arc_count());
    }
    if aux.ladder().is_empty() {
        return SolveResult::infeasible(instance.arc_count(), 0);
    }
    let mut stats = SolveStats {
        maxflow_calls: 1,
        ..SolveStats::default()
    };
    let mut state = FlowState::at_rung(&aux, 1);
    augment_through_rungs(&aux, &mut state, &mut stats);
    if state.value() < supply {
        return SolveResult::infeasible(instance.arc_count(), state.value()).with_stats(stats);
    }
    extract_solution(&aux, &state)
        .expect("full-value flow")
        .with_stats(stats)
}
