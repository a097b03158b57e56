use super::{extract_solution, SolveResult, SolveStats};
use crate::graph::{AuxGraph, FlowState, Instance, ResidualView};
use crate::maxflow::{augment_along, find_large_capacity_path, labeling_maxflow, large_capacity_threshold};

/// Large capacity augmenting paths.
///
/// An exact max flow on the full auxiliary graph settles feasibility first.
/// Then, starting from the zero flow, rungs are added in ascending order and
/// within a rung every augmenting path with residual capacity at least
/// `⌈(δ - v)/m*⌉` is used, `v` being the current flow value. Each
/// augmentation pushes the path's full residual capacity, so the count stays
/// within `m*·ln δ + 1`.
pub fn solve_large_capacity(instance: &Instance) -> SolveResult {
    let aux = AuxGraph::new(instance);
    let supply = aux.total_supply();
    if supply == 0 {
        return SolveResult::zero_demand(instance.arc_count());
    }
    let rungs = aux.ladder().len();
    let mut stats = SolveStats::default();

    let mut full = FlowState::at_rung(&aux, rungs);
    labeling_maxflow(&aux, &mut full, supply);
    stats.maxflow_calls += 1;
    if full.value() < supply {
        return SolveResult::infeasible(instance.arc_count(), full.value()).with_stats(stats);
    }

    let arc_count = aux.arc_count();
    let mut state = FlowState::new(&aux);
    'rungs: for k in 1..=rungs {
        state.activate_rung(&aux, k).expect("ascending activation");
        stats.thresholds_probed += 1;
        loop {
            let epsilon = large_capacity_threshold(supply - state.value(), arc_count);
            let Some(path) = find_large_capacity_path(&ResidualView::new(&aux, &state), epsilon) else {
                break;
            };
            let amount = path
                .steps
                .iter()
                .map(|&step| state.residual(&aux, step))
                .min()
                .expect("non-empty path");
            augment_along(&aux, &mut state, &path, amount).expect("path found in the residual graph");
            stats.augmentations += 1;
            if state.value() == supply {
                break 'rungs;
            }
        }
    }
    extract_solution(&aux, &state)
        .expect("feasibility was established up front")
        .with_stats(stats)
}
