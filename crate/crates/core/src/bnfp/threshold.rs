use super::{extract_solution, SolveResult, SolveStats};
use crate::graph::{AuxGraph, FlowState, Instance};
use crate::maxflow::shortest_augmenting_maxflow;

/// Binary search over ladder rungs with an exact max flow per probe.
///
/// Performs at most `⌈log₂ φ⌉ + 1` max-flow computations: the search on
/// `[1, φ]` needs `⌈log₂ φ⌉` probes and rung φ is probed separately only if
/// the search never found a feasible rung.
pub fn solve_binary_threshold(instance: &Instance) -> SolveResult {
    let aux = AuxGraph::new(instance);
    let supply = aux.total_supply();
    if supply == 0 {
        return SolveResult::zero_demand(instance.arc_count());
    }
    let rungs = aux.ladder().len();
    if rungs == 0 {
        return SolveResult::infeasible(instance.arc_count(), 0);
    }

    let mut stats = SolveStats::default();
    let probe = |rung: usize, stats: &mut SolveStats| {
        let mut state = FlowState::at_rung(&aux, rung);
        let trace = shortest_augmenting_maxflow(&aux, &mut state, supply);
        stats.thresholds_probed += 1;
        stats.maxflow_calls += 1;
        stats.augmentations += trace.augmentations();
        state
    };

    let (mut lo, mut hi) = (1, rungs);
    let mut feasible_at_hi: Option<FlowState> = None;
    while lo < hi {
        let mid = (lo + hi) / 2;
        let state = probe(mid, &mut stats);
        if state.value() == supply {
            hi = mid;
            feasible_at_hi = Some(state);
        } else {
            lo = mid + 1;
        }
    }
    let state = match feasible_at_hi {
        Some(state) => state,
        None => probe(rungs, &mut stats),
    };
    if state.value() < supply {
        return SolveResult::infeasible(instance.arc_count(), state.value()).with_stats(stats);
    }
    extract_solution(&aux, &state)
        .expect("full-value flow from an exact max flow")
        .with_stats(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bnfp::fixtures::*;
    use crate::bnfp::Status;
    use crate::graph::Arc;

    #[test]
    fn instance_a_probes() {
        let result = solve_binary_threshold(&instance_a());
        assert_eq!(result.status, Status::Optimal);
        assert_eq!(result.bottleneck, Some(5));
        assert_eq!(result.flow, vec![1, 1, 0]);
        assert!(result.stats.maxflow_calls <= 3);
    }

    #[test]
    fn instance_b_and_infeasible() {
        let b = solve_binary_threshold(&instance_b());
        assert_eq!((b.bottleneck, b.flow.clone()), (Some(4), vec![2]));
        let bad = solve_binary_threshold(&wrong_way());
        assert_eq!(bad.status, Status::Infeasible);
        assert_eq!(bad.stats.maxflow_calls, 1);
    }

    #[test]
    fn probe_budget_on_a_long_ladder() {
        // a chain 1 -> 2 -> ... -> 17 with distinct weights; feasible only at the top rung
        let n = 17;
        let mut arcs: Vec<Arc> = (1..n).map(|i| Arc::new(i, i + 1, 1, i as i64)).collect();
        arcs.push(Arc::new(1, n, 1, 100));
        let mut balances = vec![0; n];
        balances[0] = 1;
        balances[n - 1] = -1;
        let inst = Instance::new(n, arcs, &balances).unwrap();
        let result = solve_binary_threshold(&inst);
        assert_eq!(result.bottleneck, Some(16));
        let phi = 17usize;
        let budget = (phi as f64).log2().ceil() as usize + 1;
        assert!(result.stats.maxflow_calls <= budget);
    }
}
