use std::collections::VecDeque;

use super::{new_trace, AugmentationTrace};
use crate::graph::{AuxGraph, FlowState, Path, ResidualArc};

/// Breadth-first search from the source over residual arcs with capacity at
/// least `min_residual`. Returns the path found and its bottleneck capacity.
pub(crate) fn bfs_path(
    aux: &AuxGraph,
    state: &FlowState,
    min_residual: i64,
    scanned: &mut u64,
) -> Option<(Path, i64)> {
    let (s, t) = (aux.source(), aux.sink());
    let mut pred: Vec<Option<ResidualArc>> = vec![None; aux.node_count()];
    let mut seen = vec![false; aux.node_count()];
    let mut queue = VecDeque::new();
    seen[s] = true;
    queue.push_back(s);
    'search: while let Some(v) = queue.pop_front() {
        for &e in state.active_adjacency(aux, v) {
            *scanned += 1;
            if seen[e.to] {
                continue;
            }
            let step = ResidualArc::from(e);
            if state.residual(aux, step) < min_residual {
                continue;
            }
            seen[e.to] = true;
            pred[e.to] = Some(step);
            if e.to == t {
                break 'search;
            }
            queue.push_back(e.to);
        }
    }
    if !seen[t] {
        return None;
    }
    let mut steps = Vec::new();
    let mut bottleneck = i64::MAX;
    let mut at = t;
    while at != s {
        let step = pred[at].expect("predecessor on bfs tree");
        bottleneck = bottleneck.min(state.residual(aux, step));
        steps.push(step);
        at = step.from_node(aux);
    }
    steps.reverse();
    Some((Path { steps }, bottleneck))
}

/// Generic augmenting path max flow: repeatedly augments along a
/// breadth-first residual path until the flow value reaches `target` or no
/// path remains. Works on the arcs active in `state`, starting from its flow.
pub fn labeling_maxflow(aux: &AuxGraph, state: &mut FlowState, target: i64) -> AugmentationTrace {
    let mut trace = new_trace(aux, state);
    while state.value() < target {
        let Some((path, bottleneck)) = bfs_path(aux, state, 1, &mut trace.arcs_scanned) else {
            break;
        };
        let amount = bottleneck.min(target - state.value());
        state.push_path(&path.steps, amount);
        trace.record(path.len(), amount, state.value());
    }
    trace
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Arc, Instance};

    fn instance_a() -> Instance {
        Instance::new(
            3,
            vec![Arc::new(1, 2, 1, 5), Arc::new(2, 3, 1, 3), Arc::new(1, 3, 1, 7)],
            &[1, 0, -1],
        )
        .unwrap()
    }

    #[test]
    fn saturating_path_on_instance_b() {
        let inst = Instance::new(2, vec![Arc::new(1, 2, 2, 4)], &[2, -2]).unwrap();
        let aux = AuxGraph::new(&inst);
        let mut state = FlowState::at_rung(&aux, 1);
        let trace = labeling_maxflow(&aux, &mut state, 2);
        assert_eq!(state.value(), 2);
        assert_eq!(trace.augmentations(), 1);
        state.check(&aux).unwrap();
    }

    #[test]
    fn first_rung_of_instance_a_has_no_path() {
        let aux = AuxGraph::new(&instance_a());
        let mut state = FlowState::at_rung(&aux, 1);
        let trace = labeling_maxflow(&aux, &mut state, 1);
        assert_eq!(state.value(), 0);
        assert_eq!(trace.augmentations(), 0);
    }

    #[test]
    fn zero_target_leaves_flow_unchanged() {
        let aux = AuxGraph::new(&instance_a());
        let mut state = FlowState::at_rung(&aux, 3);
        let before = state.clone();
        labeling_maxflow(&aux, &mut state, 0);
        assert_eq!(state, before);
    }

    #[test]
    fn target_caps_the_pushed_amount() {
        let inst = Instance::new(2, vec![Arc::new(1, 2, 5, 4)], &[5, -5]).unwrap();
        let aux = AuxGraph::new(&inst);
        let mut state = FlowState::at_rung(&aux, 1);
        labeling_maxflow(&aux, &mut state, 3);
        assert_eq!(state.value(), 3);
        state.check(&aux).unwrap();
    }

    #[test]
    fn uses_backward_arcs() {
        // classic crossing instance: greedy path 1-3 must be undone.
        let inst = Instance::new(
            4,
            vec![
                Arc::new(1, 2, 1, 1),
                Arc::new(1, 3, 1, 1),
                Arc::new(2, 3, 1, 1),
                Arc::new(2, 4, 1, 1),
                Arc::new(3, 4, 1, 1),
            ],
            &[2, 0, 0, -2],
        )
        .unwrap();
        let aux = AuxGraph::new(&inst);
        let mut state = FlowState::at_rung(&aux, 1);
        labeling_maxflow(&aux, &mut state, 2);
        assert_eq!(state.value(), 2);
    }
}
