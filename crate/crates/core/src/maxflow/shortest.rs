use std::collections::VecDeque;

use super::{new_trace, AugmentationTrace, MaxflowError};
use crate::graph::{AuxGraph, FlowState, ResidualArc};

/// Distance labels `d(i)`: lower bounds on the residual distance to the sink,
/// capped at a limit beyond which a node counts as discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLabels {
    labels: Vec<usize>,
    limit: usize,
}

impl DistanceLabels {
    /// Exact residual distances to the sink over active arcs, capped at `limit`.
    pub fn exact(aux: &AuxGraph, state: &FlowState, limit: usize) -> Self {
        let t = aux.sink();
        let mut labels = vec![limit; aux.node_count()];
        let mut queue = VecDeque::new();
        labels[t] = 0;
        queue.push_back(t);
        while let Some(w) = queue.pop_front() {
            let next = labels[w] + 1;
            if next >= limit {
                continue;
            }
            for &e in state.active_adjacency(aux, w) {
                // residual arc e.to -> w is the opposite traversal of this entry
                let step = ResidualArc {
                    arc: e.arc,
                    forward: !e.forward,
                };
                if labels[e.to] == limit && state.residual(aux, step) > 0 {
                    labels[e.to] = next;
                    queue.push_back(e.to);
                }
            }
        }
        Self { labels, limit }
    }

    pub fn get(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    /// `d(t) = 0` and `d(i) <= d(j) + 1` on every active residual arc.
    pub fn is_valid(&self, aux: &AuxGraph, state: &FlowState) -> bool {
        self.labels[aux.sink()] == 0 && (0..aux.node_count()).all(|v| self.is_valid_at(aux, state, v))
    }

    fn is_valid_at(&self, aux: &AuxGraph, state: &FlowState, v: usize) -> bool {
        state
            .active_adjacency(aux, v)
            .iter()
            .all(|&e| state.residual(aux, e.into()) == 0 || self.labels[v] <= self.labels[e.to] + 1)
    }
}

/// Shortest augmenting path engine with advance/retreat/relabel and current
/// arcs. Stops once `d(s) >= limit` or the flow value reaches `target`.
pub(crate) fn run_shortest(aux: &AuxGraph, state: &mut FlowState, limit: usize, target: i64) -> AugmentationTrace {
    let (s, t) = (aux.source(), aux.sink());
    let mut trace = new_trace(aux, state);
    let mut labels = DistanceLabels::exact(aux, state, limit);
    let mut current = vec![0usize; aux.node_count()];
    let mut path: Vec<ResidualArc> = Vec::new();
    let mut v = s;

    while labels.labels[s] < limit && state.value() < target {
        if v == t {
            let bottleneck = path.iter().map(|&step| state.residual(aux, step)).min().expect("non-empty path");
            let amount = bottleneck.min(target - state.value());
            state.push_path(&path, amount);
            trace.record(path.len(), amount, state.value());
            debug_assert!(path.iter().all(|step| labels.is_valid_at(aux, state, step.to_node(aux))));
            path.clear();
            v = s;
            continue;
        }

        let adj = state.active_adjacency(aux, v);
        let mut advanced = false;
        while current[v] < adj.len() {
            let e = adj[current[v]];
            trace.arcs_scanned += 1;
            if labels.labels[v] == labels.labels[e.to] + 1 && state.residual(aux, e.into()) > 0 {
                path.push(e.into());
                v = e.to;
                advanced = true;
                break;
            }
            current[v] += 1;
        }
        if advanced {
            continue;
        }

        let mut relabel = limit;
        for &e in adj {
            trace.arcs_scanned += 1;
            if state.residual(aux, e.into()) > 0 {
                relabel = relabel.min(labels.labels[e.to] + 1);
            }
        }
        debug_assert!(relabel > labels.labels[v], "labels must increase on relabel");
        labels.labels[v] = relabel;
        current[v] = 0;
        trace.relabels += 1;
        debug_assert!(labels.is_valid_at(aux, state, v));
        if v != s {
            let step = path.pop().expect("retreat from non-source node");
            v = step.from_node(aux);
        }
    }
    trace.final_source_label = Some(labels.labels[s]);
    trace
}

/// Exact max flow by shortest augmenting paths, starting from `state`.
/// Terminates when `d(s) >= n*` or the flow value reaches `target`.
pub fn shortest_augmenting_maxflow(aux: &AuxGraph, state: &mut FlowState, target: i64) -> AugmentationTrace {
    run_shortest(aux, state, aux.node_count(), target)
}

/// Shortest augmenting paths with every node whose label reaches `d`
/// discarded; stops as soon as `d(s) >= d`. Requires `d >= 3`.
pub fn d_shortest_augmenting(aux: &AuxGraph, state: &mut FlowState, d: usize) -> Result<AugmentationTrace, MaxflowError> {
    if d < 3 {
        return Err(MaxflowError::DTooSmall(d));
    }
    Ok(run_shortest(aux, state, d.min(aux.node_count()), aux.total_supply()))
}
