#![allow(dead_code)]

use std::collections::HashSet;

use bnflow::graph::{Arc, AuxGraph, FlowState, Instance, ResidualArc, ResidualView};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance without any planted structure: arbitrary arcs, repeated
/// and negative weights, zero capacities, and balances from random
/// supply/demand pairs. Often infeasible.
pub fn raw_instance(rng: &mut ChaCha8Rng, max_nodes: usize, max_arcs: usize, unit: bool) -> Instance {
    let n = rng.gen_range(2..=max_nodes);
    let target = rng.gen_range(0..=max_arcs.min(n * (n - 1)));
    let mut seen = HashSet::new();
    let mut arcs = Vec::new();
    while arcs.len() < target {
        let (u, v) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        if u != v && seen.insert((u, v)) {
            let capacity = if unit { 1 } else { rng.gen_range(0..=4) };
            arcs.push(Arc::new(u, v, capacity, rng.gen_range(-3..=6)));
        }
    }
    let mut balances = vec![0i64; n];
    for _ in 0..rng.gen_range(0..=n) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let amount = rng.gen_range(1..=3);
        balances[u] += amount;
        balances[v] -= amount;
    }
    Instance::new(n, arcs, &balances).unwrap()
}

/// Oracle max flow of `G*(c_k)`; rung 0 has no base arcs.
pub fn oracle_at_rung(instance: &Instance, aux: &AuxGraph, k: usize) -> i64 {
    match k {
        0 => bnflow::oracle::threshold_max_flow(instance, Some(i64::MIN)),
        k => bnflow::oracle::threshold_max_flow(instance, Some(aux.ladder().weight(k))),
    }
}

/// Every simple source-sink path in the residual graph whose bottleneck is
/// at least `epsilon`, by exhaustive search.
pub fn residual_paths_with_capacity(view: &ResidualView<'_>, epsilon: i64) -> Vec<Vec<ResidualArc>> {
    fn walk(
        view: &ResidualView<'_>,
        at: usize,
        epsilon: i64,
        on_path: &mut Vec<bool>,
        path: &mut Vec<ResidualArc>,
        found: &mut Vec<Vec<ResidualArc>>,
    ) {
        if at == view.sink() {
            found.push(path.clone());
            return;
        }
        for edge in view.edges(at) {
            if edge.residual >= epsilon && !on_path[edge.to] {
                on_path[edge.to] = true;
                path.push(edge.step);
                walk(view, edge.to, epsilon, on_path, path, found);
                path.pop();
                on_path[edge.to] = false;
            }
        }
    }
    let mut on_path = vec![false; view.aux.node_count()];
    on_path[view.source()] = true;
    let mut found = Vec::new();
    walk(view, view.source(), epsilon, &mut on_path, &mut Vec::new(), &mut found);
    found
}

/// `⌈log₂ x⌉` for `x >= 1`.
pub fn ceil_log2(x: usize) -> usize {
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Active arc and node counts of a threshold graph.
pub fn active_counts(aux: &AuxGraph, state: &FlowState) -> (usize, usize) {
    (aux.active_arc_count(state.active_rung()), aux.node_count())
}
