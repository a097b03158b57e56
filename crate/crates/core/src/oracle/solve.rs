use std::collections::BTreeSet;

use crate::bnfp::{SolveResult, SolveStats, Status};
use crate::graph::Instance;

/// Residual network with paired edges: edge `e` and `e ^ 1` are reverses of
/// each other.
struct Network {
    head: Vec<usize>,
    residual: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            residual: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, capacity: i64) -> usize {
        let e = self.head.len();
        self.head.extend([to, from]);
        self.residual.extend([capacity, 0]);
        self.out[from].push(e);
        self.out[to].push(e + 1);
        e
    }

    /// Depth-first search for any path with positive residual capacity.
    fn find_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut via: Vec<Option<usize>> = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            if v == t {
                let mut path = Vec::new();
                let mut at = t;
                while let Some(e) = via[at] {
                    path.push(e);
                    at = self.head[e ^ 1];
                }
                path.reverse();
                return Some(path);
            }
            for &e in &self.out[v] {
                let w = self.head[e];
                if !seen[w] && self.residual[e] > 0 {
                    seen[w] = true;
                    via[w] = Some(e);
                    stack.push(w);
                }
            }
        }
        None
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut value = 0;
        while let Some(path) = self.find_path(s, t) {
            let amount = path.iter().map(|&e| self.residual[e]).min().unwrap_or(0);
            for e in path {
                self.residual[e] -= amount;
                self.residual[e ^ 1] += amount;
            }
            value += amount;
        }
        value
    }
}

/// Max flow from the supplies to the demands using only arcs with weight at
/// most `threshold` (all arcs when `None`). Returns the value and the flow
/// on every instance arc.
fn max_flow_within(instance: &Instance, threshold: Option<i64>) -> (i64, Vec<i64>) {
    let n = instance.node_count();
    let (s, t) = (n, n + 1);
    let mut net = Network::new(n + 2);
    let edges: Vec<Option<usize>> = instance
        .arcs()
        .iter()
        .map(|a| {
            threshold
                .is_none_or(|w| a.weight <= w)
                .then(|| net.add(a.tail - 1, a.head - 1, a.capacity))
        })
        .collect();
    for (i, &b) in instance.balances().iter().enumerate() {
        if b > 0 {
            net.add(s, i, b);
        } else if b < 0 {
            net.add(i, t, -b);
        }
    }
    let value = net.max_flow(s, t);
    let flow = edges.iter().map(|e| e.map_or(0, |e| net.residual[e ^ 1])).collect();
    (value, flow)
}

/// Maximum flow value of the threshold graph with cutoff `threshold`.
pub fn threshold_max_flow(instance: &Instance, threshold: Option<i64>) -> i64 {
    max_flow_within(instance, threshold).0
}

/// Tries every distinct weight in increasing order and stops at the first
/// whose threshold graph carries the total supply.
pub fn oracle_solve(instance: &Instance) -> SolveResult {
    let supply: i64 = instance.balances().iter().filter(|&&b| b > 0).sum();
    let m = instance.arc_count();
    if supply == 0 {
        return SolveResult::zero_demand(m);
    }
    let weights: BTreeSet<i64> = instance.arcs().iter().map(|a| a.weight).collect();
    for (i, &w) in weights.iter().enumerate() {
        let probed = i + 1;
        let (value, flow) = max_flow_within(instance, Some(w));
        if value == supply {
            return SolveResult {
                status: Status::Optimal,
                bottleneck: Some(w),
                flow,
                flow_value: value,
                stats: SolveStats {
                    thresholds_probed: probed,
                    maxflow_calls: probed,
                    ..SolveStats::default()
                },
            };
        }
    }
    let best = threshold_max_flow(instance, None);
    SolveResult::infeasible(m, best)
}
