use crate::graph::{AuxGraph, FlowState};

/// A path or cycle of auxiliary arcs carrying `amount` units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFlow {
    pub arcs: Vec<usize>,
    pub amount: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    /// Source-to-sink paths.
    pub paths: Vec<PathFlow>,
    /// Cycles removed before the paths were extracted.
    pub cycles: Vec<PathFlow>,
}

impl Decomposition {
    pub fn value(&self) -> i64 {
        self.paths.iter().map(|p| p.amount).sum()
    }

    /// Arc flows of the paths alone (cycles excluded).
    pub fn recompose_paths(&self, arc_count: usize) -> Vec<i64> {
        sum_into(&self.paths, arc_count)
    }

    pub fn recompose_cycles(&self, arc_count: usize) -> Vec<i64> {
        sum_into(&self.cycles, arc_count)
    }
}

fn sum_into(parts: &[PathFlow], arc_count: usize) -> Vec<i64> {
    let mut x = vec![0; arc_count];
    for part in parts {
        for &a in &part.arcs {
            x[a] += part.amount;
        }
    }
    x
}

/// Splits a source-sink flow into cycles and then at most `m*` paths.
///
/// # Panics
///
/// If the flow violates conservation at a node other than the source and
/// sink.
pub fn decompose_flow(aux: &AuxGraph, state: &FlowState) -> Decomposition {
    let n = aux.node_count();
    let mut rest: Vec<i64> = state.flows().to_vec();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..aux.arc_count() {
        out[aux.tail(a)].push(a);
    }

    let mut cycles = Vec::new();
    while let Some(cycle) = find_cycle(aux, &out, &rest) {
        let amount = peel(&mut rest, &cycle);
        cycles.push(PathFlow { arcs: cycle, amount });
    }

    let (s, t) = (aux.source(), aux.sink());
    let mut paths = Vec::new();
    loop {
        let mut arcs = Vec::new();
        let mut at = s;
        while at != t {
            let Some(&a) = out[at].iter().find(|&&a| rest[a] > 0) else {
                assert!(at == s, "flow is not conserved at node {at}");
                break;
            };
            arcs.push(a);
            at = aux.head(a);
        }
        if arcs.is_empty() {
            break;
        }
        let amount = peel(&mut rest, &arcs);
        paths.push(PathFlow { arcs, amount });
    }
    assert!(rest.iter().all(|&x| x == 0), "flow is not conserved");
    Decomposition { paths, cycles }
}

fn peel(rest: &mut [i64], arcs: &[usize]) -> i64 {
    let amount = arcs.iter().map(|&a| rest[a]).min().unwrap_or(0);
    for &a in arcs {
        rest[a] -= amount;
    }
    amount
}

/// Iterative depth-first search for a directed cycle among arcs with
/// positive remaining flow.
fn find_cycle(aux: &AuxGraph, out: &[Vec<usize>], rest: &[i64]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        OnStack,
        Done,
    }
    let n = out.len();
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // (node, next position in its out list, arc used to enter it)
        let mut stack: Vec<(usize, usize, Option<usize>)> = vec![(root, 0, None)];
        mark[root] = Mark::OnStack;
        while let Some(top) = stack.last_mut() {
            let (v, pos) = (top.0, top.1);
            if pos == out[v].len() {
                mark[v] = Mark::Done;
                stack.pop();
                continue;
            }
            top.1 += 1;
            let a = out[v][pos];
            if rest[a] == 0 {
                continue;
            }
            let w = aux.head(a);
            match mark[w] {
                Mark::New => {
                    mark[w] = Mark::OnStack;
                    stack.push((w, 0, Some(a)));
                }
                Mark::OnStack => {
                    let start = stack.iter().position(|f| f.0 == w).expect("on stack");
                    let mut cycle: Vec<usize> = stack[start + 1..].iter().map(|f| f.2.expect("entered")).collect();
                    cycle.push(a);
                    return Some(cycle);
                }
                Mark::Done => {}
            }
        }
    }
    None
}
