use crate::bnfp::SolveResult;
use crate::graph::{Instance, NodeId};

/// Net outflow of a node against its balance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeCheck {
    pub node: NodeId,
    pub balance: i64,
    pub net_outflow: i64,
}

impl NodeCheck {
    pub fn passes(&self) -> bool {
        self.balance == self.net_outflow
    }
}

/// Flow of an arc against `0 <= x <= u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcCheck {
    pub arc: usize,
    pub flow: i64,
    pub capacity: i64,
}

impl ArcCheck {
    pub fn passes(&self) -> bool {
        (0..=self.capacity).contains(&self.flow)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Whether the result has one flow entry per arc. Missing entries are
    /// read as zero by the other checks.
    pub shape_ok: bool,
    pub nodes: Vec<NodeCheck>,
    pub arcs: Vec<ArcCheck>,
    pub claimed_bottleneck: Option<i64>,
    /// Largest weight over arcs with positive flow.
    pub recomputed_bottleneck: Option<i64>,
}

impl VerificationReport {
    pub fn objective_consistent(&self) -> bool {
        self.claimed_bottleneck == self.recomputed_bottleneck
    }

    pub fn passes(&self) -> bool {
        self.shape_ok
            && self.objective_consistent()
            && self.nodes.iter().all(NodeCheck::passes)
            && self.arcs.iter().all(ArcCheck::passes)
    }

    pub fn node_failures(&self) -> impl Iterator<Item = &NodeCheck> {
        self.nodes.iter().filter(|c| !c.passes())
    }

    pub fn arc_failures(&self) -> impl Iterator<Item = &ArcCheck> {
        self.arcs.iter().filter(|c| !c.passes())
    }
}

/// Checks feasibility of `result.flow` and that the claimed bottleneck is
/// the largest weight carrying flow. Says nothing about optimality.
pub fn verify_solution(instance: &Instance, result: &SolveResult) -> VerificationReport {
    let flow_of = |arc: usize| result.flow.get(arc).copied().unwrap_or(0);
    let mut net = vec![0i64; instance.node_count()];
    let mut arcs = Vec::with_capacity(instance.arc_count());
    let mut recomputed: Option<i64> = None;
    for (i, a) in instance.arcs().iter().enumerate() {
        let x = flow_of(i);
        net[a.tail - 1] += x;
        net[a.head - 1] -= x;
        arcs.push(ArcCheck {
            arc: i,
            flow: x,
            capacity: a.capacity,
        });
        if x > 0 {
            recomputed = recomputed.max(Some(a.weight));
        }
    }
    let nodes = net
        .into_iter()
        .enumerate()
        .map(|(i, net_outflow)| NodeCheck {
            node: i + 1,
            balance: instance.balance(i + 1),
            net_outflow,
        })
        .collect();
    VerificationReport {
        shape_ok: result.flow.len() == instance.arc_count(),
        nodes,
        arcs,
        claimed_bottleneck: result.bottleneck,
        recomputed_bottleneck: recomputed,
    }
}
