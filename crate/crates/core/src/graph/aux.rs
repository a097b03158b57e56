use super::{Instance, NodeId, ThresholdLadder};

/// One entry of a node's residual adjacency: arc `arc` seen from this node,
/// forward when this node is the arc's tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjEntry {
    pub arc: usize,
    pub to: usize,
    pub forward: bool,
}

/// Role of an auxiliary graph node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxNode {
    Base(NodeId),
    Source,
    Sink,
}

/// The instance extended with a super source and super sink.
///
/// Internal node indices: base node `i` is `i - 1`, the source is `n` and the
/// sink is `n + 1`. Arcs `0..m` are the instance arcs in input order, followed
/// by the source arcs (ascending supply node) and the sink arcs (ascending
/// demand node), all of weight 0 and always active.
///
/// Every node's adjacency is ordered by (rung, neighbour, arc), so the arcs
/// active at rung `k` form a prefix of each list.
#[derive(Clone, Debug)]
pub struct AuxGraph {
    base_nodes: usize,
    base_arcs: usize,
    tails: Vec<usize>,
    heads: Vec<usize>,
    caps: Vec<i64>,
    weights: Vec<i64>,
    rungs: Vec<usize>,
    ladder: ThresholdLadder,
    adj_start: Vec<usize>,
    adj: Vec<AdjEntry>,
    active_arcs_at: Vec<usize>,
    total_supply: i64,
}

impl AuxGraph {
    pub fn new(instance: &Instance) -> Self {
        let n = instance.node_count();
        let source = n;
        let sink = n + 1;
        let ladder = ThresholdLadder::build(instance);

        let mut tails = Vec::new();
        let mut heads = Vec::new();
        let mut caps = Vec::new();
        let mut weights = Vec::new();
        let mut rungs = Vec::new();
        for (index, arc) in instance.arcs().iter().enumerate() {
            tails.push(arc.tail - 1);
            heads.push(arc.head - 1);
            caps.push(arc.capacity);
            weights.push(arc.weight);
            rungs.push(ladder.rung_of_arc(index));
        }
        let balances = instance.balances();
        for (i, &b) in balances.iter().enumerate() {
            if b > 0 {
                tails.push(source);
                heads.push(i);
                caps.push(b);
                weights.push(0);
                rungs.push(0);
            }
        }
        for (j, &b) in balances.iter().enumerate() {
            if b < 0 {
                tails.push(j);
                heads.push(sink);
                caps.push(-b);
                weights.push(0);
                rungs.push(0);
            }
        }

        let node_count = n + 2;
        let mut degree = vec![0usize; node_count + 1];
        for a in 0..tails.len() {
            degree[tails[a] + 1] += 1;
            degree[heads[a] + 1] += 1;
        }
        for v in 0..node_count {
            degree[v + 1] += degree[v];
        }
        let adj_start = degree;
        let mut fill = adj_start.clone();
        let mut adj = vec![
            AdjEntry {
                arc: 0,
                to: 0,
                forward: true,
            };
            2 * tails.len()
        ];
        for a in 0..tails.len() {
            let (t, h) = (tails[a], heads[a]);
            adj[fill[t]] = AdjEntry {
                arc: a,
                to: h,
                forward: true,
            };
            fill[t] += 1;
            adj[fill[h]] = AdjEntry {
                arc: a,
                to: t,
                forward: false,
            };
            fill[h] += 1;
        }
        for v in 0..node_count {
            adj[adj_start[v]..adj_start[v + 1]].sort_by_key(|e| (rungs[e.arc], e.to, e.arc));
        }

        let aux_arcs = tails.len() - instance.arc_count();
        let mut active_arcs_at = Vec::with_capacity(ladder.len() + 1);
        active_arcs_at.push(aux_arcs);
        for k in 1..=ladder.len() {
            active_arcs_at.push(active_arcs_at[k - 1] + ladder.arcs(k).len());
        }

        Self {
            base_nodes: n,
            base_arcs: instance.arc_count(),
            tails,
            heads,
            caps,
            weights,
            rungs,
            ladder,
            adj_start,
            adj,
            active_arcs_at,
            total_supply: instance.total_supply(),
        }
    }

    /// `n*`, including source and sink.
    pub fn node_count(&self) -> usize {
        self.base_nodes + 2
    }

    pub fn base_node_count(&self) -> usize {
        self.base_nodes
    }

    /// `m*`, including source and sink arcs.
    pub fn arc_count(&self) -> usize {
        self.tails.len()
    }

    pub fn base_arc_count(&self) -> usize {
        self.base_arcs
    }

    pub fn source(&self) -> usize {
        self.base_nodes
    }

    pub fn sink(&self) -> usize {
        self.base_nodes + 1
    }

    pub fn is_base_arc(&self, arc: usize) -> bool {
        arc < self.base_arcs
    }

    pub fn tail(&self, arc: usize) -> usize {
        self.tails[arc]
    }

    pub fn head(&self, arc: usize) -> usize {
        self.heads[arc]
    }

    pub fn capacity(&self, arc: usize) -> i64 {
        self.caps[arc]
    }

    pub fn weight(&self, arc: usize) -> i64 {
        self.weights[arc]
    }

    /// Rung at which the arc becomes active; 0 for source/sink arcs.
    pub fn rung_of_arc(&self, arc: usize) -> usize {
        self.rungs[arc]
    }

    pub fn ladder(&self) -> &ThresholdLadder {
        &self.ladder
    }

    /// `δ`: total supply, equal to the capacity out of the source.
    pub fn total_supply(&self) -> i64 {
        self.total_supply
    }

    /// Arcs of `G*(c_k)`: all source/sink arcs plus base arcs up to rung `k`.
    pub fn active_arc_count(&self, rung: usize) -> usize {
        self.active_arcs_at[rung]
    }

    pub fn node_index(&self, id: NodeId) -> usize {
        id - 1
    }

    pub fn node_role(&self, index: usize) -> AuxNode {
        if index == self.source() {
            AuxNode::Source
        } else if index == self.sink() {
            AuxNode::Sink
        } else {
            AuxNode::Base(index + 1)
        }
    }

    /// Full adjacency of `v`, active or not.
    pub fn adjacency(&self, v: usize) -> &[AdjEntry] {
        &self.adj[self.adj_start[v]..self.adj_start[v + 1]]
    }

    pub(crate) fn adjacency_start(&self, v: usize) -> usize {
        self.adj_start[v]
    }

    pub(crate) fn entries(&self) -> &[AdjEntry] {
        &self.adj
    }

    /// All base arcs have capacity exactly one.
    pub fn is_unit_capacity(&self) -> bool {
        self.caps[..self.base_arcs].iter().all(|&c| c == 1)
    }

    /// Every node has at most one incoming or at most one outgoing arc,
    /// counting source and sink arcs.
    pub fn is_simple(&self) -> bool {
        let n = self.node_count();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for a in 0..self.arc_count() {
            outdeg[self.tails[a]] += 1;
            indeg[self.heads[a]] += 1;
        }
        (0..n).all(|v| indeg[v] <= 1 || outdeg[v] <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;

    #[test]
    fn instance_b_layout() {
        let inst = Instance::new(2, vec![Arc::new(1, 2, 2, 4)], &[2, -2]).unwrap();
        let aux = AuxGraph::new(&inst);
        assert_eq!(aux.node_count(), 4);
        assert_eq!(aux.arc_count(), 3);
        let s = aux.source();
        let t = aux.sink();
        assert_eq!((aux.tail(1), aux.head(1), aux.capacity(1), aux.weight(1)), (s, 0, 2, 0));
        assert_eq!((aux.tail(0), aux.head(0), aux.capacity(0), aux.weight(0)), (0, 1, 2, 4));
        assert_eq!((aux.tail(2), aux.head(2), aux.capacity(2), aux.weight(2)), (1, t, 2, 0));
        assert_eq!(aux.node_role(s), AuxNode::Source);
        assert_eq!(aux.node_role(0), AuxNode::Base(1));
    }

    #[test]
    fn instance_a_aux_arcs() {
        let inst = Instance::new(
            3,
            vec![Arc::new(1, 2, 1, 5), Arc::new(2, 3, 1, 3), Arc::new(1, 3, 1, 7)],
            &[1, 0, -1],
        )
        .unwrap();
        let aux = AuxGraph::new(&inst);
        assert_eq!(aux.arc_count(), 5);
        assert_eq!((aux.tail(3), aux.head(3), aux.capacity(3)), (aux.source(), 0, 1));
        assert_eq!((aux.tail(4), aux.head(4), aux.capacity(4)), (2, aux.sink(), 1));
        assert_eq!(aux.active_arc_count(0), 2);
        assert_eq!(aux.active_arc_count(1), 3);
        assert_eq!(aux.active_arc_count(3), 5);
    }

    #[test]
    fn zero_balances_have_no_aux_arcs() {
        let inst = Instance::new(3, vec![Arc::new(1, 2, 1, 1)], &[]).unwrap();
        let aux = AuxGraph::new(&inst);
        assert_eq!(aux.arc_count(), 1);
        assert_eq!(aux.total_supply(), 0);
    }

    #[test]
    fn adjacency_prefix_is_ordered_by_rung() {
        let inst = Instance::new(
            3,
            vec![Arc::new(1, 2, 1, 5), Arc::new(2, 3, 1, 3), Arc::new(1, 3, 1, 7)],
            &[1, 0, -1],
        )
        .unwrap();
        let aux = AuxGraph::new(&inst);
        for v in 0..aux.node_count() {
            let rungs: Vec<usize> = aux.adjacency(v).iter().map(|e| aux.rung_of_arc(e.arc)).collect();
            assert!(rungs.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn simple_predicate() {
        // 1 -> {2, 3}: node 1 has one incoming (source) arc.
        let ok = Instance::new(3, vec![Arc::new(1, 2, 1, 1), Arc::new(1, 3, 1, 1)], &[2, -1, -1]).unwrap();
        assert!(AuxGraph::new(&ok).is_simple());
        // node 3 has two in and two out arcs
        let bad = Instance::new(
            5,
            vec![
                Arc::new(1, 3, 1, 1),
                Arc::new(2, 3, 1, 1),
                Arc::new(3, 4, 1, 1),
                Arc::new(3, 5, 1, 1),
            ],
            &[],
        )
        .unwrap();
        assert!(!AuxGraph::new(&bad).is_simple());
    }
}
