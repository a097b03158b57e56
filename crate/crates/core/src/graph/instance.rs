use std::collections::HashSet;

use thiserror::Error;

/// Node identifier as used in instance files: `1..=n`.
pub type NodeId = usize;

/// A directed arc of a bottleneck flow instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: NodeId,
    pub head: NodeId,
    pub capacity: i64,
    pub weight: i64,
}

impl Arc {
    pub fn new(tail: NodeId, head: NodeId, capacity: i64, weight: i64) -> Self {
        Self {
            tail,
            head,
            capacity,
            weight,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance must have at least one node")]
    NoNodes,
    #[error("node {node} is outside 1..={node_count}")]
    NodeOutOfRange { node: NodeId, node_count: usize },
    #[error("self-loop at node {node}")]
    SelfLoop { node: NodeId },
    #[error("duplicate arc ({tail}, {head})")]
    DuplicateArc { tail: NodeId, head: NodeId },
    #[error("arc ({tail}, {head}) has negative capacity {capacity}")]
    NegativeCapacity {
        tail: NodeId,
        head: NodeId,
        capacity: i64,
    },
    #[error("balances sum to {sum}, expected 0")]
    UnbalancedSupply { sum: i64 },
    #[error("{given} balances given for {node_count} nodes")]
    TooManyBalances { given: usize, node_count: usize },
}

/// A validated bottleneck network flow instance.
///
/// Arcs keep their input order; that order defines arc indices everywhere
/// else in the crate. Balances are stored for every node, missing trailing
/// entries default to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    node_count: usize,
    arcs: Vec<Arc>,
    balances: Vec<i64>,
}

impl Instance {
    pub fn new(node_count: usize, arcs: Vec<Arc>, balances: &[i64]) -> Result<Self, InstanceError> {
        if node_count == 0 {
            return Err(InstanceError::NoNodes);
        }
        if balances.len() > node_count {
            return Err(InstanceError::TooManyBalances {
                given: balances.len(),
                node_count,
            });
        }
        let mut seen = HashSet::with_capacity(arcs.len());
        for arc in &arcs {
            for node in [arc.tail, arc.head] {
                if node == 0 || node > node_count {
                    return Err(InstanceError::NodeOutOfRange { node, node_count });
                }
            }
            if arc.tail == arc.head {
                return Err(InstanceError::SelfLoop { node: arc.tail });
            }
            if arc.capacity < 0 {
                return Err(InstanceError::NegativeCapacity {
                    tail: arc.tail,
                    head: arc.head,
                    capacity: arc.capacity,
                });
            }
            if !seen.insert((arc.tail, arc.head)) {
                return Err(InstanceError::DuplicateArc {
                    tail: arc.tail,
                    head: arc.head,
                });
            }
        }
        let sum: i64 = balances.iter().sum();
        if sum != 0 {
            return Err(InstanceError::UnbalancedSupply { sum });
        }
        let mut full = balances.to_vec();
        full.resize(node_count, 0);
        Ok(Self {
            node_count,
            arcs,
            balances: full,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> &Arc {
        &self.arcs[index]
    }

    /// Balance of every node, indexed by `id - 1`.
    pub fn balances(&self) -> &[i64] {
        &self.balances
    }

    pub fn balance(&self, node: NodeId) -> i64 {
        self.balances[node - 1]
    }

    pub fn partition(&self) -> BalancePartition {
        BalancePartition::new(&self.balances)
    }

    /// Sum of positive balances: the s-t flow value a feasible solution needs.
    pub fn total_supply(&self) -> i64 {
        self.balances.iter().filter(|&&b| b > 0).sum()
    }

    pub fn is_unit_capacity(&self) -> bool {
        self.arcs.iter().all(|a| a.capacity == 1)
    }

    pub fn find_arc(&self, tail: NodeId, head: NodeId) -> Option<usize> {
        self.arcs.iter().position(|a| a.tail == tail && a.head == head)
    }
}

/// Supply and demand sides of an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancePartition {
    pub supply_nodes: Vec<NodeId>,
    pub demand_nodes: Vec<NodeId>,
    pub total_supply: i64,
    pub max_balance: i64,
}

impl BalancePartition {
    fn new(balances: &[i64]) -> Self {
        let mut supply_nodes = Vec::new();
        let mut demand_nodes = Vec::new();
        let mut total_supply = 0;
        let mut max_balance = 0;
        for (i, &b) in balances.iter().enumerate() {
            if b > 0 {
                supply_nodes.push(i + 1);
                total_supply += b;
            } else if b < 0 {
                demand_nodes.push(i + 1);
            }
            max_balance = max_balance.max(b.abs());
        }
        Self {
            supply_nodes,
            demand_nodes,
            total_supply,
            max_balance,
        }
    }
}
