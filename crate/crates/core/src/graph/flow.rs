use thiserror::Error;

use super::{AdjEntry, AuxGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("rung {requested} requested while rung {active} is active; rungs activate one at a time")]
    RungSkipped { active: usize, requested: usize },
    #[error("augmentation amount must be at least 1, got {0}")]
    InvalidAmount(i64),
    #[error("path is not a contiguous source-sink path")]
    NotAnStPath,
    #[error("arc {arc} is not active at the current rung")]
    InactiveArc { arc: usize },
    #[error("arc {arc} has residual capacity {residual}, below {amount}")]
    CapacityViolated { arc: usize, residual: i64, amount: i64 },
}

/// A flow invariant that does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowViolation {
    #[error("arc {arc} carries {flow} outside [0, {capacity}]")]
    Capacity { arc: usize, flow: i64, capacity: i64 },
    #[error("node {node} has imbalance {excess}")]
    Conservation { node: usize, excess: i64 },
    #[error("inactive arc {arc} carries flow {flow}")]
    InactiveFlow { arc: usize, flow: i64 },
    #[error("recorded value {recorded} differs from source outflow {actual}")]
    Value { recorded: i64, actual: i64 },
    #[error("value {value} exceeds total supply {supply}")]
    ExceedsSupply { value: i64, supply: i64 },
}

/// An arc traversed in the residual graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidualArc {
    pub arc: usize,
    pub forward: bool,
}

impl From<AdjEntry> for ResidualArc {
    fn from(e: AdjEntry) -> Self {
        Self {
            arc: e.arc,
            forward: e.forward,
        }
    }
}

impl ResidualArc {
    pub fn from_node(&self, aux: &AuxGraph) -> usize {
        if self.forward {
            aux.tail(self.arc)
        } else {
            aux.head(self.arc)
        }
    }

    pub fn to_node(&self, aux: &AuxGraph) -> usize {
        if self.forward {
            aux.head(self.arc)
        } else {
            aux.tail(self.arc)
        }
    }
}

/// Sequence of residual arcs, normally from source to sink.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Path {
    pub steps: Vec<ResidualArc>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Node indices visited, starting at the first step's tail.
    pub fn nodes(&self, aux: &AuxGraph) -> Vec<usize> {
        let mut nodes = Vec::with_capacity(self.steps.len() + 1);
        if let Some(first) = self.steps.first() {
            nodes.push(first.from_node(aux));
        }
        nodes.extend(self.steps.iter().map(|s| s.to_node(aux)));
        nodes
    }
}

/// Integer arc flows on an auxiliary graph, together with the active rung.
///
/// The state also tracks, per node, where the active prefix of its adjacency
/// ends, so activating a rung costs time proportional to that rung's arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowState {
    flows: Vec<i64>,
    value: i64,
    active_rung: usize,
    active_end: Vec<usize>,
}

impl FlowState {
    /// Zero flow with only source and sink arcs active.
    pub fn new(aux: &AuxGraph) -> Self {
        Self::at_rung(aux, 0)
    }

    /// Zero flow on `G*(c_k)`.
    pub fn at_rung(aux: &AuxGraph, rung: usize) -> Self {
        assert!(rung <= aux.ladder().len(), "rung {rung} beyond ladder");
        let active_end = (0..aux.node_count())
            .map(|v| {
                let start = aux.adjacency_start(v);
                start + aux.adjacency(v).partition_point(|e| aux.rung_of_arc(e.arc) <= rung)
            })
            .collect();
        Self {
            flows: vec![0; aux.arc_count()],
            value: 0,
            active_rung: rung,
            active_end,
        }
    }

    /// Lifts a flow on the base arcs to the auxiliary graph: every source and
    /// sink arc carries its node's net outflow or inflow. The active rung is
    /// the lowest one containing every arc with positive flow.
    pub fn from_base_flows(aux: &AuxGraph, base: &[i64]) -> Result<Self, FlowViolation> {
        assert_eq!(base.len(), aux.base_arc_count(), "one flow per base arc");
        let mut net_out = vec![0i64; aux.node_count()];
        let mut rung = 0;
        for (arc, &x) in base.iter().enumerate() {
            net_out[aux.tail(arc)] += x;
            net_out[aux.head(arc)] -= x;
            if x > 0 {
                rung = rung.max(aux.rung_of_arc(arc));
            }
        }
        let mut state = Self::at_rung(aux, rung);
        state.flows[..base.len()].copy_from_slice(base);
        for arc in base.len()..aux.arc_count() {
            let flow = if aux.tail(arc) == aux.source() {
                net_out[aux.head(arc)]
            } else {
                -net_out[aux.tail(arc)]
            };
            state.flows[arc] = flow;
            if aux.tail(arc) == aux.source() {
                state.value += flow;
            }
        }
        state.check(aux)?;
        Ok(state)
    }

    /// Activates the arcs of rung `k`; `k` must be the next rung.
    pub fn activate_rung(&mut self, aux: &AuxGraph, k: usize) -> Result<(), FlowError> {
        if k != self.active_rung + 1 || k > aux.ladder().len() {
            return Err(FlowError::RungSkipped {
                active: self.active_rung,
                requested: k,
            });
        }
        for &arc in aux.ladder().arcs(k) {
            self.active_end[aux.tail(arc)] += 1;
            self.active_end[aux.head(arc)] += 1;
        }
        self.active_rung = k;
        Ok(())
    }

    pub fn flows(&self) -> &[i64] {
        &self.flows
    }

    pub fn flow(&self, arc: usize) -> i64 {
        self.flows[arc]
    }

    /// `v(x)`: flow leaving the source.
    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn active_rung(&self) -> usize {
        self.active_rung
    }

    pub fn is_active(&self, aux: &AuxGraph, arc: usize) -> bool {
        aux.rung_of_arc(arc) <= self.active_rung
    }

    /// Active part of `v`'s adjacency.
    pub fn active_adjacency<'a>(&self, aux: &'a AuxGraph, v: usize) -> &'a [AdjEntry] {
        &aux.entries()[aux.adjacency_start(v)..self.active_end[v]]
    }

    pub fn residual(&self, aux: &AuxGraph, step: ResidualArc) -> i64 {
        if step.forward {
            aux.capacity(step.arc) - self.flows[step.arc]
        } else {
            self.flows[step.arc]
        }
    }

    /// Pushes `amount` along one residual arc. The caller keeps the value
    /// bookkeeping consistent through [`FlowState::push_path`].
    pub(crate) fn push(&mut self, step: ResidualArc, amount: i64) {
        if step.forward {
            self.flows[step.arc] += amount;
        } else {
            self.flows[step.arc] -= amount;
        }
    }

    /// Pushes `amount` along an already validated source-sink path.
    pub(crate) fn push_path(&mut self, steps: &[ResidualArc], amount: i64) {
        for &step in steps {
            self.push(step, amount);
        }
        self.value += amount;
    }

    /// Checks capacity bounds, conservation, activity and value bookkeeping.
    pub fn check(&self, aux: &AuxGraph) -> Result<(), FlowViolation> {
        let mut excess = vec![0i64; aux.node_count()];
        for arc in 0..aux.arc_count() {
            let flow = self.flows[arc];
            let capacity = aux.capacity(arc);
            if flow < 0 || flow > capacity {
                return Err(FlowViolation::Capacity { arc, flow, capacity });
            }
            if flow != 0 && !self.is_active(aux, arc) {
                return Err(FlowViolation::InactiveFlow { arc, flow });
            }
            excess[aux.tail(arc)] -= flow;
            excess[aux.head(arc)] += flow;
        }
        for (node, &e) in excess.iter().enumerate() {
            if node != aux.source() && node != aux.sink() && e != 0 {
                return Err(FlowViolation::Conservation { node, excess: e });
            }
        }
        let actual = -excess[aux.source()];
        if actual != self.value {
            return Err(FlowViolation::Value {
                recorded: self.value,
                actual,
            });
        }
        if self.value > aux.total_supply() {
            return Err(FlowViolation::ExceedsSupply {
                value: self.value,
                supply: aux.total_supply(),
            });
        }
        Ok(())
    }
}

/// A residual arc with positive capacity, as yielded by [`ResidualView`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidualEdge {
    pub step: ResidualArc,
    pub to: usize,
    pub residual: i64,
}

/// Residual graph `Ḡ_r(x)` of the active subgraph with respect to a flow.
#[derive(Clone, Copy, Debug)]
pub struct ResidualView<'a> {
    pub aux: &'a AuxGraph,
    pub state: &'a FlowState,
}

impl<'a> ResidualView<'a> {
    pub fn new(aux: &'a AuxGraph, state: &'a FlowState) -> Self {
        Self { aux, state }
    }

    /// Residual arcs out of `v` with positive capacity, in adjacency order.
    pub fn edges(&self, v: usize) -> impl Iterator<Item = ResidualEdge> + 'a {
        let (aux, state) = (self.aux, self.state);
        state.active_adjacency(aux, v).iter().filter_map(move |&e| {
            let step = ResidualArc::from(e);
            let residual = state.residual(aux, step);
            (residual > 0).then_some(ResidualEdge {
                step,
                to: e.to,
                residual,
            })
        })
    }

    pub fn residual(&self, step: ResidualArc) -> i64 {
        if self.state.is_active(self.aux, step.arc) {
            self.state.residual(self.aux, step)
        } else {
            0
        }
    }

    pub fn source(&self) -> usize {
        self.aux.source()
    }

    pub fn sink(&self) -> usize {
        self.aux.sink()
    }
}
