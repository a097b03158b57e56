//! Max-flow engines over an auxiliary graph and a [`FlowState`]. Every engine
//! works on the arcs active in the state and continues from its flow.

mod almost_unit;
mod augment;
mod labeling;
mod large_capacity;
mod shortest;
mod trace;

use thiserror::Error;

pub use almost_unit::{almost_unit_maxflow, AlmostUnitOutcome, UnitVariant};
pub use augment::augment_along;
pub use labeling::labeling_maxflow;
pub use large_capacity::{find_large_capacity_path, large_capacity_threshold};
pub use shortest::{d_shortest_augmenting, shortest_augmenting_maxflow, DistanceLabels};
pub use trace::{AugmentationRecord, AugmentationTrace};

pub(crate) use almost_unit::ceil_root;

use crate::graph::{AuxGraph, FlowState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaxflowError {
    #[error("truncation depth {0} is below 3")]
    DTooSmall(usize),
    #[error("graph has a base arc whose capacity is not 1")]
    NotUnitCapacity,
    #[error("graph has a node with several incoming and several outgoing arcs")]
    NotSimple,
}

fn new_trace(aux: &AuxGraph, state: &FlowState) -> AugmentationTrace {
    let active = aux.active_arc_count(state.active_rung());
    let aux_arcs = aux.arc_count() - aux.base_arc_count();
    AugmentationTrace::start(state.value(), active, active - aux_arcs, aux.node_count())
}
