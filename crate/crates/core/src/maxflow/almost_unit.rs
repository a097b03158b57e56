use super::{d_shortest_augmenting, labeling_maxflow, AugmentationTrace, MaxflowError};
use crate::graph::{AuxGraph, FlowState};

/// How the truncation depth is chosen for the almost-unit-capacity solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitVariant {
    /// `D = ⌈√m⌉`
    Edge,
    /// `D = ⌈n^(2/3)⌉`
    Node,
    /// `D = ⌈√n⌉`, simple graphs only.
    Simple,
}

impl UnitVariant {
    /// Truncation depth for an auxiliary graph with `arcs` arcs and `nodes`
    /// nodes, never below 3.
    pub fn depth(self, arcs: usize, nodes: usize) -> usize {
        let d = match self {
            UnitVariant::Edge => ceil_root(arcs as f64, 2.0),
            UnitVariant::Node => ceil_root((nodes as f64) * (nodes as f64), 3.0),
            UnitVariant::Simple => ceil_root(nodes as f64, 2.0),
        };
        d.max(3)
    }
}

pub(crate) fn ceil_root(x: f64, degree: f64) -> usize {
    let mut r = x.powf(1.0 / degree).ceil() as usize;
    // powf can land one ulp off an exact power
    while r > 0 && ((r - 1) as f64).powf(degree) >= x {
        r -= 1;
    }
    while (r as f64).powf(degree) < x {
        r += 1;
    }
    r
}

/// Result of [`almost_unit_maxflow`]: the truncated phase and the labeling
/// extension that completes it to a maximum flow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostUnitOutcome {
    pub depth: usize,
    pub truncated: AugmentationTrace,
    pub extension: AugmentationTrace,
}

/// Exact max flow on an almost unit capacity graph: a D-shortest phase with
/// the variant's depth, then labeling augmentation to optimality.
pub fn almost_unit_maxflow(
    aux: &AuxGraph,
    state: &mut FlowState,
    variant: UnitVariant,
) -> Result<AlmostUnitOutcome, MaxflowError> {
    if !aux.is_unit_capacity() {
        return Err(MaxflowError::NotUnitCapacity);
    }
    if variant == UnitVariant::Simple && !aux.is_simple() {
        return Err(MaxflowError::NotSimple);
    }
    let depth = variant.depth(aux.active_arc_count(state.active_rung()), aux.node_count());
    let truncated = d_shortest_augmenting(aux, state, depth)?;
    let extension = labeling_maxflow(aux, state, aux.total_supply());
    Ok(AlmostUnitOutcome {
        depth,
        truncated,
        extension,
    })
}
