use super::{augment_through_rungs, extract_solution, SolveError, SolveResult, SolveStats};
use crate::graph::{AuxGraph, FlowState, Instance};
use crate::maxflow::{almost_unit_maxflow, ceil_root, d_shortest_augmenting, UnitVariant};

/// Gap test and default depth used by the approximate binary search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DepthRule {
    /// Accept a rung when `δ - v <= |E*| / D`; `D = ⌈√(m / ln n)⌉`.
    Edge,
    /// Accept a rung when `δ - v <= (2|V*| / D)²`; `D = ⌈(n² / ln n)^(1/3)⌉`.
    Node,
    /// Accept a rung when `δ - v <= |V*| / D`; `D = ⌈√(n / ln n)⌉`.
    /// Simple graphs only.
    Simple,
}

impl DepthRule {
    /// Default `D` for a base graph with `n` nodes and `m` arcs. Instances
    /// with `n <= 2` use 1.
    pub fn depth(self, n: usize, m: usize) -> usize {
        if n <= 2 {
            return 1;
        }
        let ln = (n as f64).ln();
        let d = match self {
            DepthRule::Edge => ceil_root(m as f64 / ln, 2.0),
            DepthRule::Node => ceil_root((n as f64) * (n as f64) / ln, 3.0),
            DepthRule::Simple => ceil_root(n as f64 / ln, 2.0),
        };
        d.max(1)
    }

    /// Whether a probe with remaining gap `gap` on a threshold graph with
    /// `arcs` arcs and `nodes` nodes counts as an approximate upper bound.
    pub fn accepts(self, gap: i64, depth: usize, arcs: usize, nodes: usize) -> bool {
        let (gap, d, e, v) = (gap as i128, depth as i128, arcs as i128, nodes as i128);
        match self {
            DepthRule::Edge => gap * d <= e,
            DepthRule::Node => gap * d * d <= 4 * v * v,
            DepthRule::Simple => gap * d <= v,
        }
    }
}

/// One probe of the approximate binary search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstProbe {
    pub rung: usize,
    pub weight: i64,
    /// `|E*|` and `|V*|` of the probed threshold graph.
    pub active_arcs: usize,
    pub active_nodes: usize,
    pub value: i64,
    pub accepted: bool,
}

/// What the approximate search produced before the extension phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstReport {
    pub rule: DepthRule,
    pub depth: usize,
    /// The search runs the `(D + 2)`-shortest augmenting path algorithm.
    pub truncation: usize,
    pub probes: Vec<AbstProbe>,
    /// Final rung `u = l` of the search and its weight `c̄`.
    pub lower_rung: usize,
    pub lower_weight: i64,
    /// Largest weight carrying flow in the partial flow, if any.
    pub support_weight: Option<i64>,
    pub partial_value: i64,
    /// `δ - v(x̄)`.
    pub partial_gap: i64,
    pub lower_active_arcs: usize,
    pub lower_active_base_arcs: usize,
}

/// Approximate binary search threshold algorithm followed by the extension
/// phase, for instances whose arcs all have capacity 1.
///
/// `depth` overrides the rule's default `D` and must be at least 1.
pub fn solve_abst(instance: &Instance, rule: DepthRule, depth: Option<usize>) -> Result<SolveResult, SolveError> {
    if !instance.is_unit_capacity() {
        return Err(SolveError::NotUnitCapacity);
    }
    let aux = AuxGraph::new(instance);
    if rule == DepthRule::Simple && !aux.is_simple() {
        return Err(SolveError::NotSimple);
    }
    if depth == Some(0) {
        return Err(SolveError::InvalidDepth);
    }
    let supply = aux.total_supply();
    if supply == 0 {
        return Ok(SolveResult::zero_demand(instance.arc_count()));
    }
    let rungs = aux.ladder().len();
    let mut stats = SolveStats::default();

    let mut full = FlowState::at_rung(&aux, rungs);
    almost_unit_maxflow(&aux, &mut full, UnitVariant::Edge).expect("unit capacity checked");
    stats.maxflow_calls += 1;
    if full.value() < supply {
        return Ok(SolveResult::infeasible(instance.arc_count(), full.value()).with_stats(stats));
    }

    let depth = depth.unwrap_or_else(|| rule.depth(instance.node_count(), instance.arc_count()));
    let truncation = depth + 2;
    let probe = |rung: usize, stats: &mut SolveStats| {
        let mut state = FlowState::at_rung(&aux, rung);
        let trace = d_shortest_augmenting(&aux, &mut state, truncation).expect("truncation is at least 3");
        stats.maxflow_calls += 1;
        stats.augmentations += trace.augmentations();
        state
    };

    let mut probes = Vec::new();
    let (mut lower, mut upper) = (1, rungs);
    let mut at_upper: Option<FlowState> = None;
    while upper > lower {
        let k = (lower + upper) / 2;
        let state = probe(k, &mut stats);
        let active_arcs = aux.active_arc_count(k);
        let accepted = rule.accepts(supply - state.value(), depth, active_arcs, aux.node_count());
        probes.push(AbstProbe {
            rung: k,
            weight: aux.ladder().weight(k),
            active_arcs,
            active_nodes: aux.node_count(),
            value: state.value(),
            accepted,
        });
        if accepted {
            upper = k;
            at_upper = Some(state);
        } else {
            lower = k + 1;
        }
    }
    stats.thresholds_probed = probes.len();
    let mut state = match at_upper {
        Some(state) if state.active_rung() == upper => state,
        _ => probe(upper, &mut stats),
    };

    let support_weight = state.flows()[..aux.base_arc_count()]
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x > 0)
        .map(|(a, _)| aux.weight(a))
        .max();
    let lower_active_arcs = aux.active_arc_count(upper);
    let report = AbstReport {
        rule,
        depth,
        truncation,
        probes,
        lower_rung: upper,
        lower_weight: aux.ladder().weight(upper),
        support_weight,
        partial_value: state.value(),
        partial_gap: supply - state.value(),
        lower_active_arcs,
        lower_active_base_arcs: lower_active_arcs - (aux.arc_count() - aux.base_arc_count()),
    };

    let mut extension = SolveStats::default();
    augment_through_rungs(&aux, &mut state, &mut extension);
    stats.augmentations += extension.augmentations;
    stats.extension_augmentations = extension.augmentations;
    stats.abst = Some(report);
    if state.value() < supply {
        // the up-front max flow says this cannot happen
        return Err(SolveError::IncompleteFlow {
            value: state.value(),
            supply,
        });
    }
    Ok(extract_solution(&aux, &state)?.with_stats(stats))
}
