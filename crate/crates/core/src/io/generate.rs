//! Seeded random instances for the special-case families.
//!
//! Feasible instances are built around a planted flow: arcs are drawn first,
//! then flow is routed along some of them and the balances are read off the
//! routed flow, so the instance is feasible without solving anything.
//!
//! With `infeasible` set, the nodes are split into sides `X` and `Y`, no arc
//! goes from `X` to `Y`, planted flow stays inside a side, and `X` ends up
//! with one more unit of supply than it has demand. The cut `(X, Y)` then
//! has capacity 0 but must carry one unit.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use thiserror::Error;

use crate::graph::{Arc, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Any directed graph, balances in `[-B, B]`.
    General,
    /// Bipartite, arcs from the first half of the nodes to the second;
    /// supplies on the first half, demands on the second.
    Transportation,
    /// Transportation with unit capacities and balances `±1` on equal halves.
    Assignment,
    /// Unit capacities, one source with `b = 1` and one sink with `b = -1`.
    Path,
    /// Unit capacities; every node has at most one incoming or at most one
    /// outgoing arc, counting the arcs to the auxiliary source and sink.
    UnitSimple,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::General,
        Family::Transportation,
        Family::Assignment,
        Family::Path,
        Family::UnitSimple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::General => "general",
            Family::Transportation => "transportation",
            Family::Assignment => "assignment",
            Family::Path => "path",
            Family::UnitSimple => "unit_simple",
        }
    }

    pub fn is_unit_capacity(self) -> bool {
        matches!(self, Family::Assignment | Family::Path | Family::UnitSimple)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("unsatisfiable generator spec: {0}")]
    UnsatisfiableSpec(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

fn unsatisfiable<T>(msg: impl Into<String>) -> Result<T, GenerateError> {
    Err(GenerateError::UnsatisfiableSpec(msg.into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub family: Family,
    pub nodes: usize,
    pub arcs: usize,
    /// Largest `|b_i|`; unit-capacity families always use 1.
    #[serde(default = "GeneratorSpec::default_balance")]
    pub balance: i64,
    /// Weights are drawn from `1..=weight_max`.
    #[serde(default = "GeneratorSpec::default_weight_max")]
    pub weight_max: i64,
    /// Capacities are drawn from `1..=capacity_max` and raised to the
    /// planted flow where needed. Unit-capacity families ignore it.
    #[serde(default = "GeneratorSpec::default_capacity_max")]
    pub capacity_max: i64,
    pub seed: u64,
    #[serde(default)]
    pub infeasible: bool,
}

impl GeneratorSpec {
    pub const DEFAULT_BALANCE: i64 = 5;
    pub const DEFAULT_WEIGHT_MAX: i64 = 100;
    pub const DEFAULT_CAPACITY_MAX: i64 = 10;

    fn default_balance() -> i64 {
        Self::DEFAULT_BALANCE
    }

    fn default_weight_max() -> i64 {
        Self::DEFAULT_WEIGHT_MAX
    }

    fn default_capacity_max() -> i64 {
        Self::DEFAULT_CAPACITY_MAX
    }

    pub fn new(family: Family, nodes: usize, arcs: usize, seed: u64) -> Self {
        Self {
            family,
            nodes,
            arcs,
            balance: Self::DEFAULT_BALANCE,
            weight_max: Self::DEFAULT_WEIGHT_MAX,
            capacity_max: Self::DEFAULT_CAPACITY_MAX,
            seed,
            infeasible: false,
        }
    }

    pub fn balance(mut self, balance: i64) -> Self {
        self.balance = balance;
        self
    }

    pub fn weight_max(mut self, weight_max: i64) -> Self {
        self.weight_max = weight_max;
        self
    }

    pub fn capacity_max(mut self, capacity_max: i64) -> Self {
        self.capacity_max = capacity_max;
        self
    }

    pub fn infeasible(mut self, infeasible: bool) -> Self {
        self.infeasible = infeasible;
        self
    }
}

/// Arcs under construction, 0-based node indices, with planted flow.
struct Draft {
    n: usize,
    pairs: HashSet<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
    planted: Vec<i64>,
    balances: Vec<i64>,
}

impl Draft {
    fn new(n: usize) -> Self {
        Self {
            n,
            pairs: HashSet::new(),
            arcs: Vec::new(),
            planted: Vec::new(),
            balances: vec![0; n],
        }
    }

    fn add(&mut self, u: usize, v: usize) -> Option<usize> {
        (u != v && self.pairs.insert((u, v))).then(|| {
            self.arcs.push((u, v));
            self.planted.push(0);
            self.arcs.len() - 1
        })
    }

    fn route(&mut self, path: &[usize], amount: i64) {
        for &a in path {
            self.planted[a] += amount;
        }
        let (first, last) = (self.arcs[path[0]].0, self.arcs[path[path.len() - 1]].1);
        self.balances[first] += amount;
        self.balances[last] -= amount;
    }

    /// Adds random arcs allowed by `allowed` until there are `target`.
    /// Falls back to enumerating every allowed pair when sampling stalls.
    fn fill(
        &mut self,
        rng: &mut ChaCha8Rng,
        target: usize,
        allowed: impl Fn(usize, usize) -> bool,
    ) -> Result<(), GenerateError> {
        let mut misses = 0;
        while self.arcs.len() < target && misses < 64 + 4 * target {
            let (u, v) = (rng.gen_range(0..self.n), rng.gen_range(0..self.n));
            if allowed(u, v) && self.add(u, v).is_some() {
                misses = 0;
            } else {
                misses += 1;
            }
        }
        if self.arcs.len() < target {
            let mut free: Vec<(usize, usize)> = (0..self.n)
                .flat_map(|u| (0..self.n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && allowed(u, v) && !self.pairs.contains(&(u, v)))
                .collect();
            if free.len() < target - self.arcs.len() {
                return unsatisfiable(format!("only {} arcs fit, {} requested", self.arcs.len() + free.len(), target));
            }
            free.shuffle(rng);
            for (u, v) in free.into_iter().take(target - self.arcs.len()) {
                self.add(u, v);
            }
        }
        Ok(())
    }

    fn finish(self, rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Instance {
        let unit = spec.family.is_unit_capacity();
        let mut arcs: Vec<Arc> = self
            .arcs
            .iter()
            .zip(&self.planted)
            .map(|(&(u, v), &x)| {
                let capacity = if unit { 1 } else { rng.gen_range(1..=spec.capacity_max).max(x) };
                Arc::new(u + 1, v + 1, capacity, rng.gen_range(1..=spec.weight_max))
            })
            .collect();
        arcs.shuffle(rng);
        Instance::new(self.n, arcs, &self.balances).expect("generated instances are valid")
    }
}

/// Random split into non-empty sides; `true` marks `X`.
fn split_sides(rng: &mut ChaCha8Rng, n: usize) -> Vec<bool> {
    let mut x: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    x[i] = true;
    x[j] = false;
    x
}

pub fn generate_instance(spec: &GeneratorSpec) -> Result<Instance, GenerateError> {
    if spec.weight_max < 1 {
        return unsatisfiable("weight_max must be at least 1");
    }
    if !spec.family.is_unit_capacity() && (spec.capacity_max < 1 || spec.balance < 1) {
        return unsatisfiable("capacity_max and balance must be at least 1");
    }
    if spec.nodes < 2 {
        return unsatisfiable("at least two nodes are needed");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let draft = match spec.family {
        Family::General => general(&mut rng, spec)?,
        Family::Transportation => transportation(&mut rng, spec)?,
        Family::Assignment => assignment(&mut rng, spec)?,
        Family::Path => path(&mut rng, spec)?,
        Family::UnitSimple => unit_simple(&mut rng, spec)?,
    };
    Ok(draft.finish(&mut rng, spec))
}

/// Moves one unit of supply into `X` and one unit of demand into `Y`,
/// keeping `|b| <= bound`.
fn unbalance(
    rng: &mut ChaCha8Rng,
    draft: &mut Draft,
    supply_ok: impl Fn(usize) -> bool,
    demand_ok: impl Fn(usize) -> bool,
    bound: i64,
) -> Result<(), GenerateError> {
    let mut nodes: Vec<usize> = (0..draft.n).collect();
    nodes.shuffle(rng);
    let x = nodes.iter().copied().find(|&v| supply_ok(v) && draft.balances[v] < bound);
    let y = nodes.iter().copied().find(|&v| demand_ok(v) && draft.balances[v] > -bound);
    match (x, y) {
        (Some(x), Some(y)) => {
            draft.balances[x] += 1;
            draft.balances[y] -= 1;
            Ok(())
        }
        _ => unsatisfiable("no room for the extra unit of imbalance"),
    }
}

fn general(rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Result<Draft, GenerateError> {
    let n = spec.nodes;
    let side = if spec.infeasible { split_sides(rng, n) } else { vec![true; n] };
    let mut draft = Draft::new(n);
    draft.fill(rng, spec.arcs, |u, v| !(side[u] && !side[v]))?;

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, &(u, v)) in draft.arcs.iter().enumerate() {
        if side[u] == side[v] {
            out[u].push(a);
        }
    }
    let bound = spec.balance;
    let starts: Vec<usize> = (0..n).filter(|&v| !out[v].is_empty()).collect();
    for _ in 0..rng.gen_range(1..=n) {
        let Some(&start) = starts.choose(rng) else { break };
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut path = Vec::new();
        let mut at = start;
        let len = rng.gen_range(1..n);
        while path.len() < len {
            let next: Vec<usize> = out[at].iter().copied().filter(|&a| !seen[draft.arcs[a].1]).collect();
            let Some(&a) = next.choose(rng) else { break };
            path.push(a);
            at = draft.arcs[a].1;
            seen[at] = true;
        }
        if path.is_empty() {
            continue;
        }
        let room = (bound - draft.balances[start]).min(bound + draft.balances[at]);
        if room >= 1 {
            let amount = rng.gen_range(1..=room);
            draft.route(&path, amount);
        }
    }
    if spec.infeasible {
        unbalance(rng, &mut draft, |v| side[v], |v| !side[v], bound)?;
    }
    Ok(draft)
}

fn transportation(rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Result<Draft, GenerateError> {
    let n = spec.nodes;
    let left = n.div_ceil(2);
    let mut side = if spec.infeasible { split_sides(rng, n) } else { vec![true; n] };
    if spec.infeasible {
        // need a supply node in X and a demand node in Y
        side[rng.gen_range(0..left)] = true;
        side[rng.gen_range(left..n)] = false;
    }
    let mut draft = Draft::new(n);
    draft.fill(rng, spec.arcs, |u, v| u < left && v >= left && !(side[u] && !side[v]))?;

    let bound = spec.balance;
    let plantable: Vec<usize> = (0..draft.arcs.len())
        .filter(|&a| {
            let (u, v) = draft.arcs[a];
            side[u] == side[v]
        })
        .collect();
    if !plantable.is_empty() {
        for _ in 0..rng.gen_range(1..=n) {
            let a = *plantable.choose(rng).expect("non-empty");
            let (u, v) = draft.arcs[a];
            let room = (bound - draft.balances[u]).min(bound + draft.balances[v]);
            if room >= 1 {
                let amount = rng.gen_range(1..=room);
                draft.route(&[a], amount);
            }
        }
    }
    if spec.infeasible {
        unbalance(rng, &mut draft, |v| side[v] && v < left, |v| !side[v] && v >= left, bound)?;
    }
    Ok(draft)
}

fn assignment(rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Result<Draft, GenerateError> {
    let n = spec.nodes;
    if !n.is_multiple_of(2) {
        return unsatisfiable("assignment needs an even number of nodes");
    }
    let half = n / 2;
    let mut draft = Draft::new(n);
    for v in 0..n {
        draft.balances[v] = if v < half { 1 } else { -1 };
    }
    if spec.infeasible {
        // Hall violation: X1 ⊆ V1 may only reach X2 ⊆ V2 and |X1| = |X2| + 1
        let mut rows: Vec<usize> = (0..half).collect();
        let mut cols: Vec<usize> = (half..n).collect();
        rows.shuffle(rng);
        cols.shuffle(rng);
        let k = rng.gen_range(0..half);
        let mut in_x = vec![false; n];
        for &v in rows[..=k].iter().chain(&cols[..k]) {
            in_x[v] = true;
        }
        draft.fill(rng, spec.arcs, |u, v| u < half && v >= half && !(in_x[u] && !in_x[v]))?;
    } else {
        if spec.arcs < half {
            return unsatisfiable(format!("a perfect matching needs {half} arcs"));
        }
        let mut cols: Vec<usize> = (half..n).collect();
        cols.shuffle(rng);
        for (u, &v) in cols.iter().enumerate() {
            let a = draft.add(u, v).expect("fresh pair");
            draft.planted[a] = 1;
        }
        draft.fill(rng, spec.arcs, |u, v| u < half && v >= half)?;
    }
    Ok(draft)
}

fn path(rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Result<Draft, GenerateError> {
    let n = spec.nodes;
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.shuffle(rng);
    let (s, t) = (nodes[0], nodes[1]);
    let mut draft = Draft::new(n);
    if spec.infeasible {
        let mut side = split_sides(rng, n);
        side[s] = true;
        side[t] = false;
        draft.fill(rng, spec.arcs, |u, v| !(side[u] && !side[v]))?;
        draft.balances[s] = 1;
        draft.balances[t] = -1;
    } else {
        if spec.arcs == 0 {
            return unsatisfiable("a path needs at least one arc");
        }
        let hops = rng.gen_range(1..=(n - 1).min(spec.arcs));
        let mut route: Vec<usize> = vec![s];
        route.extend_from_slice(&nodes[2..1 + hops]);
        route.push(t);
        let planted: Vec<usize> = route
            .windows(2)
            .map(|w| draft.add(w[0], w[1]).expect("distinct nodes"))
            .collect();
        draft.route(&planted, 1);
        draft.fill(rng, spec.arcs, |_, _| true)?;
    }
    Ok(draft)
}

fn unit_simple(rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Result<Draft, GenerateError> {
    let n = spec.nodes;
    let side = if spec.infeasible {
        if n < 4 {
            return unsatisfiable("an infeasible simple instance needs at least 4 nodes");
        }
        split_sides(rng, n)
    } else {
        vec![true; n]
    };
    // Type A nodes keep at most one incoming arc, type B at most one outgoing.
    let type_a: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    let mut draft = Draft::new(n);

    let mut pools: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
    for v in 0..n {
        pools[usize::from(side[v])].push(v);
    }
    for pool in &mut pools {
        pool.shuffle(rng);
    }
    if spec.infeasible {
        // one fresh supply node in X, one fresh demand node in Y
        let (Some(x), Some(y)) = (pools[1].pop(), pools[0].pop()) else {
            return unsatisfiable("sides too small");
        };
        draft.balances[x] = 1;
        draft.balances[y] = -1;
        indeg[x] = 1;
        outdeg[y] = 1;
    }

    // node-disjoint planted paths, each inside one side
    let max_paths = (n / 2).min(spec.arcs);
    let paths = if max_paths == 0 { 0 } else { rng.gen_range(1..=max_paths) };
    let mut budget = spec.arcs;
    for p in 0..paths {
        let pool = if pools[1].len() >= 2 && (pools[0].len() < 2 || rng.gen_bool(0.5)) {
            1
        } else if pools[0].len() >= 2 {
            0
        } else {
            break;
        };
        let left = paths - p - 1;
        let max_hops = (pools[pool].len() - 1).min(budget.saturating_sub(left)).min(8);
        if max_hops == 0 {
            break;
        }
        let hops = rng.gen_range(1..=max_hops);
        let cut = pools[pool].len() - hops - 1;
        let route: Vec<usize> = pools[pool].split_off(cut);
        let planted: Vec<usize> = route
            .windows(2)
            .map(|w| {
                outdeg[w[0]] += 1;
                indeg[w[1]] += 1;
                draft.add(w[0], w[1]).expect("fresh nodes")
            })
            .collect();
        indeg[route[0]] += 1;
        outdeg[route[hops]] += 1;
        draft.route(&planted, 1);
        budget -= hops;
    }

    let mut misses = 0;
    let limit = 1000 + 50 * spec.arcs;
    while draft.arcs.len() < spec.arcs {
        if misses > limit {
            return unsatisfiable(format!("could only place {} simple arcs", draft.arcs.len()));
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let fits = !(side[u] && !side[v])
            && (type_a[u] || outdeg[u] == 0)
            && (!type_a[v] || indeg[v] == 0);
        if fits && draft.add(u, v).is_some() {
            outdeg[u] += 1;
            indeg[v] += 1;
            misses = 0;
        } else {
            misses += 1;
        }
    }
    Ok(draft)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AuxGraph;

    fn bipartite(inst: &Instance, half: usize) -> bool {
        inst.arcs().iter().all(|a| a.tail <= half && a.head > half)
    }

    #[test]
    fn assignment_family_invariants() {
        let inst = generate_instance(&GeneratorSpec::new(Family::Assignment, 6, 7, 7)).unwrap();
        assert!(inst.is_unit_capacity());
        assert!(inst.balances().iter().all(|b| b.abs() == 1));
        assert!(bipartite(&inst, 3));
        assert_eq!(inst.arc_count(), 7);
    }

    #[test]
    fn path_family_has_one_source_and_sink() {
        let inst = generate_instance(&GeneratorSpec::new(Family::Path, 5, 8, 3)).unwrap();
        let p = inst.partition();
        assert_eq!((p.supply_nodes.len(), p.demand_nodes.len()), (1, 1));
        assert_eq!(p.total_supply, 1);
        assert!(inst.is_unit_capacity());
    }

    #[test]
    fn deterministic_per_seed() {
        for family in Family::ALL {
            let spec = GeneratorSpec::new(family, 8, 12, 42);
            assert_eq!(generate_instance(&spec).unwrap(), generate_instance(&spec).unwrap());
            let other = GeneratorSpec { seed: 43, ..spec.clone() };
            assert_ne!(generate_instance(&spec).unwrap(), generate_instance(&other).unwrap());
        }
    }

    #[test]
    fn transportation_signs() {
        let inst = generate_instance(&GeneratorSpec::new(Family::Transportation, 9, 15, 1)).unwrap();
        assert!(bipartite(&inst, 5));
        for (i, &b) in inst.balances().iter().enumerate() {
            assert!(if i < 5 { b >= 0 } else { b <= 0 });
        }
    }

    #[test]
    fn unit_simple_is_simple() {
        for seed in 0..20 {
            for infeasible in [false, true] {
                let spec = GeneratorSpec::new(Family::UnitSimple, 10, 14, seed).infeasible(infeasible);
                let inst = generate_instance(&spec).unwrap();
                assert!(AuxGraph::new(&inst).is_simple(), "seed {seed}");
                assert!(inst.total_supply() >= 1);
            }
        }
    }

    #[test]
    fn unsatisfiable_specs() {
        let err = |spec: GeneratorSpec| generate_instance(&spec).unwrap_err();
        assert!(matches!(
            err(GeneratorSpec::new(Family::Assignment, 5, 6, 0)),
            GenerateError::UnsatisfiableSpec(_)
        ));
        assert!(matches!(
            err(GeneratorSpec::new(Family::Assignment, 6, 2, 0)),
            GenerateError::UnsatisfiableSpec(_)
        ));
        assert!(matches!(
            err(GeneratorSpec::new(Family::General, 3, 7, 0)),
            GenerateError::UnsatisfiableSpec(_)
        ));
        assert!(matches!(
            err(GeneratorSpec::new(Family::General, 1, 0, 0)),
            GenerateError::UnsatisfiableSpec(_)
        ));
    }

    #[test]
    fn family_names_round_trip() {
        for family in Family::ALL {
            assert_eq!(family.name().parse::<Family>().unwrap(), family);
        }
        assert!("grid".parse::<Family>().is_err());
    }
}
