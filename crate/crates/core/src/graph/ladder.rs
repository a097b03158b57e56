use thiserror::Error;

use super::Instance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LadderError {
    #[error("instance has positive supply but no arcs")]
    EmptyGraph,
}

/// Distinct arc weights in ascending order, with the arcs of each weight.
///
/// Rungs are numbered `1..=len()`; rung 0 stands for "no base arc active".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdLadder {
    weights: Vec<i64>,
    rung_arcs: Vec<Vec<usize>>,
    rung_of_arc: Vec<usize>,
}

impl ThresholdLadder {
    pub fn new(instance: &Instance) -> Result<Self, LadderError> {
        if instance.arc_count() == 0 && instance.total_supply() > 0 {
            return Err(LadderError::EmptyGraph);
        }
        Ok(Self::build(instance))
    }

    pub(crate) fn build(instance: &Instance) -> Self {
        let mut weights: Vec<i64> = instance.arcs().iter().map(|a| a.weight).collect();
        weights.sort_unstable();
        weights.dedup();
        let mut rung_arcs = vec![Vec::new(); weights.len()];
        let mut rung_of_arc = Vec::with_capacity(instance.arc_count());
        for (index, arc) in instance.arcs().iter().enumerate() {
            let rung = weights.binary_search(&arc.weight).expect("weight present");
            rung_arcs[rung].push(index);
            rung_of_arc.push(rung + 1);
        }
        Self {
            weights,
            rung_arcs,
            rung_of_arc,
        }
    }

    /// Number of rungs (distinct weights).
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Weight of rung `k`, `1 <= k <= len()`.
    pub fn weight(&self, k: usize) -> i64 {
        self.weights[k - 1]
    }

    /// Base arcs whose weight equals rung `k`'s weight.
    pub fn arcs(&self, k: usize) -> &[usize] {
        &self.rung_arcs[k - 1]
    }

    pub fn rung_of_arc(&self, arc: usize) -> usize {
        self.rung_of_arc[arc]
    }

    /// Rung index holding `weight`, if any arc has that weight.
    pub fn rung_of_weight(&self, weight: i64) -> Option<usize> {
        self.weights.binary_search(&weight).ok().map(|i| i + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;

    fn instance_a() -> Instance {
        Instance::new(
            3,
            vec![Arc::new(1, 2, 1, 5), Arc::new(2, 3, 1, 3), Arc::new(1, 3, 1, 7)],
            &[1, 0, -1],
        )
        .unwrap()
    }

    #[test]
    fn rungs_sorted_and_grouped() {
        let ladder = ThresholdLadder::new(&instance_a()).unwrap();
        assert_eq!(ladder.weights(), &[3, 5, 7]);
        assert_eq!(ladder.len(), 3);
        assert_eq!(ladder.arcs(1), &[1]);
        assert_eq!(ladder.arcs(2), &[0]);
        assert_eq!(ladder.rung_of_arc(2), 3);
        assert_eq!(ladder.rung_of_weight(5), Some(2));
        assert_eq!(ladder.rung_of_weight(4), None);
    }

    #[test]
    fn single_weight_gives_one_rung() {
        let inst = Instance::new(3, vec![Arc::new(1, 2, 1, 9), Arc::new(2, 3, 4, 9)], &[]).unwrap();
        let ladder = ThresholdLadder::new(&inst).unwrap();
        assert_eq!(ladder.weights(), &[9]);
        assert_eq!(ladder.arcs(1), &[0, 1]);
    }

    #[test]
    fn empty_graph_cases() {
        let zero = Instance::new(2, vec![], &[]).unwrap();
        assert!(ThresholdLadder::new(&zero).unwrap().is_empty());
        let supply = Instance::new(2, vec![], &[1, -1]).unwrap();
        assert_eq!(ThresholdLadder::new(&supply), Err(LadderError::EmptyGraph));
    }

    #[test]
    fn negative_weights_are_ordered() {
        let inst = Instance::new(3, vec![Arc::new(1, 2, 1, 0), Arc::new(2, 3, 1, -4)], &[]).unwrap();
        assert_eq!(ThresholdLadder::new(&inst).unwrap().weights(), &[-4, 0]);
    }
}
