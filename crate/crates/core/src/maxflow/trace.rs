/// One augmentation performed by a max-flow engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentationRecord {
    pub path_len: usize,
    pub amount: i64,
    pub value_after: i64,
}

/// Everything an engine did during one call.
///
/// `active_arcs` and `active_nodes` are the sizes of the active auxiliary
/// graph the engine ran on, so approximation bounds can be checked against
/// either the auxiliary or the base counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AugmentationTrace {
    pub records: Vec<AugmentationRecord>,
    pub initial_value: i64,
    pub arcs_scanned: u64,
    pub relabels: u64,
    /// Source label at termination, for the label-based engines.
    pub final_source_label: Option<usize>,
    pub active_arcs: usize,
    pub active_base_arcs: usize,
    pub active_nodes: usize,
}

impl AugmentationTrace {
    pub(crate) fn start(initial_value: i64, active_arcs: usize, active_base_arcs: usize, active_nodes: usize) -> Self {
        Self {
            initial_value,
            active_arcs,
            active_base_arcs,
            active_nodes,
            ..Self::default()
        }
    }

    pub(crate) fn record(&mut self, path_len: usize, amount: i64, value_after: i64) {
        self.records.push(AugmentationRecord {
            path_len,
            amount,
            value_after,
        });
    }

    pub fn augmentations(&self) -> usize {
        self.records.len()
    }

    pub fn pushed(&self) -> i64 {
        self.records.iter().map(|r| r.amount).sum()
    }

    pub fn final_value(&self) -> i64 {
        self.records.last().map_or(self.initial_value, |r| r.value_after)
    }
}
