use super::labeling::bfs_path;
use crate::graph::{Path, ResidualView};

/// Finds a source-sink path using only residual arcs of capacity at least
/// `epsilon` (thresholds below 1 behave as 1). The path exists exactly when
/// the residual graph has an augmenting path of capacity `>= epsilon`.
pub fn find_large_capacity_path(view: &ResidualView<'_>, epsilon: i64) -> Option<Path> {
    let mut scanned = 0;
    bfs_path(view.aux, view.state, epsilon.max(1), &mut scanned).map(|(path, _)| path)
}

/// `⌈(δ - v) / m*⌉`, the capacity an augmenting path is guaranteed to reach
/// when the active graph can carry the full supply.
pub fn large_capacity_threshold(remaining: i64, arc_count: usize) -> i64 {
    let m = arc_count.max(1) as i64;
    (remaining + m - 1).div_euclid(m).max(1)
}
