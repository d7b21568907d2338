//! Shared inputs for the criterion benchmarks.

use qhurwitz_core::partitions::enumerate_partitions;
use qhurwitz_core::Partition;

/// Every ordered pair of partitions of `n`.
pub fn all_pairs(n: usize) -> Vec<(Partition, Partition)> {
    let parts = enumerate_partitions(n);
    parts.iter().flat_map(|a| parts.iter().map(move |b| (a.clone(), b.clone()))).collect()
}
