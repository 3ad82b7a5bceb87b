//! Shared inputs for the criterion benchmarks.

use specht_core::{Partition, Prime};

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("benchmark inputs are partitions")
}

pub fn prime(p: u64) -> Prime {
    Prime::new(p).expect("benchmark primes are prime")
}
