//! Enumerative oracles, independent of the series engine.

mod oracles;
mod partition;

pub use oracles::{
    classic_spt, in_j1, in_j2, in_j3, j_fiber_check, split_double_smallest, spt_oracle, FiberReport,
};
pub use partition::{
    enumerate_distinct_parts, enumerate_overpartitions, enumerate_partitions, Overpartition, Partition,
};
