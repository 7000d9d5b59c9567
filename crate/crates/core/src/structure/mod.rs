//! Cycle partitions, fans and ring subgraphs.

pub mod fan;
pub mod partition;
pub mod ring;

pub use fan::{fan_bound_check, max_fan, Fan};
pub use partition::{cycle_partition, CyclePartition};
pub use ring::{
    find_ring_subgraph_with_chi, find_ring_subgraph_with_chi_with, is_ring_graph, RingSubgraph,
    RING_CYCLE_CAP,
};
