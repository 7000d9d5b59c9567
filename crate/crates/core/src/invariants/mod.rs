//! Girth, shortest cycles, density and the girth-refined degree bound.

pub mod cycle;
pub mod density;
pub mod short_cycle;
pub mod steffen;

pub use cycle::{all_cycles, girth, girth_within, shortest_cycle, CycleSeq, Girth};
pub use density::{density, density_with_cap, DensityWitness, DEFAULT_DENSITY_CAP};
pub use short_cycle::{check_short_cycle_properties, short_cycle_report, ShortCycleViolation};
pub use steffen::{steffen_bound, steffen_value};
