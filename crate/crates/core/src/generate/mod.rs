//! Named graph families, canonical forms and exhaustive enumeration.

pub mod canon;
pub mod checkpoint;
pub mod enumerate;
pub mod families;
pub mod random;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use checkpoint::Checkpoint;
pub use enumerate::{enumerate_multigraphs, simple_graphs, EnumSpec, Enumerated};
pub use families::{mu_complete, mu_cycle, petersen, ring};
