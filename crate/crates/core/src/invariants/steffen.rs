use crate::graph::Multigraph;
use crate::invariants::cycle::{girth, Girth};

/// `Δ + ⌈μ / ⌊g/2⌋⌉` for finite girth.
///
/// For a forest with at least one edge the term `⌈μ/⌊g/2⌋⌉` tends to 1 as
/// `g` grows, so the bound is `Δ + 1`. An edgeless graph gets `Δ = 0`.
pub fn steffen_value(max_degree: u32, mu: u32, girth: Girth) -> u32 {
    if mu == 0 {
        return max_degree;
    }
    match girth {
        Girth::Finite(g) => max_degree + mu.div_ceil(g / 2),
        Girth::Infinite => max_degree + 1,
    }
}

pub fn steffen_bound(g: &Multigraph) -> u32 {
    steffen_value(g.max_degree(), g.max_multiplicity(), girth(g))
}
