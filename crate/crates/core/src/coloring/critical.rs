//! Edge-coloring criticality.
//!
//! `G` is critical when every proper subgraph has smaller chromatic index.
//! Removing one copy of any pair must lower `χ'`; removing more edges can
//! only lower it further. A vertex deletion is edge deletions followed by
//! dropping an isolated vertex, so a graph with an isolated vertex is never
//! critical.

use crate::coloring::chromatic::{chromatic_index_with, ChromaticOptions};
use crate::coloring::solver::{decide, Decision};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn is_critical(g: &Multigraph) -> Result<bool> {
    is_critical_with(g, &ChromaticOptions::default())
}

pub fn is_critical_with(g: &Multigraph, opts: &ChromaticOptions) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::PreconditionFailed(
            "criticality needs at least one edge".into(),
        ));
    }
    let chi = chromatic_index_with(g, opts)?.chi;
    is_critical_given_chi(g, chi, opts)
}

/// Criticality test when `χ'(G)` is already known.
pub fn is_critical_given_chi(g: &Multigraph, chi: u32, opts: &ChromaticOptions) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::PreconditionFailed(
            "criticality needs at least one edge".into(),
        ));
    }
    if !g.isolated_vertices().is_empty() {
        return Ok(false);
    }
    for p in g.pairs() {
        if !drops_when_removed(g, p.u, p.v, chi, opts)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `χ'(G - e) = χ' - 1` for one copy `e` of `{u, v}`.
fn drops_when_removed(
    g: &Multigraph,
    u: usize,
    v: usize,
    chi: u32,
    opts: &ChromaticOptions,
) -> Result<bool> {
    let h = g.remove_edges(u, v, 1)?;
    match decide(&h, chi - 1, opts.timeout)? {
        Decision::Colorable(_) => Ok(true),
        Decision::NotColorable => Ok(false),
        Decision::TimedOut => Err(Error::Timeout),
    }
}

pub fn extract_critical(g: &Multigraph) -> Result<Multigraph> {
    extract_critical_with(g, &ChromaticOptions::default())
}

/// A critical subgraph with the same chromatic index.
///
/// Pairs are visited once in serialized order and copies are removed from
/// each while `χ'` is preserved; isolated vertices are dropped at the end.
/// One pass suffices: an edge whose removal lowers `χ'(G)` also lowers it in
/// every subgraph with the same chromatic index.
pub fn extract_critical_with(g: &Multigraph, opts: &ChromaticOptions) -> Result<Multigraph> {
    if g.edge_count() == 0 {
        return Err(Error::PreconditionFailed(
            "criticality needs at least one edge".into(),
        ));
    }
    let chi = chromatic_index_with(g, opts)?.chi;
    let mut current = g.clone();
    for p in g.pairs() {
        while current.multiplicity(p.u, p.v) > 0 {
            if drops_when_removed(&current, p.u, p.v, chi, opts)? {
                break;
            }
            current = current.remove_edges(p.u, p.v, 1)?;
        }
    }
    Ok(current.without_isolated())
}
