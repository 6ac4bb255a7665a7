//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Simple graphs of order `n + 1` are produced from one representative of
//! every class of order `n` by adding a vertex with each possible
//! neighbourhood, then deduplicated by class key. Every graph arises this
//! way from the class of its first `n` vertices. Triangle-freeness is
//! inherited by induced subgraphs, so it can prune at every level.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;
use crate::iso::{automorphisms, class_key, CanonicalForm};

pub const MAX_ENUM_ORDER: usize = 9;

/// One representative per isomorphism class of simple graphs of `order`
/// vertices (connected or not), optionally restricted to triangle-free graphs.
/// Output is sorted by class key and therefore deterministic.
pub fn simple_graph_classes(order: usize, triangle_free: bool) -> Result<Vec<SelfLoopGraph>> {
    if order == 0 || order > MAX_ENUM_ORDER {
        return Err(Error::OrderOutOfRange { order, min: 1, max: MAX_ENUM_ORDER });
    }
    let mut level = vec![SelfLoopGraph::empty(1)?];
    for k in 1..order {
        level = extend_by_one_vertex(&level, k, triangle_free);
    }
    Ok(level)
}

fn extend_by_one_vertex(reps: &[SelfLoopGraph], k: usize, triangle_free: bool) -> Vec<SelfLoopGraph> {
    let mut keys: Vec<u64> = reps
        .par_iter()
        .flat_map_iter(|g| {
            (0u64..1 << k).filter_map(move |nb| {
                if triangle_free && !is_independent(g, nb) {
                    return None;
                }
                Some(class_key(&add_vertex(g, nb)))
            })
        })
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    keys.into_iter().map(|code| CanonicalForm { order: k + 1, code }.to_graph()).collect()
}

fn is_independent(g: &SelfLoopGraph, set: u64) -> bool {
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        if g.neighbor_mask(v) & set != 0 {
            return false;
        }
        s &= s - 1;
    }
    true
}

/// Appends vertex `order(g)` adjacent to the vertices in `nb`.
fn add_vertex(g: &SelfLoopGraph, nb: u64) -> SelfLoopGraph {
    let k = g.order();
    let mut rows: Vec<u64> = (0..k).map(|v| g.neighbor_mask(v) | (nb >> v & 1) << k).collect();
    rows.push(nb);
    SelfLoopGraph::from_masks(k + 1, rows, g.loop_mask())
}

/// Loop sets of `g` up to automorphisms of `g`: each returned mask is the
/// numerically smallest in its orbit. Together with a class representative
/// `g`, these give one labeled graph per isomorphism class of self-loop
/// graphs whose underlying simple graph is `g`.
pub fn loop_orbit_representatives(g: &SelfLoopGraph) -> Result<Vec<u64>> {
    let auts = automorphisms(&g.underlying())?;
    let n = g.order();
    let image = |mask: u64, p: &[usize]| (0..n).filter(|&v| mask >> v & 1 == 1).fold(0u64, |m, v| m | 1 << p[v]);
    Ok((0u64..1 << n).filter(|&m| auts.iter().all(|p| image(m, p) >= m)).collect())
}

/// Every connected self-loop graph of the given order up to isomorphism,
/// optionally triangle-free and/or cyclic, as labeled representatives.
pub fn self_loop_graph_classes(order: usize, triangle_free: bool, cyclic: bool) -> Result<Vec<SelfLoopGraph>> {
    let simple: Vec<SelfLoopGraph> = simple_graph_classes(order, triangle_free)?
        .into_iter()
        .filter(|g| g.is_connected() && (!cyclic || g.contains_cycle()))
        .collect();
    let per_graph: Vec<Vec<SelfLoopGraph>> = simple
        .par_iter()
        .map(|g| {
            let masks = loop_orbit_representatives(g)?;
            masks.into_iter().map(|m| g.with_loop_mask(m)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}
