//! Canonical forms, isomorphism and induced-subgraph search for small
//! self-loop graphs, all by exhaustive permutation search.
//!
//! The code of a labeled graph is the bit string
//! `loop(0) … loop(n-1)` followed by the upper triangle of the adjacency
//! matrix in row-major order, `(0,1) (0,2) … (0,n-1) (1,2) … (n-2,n-1)`.
//! The canonical form is the lexicographically smallest code over all
//! relabelings. With `n ≤ 10` the code has at most 55 bits, so it is held in a
//! `u64` with the first bit most significant and lexicographic order is
//! numeric order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SelfLoopGraph, VertexSet};

pub const MAX_CANON_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub order: usize,
    pub code: u64,
}

impl CanonicalForm {
    pub fn bit_len(order: usize) -> usize {
        order + order * order.saturating_sub(1) / 2
    }

    /// Lowercase hex of the bit string, zero-padded on the right to a whole
    /// number of nibbles.
    pub fn to_hex(&self) -> String {
        let bits = Self::bit_len(self.order);
        let nibbles = bits.div_ceil(4).max(1);
        let pad = nibbles * 4 - bits;
        format!("{:0width$x}", (self.code as u128) << pad, width = nibbles)
    }

    /// The labeled graph whose code this is.
    pub fn to_graph(&self) -> SelfLoopGraph {
        let n = self.order;
        let bits = Self::bit_len(n);
        let bit = |k: usize| (self.code >> (bits - 1 - k)) & 1 == 1;
        let mut rows = vec![0u64; n];
        let mut loops = 0u64;
        for v in 0..n {
            if bit(v) {
                loops |= 1 << v;
            }
        }
        let mut k = n;
        for i in 0..n {
            for j in i + 1..n {
                if bit(k) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        SelfLoopGraph::from_masks(n, rows, loops)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn check_canon_order(g: &SelfLoopGraph) -> Result<()> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::OrderOutOfRange { order: g.order(), min: 1, max: MAX_CANON_ORDER });
    }
    Ok(())
}

/// Code of `g` relabeled so that vertex `pos[k]` sits at position `k`.
#[inline]
fn code_at(g: &SelfLoopGraph, pos: &[usize]) -> u64 {
    let n = pos.len();
    let mut code = 0u64;
    for &v in pos {
        code = code << 1 | g.has_loop(v) as u64;
    }
    for i in 0..n {
        let row = g.neighbor_mask(pos[i]);
        for &w in &pos[i + 1..] {
            code = code << 1 | (row >> w & 1);
        }
    }
    code
}

/// Calls `f` on every permutation of `items` (Heap's algorithm, in place).
pub(crate) fn for_each_permutation(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = items.len();
    f(items);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Minimum code over relabelings that list `blocks[0]` first (in any
/// order), then `blocks[1]`, and so on.
fn min_code_over_blocks(g: &SelfLoopGraph, blocks: &mut [Vec<usize>]) -> u64 {
    fn search(g: &SelfLoopGraph, blocks: &mut [Vec<usize>], pos: &mut Vec<usize>, best: &mut u64) {
        match blocks.split_first_mut() {
            None => *best = (*best).min(code_at(g, pos)),
            Some((first, rest)) => {
                let start = pos.len();
                for_each_permutation(first, &mut |p| {
                    pos.truncate(start);
                    pos.extend_from_slice(p);
                    search(g, rest, pos, best);
                });
            }
        }
    }
    let mut pos = Vec::with_capacity(g.order());
    let mut best = u64::MAX;
    search(g, blocks, &mut pos, &mut best);
    best
}

/// Minimum code over all permutations.
///
/// Loop bits lead the code, so every minimizing relabeling puts the
/// unlooped vertices first. Searching only those relabelings (unlooped
/// block permuted independently of the looped block) gives the same minimum
/// as the full `n!` search.
fn min_code(g: &SelfLoopGraph) -> u64 {
    let n = g.order();
    let free: Vec<usize> = (0..n).filter(|&v| !g.has_loop(v)).collect();
    let looped: Vec<usize> = (0..n).filter(|&v| g.has_loop(v)).collect();
    min_code_over_blocks(g, &mut [free, looped])
}

/// A cheaper isomorphism-class key used to deduplicate during generation.
///
/// Vertices are grouped by (loop, degree, sorted neighbour degrees), groups
/// are ordered by that invariant, and the minimum code is taken over
/// relabelings that respect the grouping. Isomorphic graphs get equal keys
/// and the key decodes (via [`CanonicalForm::to_graph`]) to a relabeling of
/// the graph, but it is not the same number as [`canonical_form`].
pub(crate) fn class_key(g: &SelfLoopGraph) -> u64 {
    let n = g.order();
    let invariant = |v: usize| {
        let mut nd: Vec<usize> = (0..n).filter(|&w| g.adjacent(v, w)).map(|w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.has_loop(v), g.degree(v), nd)
    };
    let mut keyed: Vec<_> = (0..n).map(|v| (invariant(v), v)).collect();
    keyed.sort();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, (inv, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *inv {
            blocks.last_mut().unwrap().push(*v);
        } else {
            blocks.push(vec![*v]);
        }
    }
    min_code_over_blocks(g, &mut blocks)
}

pub fn canonical_form(g: &SelfLoopGraph) -> Result<CanonicalForm> {
    check_canon_order(g)?;
    Ok(CanonicalForm { order: g.order(), code: min_code(g) })
}

/// Reference implementation over every one of the `n!` permutations, no
/// block restriction. Test-only cross-check for [`canonical_form`].
#[doc(hidden)]
pub fn canonical_form_unrestricted(g: &SelfLoopGraph) -> Result<CanonicalForm> {
    check_canon_order(g)?;
    let mut all: Vec<usize> = (0..g.order()).collect();
    let mut best = u64::MAX;
    for_each_permutation(&mut all, &mut |p| best = best.min(code_at(g, p)));
    Ok(CanonicalForm { order: g.order(), code: best })
}

/// Relabeling of `g` that realizes its canonical form.
pub fn canonical_graph(g: &SelfLoopGraph) -> Result<SelfLoopGraph> {
    Ok(canonical_form(g)?.to_graph())
}

pub fn are_isomorphic(g: &SelfLoopGraph, h: &SelfLoopGraph) -> Result<bool> {
    check_canon_order(g)?;
    check_canon_order(h)?;
    if g.order() != h.order() || g.sigma() != h.sigma() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Every loop- and edge-preserving permutation, as `perm[v]` = image of `v`.
pub fn automorphisms(g: &SelfLoopGraph) -> Result<Vec<Vec<usize>>> {
    check_canon_order(g)?;
    let n = g.order();
    let mut targets: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for_each_permutation(&mut targets, &mut |p| {
        let ok = (0..n).all(|v| {
            g.has_loop(v) == g.has_loop(p[v])
                && (v + 1..n).all(|w| g.adjacent(v, w) == g.adjacent(p[v], p[w]))
        });
        if ok {
            out.push(p.to_vec());
        }
    });
    out.sort();
    Ok(out)
}

pub fn automorphism_count(g: &SelfLoopGraph) -> Result<usize> {
    Ok(automorphisms(g)?.len())
}

/// Finds vertices `u` of `g` with `induced(g, u) ≅ h`, by backtracking over
/// injections that respect loops, adjacency and non-adjacency.
pub fn contains_induced(h: &SelfLoopGraph, g: &SelfLoopGraph) -> Option<VertexSet> {
    let k = h.order();
    if k > g.order() {
        return None;
    }
    let mut image = vec![usize::MAX; k];
    if extend(h, g, &mut image, 0, 0) {
        Some(image.into_iter().collect())
    } else {
        None
    }
}

fn extend(h: &SelfLoopGraph, g: &SelfLoopGraph, image: &mut [usize], depth: usize, used: u64) -> bool {
    if depth == h.order() {
        return true;
    }
    for cand in 0..g.order() {
        if used >> cand & 1 == 1 || g.has_loop(cand) != h.has_loop(depth) {
            continue;
        }
        let consistent = (0..depth).all(|prev| h.adjacent(prev, depth) == g.adjacent(image[prev], cand));
        if consistent {
            image[depth] = cand;
            if extend(h, g, image, depth + 1, used | 1 << cand) {
                return true;
            }
        }
    }
    false
}
