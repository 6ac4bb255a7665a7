//! Self-loop graphs: a simple undirected graph plus a set of looped vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps the order
//! at 64. Every check in this crate runs far below that.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::rank::IntMatrix;

pub const MAX_ORDER: usize = 64;

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }

    pub fn range(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Bitmask form. Only meaningful when every member is below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1u64 << v)
    }

    pub fn check_within(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= order => Err(Error::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SelfLoopGraph {
    order: usize,
    rows: Vec<u64>,
    loops: u64,
}

impl fmt::Debug for SelfLoopGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SelfLoopGraph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .field("loops", &self.loops().as_slice())
            .finish()
    }
}

fn check_order(order: usize, min: usize) -> Result<()> {
    if order < min || order > MAX_ORDER {
        return Err(Error::OrderOutOfRange { order, min, max: MAX_ORDER });
    }
    Ok(())
}

impl SelfLoopGraph {
    /// `order` isolated, loopless vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order, 1)?;
        Ok(Self { order, rows: vec![0; order], loops: 0 })
    }

    /// Builds a graph from an edge list and a loop list.
    ///
    /// Rejects `{i,i}` edges, out-of-range indices and repeated edges
    /// (in either orientation). Repeated loop entries are collapsed.
    pub fn from_edges<E, L>(order: usize, edges: E, loops: L) -> Result<Self>
    where
        E: IntoIterator<Item = (usize, usize)>,
        L: IntoIterator<Item = usize>,
    {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if g.adjacent(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        for v in loops {
            g.check_vertex(v)?;
            g.loops |= 1 << v;
        }
        Ok(g)
    }

    /// Internal constructor from raw masks; callers guarantee the invariants.
    pub(crate) fn from_masks(order: usize, rows: Vec<u64>, loops: u64) -> Self {
        debug_assert_eq!(rows.len(), order);
        debug_assert!(rows.iter().enumerate().all(|(i, r)| r >> i & 1 == 0));
        Self { order, rows, loops }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), [])
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("path needs n >= 1".into()));
        }
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)), [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
        }
        let mut g = Self::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                g.set_edge(i, j);
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of loops (σ).
    pub fn sigma(&self) -> usize {
        self.loops.count_ones() as usize
    }

    pub fn loops(&self) -> VertexSet {
        VertexSet::from_mask(self.loops)
    }

    pub fn loop_mask(&self) -> u64 {
        self.loops
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops >> v & 1 == 1
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` in the underlying simple graph, as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.order {
            let mut higher = self.rows[i] >> i >> 1;
            while higher != 0 {
                let j = i + 1 + higher.trailing_zeros() as usize;
                out.push((i, j));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && u != v && self.adjacent(u, v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
        }
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub(crate) fn set_loop(&mut self, v: usize) {
        self.loops |= 1 << v;
    }

    /// Adds loops at every vertex of `s`; already-looped vertices are left as they are.
    pub fn with_loops(&self, s: &VertexSet) -> Result<Self> {
        s.check_within(self.order)?;
        let mut g = self.clone();
        g.loops |= s.mask();
        Ok(g)
    }

    /// Replaces the loop set.
    pub fn with_loop_mask(&self, loops: u64) -> Result<Self> {
        if self.order < 64 && loops >> self.order != 0 {
            let v = 63 - loops.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
        }
        Ok(Self { loops, ..self.clone() })
    }

    /// Copy with the single edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.adjacent(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// The underlying simple graph (all loops removed).
    pub fn underlying(&self) -> Self {
        Self { loops: 0, ..self.clone() }
    }

    /// A(G_S): the 0/1 adjacency matrix with a 1 on the diagonal at each loop.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.order;
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    m[(i, i)] = self.has_loop(i) as i64;
                } else if self.adjacent(i, j) {
                    m[(i, j)] = 1;
                }
            }
        }
        m
    }

    /// `g1` and `g2` side by side (g2 relabeled by `order(g1)`), with every
    /// vertex of `a` joined to every vertex of `g2`.
    pub fn join_over(&self, a: &VertexSet, other: &SelfLoopGraph) -> Result<Self> {
        a.check_within(self.order)?;
        let n1 = self.order;
        let n = n1 + other.order;
        check_order(n, 1)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n1));
        let mut g = Self { order: n, rows, loops: self.loops | other.loops << n1 };
        for u in a.iter() {
            for w in n1..n {
                g.set_edge(u, w);
            }
        }
        Ok(g)
    }

    /// Subgraph induced by `u`, with vertex `u[k]` relabeled to `k` (ascending order).
    pub fn induced(&self, u: &VertexSet) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        u.check_within(self.order)?;
        let idx = u.as_slice();
        let mut g = Self::empty(idx.len())?;
        for (a, &x) in idx.iter().enumerate() {
            if self.has_loop(x) {
                g.set_loop(a);
            }
            for (b, &y) in idx.iter().enumerate().skip(a + 1) {
                if self.adjacent(x, y) {
                    g.set_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length must equal order");
        let mut rows = vec![0u64; self.order];
        let mut loops = 0u64;
        for v in 0..self.order {
            let pv = perm[v];
            let mut nb = self.rows[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                rows[pv] |= 1 << perm[w];
                nb &= nb - 1;
            }
            if self.has_loop(v) {
                loops |= 1 << pv;
            }
        }
        Self { order: self.order, rows, loops }
    }

    fn full_mask(&self) -> u64 {
        if self.order == 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        }
    }

    pub fn is_connected(&self) -> bool {
        let full = self.full_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.rows[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & full == full
    }

    /// No three mutually adjacent vertices. Loops never count.
    pub fn is_triangle_free(&self) -> bool {
        self.edges().into_iter().all(|(i, j)| self.rows[i] & self.rows[j] == 0)
    }

    /// The underlying simple graph has a cycle, i.e. it is not a forest.
    pub fn contains_cycle(&self) -> bool {
        let components = self.component_count();
        self.edge_count() + components > self.order
    }

    /// Connected, with at least one cycle in the underlying simple graph.
    pub fn is_cyclic(&self) -> bool {
        self.is_connected() && self.contains_cycle()
    }

    pub fn component_count(&self) -> usize {
        let mut unseen = self.full_mask();
        let mut count = 0;
        while unseen != 0 {
            count += 1;
            let start = unseen & unseen.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    next |= self.rows[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = next & !comp;
                comp |= next;
            }
            unseen &= !comp;
        }
        count
    }

    /// Whether the underlying simple graph has a 4-cycle as a (not necessarily induced) subgraph.
    pub fn contains_four_cycle(&self) -> bool {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if (self.rows[a] & self.rows[b]).count_ones() >= 2 {
                    return true;
                }
            }
        }
        false
    }

    /// Shortest-path distances from `source`; `None` for unreachable vertices.
    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            let mut nb = self.rows[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
                nb &= nb - 1;
            }
        }
        dist
    }

    pub fn dist(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.bfs(u)[v].ok_or(Error::Disconnected { from: u, to: v })
    }

    /// Minimum distance over all pairs drawn from `u` × `v`.
    pub fn set_dist(&self, u: &VertexSet, v: &VertexSet) -> Result<usize> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        u.check_within(self.order)?;
        v.check_within(self.order)?;
        let mut best: Option<usize> = None;
        for a in u.iter() {
            let d = self.bfs(a);
            for b in v.iter() {
                if let Some(x) = d[b] {
                    best = Some(best.map_or(x, |y| y.min(x)));
                }
            }
        }
        best.ok_or(Error::Disconnected { from: u.as_slice()[0], to: v.as_slice()[0] })
    }

    /// Whether this is exactly the cycle `0-1-...-(n-1)-0`, ignoring loops.
    pub fn is_labeled_cycle(&self) -> bool {
        self.order >= 3
            && self.edge_count() == self.order
            && (0..self.order).all(|i| self.adjacent(i, (i + 1) % self.order))
    }

    /// Splits the loop set of a labeled cycle into maximal cyclic runs.
    pub fn cluster_decomposition(&self) -> Result<ClusterDecomposition> {
        if !self.is_labeled_cycle() {
            return Err(Error::NotACycle);
        }
        if self.loops == 0 {
            return Err(Error::NoLoops);
        }
        let n = self.order;
        if self.sigma() == n {
            return Ok(ClusterDecomposition { order: n, clusters: vec![Cluster { start: 0, len: n }], gaps: vec![] });
        }
        let mut clusters = Vec::new();
        for start in 0..n {
            let prev = (start + n - 1) % n;
            if self.has_loop(start) && !self.has_loop(prev) {
                let len = (0..n).take_while(|k| self.has_loop((start + k) % n)).count();
                clusters.push(Cluster { start, len });
            }
        }
        let k = clusters.len();
        let gaps = (0..k)
            .map(|i| {
                let a = clusters[i];
                let b = clusters[(i + 1) % k];
                let last = (a.start + a.len - 1) % n;
                (b.start + n - last) % n
            })
            .map(|g| if g == 0 { n } else { g })
            .collect();
        Ok(ClusterDecomposition { order: n, clusters, gaps })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub start: usize,
    pub len: usize,
}

/// Maximal runs of consecutive looped vertices on a cycle.
///
/// `gaps[i]` is the cyclic distance from the last vertex of cluster `i` to the
/// first vertex of cluster `i + 1` (wrapping), so separate clusters always
/// have gap at least 2. A fully looped cycle is one cluster with no gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterDecomposition {
    pub order: usize,
    pub clusters: Vec<Cluster>,
    pub gaps: Vec<usize>,
}

impl ClusterDecomposition {
    pub fn sigma(&self) -> usize {
        self.clusters.iter().map(|c| c.len).sum()
    }

    /// Number of clusters of exactly `len` loops (the a_i counts).
    pub fn count_of_length(&self, len: usize) -> usize {
        self.clusters.iter().filter(|c| c.len == len).count()
    }

    /// All loops form one run.
    pub fn is_consecutive(&self) -> bool {
        self.clusters.len() == 1
    }
}
