//! Named graphs and parameterized families.
//!
//! All join families grow from the 4-cycle `0-1-2-3-0` with a loop at 0.
//! The loopless independent pair is `{1, 3}` and the other side is `{0, 2}`.
//! A looped pendant vertex, when present, is vertex 4; the `w` added
//! vertices come last.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SelfLoopGraph, VertexSet};
use crate::iso::{are_isomorphic, canonical_form};
use crate::rank::rank_graph;

const INDEPENDENT_SIDE: [usize; 2] = [1, 3];
const LOOPED_SIDE: [usize; 2] = [0, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    H1,
    H2,
    H2P,
    H3,
    H4,
    H5,
    H3P,
    H4P,
    H5P,
    Rank1,
    Rank2,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::H1,
        FamilyId::H2,
        FamilyId::H2P,
        FamilyId::H3,
        FamilyId::H4,
        FamilyId::H5,
        FamilyId::H3P,
        FamilyId::H4P,
        FamilyId::H5P,
        FamilyId::Rank1,
        FamilyId::Rank2,
    ];

    /// The six triangle-free rank-3 families.
    pub const RANK3: [FamilyId; 6] =
        [FamilyId::H1, FamilyId::H2, FamilyId::H2P, FamilyId::H3, FamilyId::H4, FamilyId::H5];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::H1 => "H1",
            FamilyId::H2 => "H2",
            FamilyId::H2P => "H2p",
            FamilyId::H3 => "H3",
            FamilyId::H4 => "H4",
            FamilyId::H5 => "H5",
            FamilyId::H3P => "H3p",
            FamilyId::H4P => "H4p",
            FamilyId::H5P => "H5p",
            FamilyId::Rank1 => "rank1",
            FamilyId::Rank2 => "rank2",
        }
    }

    /// Order of the graph before any `W` vertices are added.
    fn base_order(self) -> usize {
        match self {
            FamilyId::H1 | FamilyId::H2 | FamilyId::H2P => 4,
            FamilyId::H3 | FamilyId::H4 | FamilyId::H5 | FamilyId::H3P | FamilyId::H4P | FamilyId::H5P => 5,
            FamilyId::Rank1 | FamilyId::Rank2 => 0,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| {
            let names: Vec<&str> = FamilyId::ALL.iter().map(|id| id.name()).collect();
            Error::InvalidParameter(format!("unknown family '{s}'; valid names: {}", names.join(" ")))
        })
    }
}

/// One member of a family. Join families use `w`; `rank1` uses `n`;
/// `rank2` uses `n` and `sigma`. Unused fields are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub id: FamilyId,
    pub w: usize,
    pub n: usize,
    pub sigma: usize,
}

impl FamilyInstance {
    pub fn join(id: FamilyId, w: usize) -> Self {
        Self { id, w, n: 0, sigma: 0 }
    }

    pub fn rank1(n: usize) -> Self {
        Self { id: FamilyId::Rank1, w: 0, n, sigma: n }
    }

    pub fn rank2(n: usize, sigma: usize) -> Self {
        Self { id: FamilyId::Rank2, w: 0, n, sigma }
    }

    pub fn order(&self) -> usize {
        match self.id {
            FamilyId::Rank1 | FamilyId::Rank2 => self.n,
            id => id.base_order() + self.w,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self.id {
            FamilyId::Rank1 if self.n < 1 => bad("rank1 needs n >= 1".into()),
            FamilyId::Rank2 if self.n < 2 || self.sigma < 1 || self.sigma >= self.n => {
                bad(format!("rank2 needs 1 <= sigma <= n-1, got n={} sigma={}", self.n, self.sigma))
            }
            _ if self.order() > crate::graph::MAX_ORDER => {
                bad(format!("order {} exceeds {}", self.order(), crate::graph::MAX_ORDER))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id {
            FamilyId::Rank1 => write!(f, "rank1(n={})", self.n),
            FamilyId::Rank2 => write!(f, "rank2(n={},sigma={})", self.n, self.sigma),
            id => write!(f, "{id}(w={})", self.w),
        }
    }
}

fn c4_core(loops: &[usize]) -> SelfLoopGraph {
    SelfLoopGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)], loops.iter().copied()).expect("fixed core")
}

/// C4 with a loop at 0 plus a looped pendant vertex 4 hanging off `attach`.
fn pendant_graph(attach: usize) -> SelfLoopGraph {
    SelfLoopGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (attach, 4)], [0, 4]).expect("fixed pendant")
}

/// `F_S`: the pendant sits on the looped core vertex.
pub fn fs() -> SelfLoopGraph {
    pendant_graph(0)
}

/// `F'_S`: the pendant sits on the core vertex opposite the loop.
pub fn fs_prime() -> SelfLoopGraph {
    pendant_graph(2)
}

/// Adds `w` independent loopless vertices, each joined to every vertex of `side`.
fn join_independent(g: &SelfLoopGraph, side: &[usize], w: usize) -> Result<SelfLoopGraph> {
    if w == 0 {
        return Ok(g.clone());
    }
    g.join_over(&side.iter().copied().collect(), &SelfLoopGraph::empty(w)?)
}

pub fn build_family(inst: &FamilyInstance) -> Result<SelfLoopGraph> {
    inst.validate()?;
    let w = inst.w;
    let extra_loop_at_2 = |g: SelfLoopGraph| g.with_loops(&VertexSet::from([2]));
    match inst.id {
        FamilyId::H1 => join_independent(&c4_core(&[0]), &INDEPENDENT_SIDE, w),
        FamilyId::H2 => join_independent(&c4_core(&[0]), &LOOPED_SIDE, w),
        FamilyId::H2P => join_independent(&c4_core(&[0, 2]), &LOOPED_SIDE, w),
        FamilyId::H3 => join_independent(&fs(), &INDEPENDENT_SIDE, w),
        FamilyId::H4 => join_independent(&fs(), &LOOPED_SIDE, w),
        FamilyId::H5 => join_independent(&fs_prime(), &LOOPED_SIDE, w),
        FamilyId::H3P => extra_loop_at_2(join_independent(&fs(), &INDEPENDENT_SIDE, w)?),
        FamilyId::H4P => extra_loop_at_2(join_independent(&fs(), &LOOPED_SIDE, w)?),
        FamilyId::H5P => extra_loop_at_2(join_independent(&fs_prime(), &LOOPED_SIDE, w)?),
        FamilyId::Rank1 => SelfLoopGraph::complete(inst.n)?.with_loops(&VertexSet::range(inst.n)),
        FamilyId::Rank2 => {
            let s = inst.sigma;
            let core = SelfLoopGraph::complete(s)?.with_loops(&VertexSet::range(s))?;
            core.join_over(&VertexSet::range(s), &SelfLoopGraph::empty(inst.n - s)?)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum NamedGraphId {
    P4_1,
    P4_2,
    P4_13,
    P4_124,
    P4_HAT,
    P5_14,
    P5_145,
    FS,
    FSP,
    FIG23,
    FIG24,
}

impl NamedGraphId {
    pub const ALL: [NamedGraphId; 11] = [
        NamedGraphId::P4_1,
        NamedGraphId::P4_2,
        NamedGraphId::P4_13,
        NamedGraphId::P4_124,
        NamedGraphId::P4_HAT,
        NamedGraphId::P5_14,
        NamedGraphId::P5_145,
        NamedGraphId::FS,
        NamedGraphId::FSP,
        NamedGraphId::FIG23,
        NamedGraphId::FIG24,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraphId::P4_1 => "P4_1",
            NamedGraphId::P4_2 => "P4_2",
            NamedGraphId::P4_13 => "P4_13",
            NamedGraphId::P4_124 => "P4_124",
            NamedGraphId::P4_HAT => "P4_HAT",
            NamedGraphId::P5_14 => "P5_14",
            NamedGraphId::P5_145 => "P5_145",
            NamedGraphId::FS => "FS",
            NamedGraphId::FSP => "FSP",
            NamedGraphId::FIG23 => "FIG23",
            NamedGraphId::FIG24 => "FIG24",
        }
    }
}

impl fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraphId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraphId::ALL.into_iter().find(|id| id.name().eq_ignore_ascii_case(s)).ok_or_else(|| {
            let names: Vec<&str> = NamedGraphId::ALL.iter().map(|id| id.name()).collect();
            Error::InvalidParameter(format!("unknown named graph '{s}'; valid names: {}", names.join(" ")))
        })
    }
}

/// Path of order `n` with loops at the given 1-based positions.
fn looped_path(n: usize, one_based: &[usize]) -> SelfLoopGraph {
    let loops: VertexSet = one_based.iter().map(|p| p - 1).collect();
    SelfLoopGraph::path(n).and_then(|p| p.with_loops(&loops)).expect("fixed path")
}

pub fn build_named(id: NamedGraphId) -> SelfLoopGraph {
    let with_joined_loop = |fam: FamilyId| {
        let g = build_family(&FamilyInstance::join(fam, 1)).expect("fixed family");
        g.with_loops(&VertexSet::from([4])).expect("vertex 4 exists")
    };
    match id {
        NamedGraphId::P4_1 => looped_path(4, &[1]),
        NamedGraphId::P4_2 => looped_path(4, &[2]),
        NamedGraphId::P4_13 => looped_path(4, &[1, 3]),
        NamedGraphId::P4_124 => looped_path(4, &[1, 2, 4]),
        NamedGraphId::P4_HAT => looped_path(4, &[1, 2, 3, 4]),
        NamedGraphId::P5_14 => looped_path(5, &[1, 4]),
        NamedGraphId::P5_145 => looped_path(5, &[1, 4, 5]),
        NamedGraphId::FS => fs(),
        NamedGraphId::FSP => fs_prime(),
        NamedGraphId::FIG23 => with_joined_loop(FamilyId::H1),
        NamedGraphId::FIG24 => with_joined_loop(FamilyId::H2),
    }
}

/// Rank ≥ 4 induced subgraphs used to rule out rank 3 on cycles of order ≥ 5,
/// smallest first.
pub const WITNESS_CATALOG: [NamedGraphId; 6] = [
    NamedGraphId::P4_1,
    NamedGraphId::P4_HAT,
    NamedGraphId::P4_124,
    NamedGraphId::P4_13,
    NamedGraphId::P5_145,
    NamedGraphId::P5_14,
];

/// Members of the six rank-3 families with the same order as `order`.
fn rank3_candidates(order: usize) -> impl Iterator<Item = FamilyInstance> {
    FamilyId::RANK3
        .into_iter()
        .filter(move |id| order >= id.base_order())
        .map(move |id| FamilyInstance::join(id, order - id.base_order()))
}

/// Every rank-3 family member isomorphic to `g`, in family order.
pub fn match_all_families(g: &SelfLoopGraph) -> Result<Vec<FamilyInstance>> {
    let target = canonical_form(g)?;
    let mut out = Vec::new();
    for inst in rank3_candidates(g.order()) {
        let candidate = build_family(&inst)?;
        if candidate.sigma() == g.sigma() && canonical_form(&candidate)? == target {
            out.push(inst);
        }
    }
    Ok(out)
}

/// First of H1, H2, H2p, H3, H4, H5 (at the `w` fixed by the order) that is
/// isomorphic to `g`.
pub fn match_family(g: &SelfLoopGraph) -> Result<Option<FamilyInstance>> {
    Ok(match_all_families(g)?.into_iter().next())
}

/// `g ≅ K̂_n`: complete with every vertex looped.
pub fn is_full_loop_complete(g: &SelfLoopGraph) -> bool {
    let n = g.order();
    g.sigma() == n && g.edge_count() == n * (n - 1) / 2
}

/// `g ≅ K̂_σ ∨ (n−σ)K_1` with `1 ≤ σ ≤ n−1`: looped vertices form a clique,
/// unlooped vertices are pairwise non-adjacent and adjacent to every looped vertex.
pub fn is_looped_clique_join(g: &SelfLoopGraph) -> bool {
    let n = g.order();
    let looped = g.loop_mask();
    let s = g.sigma();
    if s == 0 || s == n {
        return false;
    }
    (0..n).all(|v| {
        let expected = if g.has_loop(v) { looped & !(1 << v) | !looped } else { looped };
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        g.neighbor_mask(v) == expected & full
    })
}

/// Checks that pin down which pendant placement is `F_S` and which is `F'_S`.
///
/// Both must have rank 3 and be non-isomorphic; joining one loopless vertex
/// must keep rank 3 exactly for the joins used by H3, H4 and H5, and the
/// remaining side join (`F'_S` over `{1,3}`) must reach rank ≥ 4.
pub fn self_check() -> std::result::Result<(), String> {
    let (f, fp) = (fs(), fs_prime());
    let r = |g: &SelfLoopGraph| rank_graph(g);
    if r(&f) != 3 || r(&fp) != 3 {
        return Err(format!("pendant graphs must have rank 3, got {} and {}", r(&f), r(&fp)));
    }
    if are_isomorphic(&f, &fp).map_err(|e| e.to_string())? {
        return Err("F_S and F'_S must not be isomorphic".into());
    }
    let joined = |g: &SelfLoopGraph, side: &[usize]| join_independent(g, side, 1).map(|h| r(&h));
    let table = [
        ("F_S over {1,3}", joined(&f, &INDEPENDENT_SIDE), true),
        ("F_S over {0,2}", joined(&f, &LOOPED_SIDE), true),
        ("F'_S over {0,2}", joined(&fp, &LOOPED_SIDE), true),
        ("F'_S over {1,3}", joined(&fp, &INDEPENDENT_SIDE), false),
    ];
    for (what, rank, want_three) in table {
        let rank = rank.map_err(|e| e.to_string())?;
        if (rank == 3) != want_three || rank < 3 {
            return Err(format!("{what}: unexpected rank {rank}"));
        }
    }
    Ok(())
}
