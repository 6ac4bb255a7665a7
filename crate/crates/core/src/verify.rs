//! Exhaustive checks of the rank statements, each producing a
//! [`VerificationReport`].
//!
//! Reports are deterministic apart from `elapsed_ms`: every list is built in
//! enumeration order or sorted by canonical form, and maps are `BTreeMap`s.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::enumerate::{self_loop_graph_classes, simple_graph_classes};
use crate::error::{Error, Result};
use crate::families::{
    build_family, build_named, is_full_loop_complete, is_looped_clique_join, match_all_families, FamilyId,
    FamilyInstance, NamedGraphId, WITNESS_CATALOG,
};
use crate::graph::{SelfLoopGraph, VertexSet};
use crate::io::GraphJson;
use crate::iso::{canonical_form, contains_induced, CanonicalForm};
use crate::rank::rank_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub checked: u64,
    pub violations: Vec<GraphJson>,
    pub witnesses: BTreeMap<String, Value>,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }
}

/// Collects a report while a check runs.
struct ReportBuilder {
    claim: String,
    range: String,
    started: Instant,
    checked: u64,
    violations: Vec<GraphJson>,
    notes: Vec<String>,
    witnesses: BTreeMap<String, Value>,
}

impl ReportBuilder {
    fn new(claim: &str, range: String) -> Self {
        Self {
            claim: claim.to_owned(),
            range,
            started: Instant::now(),
            checked: 0,
            violations: Vec::new(),
            notes: Vec::new(),
            witnesses: BTreeMap::new(),
        }
    }

    fn violation(&mut self, g: &SelfLoopGraph, why: String) {
        self.violations.push(GraphJson::from(g));
        self.notes.push(why);
    }

    fn witness(&mut self, key: &str, value: Value) {
        self.witnesses.insert(key.to_owned(), value);
    }

    fn finish(mut self) -> VerificationReport {
        if !self.notes.is_empty() {
            self.witnesses.insert("violation_notes".into(), json!(self.notes));
        }
        let status = if self.violations.is_empty() { Status::Verified } else { Status::Refuted };
        VerificationReport {
            claim: self.claim,
            range: self.range,
            checked: self.checked,
            violations: self.violations,
            witnesses: self.witnesses,
            status,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn loops_json(g: &SelfLoopGraph) -> Value {
    json!(g.loops().as_slice())
}

fn cycle_with_loops(n: usize, mask: u64) -> Result<SelfLoopGraph> {
    SelfLoopGraph::cycle(n)?.with_loop_mask(mask)
}

pub const CYCLE_MAX_ORDER: usize = 12;

/// Every nonempty loop set on every cycle of order `n_min..=n_max` gives rank ≥ 4.
pub fn verify_cycle_rank_bound(n_min: usize, n_max: usize) -> Result<VerificationReport> {
    if !(5 <= n_min && n_min <= n_max && n_max <= CYCLE_MAX_ORDER) {
        return Err(Error::InvalidParameter(format!(
            "cycle bound needs 5 <= n_min <= n_max <= {CYCLE_MAX_ORDER}, got {n_min}..={n_max}"
        )));
    }
    let mut rb = ReportBuilder::new("cycle-bound", format!("C_n, {n_min} <= n <= {n_max}, all nonempty S"));
    let mut by_order = Vec::new();
    for n in n_min..=n_max {
        let ranks: Vec<(u64, usize)> = (1u64..1 << n)
            .into_par_iter()
            .map(|m| Ok((m, rank_graph(&cycle_with_loops(n, m)?))))
            .collect::<Result<_>>()?;
        let mut histogram = BTreeMap::new();
        for &(m, r) in &ranks {
            *histogram.entry(r.to_string()).or_insert(0u64) += 1;
            if r < 4 {
                let g = cycle_with_loops(n, m)?;
                rb.violation(&g, format!("C_{n} with loops {} has rank {r}", g.loops()));
            }
        }
        rb.checked += ranks.len() as u64;
        let min_rank = ranks.iter().map(|&(_, r)| r).min().unwrap_or(0);
        by_order.push(json!({"order": n, "instances": ranks.len(), "min_rank": min_rank, "rank_histogram": histogram}));
    }
    rb.witness("by_order", json!(by_order));
    Ok(rb.finish())
}

/// Rank of the 4-cycle under each of the 16 loop sets.
pub fn verify_c4_table() -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("c4-table", "C_4, all 16 loop sets".into());
    let mut table = Vec::new();
    for m in 0u64..16 {
        let g = cycle_with_loops(4, m)?;
        let r = rank_graph(&g);
        let independent_pair = m == 0b0101 || m == 0b1010;
        let expected = match m.count_ones() {
            0 => None,
            1 => Some(3),
            2 if independent_pair => Some(3),
            _ => Some(4),
        };
        if let Some(e) = expected {
            if r != e {
                rb.violation(&g, format!("C_4 with loops {} has rank {r}, expected {e}", g.loops()));
            }
        }
        rb.checked += 1;
        table.push(json!({"loops": loops_json(&g), "rank": r, "expected": expected}));
    }
    rb.witness("table", json!(table));
    Ok(rb.finish())
}

/// Smallest catalog graph that appears as an induced subgraph of `g`.
pub fn find_catalog_witness(g: &SelfLoopGraph) -> Option<(NamedGraphId, VertexSet)> {
    WITNESS_CATALOG.into_iter().find_map(|id| contains_induced(&build_named(id), g).map(|u| (id, u)))
}

/// For every looped cycle of order `5..=n_max`, a rank ≥ 4 catalog graph is an
/// induced subgraph; the only allowed exceptions are the C_5 instances with
/// one run of consecutive loops, which are confirmed by computing the rank.
pub fn verify_witnesses(n_max: usize) -> Result<VerificationReport> {
    if !(5..=CYCLE_MAX_ORDER).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("witnesses needs 5 <= n_max <= {CYCLE_MAX_ORDER}, got {n_max}")));
    }
    let mut rb = ReportBuilder::new("witnesses", format!("C_n, 5 <= n <= {n_max}, all nonempty S"));

    let mut catalog_ranks = BTreeMap::new();
    for id in WITNESS_CATALOG {
        let g = build_named(id);
        let r = rank_graph(&g);
        if r < 4 {
            rb.violation(&g, format!("catalog graph {id} has rank {r} < 4"));
        }
        catalog_ranks.insert(id.name().to_owned(), r);
    }

    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut instances = Vec::new();
    let mut direct = Vec::new();
    for n in 5..=n_max {
        let found: Vec<(u64, Option<(NamedGraphId, VertexSet)>)> = (1u64..1 << n)
            .into_par_iter()
            .map(|m| Ok((m, find_catalog_witness(&cycle_with_loops(n, m)?))))
            .collect::<Result<_>>()?;
        for (m, hit) in found {
            let g = cycle_with_loops(n, m)?;
            rb.checked += 1;
            match hit {
                Some((id, u)) => {
                    *counts.entry(id.name().to_owned()).or_default() += 1;
                    instances.push(json!({"order": n, "loops": loops_json(&g), "witness": id.name(), "vertices": u.as_slice()}));
                }
                None => {
                    let r = rank_graph(&g);
                    let consecutive = g.cluster_decomposition()?.is_consecutive();
                    if n == 5 && consecutive && r >= 4 {
                        *counts.entry("direct".into()).or_default() += 1;
                        direct.push(json!({"order": n, "loops": loops_json(&g), "rank": r}));
                        instances.push(json!({"order": n, "loops": loops_json(&g), "witness": null, "rank": r}));
                    } else {
                        rb.violation(&g, format!("C_{n} with loops {}: no catalog witness (rank {r})", g.loops()));
                    }
                }
            }
        }
    }
    rb.witness("catalog_ranks", json!(catalog_ranks));
    rb.witness("counts", json!(counts));
    rb.witness("direct", json!(direct));
    rb.witness("instances", json!(instances));
    Ok(rb.finish())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank3Class {
    pub canonical: CanonicalForm,
    pub graph: GraphJson,
    pub sigma: usize,
    pub families: Vec<FamilyInstance>,
    pub triangle_free: bool,
    pub cyclic: bool,
    pub has_four_cycle: bool,
}

pub const CLASSIFY_MIN_ORDER: usize = 4;
pub const CLASSIFY_MAX_ORDER: usize = 8;
/// Orders above this need `long_run`.
pub const CLASSIFY_DEFAULT_MAX_ORDER: usize = 7;

/// Enumerates every connected self-loop graph of `order` (restricted by the
/// two predicates), keeps those of rank 3, and matches each against the six
/// rank-3 families.
///
/// Family membership is asserted only for the triangle-free cyclic stratum:
/// each survivor must have a loop and match a family (several matches are
/// allowed only among `w = 0` members, which coincide by construction), and
/// each family member of this order must itself be a survivor.
pub fn classify_rank3(
    order: usize,
    require_triangle_free: bool,
    require_cyclic: bool,
    long_run: bool,
) -> Result<(VerificationReport, Vec<Rank3Class>)> {
    if !(CLASSIFY_MIN_ORDER..=CLASSIFY_MAX_ORDER).contains(&order) {
        return Err(Error::OrderOutOfRange { order, min: CLASSIFY_MIN_ORDER, max: CLASSIFY_MAX_ORDER });
    }
    if order > CLASSIFY_DEFAULT_MAX_ORDER && !long_run {
        return Err(Error::InvalidParameter(format!("order {order} classification requires the long-run flag")));
    }
    let mut rb = ReportBuilder::new(
        "classify",
        format!("connected self-loop graphs of order {order}, triangle_free={require_triangle_free}, cyclic={require_cyclic}, rank 3"),
    );
    let classes = self_loop_graph_classes(order, require_triangle_free, require_cyclic)?;
    rb.checked = classes.len() as u64;

    let mut survivors: Vec<Rank3Class> = classes
        .par_iter()
        .filter(|g| rank_graph(g) == 3)
        .map(|g| {
            Ok(Rank3Class {
                canonical: canonical_form(g)?,
                graph: GraphJson::from(g),
                sigma: g.sigma(),
                families: match_all_families(g)?,
                triangle_free: g.is_triangle_free(),
                cyclic: g.is_cyclic(),
                has_four_cycle: g.contains_four_cycle(),
            })
        })
        .collect::<Result<_>>()?;
    survivors.sort_by_key(|s| s.canonical);

    let asserting = require_triangle_free && require_cyclic;
    let mut unmatched = 0u64;
    let mut zero_loop = 0u64;
    for s in &survivors {
        let g = SelfLoopGraph::try_from(&s.graph)?;
        if s.families.is_empty() {
            unmatched += 1;
        }
        if s.sigma == 0 {
            zero_loop += 1;
        }
        if !asserting {
            continue;
        }
        if s.sigma == 0 {
            rb.violation(&g, format!("loopless rank-3 survivor {}", s.canonical));
        } else if s.families.is_empty() {
            rb.violation(&g, format!("rank-3 survivor {} matches none of the six families", s.canonical));
        } else if s.families.len() > 1 && s.families.iter().any(|f| f.w > 0) {
            let names: Vec<String> = s.families.iter().map(|f| f.to_string()).collect();
            rb.violation(&g, format!("survivor {} matches several families: {}", s.canonical, names.join(", ")));
        }
    }

    let mut missing = Vec::new();
    if asserting {
        let present: BTreeSet<CanonicalForm> = survivors.iter().map(|s| s.canonical).collect();
        for id in FamilyId::RANK3 {
            let Some(w) = order.checked_sub(FamilyInstance::join(id, 0).order()) else { continue };
            let inst = FamilyInstance::join(id, w);
            let g = build_family(&inst)?;
            if !present.contains(&canonical_form(&g)?) {
                missing.push(inst.to_string());
                rb.violation(&g, format!("family member {inst} is not among the rank-3 survivors"));
            }
        }
    }

    let listing: Vec<Value> = survivors
        .iter()
        .map(|s| {
            json!({
                "code": s.canonical.to_hex(),
                "graph": s.graph,
                "families": s.families.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "triangle_free": s.triangle_free,
                "cyclic": s.cyclic,
                "has_four_cycle": s.has_four_cycle,
            })
        })
        .collect();
    rb.witness(
        "counts",
        json!({
            "classes_enumerated": classes.len(),
            "rank3": survivors.len(),
            "matched": survivors.len() as u64 - unmatched,
            "unmatched": unmatched,
            "zero_loop": zero_loop,
            "without_four_cycle": survivors.iter().filter(|s| !s.has_four_cycle).count(),
        }),
    );
    rb.witness("missing_family_members", json!(missing));
    rb.witness("survivors", json!(listing));
    Ok((rb.finish(), survivors))
}

pub const RANK12_MAX_ORDER: usize = 7;

/// For every connected self-loop graph with at least one loop, of order
/// `1..=n_max`: rank 1 exactly for `K̂_n`, rank 2 exactly for
/// `K̂_σ ∨ (n−σ)K_1` with `1 ≤ σ ≤ n−1`.
pub fn verify_rank12(n_max: usize) -> Result<VerificationReport> {
    if !(1..=RANK12_MAX_ORDER).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("rank12 needs 1 <= n_max <= {RANK12_MAX_ORDER}, got {n_max}")));
    }
    let mut rb = ReportBuilder::new("rank12", format!("connected self-loop graphs with sigma >= 1, 1 <= n <= {n_max}"));
    let mut by_order = Vec::new();
    for n in 1..=n_max {
        let connected_simple = simple_graph_classes(n, false)?.iter().filter(|g| g.is_connected()).count();
        let (classes, loopless): (Vec<_>, Vec<_>) =
            self_loop_graph_classes(n, false, false)?.into_iter().partition(|g| g.sigma() > 0);
        let ranks: Vec<usize> = classes.par_iter().map(rank_graph).collect();
        // complete bipartite graphs, reported only
        let loopless_rank2 = loopless.iter().filter(|g| rank_graph(g) == 2).count();
        let (mut rank1, mut rank2) = (0u64, 0u64);
        for (g, &r) in classes.iter().zip(&ranks) {
            let (is1, is2) = (is_full_loop_complete(g), is_looped_clique_join(g));
            rank1 += (r == 1) as u64;
            rank2 += (r == 2) as u64;
            if (r == 1) != is1 {
                rb.violation(g, format!("rank {r} but full-loop-complete={is1}"));
            } else if (r == 2) != is2 {
                rb.violation(g, format!("rank {r} but looped-clique-join={is2}"));
            }
        }
        rb.checked += classes.len() as u64;
        by_order.push(json!({
            "order": n,
            "connected_simple_classes": connected_simple,
            "self_loop_classes": classes.len(),
            "rank1_classes": rank1,
            "rank2_classes": rank2,
            "loopless_rank2_classes": loopless_rank2,
        }));
    }
    rb.witness("by_order", json!(by_order));
    Ok(rb.finish())
}

/// Adding any missing edge to a rank-3 family member (w = 1..=3) creates a
/// triangle or raises the rank above 3.
pub fn verify_maximality() -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new("maximality", "H1, H2, H2p, H3, H4, H5 with 1 <= w <= 3, every missing edge".into());
    let mut outcomes = Vec::new();
    for id in FamilyId::RANK3 {
        for w in 1..=3 {
            let inst = FamilyInstance::join(id, w);
            let g = build_family(&inst)?;
            let (mut triangle, mut raised) = (0u64, 0u64);
            for u in 0..g.order() {
                for v in u + 1..g.order() {
                    if g.adjacent(u, v) {
                        continue;
                    }
                    let h = g.with_edge(u, v)?;
                    rb.checked += 1;
                    let r = rank_graph(&h);
                    if !h.is_triangle_free() {
                        triangle += 1;
                    } else if r > 3 {
                        raised += 1;
                    } else {
                        rb.violation(&h, format!("{inst} plus edge {{{u},{v}}} is triangle-free with rank {r}"));
                    }
                }
            }
            outcomes.push(json!({"family": inst.to_string(), "triangle": triangle, "rank_raised": raised}));
        }
    }
    rb.witness("outcomes", json!(outcomes));
    Ok(rb.finish())
}
