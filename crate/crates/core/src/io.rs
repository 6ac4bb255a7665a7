//! Interchange formats: JSON graphs and Graphviz DOT.
//!
//! JSON: `{"order": n, "edges": [[i,j],...], "loops": [i,...]}`, 0-based.
//! Output always has `i < j` in every edge and both lists sorted ascending.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
}

impl From<&SelfLoopGraph> for GraphJson {
    fn from(g: &SelfLoopGraph) -> Self {
        Self {
            order: g.order(),
            edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            loops: g.loops().iter().collect(),
        }
    }
}

impl TryFrom<&GraphJson> for SelfLoopGraph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<Self> {
        if j.order == 0 || j.order > crate::graph::MAX_ORDER {
            return Err(Error::Format(format!(
                "field `order`: {} is outside 1..={}",
                j.order,
                crate::graph::MAX_ORDER
            )));
        }
        for (k, &[a, b]) in j.edges.iter().enumerate() {
            if a >= j.order || b >= j.order {
                return Err(Error::Format(format!("field `edges[{k}]`: [{a},{b}] has a vertex >= order {}", j.order)));
            }
            if a == b {
                return Err(Error::Format(format!("field `edges[{k}]`: [{a},{a}] is a loop; list it under `loops`")));
            }
        }
        if let Some((k, &v)) = j.loops.iter().enumerate().find(|&(_, &v)| v >= j.order) {
            return Err(Error::Format(format!("field `loops[{k}]`: vertex {v} >= order {}", j.order)));
        }
        SelfLoopGraph::from_edges(j.order, j.edges.iter().map(|&[a, b]| (a, b)), j.loops.iter().copied())
            .map_err(|e| Error::Format(format!("field `edges`: {e}")))
    }
}

pub fn to_json(g: &SelfLoopGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}

pub fn from_json(s: &str) -> Result<SelfLoopGraph> {
    let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    SelfLoopGraph::try_from(&j)
}

/// Graphviz export. Loops are written as `i -- i`; `name`, when given,
/// becomes the graph identifier.
pub fn to_dot(g: &SelfLoopGraph, name: Option<&str>) -> String {
    let mut out = String::new();
    match name {
        Some(n) => writeln!(out, "graph \"{}\" {{", n.replace('"', "\\\"")).unwrap(),
        None => out.push_str("graph {\n"),
    }
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for v in g.loops().iter() {
        writeln!(out, "  {v} -- {v};").unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  {i} -- {j};").unwrap();
    }
    out.push_str("}\n");
    out
}
