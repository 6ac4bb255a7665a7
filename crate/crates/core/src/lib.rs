//! Exact adjacency-matrix rank of self-loop graphs, the families of
//! triangle-free rank-3 graphs built from the looped 4-cycle, and exhaustive
//! checks of the rank statements at small orders.

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod iso;
pub mod rank;
pub mod verify;

pub use error::{Error, Result};
pub use families::{build_family, build_named, match_family, FamilyId, FamilyInstance, NamedGraphId};
pub use graph::{ClusterDecomposition, SelfLoopGraph, VertexSet};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm};
pub use rank::{minor_rank_oracle, rank, rank_graph, IntMatrix};
pub use verify::{Status, VerificationReport};
