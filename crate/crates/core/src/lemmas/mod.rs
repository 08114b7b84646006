//! Degree and adjacency predicates satisfied by every Δ-critical graph.
//!
//! A violated predicate comes with a witness and certifies that the graph
//! is not Δ-critical. [`run_sieve`] evaluates all of them and, optionally,
//! the colored-structure checks over enumerated colorings.

mod paths;
mod predicates;

use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::structure::{verify_all_colorings, QuantifiedReport, QuantifiedVerdict};

pub use predicates::{
    check_three_vertex_second_neighborhood, check_three_vertex_strong_neighbors, check_four_vertex,
    check_five_vertex, check_common_neighbors, check_three_vertex_paths_seven, check_delta_plus_two_paths,
    check_delta_plus_three_edges, check_two_vertex_neighbors, check_delta_plus_two_long_paths, check_three_vertex_long_paths,
    check_abc_sets, check_val, n_delta_2,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Vizing's adjacency lemma.
    Val,
    ThreeVertexStrongNeighbors,
    ThreeVertexSecondNeighborhood,
    DeltaPlusTwoPath,
    FourVertex,
    CommonNeighbors,
    TwoVertexNeighbors,
    DeltaPlusTwoLongPath,
    ThreeVertexLongPath,
    ThreeVertexPathSeven,
    DeltaPlusThreeEdge,
    FiveVertex,
    AbcSets,
}

impl LemmaId {
    pub const ALL: [LemmaId; 13] = [
        LemmaId::Val,
        LemmaId::ThreeVertexStrongNeighbors,
        LemmaId::ThreeVertexSecondNeighborhood,
        LemmaId::DeltaPlusTwoPath,
        LemmaId::FourVertex,
        LemmaId::CommonNeighbors,
        LemmaId::TwoVertexNeighbors,
        LemmaId::DeltaPlusTwoLongPath,
        LemmaId::ThreeVertexLongPath,
        LemmaId::ThreeVertexPathSeven,
        LemmaId::DeltaPlusThreeEdge,
        LemmaId::FiveVertex,
        LemmaId::AbcSets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Val => "val",
            LemmaId::ThreeVertexStrongNeighbors => "three-vertex-strong-neighbors",
            LemmaId::ThreeVertexSecondNeighborhood => "three-vertex-second-neighborhood",
            LemmaId::DeltaPlusTwoPath => "delta-plus-two-path",
            LemmaId::FourVertex => "four-vertex",
            LemmaId::CommonNeighbors => "common-neighbors",
            LemmaId::TwoVertexNeighbors => "two-vertex-neighbors",
            LemmaId::DeltaPlusTwoLongPath => "delta-plus-two-long-path",
            LemmaId::ThreeVertexLongPath => "three-vertex-long-path",
            LemmaId::ThreeVertexPathSeven => "three-vertex-path-seven",
            LemmaId::DeltaPlusThreeEdge => "delta-plus-three-edge",
            LemmaId::FiveVertex => "five-vertex",
            LemmaId::AbcSets => "abc-sets",
        }
    }

    pub fn check(self, g: &Graph) -> LemmaReport {
        match self {
            LemmaId::Val => check_val(g),
            LemmaId::ThreeVertexStrongNeighbors => check_three_vertex_strong_neighbors(g),
            LemmaId::ThreeVertexSecondNeighborhood => check_three_vertex_second_neighborhood(g),
            LemmaId::DeltaPlusTwoPath => check_delta_plus_two_paths(g),
            LemmaId::FourVertex => check_four_vertex(g),
            LemmaId::CommonNeighbors => check_common_neighbors(g),
            LemmaId::TwoVertexNeighbors => check_two_vertex_neighbors(g),
            LemmaId::DeltaPlusTwoLongPath => check_delta_plus_two_long_paths(g),
            LemmaId::ThreeVertexLongPath => check_three_vertex_long_paths(g),
            LemmaId::ThreeVertexPathSeven => check_three_vertex_paths_seven(g),
            LemmaId::DeltaPlusThreeEdge => check_delta_plus_three_edges(g),
            LemmaId::FiveVertex => check_five_vertex(g),
            LemmaId::AbcSets => check_abc_sets(g),
        }
    }

    /// Replays the predicate on a violation witness alone.
    pub fn recheck(self, g: &Graph, witness: &Witness) -> bool {
        predicates::recheck(self, g, witness)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaVerdict {
    Satisfied,
    Violated,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    /// Clause number within the lemma, starting at 1.
    pub clause: u8,
    /// The tuple the clause was evaluated on, in the lemma's own order.
    pub vertices: Vec<Vertex>,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extra: Option<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    pub id: LemmaId,
    pub verdict: LemmaVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub note: String,
    /// Tuples that met the lemma's hypotheses and were checked.
    pub checked: usize,
}

impl LemmaReport {
    pub fn is_violated(&self) -> bool {
        self.verdict == LemmaVerdict::Violated
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum SieveVerdict {
    Survives,
    Rejected { by: Vec<String> },
}

/// The colored-structure part of a sieve run.
#[derive(Clone, Debug, Serialize)]
pub struct DeepReport {
    /// Every coloring of every `G - e` was visited.
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<QuantifiedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SieveReport {
    pub reports: Vec<LemmaReport>,
    pub overall: SieveVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deep: Option<DeepReport>,
}

/// Name under which a structure violation rejects a graph.
pub const DEEP_REJECTION: &str = "colored-structures";

impl SieveReport {
    pub fn survives(&self) -> bool {
        self.overall == SieveVerdict::Survives
    }

    /// A deep run that stopped early on a surviving graph.
    pub fn incomplete(&self) -> bool {
        self.deep.as_ref().is_some_and(|d| !d.complete)
    }

    /// 0 survives, 3 rejected, 4 survives but the deep run was cut short.
    pub fn exit_code(&self) -> i32 {
        if !self.survives() {
            3
        } else if self.incomplete() {
            4
        } else {
            0
        }
    }

    pub fn report(&self, id: LemmaId) -> &LemmaReport {
        self.reports.iter().find(|r| r.id == id).expect("every lemma is evaluated")
    }
}

/// Evaluates every predicate. With `deep`, also checks all colored
/// structures over at most `max_colorings` colorings.
pub fn run_sieve(g: &Graph, deep: bool, max_colorings: u64) -> SieveReport {
    let reports: Vec<LemmaReport> = LemmaId::ALL.iter().map(|id| id.check(g)).collect();
    let mut by: Vec<String> = reports
        .iter()
        .filter(|r| r.is_violated())
        .map(|r| r.id.to_string())
        .collect();
    let deep = deep.then(|| match verify_all_colorings(g, max_colorings) {
        Ok(q) => {
            if q.verdict == QuantifiedVerdict::Violation {
                by.push(DEEP_REJECTION.to_string());
            }
            DeepReport {
                complete: q.complete_edges == q.edges,
                report: Some(q),
                error: None,
            }
        }
        Err(e) => DeepReport {
            complete: false,
            report: None,
            error: Some(e.to_string()),
        },
    });
    let overall = if by.is_empty() {
        SieveVerdict::Survives
    } else {
        SieveVerdict::Rejected { by }
    };
    SieveReport { reports, overall, deep }
}
