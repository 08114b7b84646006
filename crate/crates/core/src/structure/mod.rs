//! Colored substructures around an uncolored edge: multi-fans, Kierstead
//! paths, brooms, kites and forks, together with checks of the properties a
//! Δ-critical graph forces on them.

mod find;
mod quantified;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{ColorSet, ColoringError, PartialEdgeColoring};
use crate::graph::{EdgeId, Graph, Vertex};

pub use find::{find_brooms, find_forks, find_kierstead_p4, find_kites, find_multifans};
pub use quantified::{verify_all_colorings, KindTally, QuantifiedReport, QuantifiedVerdict};
pub use verify::{
    check_fork, verify_broom, verify_kierstead_p4, verify_kite, verify_multifan, verify_p4link,
    verify_path_lemma,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("edge {0} must be the uncolored edge")]
    EdgeColored(EdgeId),
    #[error("not a {kind}: {reason}")]
    Invalid { kind: StructureKind, reason: String },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    MultiFan,
    PathLemma,
    KiersteadP4,
    P4Link,
    Broom,
    Kite,
    Fork,
}

impl std::fmt::Display for StructureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StructureKind::MultiFan => "multi-fan",
            StructureKind::PathLemma => "path",
            StructureKind::KiersteadP4 => "kierstead path",
            StructureKind::P4Link => "kierstead path link",
            StructureKind::Broom => "broom",
            StructureKind::Kite => "kite",
            StructureKind::Fork => "fork",
        })
    }
}

/// `(x, e_1, y_1, ..., e_p, y_p)` with `e_1` the uncolored edge `x y_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiFan {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

/// A path `y_0 y_1 ... y_p` whose first edge is uncolored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KiersteadPath {
    pub vertices: Vec<Vertex>,
}

/// Stem `y_0 y_1 y_2` with bristles `y_3 ... y_p` hanging at `y_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Broom {
    pub stem: [Vertex; 3],
    pub bristles: Vec<Vertex>,
}

impl Broom {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = self.stem.to_vec();
        v.extend(&self.bristles);
        v
    }
}

/// Edges `ab, ac, bu, cu, us1, us2, s1t1, s2t2`, with `ab` uncolored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Kite {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub u: Vertex,
    pub s1: Vertex,
    pub s2: Vertex,
    pub t1: Vertex,
    pub t2: Vertex,
}

impl Kite {
    pub fn vertices(&self) -> [Vertex; 8] {
        [self.a, self.b, self.c, self.u, self.s1, self.s2, self.t1, self.t2]
    }
}

/// Edges `ab, bu, us1, us2, s1t1, s2t2`, with `ab` uncolored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fork {
    pub a: Vertex,
    pub b: Vertex,
    pub u: Vertex,
    pub s1: Vertex,
    pub s2: Vertex,
    pub t1: Vertex,
    pub t2: Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Violation,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureReport {
    pub kind: StructureKind,
    pub instance: serde_json::Value,
    pub verdict: Verdict,
    /// Present exactly when `verdict` is a violation.
    pub detail: Option<String>,
}

impl StructureReport {
    fn new(kind: StructureKind, instance: &impl Serialize, failure: Option<String>) -> Self {
        StructureReport {
            kind,
            instance: serde_json::to_value(instance).expect("structure json"),
            verdict: if failure.is_some() {
                Verdict::Violation
            } else {
                Verdict::Consistent
            },
            detail: failure,
        }
    }

    fn not_applicable(kind: StructureKind, instance: &impl Serialize) -> Self {
        StructureReport {
            kind,
            instance: serde_json::to_value(instance).expect("structure json"),
            verdict: Verdict::NotApplicable,
            detail: None,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violation
    }
}

/// The uncolored edge of a coloring of `G - e`.
fn uncolored_edge(phi: &PartialEdgeColoring<'_>, e: EdgeId) -> Result<(), StructureError> {
    if phi.color(e).is_some() {
        return Err(StructureError::EdgeColored(e));
    }
    Ok(())
}

fn missing_union(phi: &PartialEdgeColoring<'_>, vs: &[Vertex]) -> ColorSet {
    vs.iter()
        .fold(ColorSet::empty(), |acc, &v| acc.union(&phi.missing_colors(v)))
}

/// First pair of vertices sharing a missing color, if any.
fn elementary_failure(phi: &PartialEdgeColoring<'_>, vs: &[Vertex]) -> Option<String> {
    for (i, &a) in vs.iter().enumerate() {
        let ma = phi.missing_colors(a);
        for &b in &vs[i + 1..] {
            if let Some(c) = ma.intersection(&phi.missing_colors(b)).first() {
                return Some(format!("vertices {a} and {b} both miss color {c}"));
            }
        }
    }
    None
}

fn is_simple_path(g: &Graph, vs: &[Vertex]) -> bool {
    let mut seen = vs.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == vs.len()
        && vs.iter().all(|&v| v < g.n())
        && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests;
