use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    check_fork, find_brooms, find_forks, find_kierstead_p4, find_kites, find_multifans,
    verify_broom, verify_kierstead_p4, verify_kite, verify_multifan, verify_p4link,
    verify_path_lemma, StructureError, StructureKind, StructureReport, Verdict,
};
use crate::coloring::{enumerate_colorings, Color, EnumerationBudget, PartialEdgeColoring};
use crate::graph::{Edge, EdgeId, Graph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KindTally {
    pub consistent: u64,
    pub not_applicable: u64,
    pub violations: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantifiedVerdict {
    Consistent,
    ConsistentWithinBudget,
    Violation,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationRecord {
    pub edge: Edge,
    pub coloring: serde_json::Value,
    pub report: StructureReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuantifiedReport {
    pub verdict: QuantifiedVerdict,
    pub colorings: u64,
    /// Edges whose colorings were enumerated exhaustively.
    pub complete_edges: usize,
    pub edges: usize,
    pub tally: BTreeMap<StructureKind, KindTally>,
    /// The first few violations found.
    pub violations: Vec<ViolationRecord>,
}

const KEPT_VIOLATIONS: usize = 16;

/// Runs every structure check over every canonical Δ-coloring of `G - e`
/// for every edge `e`.
///
/// At most `max_colorings` colorings are visited in total; each edge gets
/// an equal share of what is left when its turn comes. The verdict is
/// consistent-within-budget when some edge's enumeration was cut short.
pub fn verify_all_colorings(g: &Graph, max_colorings: u64) -> Result<QuantifiedReport, StructureError> {
    let k = g.max_degree() as Color;
    let mut report = QuantifiedReport {
        verdict: QuantifiedVerdict::Consistent,
        colorings: 0,
        complete_edges: 0,
        edges: g.m(),
        tally: BTreeMap::new(),
        violations: Vec::new(),
    };
    for e in 0..g.m() {
        let left = max_colorings - report.colorings;
        let share = (left / (g.m() - e) as u64).max(1).min(left);
        let budget = EnumerationBudget {
            max_colorings: share,
            max_nodes: u64::MAX,
        };
        let mut stream = enumerate_colorings(g, e, k, true, budget)?;
        for phi in stream.by_ref() {
            report.colorings += 1;
            check_coloring(&phi, e, &mut |r| record(&mut report, &phi, e, r))?;
        }
        // a stream cut exactly at its last coloring still counts as cut
        if stream.is_complete() == Some(true) {
            report.complete_edges += 1;
        }
    }
    let violated = report.tally.values().any(|t| t.violations > 0);
    report.verdict = if violated {
        QuantifiedVerdict::Violation
    } else if report.complete_edges < report.edges {
        QuantifiedVerdict::ConsistentWithinBudget
    } else {
        QuantifiedVerdict::Consistent
    };
    Ok(report)
}

fn record(report: &mut QuantifiedReport, phi: &PartialEdgeColoring<'_>, e: EdgeId, r: StructureReport) {
    let t = report.tally.entry(r.kind).or_default();
    match r.verdict {
        Verdict::Consistent => t.consistent += 1,
        Verdict::NotApplicable => t.not_applicable += 1,
        Verdict::Violation => {
            t.violations += 1;
            if report.violations.len() < KEPT_VIOLATIONS {
                report.violations.push(ViolationRecord {
                    edge: phi.graph().edge(e),
                    coloring: phi.to_json(),
                    report: r,
                });
            }
        }
    }
}

/// Every check for one coloring of `G - e`.
pub(crate) fn check_coloring(
    phi: &PartialEdgeColoring<'_>,
    e: EdgeId,
    sink: &mut dyn FnMut(StructureReport),
) -> Result<(), StructureError> {
    let g = phi.graph();
    for fan in find_multifans(phi, e, true)? {
        sink(verify_multifan(phi, e, &fan)?);
    }
    let edge = g.edge(e);
    for (x, y) in [(edge.u, edge.v), (edge.v, edge.u)] {
        for &z in g.neighbors(y) {
            if z != x {
                sink(verify_path_lemma(phi, x, y, z)?);
            }
        }
    }
    for path in find_kierstead_p4(phi, e)? {
        sink(verify_kierstead_p4(phi, &path)?);
        let y3 = path.vertices[3];
        for i in 0..3 {
            for alpha in phi.missing_colors(y3).iter() {
                for beta in phi.missing_colors(path.vertices[i]).iter() {
                    sink(verify_p4link(phi, &path, alpha, beta, i)?);
                }
            }
        }
    }
    for broom in find_brooms(phi, e)? {
        sink(verify_broom(phi, &broom)?);
    }
    for kite in find_kites(phi, e)? {
        sink(verify_kite(phi, &kite)?);
    }
    for fork in find_forks(phi, e)? {
        sink(check_fork(phi, &fork));
    }
    Ok(())
}
