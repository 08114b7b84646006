//! Exact edge-coloring search: chromatic index, class and criticality.

use serde::Serialize;

use super::{color_with_delta_plus_one, Color, ColoringError, PartialEdgeColoring};
use crate::graph::{Edge, EdgeId, Graph};

/// Largest palette handled by the bitmask search.
pub const MAX_EXACT_PALETTE: Color = 63;

/// Upper bound on search nodes (color assignments tried).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget(pub u64);

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget(10_000_000)
    }
}

pub(crate) enum Step {
    Found,
    Exhausted,
    OverBudget,
}

/// Depth-first search over proper colorings of a subset of edges.
///
/// Edges are visited in descending order of `d(u) + d(v)` (ties by id).
/// After each assignment every uncolored edge sharing an endpoint must keep
/// at least one available color. With `canonical` set, an edge may only use
/// colors up to one more than the largest color used so far, so exactly one
/// coloring per color-permutation class is produced.
pub(crate) struct EdgeSearch<'g> {
    g: &'g Graph,
    order: Vec<EdgeId>,
    position: Vec<usize>,
    full: u64,
    canonical: bool,
    used: Vec<u64>,
    colors: Vec<Color>,
    next: Vec<Color>,
    max_used: Vec<Color>,
    depth: usize,
    resume: bool,
    pub(crate) nodes: u64,
    budget: u64,
}

const UNORDERED: usize = usize::MAX;

impl<'g> EdgeSearch<'g> {
    pub(crate) fn new(
        g: &'g Graph,
        skip: Option<EdgeId>,
        k: Color,
        canonical: bool,
        budget: SearchBudget,
    ) -> Result<Self, ColoringError> {
        if k > MAX_EXACT_PALETTE {
            return Err(ColoringError::PaletteTooLarge(k));
        }
        let mut order: Vec<EdgeId> = (0..g.m()).filter(|&e| Some(e) != skip).collect();
        order.sort_by_key(|&e| {
            let Edge { u, v } = g.edge(e);
            (std::cmp::Reverse(g.deg(u) + g.deg(v)), e)
        });
        let mut position = vec![UNORDERED; g.m()];
        for (i, &e) in order.iter().enumerate() {
            position[e] = i;
        }
        let len = order.len();
        Ok(EdgeSearch {
            g,
            order,
            position,
            full: (u64::MAX >> (63 - k)) & !1,
            canonical,
            used: vec![0; g.n()],
            colors: vec![0; g.m()],
            next: vec![1; len + 1],
            max_used: vec![0; len + 1],
            depth: 0,
            resume: false,
            nodes: 0,
            budget: budget.0,
        })
    }

    fn unassign(&mut self, e: EdgeId) {
        let Edge { u, v } = self.g.edge(e);
        let bit = !(1u64 << self.colors[e]);
        self.used[u] &= bit;
        self.used[v] &= bit;
        self.colors[e] = 0;
    }

    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            return false;
        }
        self.depth -= 1;
        self.unassign(self.order[self.depth]);
        true
    }

    fn forward_ok(&self, u: usize, v: usize) -> bool {
        for w in [u, v] {
            for &f in self.g.incident(w) {
                let p = self.position[f];
                if p == UNORDERED || p <= self.depth {
                    continue;
                }
                let Edge { u: a, v: b } = self.g.edge(f);
                if self.full & !(self.used[a] | self.used[b]) == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn advance(&mut self) -> Step {
        if self.resume {
            self.resume = false;
            if !self.backtrack() {
                return Step::Exhausted;
            }
        }
        loop {
            if self.depth == self.order.len() {
                self.resume = true;
                return Step::Found;
            }
            let e = self.order[self.depth];
            let Edge { u, v } = self.g.edge(e);
            let mut allowed = self.full & !(self.used[u] | self.used[v]);
            if self.canonical {
                let cap = self.max_used[self.depth] + 1;
                if cap < 63 {
                    allowed &= (1u64 << (cap + 1)) - 1;
                }
            }
            allowed &= u64::MAX.checked_shl(self.next[self.depth]).unwrap_or(0);
            if allowed == 0 {
                if !self.backtrack() {
                    return Step::Exhausted;
                }
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OverBudget;
            }
            let c = allowed.trailing_zeros();
            self.next[self.depth] = c + 1;
            self.colors[e] = c;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            if !self.forward_ok(u, v) {
                self.unassign(e);
                continue;
            }
            let d = self.depth;
            self.max_used[d + 1] = self.max_used[d].max(c);
            self.next[d + 1] = 1;
            self.depth += 1;
        }
    }

    /// Current full assignment as a coloring of `g` (skipped edge uncolored).
    pub(crate) fn coloring(&self, k: Color) -> PartialEdgeColoring<'g> {
        let assignment: Vec<Option<Color>> = self
            .colors
            .iter()
            .map(|&c| (c != 0).then_some(c))
            .collect();
        PartialEdgeColoring::from_assignment(self.g, k, &assignment)
            .expect("search only produces proper colorings")
    }
}

/// Finds a proper `k`-coloring of `g` minus `skip`, if one exists.
pub fn is_k_colorable<'g>(
    g: &'g Graph,
    skip: Option<EdgeId>,
    k: Color,
    budget: SearchBudget,
) -> Result<Option<PartialEdgeColoring<'g>>, ColoringError> {
    let mut search = EdgeSearch::new(g, skip, k, true, budget)?;
    match search.advance() {
        Step::Found => Ok(Some(search.coloring(k))),
        Step::Exhausted => Ok(None),
        Step::OverBudget => Err(ColoringError::BudgetExhausted(budget.0)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    One,
    Two,
}

#[derive(Clone, Debug)]
pub struct ClassVerdict<'g> {
    pub chi_prime: usize,
    pub classification: Classification,
    /// A proper total coloring with `chi_prime` colors.
    pub witness: Option<PartialEdgeColoring<'g>>,
    pub nodes: u64,
}

/// Exact chromatic index. Either Δ colors suffice (class one, witnessed by
/// the search) or they provably do not and the Misra–Gries coloring
/// witnesses Δ+1. Budget exhaustion is an error, never a guess.
pub fn chromatic_index_exact(g: &Graph, budget: SearchBudget) -> Result<ClassVerdict<'_>, ColoringError> {
    let delta = g.max_degree();
    let mut search = EdgeSearch::new(g, None, delta as Color, true, budget)?;
    match search.advance() {
        Step::Found => Ok(ClassVerdict {
            chi_prime: delta,
            classification: Classification::One,
            witness: Some(search.coloring(delta as Color)),
            nodes: search.nodes,
        }),
        Step::Exhausted => Ok(ClassVerdict {
            chi_prime: delta + 1,
            classification: Classification::Two,
            witness: Some(color_with_delta_plus_one(g)),
            nodes: search.nodes,
        }),
        Step::OverBudget => Err(ColoringError::BudgetExhausted(budget.0)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason", content = "edge")]
pub enum CriticalityWitness {
    Disconnected,
    ClassOne,
    /// Deleting this edge leaves the chromatic index unchanged.
    NonCriticalEdge(Edge),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Criticality {
    pub critical: bool,
    pub witness: Option<CriticalityWitness>,
}

/// Connected, class two, and every single-edge deletion is Δ-colorable.
pub fn is_critical(g: &Graph, budget: SearchBudget) -> Result<Criticality, ColoringError> {
    let not = |w| Criticality {
        critical: false,
        witness: Some(w),
    };
    if !g.is_connected() {
        return Ok(not(CriticalityWitness::Disconnected));
    }
    let verdict = chromatic_index_exact(g, budget)?;
    if verdict.classification == Classification::One {
        return Ok(not(CriticalityWitness::ClassOne));
    }
    let delta = g.max_degree() as Color;
    for e in 0..g.m() {
        if is_k_colorable(g, Some(e), delta, budget)?.is_none() {
            return Ok(not(CriticalityWitness::NonCriticalEdge(g.edge(e))));
        }
    }
    Ok(Criticality {
        critical: true,
        witness: None,
    })
}
