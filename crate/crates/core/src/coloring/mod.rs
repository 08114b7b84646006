//! Partial proper edge colorings, Kempe chains, and the coloring searches
//! built on them.

mod colorset;
mod enumerate;
mod exact;
mod vizing;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, EdgeId, Graph, Vertex};

pub use colorset::ColorSet;
pub use enumerate::{count_colorings, enumerate_colorings, Colorings, EnumerationBudget};
pub use exact::{
    chromatic_index_exact, is_critical, is_k_colorable, ClassVerdict, Classification,
    Criticality, CriticalityWitness, SearchBudget, MAX_EXACT_PALETTE,
};
pub use vizing::color_with_delta_plus_one;

/// Colors are `1..=k`; 0 is never a color.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {color} outside the palette 1..={k}")]
    ColorOutOfRange { color: Color, k: Color },
    #[error("color {color} already used at vertex {vertex}")]
    Conflict { color: Color, vertex: Vertex },
    #[error("chain was extracted at version {chain} but the coloring is at version {current}")]
    StaleChain { chain: u64, current: u64 },
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("palette of {0} colors exceeds the exact-search limit of {MAX_EXACT_PALETTE}")]
    PaletteTooLarge(Color),
    #[error("coloring json: {0}")]
    Json(String),
}

/// A proper coloring of some of the edges of a graph with colors `1..=k`.
///
/// Besides the per-edge assignment it keeps, for every vertex and color,
/// the edge of that color at the vertex, so missing colors and Kempe chain
/// walks are constant time per step. Every mutation bumps `version`.
#[derive(Clone, Debug)]
pub struct PartialEdgeColoring<'g> {
    graph: &'g Graph,
    k: Color,
    colors: Vec<Option<Color>>,
    at: Vec<Option<EdgeId>>,
    version: u64,
}

impl PartialEq for PartialEdgeColoring<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph) && self.k == other.k && self.colors == other.colors
    }
}

impl Eq for PartialEdgeColoring<'_> {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainShape {
    Path,
    Cycle,
}

/// A maximal (α, β)-chain: a component of the subgraph of edges colored α
/// or β, recorded as an ordered vertex walk.
///
/// Paths list their vertices from one end to the other; cycles start at the
/// extraction vertex and do not repeat it. When α = β, or when neither color
/// is present at the vertex, the chain is that single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempeChain {
    pub colors: (Color, Color),
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub shape: ChainShape,
    version: u64,
}

impl KempeChain {
    /// True when the chain is a path and `v` is one of its two ends.
    pub fn ends_at(&self, v: Vertex) -> bool {
        self.shape == ChainShape::Path
            && (self.vertices.first() == Some(&v) || self.vertices.last() == Some(&v))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// The ends of a path chain (equal for a single vertex).
    pub fn ends(&self) -> Option<(Vertex, Vertex)> {
        match self.shape {
            ChainShape::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
            ChainShape::Cycle => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: Color,
    edges: Vec<EdgeColorJson>,
}

#[derive(Serialize, Deserialize)]
struct EdgeColorJson {
    u: Vertex,
    v: Vertex,
    color: Option<Color>,
}

impl<'g> PartialEdgeColoring<'g> {
    /// All edges uncolored.
    pub fn new(graph: &'g Graph, k: Color) -> Self {
        PartialEdgeColoring {
            graph,
            k,
            colors: vec![None; graph.m()],
            at: vec![None; graph.n() * (k as usize + 1)],
            version: 0,
        }
    }

    /// Builds a coloring from a per-edge assignment, checking properness.
    pub fn from_assignment(
        graph: &'g Graph,
        k: Color,
        assignment: &[Option<Color>],
    ) -> Result<Self, ColoringError> {
        assert_eq!(assignment.len(), graph.m(), "one entry per edge");
        let mut phi = PartialEdgeColoring::new(graph, k);
        for (e, &c) in assignment.iter().enumerate() {
            if let Some(c) = c {
                phi.set(e, Some(c))?;
            }
        }
        phi.version = 0;
        Ok(phi)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn assignment(&self) -> &[Option<Color>] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.colors[e]
    }

    /// Color of the edge `ab`, `None` when uncolored or absent.
    pub fn color_between(&self, a: Vertex, b: Vertex) -> Option<Color> {
        self.graph.edge_id(a, b).and_then(|e| self.colors[e])
    }

    #[inline]
    fn slot(&self, v: Vertex, c: Color) -> usize {
        v * (self.k as usize + 1) + c as usize
    }

    /// The edge of color `c` at `v`, if any.
    #[inline]
    pub fn edge_at(&self, v: Vertex, c: Color) -> Option<EdgeId> {
        if c == 0 || c > self.k {
            return None;
        }
        self.at[self.slot(v, c)]
    }

    #[inline]
    pub fn is_missing(&self, v: Vertex, c: Color) -> bool {
        c >= 1 && c <= self.k && self.at[self.slot(v, c)].is_none()
    }

    /// φ̄(v): palette colors not on any colored edge at `v`.
    pub fn missing_colors(&self, v: Vertex) -> ColorSet {
        (1..=self.k).filter(|&c| self.is_missing(v, c)).collect()
    }

    /// φ(v): colors present at `v`.
    pub fn present_colors(&self, v: Vertex) -> ColorSet {
        (1..=self.k).filter(|&c| !self.is_missing(v, c)).collect()
    }

    /// Assigns (or clears) the color of edge `e`.
    pub fn set(&mut self, e: EdgeId, color: Option<Color>) -> Result<(), ColoringError> {
        let Edge { u, v } = self.graph.edge(e);
        if let Some(c) = color {
            if c == 0 || c > self.k {
                return Err(ColoringError::ColorOutOfRange { color: c, k: self.k });
            }
            for w in [u, v] {
                if let Some(other) = self.at[self.slot(w, c)] {
                    if other != e {
                        return Err(ColoringError::Conflict { color: c, vertex: w });
                    }
                }
            }
        }
        self.clear(e);
        if let Some(c) = color {
            let (su, sv) = (self.slot(u, c), self.slot(v, c));
            self.at[su] = Some(e);
            self.at[sv] = Some(e);
            self.colors[e] = Some(c);
        }
        self.version += 1;
        Ok(())
    }

    fn clear(&mut self, e: EdgeId) {
        if let Some(old) = self.colors[e].take() {
            let Edge { u, v } = self.graph.edge(e);
            let (su, sv) = (self.slot(u, old), self.slot(v, old));
            self.at[su] = None;
            self.at[sv] = None;
        }
    }

    pub fn uncolored_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(e, _)| e)
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().copied().collect::<ColorSet>().len()
    }

    /// Full properness scan over the per-edge assignment only; independent
    /// of the per-vertex index.
    pub fn is_proper(&self) -> bool {
        is_proper_assignment(self.graph, self.k, &self.colors)
    }

    /// P_v(α, β, φ).
    pub fn kempe_chain(&self, v: Vertex, alpha: Color, beta: Color) -> KempeChain {
        let trivial = || KempeChain {
            colors: (alpha, beta),
            vertices: vec![v],
            edges: Vec::new(),
            shape: ChainShape::Path,
            version: self.version,
        };
        if alpha == beta {
            return trivial();
        }
        // walk from v leaving along `first`, alternating colors
        let walk = |first: Color| -> (Vec<Vertex>, Vec<EdgeId>, bool) {
            let mut verts = Vec::new();
            let mut edges = Vec::new();
            let mut cur = v;
            let mut c = first;
            while let Some(e) = self.edge_at(cur, c) {
                let next = self.graph.edge(e).other(cur);
                edges.push(e);
                if next == v {
                    return (verts, edges, true);
                }
                verts.push(next);
                cur = next;
                c = if c == alpha { beta } else { alpha };
            }
            (verts, edges, false)
        };
        let (fwd_v, fwd_e, cycle) = walk(alpha);
        if cycle {
            let mut vertices = vec![v];
            vertices.extend(fwd_v);
            return KempeChain {
                colors: (alpha, beta),
                vertices,
                edges: fwd_e,
                shape: ChainShape::Cycle,
                version: self.version,
            };
        }
        let (back_v, back_e, _) = walk(beta);
        if fwd_e.is_empty() && back_e.is_empty() {
            return trivial();
        }
        let mut vertices: Vec<Vertex> = back_v.into_iter().rev().collect();
        vertices.push(v);
        vertices.extend(fwd_v);
        let mut edges: Vec<EdgeId> = back_e.into_iter().rev().collect();
        edges.extend(fwd_e);
        KempeChain {
            colors: (alpha, beta),
            vertices,
            edges,
            shape: ChainShape::Path,
            version: self.version,
        }
    }

    /// φ/P: swaps α and β along `chain` in place.
    pub fn flip(&mut self, chain: &KempeChain) -> Result<(), ColoringError> {
        if chain.version != self.version {
            return Err(ColoringError::StaleChain {
                chain: chain.version,
                current: self.version,
            });
        }
        let (alpha, beta) = chain.colors;
        if chain.edges.is_empty() {
            return Ok(());
        }
        let mut swapped = Vec::with_capacity(chain.edges.len());
        for &e in &chain.edges {
            swapped.push(match self.colors[e] {
                Some(c) if c == alpha => beta,
                Some(c) if c == beta => alpha,
                _ => {
                    return Err(ColoringError::StaleChain {
                        chain: chain.version,
                        current: self.version,
                    })
                }
            });
        }
        for &e in &chain.edges {
            self.clear(e);
        }
        for (&e, c) in chain.edges.iter().zip(swapped) {
            let Edge { u, v } = self.graph.edge(e);
            let (su, sv) = (self.slot(u, c), self.slot(v, c));
            self.at[su] = Some(e);
            self.at[sv] = Some(e);
            self.colors[e] = Some(c);
        }
        self.version += 1;
        debug_assert!(self.is_proper());
        Ok(())
    }

    /// Returns a copy with `chain` flipped.
    pub fn flipped(&self, chain: &KempeChain) -> Result<Self, ColoringError> {
        let mut out = self.clone();
        out.flip(chain)?;
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ColoringJson {
            k: self.k,
            edges: self
                .graph
                .edges()
                .iter()
                .zip(&self.colors)
                .map(|(e, &color)| EdgeColorJson { u: e.u, v: e.v, color })
                .collect(),
        })
        .expect("coloring json")
    }

    pub fn from_json(graph: &'g Graph, value: &serde_json::Value) -> Result<Self, ColoringError> {
        let doc: ColoringJson = serde_json::from_value(value.clone())
            .map_err(|e| ColoringError::Json(e.to_string()))?;
        let mut assignment = vec![None; graph.m()];
        for entry in doc.edges {
            let edge = Edge::new(entry.u, entry.v)
                .ok_or(ColoringError::Json(format!("loop at {}", entry.u)))?;
            let id = graph
                .edge_id(edge.u, edge.v)
                .ok_or(ColoringError::UnknownEdge(edge))?;
            assignment[id] = entry.color;
        }
        PartialEdgeColoring::from_assignment(graph, doc.k, &assignment)
    }
}

/// Properness validator on a raw per-edge assignment: every color lies in
/// `1..=k` and no vertex sees a color twice.
pub fn is_proper_assignment(g: &Graph, k: Color, colors: &[Option<Color>]) -> bool {
    if colors.len() != g.m() {
        return false;
    }
    let mut seen = Vec::new();
    for v in g.vertices() {
        seen.clear();
        for &e in g.incident(v) {
            if let Some(c) = colors[e] {
                if c == 0 || c > k {
                    return false;
                }
                seen.push(c);
            }
        }
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

/// Whether the missing-color sets of `vertices` are pairwise disjoint.
pub fn is_elementary(phi: &PartialEdgeColoring<'_>, vertices: &[Vertex]) -> bool {
    let mut union = ColorSet::empty();
    for &v in vertices {
        let m = phi.missing_colors(v);
        if !m.is_disjoint(&union) {
            return false;
        }
        union = union.union(&m);
    }
    true
}

#[cfg(test)]
mod tests;
