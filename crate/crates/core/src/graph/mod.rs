//! Simple undirected graphs with dense vertex ids.

mod edgelist;
mod family;
mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Rational;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use family::{build_family, FamilyVariant};
pub use graph6::{emit_graph6, parse_graph6, GRAPH6_MAX_ORDER};

pub type Vertex = usize;
pub type EdgeId = usize;

/// An undirected edge, normalized so that `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Builds a normalized edge. Returns `None` for a loop.
    pub fn new(a: Vertex, b: Vertex) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// The endpoint opposite to `w`. `w` must be an endpoint.
    pub fn other(&self, w: Vertex) -> Vertex {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }

    pub fn contains(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}")]
    ParallelEdge(Edge),
    #[error("graph has no vertices")]
    Empty,
    #[error("family construction: {0}")]
    Construction(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: {message} (byte {offset})")]
    Graph6 { offset: usize, message: String },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("input contains no graph")]
    NoInput,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted; `incident[v][i]` is the id of the edge
/// joining `v` and `neighbors[v][i]`. Edge ids index the lexicographically
/// sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<Vertex>>,
    incident: Vec<Vec<EdgeId>>,
    edges: Vec<Edge>,
}

/// Neighbor degree filter for [`Graph::degree_filtered`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeFilter {
    Exactly(usize),
    AtLeast(usize),
    AtMost(usize),
}

impl DegreeFilter {
    pub fn accepts(self, d: usize) -> bool {
        match self {
            DegreeFilter::Exactly(k) => d == k,
            DegreeFilter::AtLeast(k) => d >= k,
            DegreeFilter::AtMost(k) => d <= k,
        }
    }
}

/// Average degree together with the gap to the conjectured lower bound
/// `Δ - 1 + 3/n` for Δ-critical graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AverageDegree {
    pub value: Rational,
    pub conjecture_bound: Rational,
    pub conjecture_gap: Rational,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push(Edge::new(a, b).ok_or(GraphError::Loop(a))?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0]));
        }

        let mut neighbors = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (id, e) in list.iter().enumerate() {
            neighbors[e.u].push((e.v, id));
            neighbors[e.v].push((e.u, id));
        }
        let mut adj = Vec::with_capacity(n);
        for (v, mut pairs) in neighbors.into_iter().enumerate() {
            pairs.sort_unstable();
            incident[v] = pairs.iter().map(|&(_, id)| id).collect();
            adj.push(pairs.into_iter().map(|(w, _)| w).collect());
        }
        Ok(Graph {
            neighbors: adj,
            incident,
            edges: list,
        })
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Degree of `v`; errors on an out-of-range vertex.
    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.neighbors[v].len())
    }

    /// Unchecked degree for internal loops. Panics when out of range.
    #[inline]
    pub fn deg(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        if a >= self.n() || b >= self.n() {
            return None;
        }
        let (x, y) = if self.deg(a) <= self.deg(b) { (a, b) } else { (b, a) };
        self.neighbors[x]
            .binary_search(&y)
            .ok()
            .map(|i| self.incident[x][i])
    }

    #[inline]
    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_id(a, b).is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Number of neighbors of `v` whose degree passes `filter`
    /// (`d_k`, `d_{k+}`, `d_{k-}`).
    pub fn degree_filtered(&self, v: Vertex, filter: DegreeFilter) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.count_neighbors(v, filter))
    }

    #[inline]
    pub fn count_neighbors(&self, v: Vertex, filter: DegreeFilter) -> usize {
        self.neighbors[v]
            .iter()
            .filter(|&&w| filter.accepts(self.deg(w)))
            .count()
    }

    /// Number of common neighbors of `a` and `b`.
    pub fn common_neighbors(&self, a: Vertex, b: Vertex) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        let (na, nb) = (&self.neighbors[a], &self.neighbors[b]);
        while i < na.len() && j < nb.len() {
            match na[i].cmp(&nb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Exact average degree `2m/n` and the gap to `Δ - 1 + 3/n`.
    pub fn average_degree(&self) -> Result<AverageDegree, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::Empty);
        }
        let n = self.n() as i64;
        let value = Rational::new(2 * self.m() as i64, n);
        let conjecture_bound =
            Rational::from_integer(self.max_degree() as i64 - 1) + Rational::new(3, n);
        Ok(AverageDegree {
            value,
            conjecture_bound,
            conjecture_gap: value - conjecture_bound,
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// The graph with edge `id` deleted (same vertex set).
    pub fn without_edge(&self, id: EdgeId) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, e)| (e.u, e.v));
        Graph::from_edges(self.n(), edges).expect("subgraph of a simple graph is simple")
    }

    pub fn degree_sum_is_twice_edges(&self) -> bool {
        self.neighbors.iter().map(Vec::len).sum::<usize>() == 2 * self.m()
    }

    /// JSON document `{n, edges, degrees}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            n: self.n(),
            edges: self.edges.iter().map(|e| [e.u, e.v]).collect(),
            degrees: self.degrees(),
        })
        .expect("graph json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Graph, GraphError> {
        let doc: GraphJson = serde_json::from_value(value.clone())
            .map_err(|e| GraphError::Construction(format!("graph json: {e}")))?;
        Graph::from_edges(doc.n, doc.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

/// Input encodings accepted by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

/// A parsed graph plus the original label of every dense vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

/// Parses one graph. For graph6 the first non-empty line is decoded; the
/// labels are then the vertex ids themselves.
pub fn parse_graph(input: &str, format: GraphFormat) -> Result<ParsedGraph, ParseError> {
    match format {
        GraphFormat::Graph6 => {
            let line = input
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or(ParseError::NoInput)?;
            let graph = parse_graph6(line)?;
            let labels = graph.vertices().map(|v| v.to_string()).collect();
            Ok(ParsedGraph { graph, labels })
        }
        GraphFormat::EdgeList => parse_edge_list(input),
    }
}

/// Guesses the format: a first content line made of a single token of
/// printable graph6 bytes is graph6, anything else is an edge list.
pub fn detect_format(input: &str) -> GraphFormat {
    let first = input
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line)
            if line.starts_with(">>graph6<<")
                || (!line.contains(char::is_whitespace)
                    && line.bytes().all(|b| (63..=126).contains(&b))) =>
        {
            GraphFormat::Graph6
        }
        _ => GraphFormat::EdgeList,
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        Graph::from_edges(n, e).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn degrees_of_small_graphs() {
        let c5 = cycle(5);
        assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
        let k4 = complete(4);
        assert!((0..4).all(|v| k4.degree(v).unwrap() == 3));
        assert_eq!(
            c5.degree(5),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 5 })
        );
    }

    #[test]
    fn filtered_degrees() {
        let c5 = cycle(5);
        assert_eq!(c5.degree_filtered(0, DegreeFilter::Exactly(2)).unwrap(), 2);
        let s = star(5);
        assert_eq!(s.degree_filtered(0, DegreeFilter::AtMost(1)).unwrap(), 5);
        assert_eq!(s.degree_filtered(1, DegreeFilter::AtLeast(5)).unwrap(), 1);
    }

    #[test]
    fn average_degrees() {
        assert_eq!(cycle(5).average_degree().unwrap().value, Rational::from_integer(2));
        assert_eq!(complete(4).average_degree().unwrap().value, Rational::from_integer(3));
        let c5 = cycle(5).average_degree().unwrap();
        // 2 - (1 + 3/5)
        assert_eq!(c5.conjecture_gap, Rational::new(2, 5));
        let empty = Graph::from_edges(0, []).unwrap();
        assert_eq!(empty.average_degree(), Err(GraphError::Empty));
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(Edge { u: 0, v: 1 }))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn edge_ids_follow_sorted_order() {
        let g = Graph::from_edges(4, [(3, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[Edge { u: 0, v: 1 }, Edge { u: 1, v: 2 }, Edge { u: 2, v: 3 }]);
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 3), None);
        assert_eq!(g.neighbors(2), &[1, 3]);
        assert_eq!(g.incident(2), &[1, 2]);
    }

    #[test]
    fn json_shape() {
        let g = cycle(3);
        let j = g.to_json();
        assert_eq!(j["n"], 3);
        assert_eq!(j["edges"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
        assert_eq!(j["degrees"], serde_json::json!([2, 2, 2]));
        assert_eq!(Graph::from_json(&j).unwrap(), g);
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("D~{\n"), GraphFormat::Graph6);
        assert_eq!(detect_format("0 1\n1 2\n"), GraphFormat::EdgeList);
        assert_eq!(detect_format(">>graph6<<D~{"), GraphFormat::Graph6);
    }

    #[test]
    fn connectivity_and_deletion() {
        let p = cycle(4).without_edge(0);
        assert_eq!(p.m(), 3);
        assert!(p.is_connected());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
    }
}
