//! Whitespace-separated edge lists.
//!
//! Each content line is either `a b` (an edge) or a single label (a vertex,
//! possibly isolated). `#` starts a comment. Labels are remapped to dense
//! ids: when every label is a non-negative integer they are ranked
//! numerically, otherwise they are numbered in order of first appearance.

use std::collections::HashMap;

use super::{Graph, ParseError, ParsedGraph};

pub fn parse_edge_list(input: &str) -> Result<ParsedGraph, ParseError> {
    let mut order: Vec<&str> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();

    for (lineno, line) in input.lines().enumerate() {
        let line_no = lineno + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let ids: Vec<usize> = tokens
            .iter()
            .map(|t| {
                *index.entry(t).or_insert_with(|| {
                    order.push(t);
                    order.len() - 1
                })
            })
            .collect();
        match ids.as_slice() {
            [_] => {}
            [a, b] => {
                if a == b {
                    return Err(ParseError::EdgeList {
                        line: line_no,
                        message: format!("loop at vertex {}", tokens[0]),
                    });
                }
                raw_edges.push((*a, *b, line_no));
            }
            _ => {
                return Err(ParseError::EdgeList {
                    line: line_no,
                    message: format!("expected one or two labels, found {}", tokens.len()),
                })
            }
        }
    }
    if order.is_empty() {
        return Err(ParseError::NoInput);
    }

    // first-appearance id -> dense id
    let numeric: Option<Vec<u64>> = order.iter().map(|t| t.parse::<u64>().ok()).collect();
    let relabel: Vec<usize> = match numeric {
        Some(values) => {
            let mut ranked: Vec<usize> = (0..order.len()).collect();
            ranked.sort_by_key(|&i| values[i]);
            let mut relabel = vec![0; order.len()];
            for (dense, &i) in ranked.iter().enumerate() {
                relabel[i] = dense;
            }
            relabel
        }
        None => (0..order.len()).collect(),
    };
    let mut labels = vec![String::new(); order.len()];
    for (i, t) in order.iter().enumerate() {
        labels[relabel[i]] = (*t).to_string();
    }

    let mut seen = HashMap::new();
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (a, b, line) in raw_edges {
        let (a, b) = (relabel[a], relabel[b]);
        let key = (a.min(b), a.max(b));
        if let Some(first) = seen.insert(key, line) {
            return Err(ParseError::EdgeList {
                line,
                message: format!(
                    "edge {}-{} repeats line {first}",
                    labels[key.0], labels[key.1]
                ),
            });
        }
        edges.push(key);
    }
    let graph = Graph::from_edges(labels.len(), edges).expect("validated above");
    Ok(ParsedGraph { graph, labels })
}

/// One `u v` line per edge in id order, then one line per isolated vertex.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    for v in g.vertices().filter(|&v| g.deg(v) == 0) {
        out.push_str(&format!("{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::complete;
    use proptest::prelude::*;

    #[test]
    fn triangle() {
        let p = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(p.graph, complete(3));
        assert_eq!(p.labels, ["0", "1", "2"]);
    }

    #[test]
    fn loop_is_an_error() {
        assert_eq!(
            parse_edge_list("0 0"),
            Err(ParseError::EdgeList {
                line: 1,
                message: "loop at vertex 0".into()
            })
        );
    }

    #[test]
    fn repeated_edge_names_both_lines() {
        let e = parse_edge_list("a b\n# c\nb a\n").unwrap_err();
        assert_eq!(
            e,
            ParseError::EdgeList {
                line: 3,
                message: "edge a-b repeats line 1".into()
            }
        );
    }

    #[test]
    fn labels_are_remapped() {
        let p = parse_edge_list("x y\ny z # comment\nw\n").unwrap();
        assert_eq!(p.labels, ["x", "y", "z", "w"]);
        assert_eq!(p.graph.m(), 2);
        assert_eq!(p.graph.deg(3), 0);

        let p = parse_edge_list("10 30\n30 20\n").unwrap();
        assert_eq!(p.labels, ["10", "20", "30"]);
        assert!(p.graph.has_edge(0, 2) && p.graph.has_edge(1, 2));
    }

    #[test]
    fn bad_arity() {
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(ParseError::EdgeList { line: 1, .. })
        ));
        assert_eq!(parse_edge_list("# nothing\n"), Err(ParseError::NoInput));
    }

    proptest! {
        #[test]
        fn emit_then_parse_is_identity(n in 1usize..25, mask in proptest::collection::vec(any::<bool>(), 300)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[k % mask.len()] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let parsed = parse_edge_list(&emit_edge_list(&g)).unwrap();
            prop_assert_eq!(parsed.graph, g);
        }
    }
}
