//! Constructive (Δ+1)-edge-coloring by fan rotation and one Kempe flip per
//! edge (Misra–Gries).

use super::{Color, PartialEdgeColoring};
use crate::graph::{Graph, Vertex};

/// Colors every edge of `g` with at most Δ+1 colors.
///
/// Edges are processed in id order. For each uncolored edge `uv` a maximal
/// fan at `u` is grown from `v` (next fan vertex: the lowest-index neighbor
/// whose edge color is free at the current fan end), then the
/// `(c, d)`-chain at `u` is flipped, with `c` the lowest free color at `u`
/// and `d` the lowest free color at the fan end, and a prefix of the fan is
/// rotated.
pub fn color_with_delta_plus_one(g: &Graph) -> PartialEdgeColoring<'_> {
    let k = g.max_degree() as Color + 1;
    let mut phi = PartialEdgeColoring::new(g, k);
    for e in 0..g.m() {
        let edge = g.edge(e);
        color_edge(&mut phi, edge.u, edge.v);
    }
    debug_assert!(phi.is_total() && phi.is_proper());
    phi
}

fn lowest_free(phi: &PartialEdgeColoring<'_>, v: Vertex) -> Color {
    (1..=phi.k())
        .find(|&c| phi.is_missing(v, c))
        .expect("a vertex of degree at most Δ always misses one of Δ+1 colors")
}

fn build_fan(phi: &PartialEdgeColoring<'_>, u: Vertex, v: Vertex) -> Vec<Vertex> {
    let g = phi.graph();
    let mut fan = vec![v];
    let mut in_fan = vec![false; g.deg(u)];
    let pos_v = g.neighbors(u).binary_search(&v).unwrap();
    in_fan[pos_v] = true;
    loop {
        let last = *fan.last().unwrap();
        let next = g
            .neighbors(u)
            .iter()
            .zip(g.incident(u))
            .enumerate()
            .find(|&(i, (_, &e))| {
                !in_fan[i] && phi.color(e).is_some_and(|c| phi.is_missing(last, c))
            });
        match next {
            Some((i, (&w, _))) => {
                in_fan[i] = true;
                fan.push(w);
            }
            None => return fan,
        }
    }
}

fn color_edge(phi: &mut PartialEdgeColoring<'_>, u: Vertex, v: Vertex) {
    let g = phi.graph();
    let fan = build_fan(phi, u, v);
    let c = lowest_free(phi, u);
    let d = lowest_free(phi, *fan.last().unwrap());

    if c != d {
        let chain = phi.kempe_chain(u, c, d);
        phi.flip(&chain).expect("chain extracted from the current coloring");
    }
    // now d is free at u; find the first fan prefix that is still a fan and
    // whose end misses d
    let mut end = None;
    for (i, &w) in fan.iter().enumerate() {
        if i > 0 {
            let prev = fan[i - 1];
            let col = phi.color_between(u, w);
            if !col.is_some_and(|col| phi.is_missing(prev, col)) {
                break;
            }
        }
        if phi.is_missing(w, d) {
            end = Some(i);
            break;
        }
    }
    let end = end.expect("some fan prefix ends at a vertex missing d");

    // rotate: uf_i takes the color of uf_{i+1}, then uf_end gets d
    for i in 0..end {
        let next = g.edge_id(u, fan[i + 1]).unwrap();
        let col = phi.color(next);
        phi.set(next, None).unwrap();
        let here = g.edge_id(u, fan[i]).unwrap();
        phi.set(here, col).expect("rotation keeps the coloring proper");
    }
    let last = g.edge_id(u, fan[end]).unwrap();
    phi.set(last, Some(d)).expect("d is free at both ends");
}
