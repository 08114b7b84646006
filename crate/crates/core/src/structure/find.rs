use super::{missing_union, uncolored_edge, Broom, Fork, KiersteadPath, Kite, MultiFan, StructureError};
use crate::coloring::{ColorSet, PartialEdgeColoring};
use crate::graph::{EdgeId, Vertex};

fn both_ends(phi: &PartialEdgeColoring<'_>, e: EdgeId) -> [(Vertex, Vertex); 2] {
    let edge = phi.graph().edge(e);
    [(edge.u, edge.v), (edge.v, edge.u)]
}

fn colored_in(phi: &PartialEdgeColoring<'_>, a: Vertex, b: Vertex, set: &ColorSet) -> bool {
    phi.color_between(a, b).is_some_and(|c| set.contains(c))
}

/// Multi-fans at both ends of the uncolored edge `e`, center `u` first.
///
/// With `maximal_only` each end contributes a single fan, grown by
/// repeatedly appending the lowest-index neighbor whose edge color is
/// missing at a fan leaf; every multi-fan at that center has its vertex set
/// inside this one. Otherwise every valid sequence is listed, in
/// lexicographic order of leaf ids, starting with the trivial fan.
pub fn find_multifans(
    phi: &PartialEdgeColoring<'_>,
    e: EdgeId,
    maximal_only: bool,
) -> Result<Vec<MultiFan>, StructureError> {
    uncolored_edge(phi, e)?;
    let g = phi.graph();
    let mut out = Vec::new();
    for (x, y1) in both_ends(phi, e) {
        let start = MultiFan {
            center: x,
            leaves: vec![y1],
            edges: vec![e],
        };
        if maximal_only {
            let mut fan = start;
            let mut missing = phi.missing_colors(y1);
            while let Some((&y, &f)) = g
                .neighbors(x)
                .iter()
                .zip(g.incident(x))
                .find(|&(y, &f)| {
                    !fan.leaves.contains(y) && phi.color(f).is_some_and(|c| missing.contains(c))
                })
            {
                fan.leaves.push(y);
                fan.edges.push(f);
                missing = missing.union(&phi.missing_colors(y));
            }
            out.push(fan);
        } else {
            extend_all(phi, start, &mut out);
        }
    }
    Ok(out)
}

fn extend_all(phi: &PartialEdgeColoring<'_>, fan: MultiFan, out: &mut Vec<MultiFan>) {
    let g = phi.graph();
    let x = fan.center;
    let missing = missing_union(phi, &fan.leaves);
    let next: Vec<(Vertex, EdgeId)> = g
        .neighbors(x)
        .iter()
        .zip(g.incident(x))
        .filter(|&(y, &f)| {
            !fan.leaves.contains(y) && phi.color(f).is_some_and(|c| missing.contains(c))
        })
        .map(|(&y, &f)| (y, f))
        .collect();
    out.push(fan.clone());
    for (y, f) in next {
        let mut longer = fan.clone();
        longer.leaves.push(y);
        longer.edges.push(f);
        extend_all(phi, longer, out);
    }
}

/// All Kierstead paths `y_0 y_1 y_2 y_3` with `y_0 y_1 = e`, both
/// orientations, lexicographic in `(y_2, y_3)`.
pub fn find_kierstead_p4(
    phi: &PartialEdgeColoring<'_>,
    e: EdgeId,
) -> Result<Vec<KiersteadPath>, StructureError> {
    uncolored_edge(phi, e)?;
    let g = phi.graph();
    let mut out = Vec::new();
    for (y0, y1) in both_ends(phi, e) {
        let m0 = phi.missing_colors(y0);
        let m01 = m0.union(&phi.missing_colors(y1));
        for &y2 in g.neighbors(y1) {
            if y2 == y0 || !colored_in(phi, y1, y2, &m0) {
                continue;
            }
            for &y3 in g.neighbors(y2) {
                if y3 != y0 && y3 != y1 && colored_in(phi, y2, y3, &m01) {
                    out.push(KiersteadPath {
                        vertices: vec![y0, y1, y2, y3],
                    });
                }
            }
        }
    }
    Ok(out)
}

/// One broom per valid stem `y_0 y_1 y_2` (`y_0 y_1 = e`, both
/// orientations), with the largest bristle set: bristles are added at `y_2`
/// in lowest-index-first order while their edge color is missing at an
/// earlier broom vertex. Stems admitting no bristle are skipped.
pub fn find_brooms(phi: &PartialEdgeColoring<'_>, e: EdgeId) -> Result<Vec<Broom>, StructureError> {
    uncolored_edge(phi, e)?;
    let g = phi.graph();
    let mut out = Vec::new();
    for (y0, y1) in both_ends(phi, e) {
        let m0 = phi.missing_colors(y0);
        for &y2 in g.neighbors(y1) {
            if y2 == y0 || !colored_in(phi, y1, y2, &m0) {
                continue;
            }
            let mut broom = Broom {
                stem: [y0, y1, y2],
                bristles: Vec::new(),
            };
            let mut missing = missing_union(phi, &broom.stem);
            while let Some(&y) = g.neighbors(y2).iter().find(|&&y| {
                !broom.stem.contains(&y)
                    && !broom.bristles.contains(&y)
                    && colored_in(phi, y2, y, &missing)
            }) {
                broom.bristles.push(y);
                missing = missing.union(&phi.missing_colors(y));
            }
            if !broom.bristles.is_empty() {
                out.push(broom);
            }
        }
    }
    Ok(out)
}

/// Kites on `e = ab` (both orientations) for which `a b u s1 t1` and
/// `b a c u s2 t2` are Kierstead paths and `s1t1`, `s2t2` share a color.
/// These are exactly the kites the cardinality bound speaks about.
pub fn find_kites(phi: &PartialEdgeColoring<'_>, e: EdgeId) -> Result<Vec<Kite>, StructureError> {
    uncolored_edge(phi, e)?;
    let g = phi.graph();
    let mut out = Vec::new();
    for (a, b) in both_ends(phi, e) {
        let ma = phi.missing_colors(a);
        let mb = phi.missing_colors(b);
        let mab = ma.union(&mb);
        for &c in g.neighbors(a) {
            if c == b || !colored_in(phi, a, c, &mb) {
                continue;
            }
            let mabc = mab.union(&phi.missing_colors(c));
            for &u in g.neighbors(b) {
                if u == a
                    || u == c
                    || !g.has_edge(c, u)
                    || !colored_in(phi, b, u, &ma)
                    || !colored_in(phi, c, u, &mab)
                {
                    continue;
                }
                let mabu = mab.union(&phi.missing_colors(u));
                let mabcu = mabc.union(&phi.missing_colors(u));
                let taken = [a, b, c, u];
                for &s1 in g.neighbors(u) {
                    if taken.contains(&s1) || !colored_in(phi, u, s1, &mab) {
                        continue;
                    }
                    for &s2 in g.neighbors(u) {
                        if taken.contains(&s2) || s2 == s1 || !colored_in(phi, u, s2, &mabc) {
                            continue;
                        }
                        for &t1 in g.neighbors(s1) {
                            if taken.contains(&t1) || t1 == s2 || !colored_in(phi, s1, t1, &mabu) {
                                continue;
                            }
                            let shared = phi.color_between(s1, t1).unwrap();
                            let Some(f) = phi.edge_at(s2, shared) else {
                                continue;
                            };
                            let t2 = g.edge(f).other(s2);
                            if taken.contains(&t2) || t2 == s1 || t2 == t1 || !mabcu.contains(shared) {
                                continue;
                            }
                            out.push(Kite { a, b, c, u, s1, s2, t1, t2 });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Forks on `e = ab` (both orientations), listed once per unordered pair
/// of branches (`s1 < s2`).
pub fn find_forks(phi: &PartialEdgeColoring<'_>, e: EdgeId) -> Result<Vec<Fork>, StructureError> {
    uncolored_edge(phi, e)?;
    let g = phi.graph();
    let mut out = Vec::new();
    for (a, b) in both_ends(phi, e) {
        let ma = phi.missing_colors(a);
        let mab = ma.union(&phi.missing_colors(b));
        for &u in g.neighbors(b) {
            if u == a || !colored_in(phi, b, u, &ma) {
                continue;
            }
            let taken = [a, b, u];
            let mut branches: Vec<(Vertex, Vertex)> = Vec::new();
            for &s in g.neighbors(u) {
                if taken.contains(&s) || !colored_in(phi, u, s, &mab) {
                    continue;
                }
                for &t in g.neighbors(s) {
                    if !taken.contains(&t) && colored_in(phi, s, t, &mab) {
                        branches.push((s, t));
                    }
                }
            }
            for &(s1, t1) in &branches {
                for &(s2, t2) in &branches {
                    if s2 <= s1 || t1 == t2 || t1 == s2 || t2 == s1 {
                        continue;
                    }
                    let c1 = phi.color_between(s1, t1).unwrap();
                    let c2 = phi.color_between(s2, t2).unwrap();
                    if phi.is_missing(t2, c1) && phi.is_missing(t1, c2) {
                        out.push(Fork { a, b, u, s1, s2, t1, t2 });
                    }
                }
            }
        }
    }
    Ok(out)
}
