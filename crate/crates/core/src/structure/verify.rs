use super::{
    elementary_failure, is_simple_path, missing_union, uncolored_edge, Broom, Fork, KiersteadPath,
    Kite, MultiFan, StructureError, StructureKind, StructureReport,
};
use crate::coloring::{Color, PartialEdgeColoring};
use crate::graph::{EdgeId, Vertex};

fn invalid(kind: StructureKind, reason: impl Into<String>) -> StructureError {
    StructureError::Invalid {
        kind,
        reason: reason.into(),
    }
}

fn check_fan(phi: &PartialEdgeColoring<'_>, e: EdgeId, fan: &MultiFan) -> Result<(), StructureError> {
    uncolored_edge(phi, e)?;
    let g = phi.graph();
    let kind = StructureKind::MultiFan;
    let x = fan.center;
    if fan.leaves.is_empty() || fan.leaves.len() != fan.edges.len() || fan.edges[0] != e {
        return Err(invalid(kind, "the first edge must be the uncolored edge"));
    }
    let mut seen = fan.leaves.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != fan.leaves.len() || seen.contains(&x) {
        return Err(invalid(kind, "fan vertices repeat"));
    }
    for (i, (&y, &f)) in fan.leaves.iter().zip(&fan.edges).enumerate() {
        if g.edge_id(x, y) != Some(f) {
            return Err(invalid(kind, format!("edge {f} is not {x}-{y}")));
        }
        if i > 0 {
            let ok = phi
                .color(f)
                .is_some_and(|c| fan.leaves[..i].iter().any(|&w| phi.is_missing(w, c)));
            if !ok {
                return Err(invalid(
                    kind,
                    format!("color of {x}-{y} is missing at no earlier fan vertex"),
                ));
            }
        }
    }
    Ok(())
}

/// The fan's vertex set is elementary, and for every `α ∈ φ̄(x)` and
/// `β ∈ φ̄(y_i)` the chains at `x` and `y_i` coincide.
pub fn verify_multifan(
    phi: &PartialEdgeColoring<'_>,
    e: EdgeId,
    fan: &MultiFan,
) -> Result<StructureReport, StructureError> {
    check_fan(phi, e, fan)?;
    let kind = StructureKind::MultiFan;
    let x = fan.center;
    let mut vs = vec![x];
    vs.extend(&fan.leaves);
    if let Some(f) = elementary_failure(phi, &vs) {
        return Ok(StructureReport::new(kind, fan, Some(format!("not elementary: {f}"))));
    }
    for alpha in phi.missing_colors(x).iter() {
        for &y in &fan.leaves {
            for beta in phi.missing_colors(y).iter() {
                if !phi.kempe_chain(x, alpha, beta).contains(y) {
                    return Ok(StructureReport::new(
                        kind,
                        fan,
                        Some(format!("P_{x}({alpha},{beta}) does not contain {y}")),
                    ));
                }
            }
        }
    }
    Ok(StructureReport::new(kind, fan, None))
}

/// Path `x y z` with `xy` the uncolored edge.
///
/// (1) when `d(z) <= 2Δ - d(x) - d(y) + 1`: `φ(yz)` is present at `x`, and
/// for each `β ∈ φ̄(z) ∩ (φ̄(x) ∪ φ̄(y))` the `(φ(yz), β)`-chain at `z`
/// ends at `x` or `y`; (2) when `φ(yz) ∈ φ̄(x)`: every color missing at `x`
/// or `y` is present at `z`. Reports not-applicable when neither
/// hypothesis holds.
pub fn verify_path_lemma(
    phi: &PartialEdgeColoring<'_>,
    x: Vertex,
    y: Vertex,
    z: Vertex,
) -> Result<StructureReport, StructureError> {
    let g = phi.graph();
    let kind = StructureKind::PathLemma;
    let instance = [x, y, z];
    if !is_simple_path(g, &instance) {
        return Err(invalid(kind, format!("{x} {y} {z} is not a path")));
    }
    let e = g.edge_id(x, y).unwrap();
    uncolored_edge(phi, e)?;
    let Some(alpha) = phi.color_between(y, z) else {
        return Err(invalid(kind, format!("{y}-{z} is uncolored")));
    };
    let delta = g.max_degree();
    let first = g.deg(z) + g.deg(x) + g.deg(y) <= 2 * delta + 1;
    let second = phi.is_missing(x, alpha);
    if !first && !second {
        return Ok(StructureReport::not_applicable(kind, &instance));
    }
    let mxy = phi.missing_colors(x).union(&phi.missing_colors(y));
    if first {
        if phi.is_missing(x, alpha) {
            return Ok(StructureReport::new(
                kind,
                &instance,
                Some(format!("color {alpha} of {y}-{z} is missing at {x}")),
            ));
        }
        for beta in phi.missing_colors(z).intersection(&mxy).iter() {
            let chain = phi.kempe_chain(z, alpha, beta);
            if !chain.ends_at(x) && !chain.ends_at(y) {
                return Ok(StructureReport::new(
                    kind,
                    &instance,
                    Some(format!("P_{z}({alpha},{beta}) ends at neither {x} nor {y}")),
                ));
            }
        }
    }
    if second {
        if let Some(c) = mxy.intersection(&phi.missing_colors(z)).first() {
            return Ok(StructureReport::new(
                kind,
                &instance,
                Some(format!("color {c} is missing at {z} and at {x} or {y}")),
            ));
        }
    }
    Ok(StructureReport::new(kind, &instance, None))
}

fn check_p4(phi: &PartialEdgeColoring<'_>, path: &KiersteadPath) -> Result<(), StructureError> {
    let g = phi.graph();
    let kind = StructureKind::KiersteadP4;
    let v = &path.vertices;
    if v.len() != 4 || !is_simple_path(g, v) {
        return Err(invalid(kind, format!("{v:?} is not a path on four vertices")));
    }
    uncolored_edge(phi, g.edge_id(v[0], v[1]).unwrap())?;
    for i in 1..3 {
        let c = phi.color_between(v[i], v[i + 1]);
        if !c.is_some_and(|c| v[..i].iter().any(|&w| phi.is_missing(w, c))) {
            return Err(invalid(
                kind,
                format!("color of {}-{} is missing at no earlier vertex", v[i], v[i + 1]),
            ));
        }
    }
    Ok(())
}

/// `V(K)` is elementary, except when `d(y_1) = d(y_2) = Δ`: then
/// `{y_0, y_1, y_2}` is elementary, `y_2` and `y_3` share no missing color
/// and at most one color in total is missing at `y_3` and at `y_0` or `y_1`.
pub fn verify_kierstead_p4(
    phi: &PartialEdgeColoring<'_>,
    path: &KiersteadPath,
) -> Result<StructureReport, StructureError> {
    check_p4(phi, path)?;
    let g = phi.graph();
    let kind = StructureKind::KiersteadP4;
    let v = &path.vertices;
    let delta = g.max_degree();
    if g.deg(v[1]) != delta || g.deg(v[2]) != delta {
        let f = elementary_failure(phi, v).map(|f| format!("not elementary: {f}"));
        return Ok(StructureReport::new(kind, path, f));
    }
    if let Some(f) = elementary_failure(phi, &v[..3]) {
        return Ok(StructureReport::new(kind, path, Some(format!("not elementary: {f}"))));
    }
    let m3 = phi.missing_colors(v[3]);
    if let Some(c) = m3.intersection(&phi.missing_colors(v[2])).first() {
        return Ok(StructureReport::new(
            kind,
            path,
            Some(format!("vertices {} and {} both miss color {c}", v[2], v[3])),
        ));
    }
    let shared = m3.intersection(&missing_union(phi, &v[..2])).len();
    let f = (shared > 1).then(|| format!("{} shares {shared} missing colors with {} and {}", v[3], v[0], v[1]));
    Ok(StructureReport::new(kind, path, f))
}

#[derive(serde::Serialize)]
struct LinkInstance<'a> {
    path: &'a [Vertex],
    alpha: Color,
    beta: Color,
    i: usize,
}

/// For a Kierstead path `y_0 y_1 y_2 y_3` with `min(d(y_1), d(y_2)) < Δ`,
/// `α ∈ φ̄(y_3)`, `β ∈ φ̄(y_i)` and `β` not on `y_1y_2` or `y_2y_3`: the
/// `(α, β)`-chain at `y_3` ends at `y_i`.
pub fn verify_p4link(
    phi: &PartialEdgeColoring<'_>,
    path: &KiersteadPath,
    alpha: Color,
    beta: Color,
    i: usize,
) -> Result<StructureReport, StructureError> {
    check_p4(phi, path)?;
    let g = phi.graph();
    let kind = StructureKind::P4Link;
    let v = &path.vertices;
    let instance = LinkInstance {
        path: v,
        alpha,
        beta,
        i,
    };
    let applicable = i < 3
        && g.deg(v[1]).min(g.deg(v[2])) < g.max_degree()
        && phi.is_missing(v[3], alpha)
        && phi.is_missing(v[i], beta)
        && phi.color_between(v[1], v[2]) != Some(beta)
        && phi.color_between(v[2], v[3]) != Some(beta);
    if !applicable {
        return Ok(StructureReport::not_applicable(kind, &instance));
    }
    let chain = phi.kempe_chain(v[3], alpha, beta);
    let f = (!chain.ends_at(v[i])).then(|| format!("P_{}({alpha},{beta}) does not end at {}", v[3], v[i]));
    Ok(StructureReport::new(kind, &instance, f))
}

/// When `min(d(y_1), d(y_2)) < Δ` the broom's vertex set is elementary.
pub fn verify_broom(phi: &PartialEdgeColoring<'_>, broom: &Broom) -> Result<StructureReport, StructureError> {
    let g = phi.graph();
    let kind = StructureKind::Broom;
    let [y0, y1, y2] = broom.stem;
    let vs = broom.vertices();
    if !is_simple_path(g, &broom.stem) || broom.bristles.is_empty() {
        return Err(invalid(kind, "needs a stem path and at least one bristle"));
    }
    let mut sorted = vs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != vs.len() {
        return Err(invalid(kind, "vertices repeat"));
    }
    uncolored_edge(phi, g.edge_id(y0, y1).unwrap())?;
    if !phi.color_between(y1, y2).is_some_and(|c| phi.is_missing(y0, c)) {
        return Err(invalid(kind, format!("color of {y1}-{y2} is not missing at {y0}")));
    }
    for (i, &y) in broom.bristles.iter().enumerate() {
        let ok = phi
            .color_between(y2, y)
            .is_some_and(|c| vs[..3 + i].iter().any(|&w| phi.is_missing(w, c)));
        if !ok {
            return Err(invalid(kind, format!("bristle {y} is not attached by an earlier missing color")));
        }
    }
    if g.deg(y1).min(g.deg(y2)) >= g.max_degree() {
        return Ok(StructureReport::not_applicable(kind, broom));
    }
    let f = elementary_failure(phi, &vs).map(|f| format!("not elementary: {f}"));
    Ok(StructureReport::new(kind, broom, f))
}

/// For a kite whose two Kierstead paths `a b u s1 t1`, `b a c u s2 t2`
/// end in equally colored edges: at most four colors are missing at `t1`,
/// at `t2` and at `a` or `b`.
pub fn verify_kite(phi: &PartialEdgeColoring<'_>, kite: &Kite) -> Result<StructureReport, StructureError> {
    let g = phi.graph();
    let kind = StructureKind::Kite;
    let Kite { a, b, c, u, s1, s2, t1, t2 } = *kite;
    let mut vs = kite.vertices().to_vec();
    vs.sort_unstable();
    vs.dedup();
    let edges = [(a, b), (a, c), (b, u), (c, u), (u, s1), (u, s2), (s1, t1), (s2, t2)];
    if vs.len() != 8 || edges.iter().any(|&(p, q)| p >= g.n() || q >= g.n() || !g.has_edge(p, q)) {
        return Err(invalid(kind, "vertices repeat or an edge is absent"));
    }
    uncolored_edge(phi, g.edge_id(a, b).unwrap())?;
    let is_kierstead = |path: &[Vertex]| {
        (1..path.len() - 1).all(|i| {
            phi.color_between(path[i], path[i + 1])
                .is_some_and(|col| path[..i].iter().any(|&w| phi.is_missing(w, col)))
        })
    };
    let same = phi.color_between(s1, t1) == phi.color_between(s2, t2);
    if !same || !is_kierstead(&[a, b, u, s1, t1]) || !is_kierstead(&[b, a, c, u, s2, t2]) {
        return Ok(StructureReport::not_applicable(kind, kite));
    }
    let count = phi
        .missing_colors(t1)
        .intersection(&phi.missing_colors(t2))
        .intersection(&missing_union(phi, &[a, b]))
        .len();
    let f = (count > 4).then(|| format!("{count} colors missing at {t1}, {t2} and at {a} or {b}"));
    Ok(StructureReport::new(kind, kite, f))
}

/// A fork is impossible in a Δ-critical graph once
/// `Δ >= d(a) + d(t1) + d(t2) + 1`; below that the report is
/// not-applicable.
pub fn check_fork(phi: &PartialEdgeColoring<'_>, fork: &Fork) -> StructureReport {
    let g = phi.graph();
    let kind = StructureKind::Fork;
    if g.max_degree() > g.deg(fork.a) + g.deg(fork.t1) + g.deg(fork.t2) {
        StructureReport::new(kind, fork, Some("fork present while the degree bound holds".into()))
    } else {
        StructureReport::not_applicable(kind, fork)
    }
}
