use serde_json::json;

use super::paths::walk_paths;
use super::{LemmaId, LemmaReport, LemmaVerdict, Witness};
use crate::discharging::classify_abc;
use crate::graph::{Graph, Vertex};

pub(crate) enum Outcome {
    /// The tuple does not meet the hypotheses.
    Skip,
    Holds,
    Fails {
        clause: u8,
        reason: String,
        extra: Option<serde_json::Value>,
    },
}

fn fails(clause: u8, reason: String) -> Outcome {
    Outcome::Fails {
        clause,
        reason,
        extra: None,
    }
}

fn require(ok: bool, clause: u8, reason: impl FnOnce() -> String) -> Result<(), Outcome> {
    if ok {
        Ok(())
    } else {
        Err(fails(clause, reason()))
    }
}

type Emit<'a> = dyn FnMut(u8, &[Vertex]) -> bool + 'a;

struct Predicate {
    id: LemmaId,
    /// Δ hypothesis; `Some(note)` when unmet.
    gate: fn(usize) -> Option<String>,
    /// Emits `(clause, tuple)` candidates until told to stop.
    generate: fn(&Graph, usize, &mut Emit<'_>),
    check: fn(&Graph, usize, u8, &[Vertex]) -> Outcome,
}

fn evaluate(g: &Graph, p: &Predicate) -> LemmaReport {
    let delta = g.max_degree();
    let mut report = LemmaReport {
        id: p.id,
        verdict: LemmaVerdict::NotApplicable,
        witness: None,
        note: String::new(),
        checked: 0,
    };
    if let Some(note) = (p.gate)(delta) {
        report.note = note;
        return report;
    }
    let mut witness = None;
    let mut checked = 0;
    (p.generate)(g, delta, &mut |clause, vs| match (p.check)(g, delta, clause, vs) {
        Outcome::Skip => true,
        Outcome::Holds => {
            checked += 1;
            true
        }
        Outcome::Fails { clause, reason, extra } => {
            checked += 1;
            witness = Some(Witness {
                clause,
                vertices: vs.to_vec(),
                reason,
                extra,
            });
            false
        }
    });
    report.checked = checked;
    if witness.is_some() {
        report.verdict = LemmaVerdict::Violated;
        report.witness = witness;
    } else if checked > 0 {
        report.verdict = LemmaVerdict::Satisfied;
        report.note = format!("{checked} configurations checked");
    } else {
        report.note = "no vertex, edge or path meets the hypotheses".into();
    }
    report
}

pub(crate) fn recheck(id: LemmaId, g: &Graph, w: &Witness) -> bool {
    let p = predicate(id);
    let delta = g.max_degree();
    (p.gate)(delta).is_none() && matches!((p.check)(g, delta, w.clause, &w.vertices), Outcome::Fails { .. })
}

fn predicate(id: LemmaId) -> &'static Predicate {
    PREDICATES.iter().find(|p| p.id == id).unwrap()
}

fn any_delta(_: usize) -> Option<String> {
    None
}

fn at_least(min: usize, delta: usize) -> Option<String> {
    (delta < min).then(|| format!("needs maximum degree at least {min}, graph has {delta}"))
}

fn exactly_seven(delta: usize) -> Option<String> {
    (delta != 7).then(|| format!("stated for maximum degree 7, graph has {delta}"))
}

fn count(g: &Graph, v: Vertex, p: impl Fn(usize) -> bool) -> usize {
    g.neighbors(v).iter().filter(|&&w| p(g.deg(w))).count()
}

fn is_path(g: &Graph, vs: &[Vertex]) -> bool {
    vs.iter().all(|&v| v < g.n())
        && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
        && vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
}

fn vertices(g: &Graph, clause: u8, emit: &mut Emit<'_>, keep: impl Fn(Vertex) -> bool) {
    for v in g.vertices() {
        if keep(v) && !emit(clause, &[v]) {
            return;
        }
    }
}

fn outcome(r: Result<(), Outcome>) -> Outcome {
    match r {
        Ok(()) => Outcome::Holds,
        Err(o) => o,
    }
}

// ---- adjacency lemma for Vizing colorings

fn val_generate(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    for e in g.edges() {
        if !emit(1, &[e.u, e.v]) {
            return;
        }
    }
    for x in g.vertices() {
        for &y in g.neighbors(x) {
            if !emit(2, &[x, y]) {
                return;
            }
        }
    }
}

fn val_check(g: &Graph, delta: usize, clause: u8, vs: &[Vertex]) -> Outcome {
    let &[x, y] = vs else { return Outcome::Skip };
    if !is_path(g, vs) {
        return Outcome::Skip;
    }
    let (dx, dy) = (g.deg(x), g.deg(y));
    match clause {
        1 => outcome(require(dx + dy >= delta + 2, 1, || {
            format!("d({x}) + d({y}) = {} < {}", dx + dy, delta + 2)
        })),
        2 => {
            let need = 2.max(delta + 1 - dy);
            let have = count(g, x, |d| d == delta);
            outcome(require(have >= need, 2, || {
                format!("{x} has a {dy}-neighbor {y} but only {have} neighbors of degree {delta}, needs {need}")
            }))
        }
        _ => Outcome::Skip,
    }
}

pub fn check_val(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::Val))
}

// ---- 3-vertices

fn three_vertices(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    vertices(g, 1, emit, |v| g.deg(v) == 3)
}

fn strong_neighbors_check(g: &Graph, delta: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x] = vs else { return Outcome::Skip };
    if x >= g.n() || g.deg(x) != 3 {
        return Outcome::Skip;
    }
    let strong: Vec<Vertex> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| {
            g.deg(y) == delta
                && g.neighbors(y)
                    .iter()
                    .all(|&w| w == x || g.deg(w) + 2 > delta)
        })
        .collect();
    if strong.len() >= 2 {
        return Outcome::Holds;
    }
    Outcome::Fails {
        clause: 1,
        reason: format!(
            "3-vertex {x} has {} neighbors of degree {delta} with no other (Δ-2)⁻-neighbor",
            strong.len()
        ),
        extra: Some(json!({ "strong_neighbors": strong })),
    }
}

pub fn check_three_vertex_strong_neighbors(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::ThreeVertexStrongNeighbors))
}

fn second_neighborhood_check(g: &Graph, delta: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x] = vs else { return Outcome::Skip };
    if x >= g.n() || g.deg(x) != 3 {
        return Outcome::Skip;
    }
    let need = delta - 4 - (delta - 1) / 3;
    let counts: Vec<(Vertex, usize)> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| g.deg(y) == delta)
        .map(|y| {
            let good = g
                .neighbors(y)
                .iter()
                .filter(|&&z| g.deg(z) == delta && count(g, z, |d| d + 3 <= delta) == 0)
                .count();
            (y, good)
        })
        .collect();
    if counts.iter().any(|&(_, c)| c >= need) {
        return Outcome::Holds;
    }
    Outcome::Fails {
        clause: 1,
        reason: format!(
            "no neighbor of degree {delta} of 3-vertex {x} has {need} neighbors of degree {delta} free of (Δ-3)⁻-neighbors"
        ),
        extra: Some(json!({ "counts": counts })),
    }
}

pub fn check_three_vertex_second_neighborhood(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::ThreeVertexSecondNeighborhood))
}

// ---- paths starting at an edge of degree sum Δ + 2

fn tight_paths(g: &Graph, delta: usize, k: usize, strict: bool, emit: &mut Emit<'_>) {
    let tight = |p: &[Vertex]| {
        p.len() < 2 || {
            let (a, b) = (g.deg(p[0]), g.deg(p[1]));
            a + b == delta + 2 && (!strict || a.max(b) < delta)
        }
    };
    walk_paths(g, k, &tight, &mut |p| emit(1, p));
}

fn delta_plus_2_generate(g: &Graph, delta: usize, emit: &mut Emit<'_>) {
    tight_paths(g, delta, 4, false, emit)
}

fn delta_plus_2_check(g: &Graph, delta: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x, y, r, s] = vs else { return Outcome::Skip };
    if !is_path(g, vs) || g.deg(x) + g.deg(y) != delta + 2 {
        return Outcome::Skip;
    }
    let (dr, ds) = (g.deg(r), g.deg(s));
    outcome((|| {
        require(dr == delta, 1, || format!("d(r) = d({r}) = {dr}, expected {delta}"))?;
        require(ds + 1 >= delta, 1, || format!("d(s) = d({s}) = {ds} < {}", delta - 1))?;
        let sub = g.deg(x).max(g.deg(y)) < delta;
        require(!sub || ds == delta, 2, || {
            format!("d(x), d(y) < {delta} but d(s) = d({s}) = {ds}")
        })
    })())
}

pub fn check_delta_plus_two_paths(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::DeltaPlusTwoPath))
}

fn long_path_generate(g: &Graph, delta: usize, emit: &mut Emit<'_>) {
    tight_paths(g, delta, 5, true, emit)
}

fn long_path_check(g: &Graph, delta: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x, y, _, _, t] = vs else { return Outcome::Skip };
    let (dx, dy) = (g.deg(x), g.deg(y));
    if !is_path(g, vs) || dx + dy != delta + 2 || dx.max(dy) >= delta {
        return Outcome::Skip;
    }
    let dt = g.deg(t);
    outcome(require(dt + 2 >= delta, 1, || {
        format!("d(t) = d({t}) = {dt} < {}", delta as i64 - 2)
    }))
}

pub fn check_delta_plus_two_long_paths(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::DeltaPlusTwoLongPath))
}

// ---- 4-vertices

fn four_vertex_generate(g: &Graph, delta: usize, emit: &mut Emit<'_>) {
    for x in g.vertices().filter(|&x| g.deg(x) == 4) {
        let mut tight = false;
        for &y in g.neighbors(x) {
            if g.deg(y) + 2 == delta {
                tight = true;
                if !emit(1, &[x, y]) {
                    return;
                }
            }
        }
        if !tight {
            for &y in g.neighbors(x) {
                if !emit(2, &[x, y]) {
                    return;
                }
            }
        }
        if !emit(3, &[x]) {
            return;
        }
    }
}

fn four_vertex_check(g: &Graph, delta: usize, clause: u8, vs: &[Vertex]) -> Outcome {
    let x = match vs.first() {
        Some(&x) if x < g.n() && g.deg(x) == 4 => x,
        _ => return Outcome::Skip,
    };
    // neighbors of z of degree at most Δ - 2, other than x
    let others = |z: Vertex| -> Vec<Vertex> {
        g.neighbors(z)
            .iter()
            .copied()
            .filter(|&u| u != x && g.deg(u) + 2 <= delta)
            .collect()
    };
    match (clause, vs) {
        (1, &[_, y]) => {
            if !g.has_edge(x, y) || g.deg(y) + 2 != delta {
                return Outcome::Skip;
            }
            for &z in g.neighbors(x) {
                for &w in g.neighbors(z) {
                    if w != x && w != y && g.deg(w) != delta {
                        return fails(
                            1,
                            format!("{w} is at distance two from {x} through {z} and has degree {}", g.deg(w)),
                        );
                    }
                }
            }
            Outcome::Holds
        }
        (2, &[_, y]) => {
            let dy = g.deg(y);
            if !g.has_edge(x, y)
                || g.neighbors(x).iter().any(|&w| g.deg(w) + 2 == delta)
                || count(g, y, |d| d + 2 <= delta) + delta < dy + 3
            {
                return Outcome::Skip;
            }
            for &z in g.neighbors(x).iter().filter(|&&z| z != y) {
                let bad = others(z);
                if !bad.is_empty() {
                    return fails(2, format!("neighbor {z} of {x} is also adjacent to the (Δ-2)⁻-vertices {bad:?}"));
                }
            }
            Outcome::Holds
        }
        (3, &[_]) => {
            if count(g, x, |d| d + 1 == delta) < 2 {
                return Outcome::Skip;
            }
            for &z in g.neighbors(x) {
                let bad = others(z);
                if !bad.is_empty() {
                    return fails(3, format!("neighbor {z} of {x} is also adjacent to the (Δ-2)⁻-vertices {bad:?}"));
                }
            }
            Outcome::Holds
        }
        _ => Outcome::Skip,
    }
}

pub fn check_four_vertex(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::FourVertex))
}

// ---- common neighbors along x y z

fn common_generate(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    let ok = |p: &[Vertex]| match p.len() {
        0 => true,
        1 => (3..=4).contains(&g.deg(p[0])),
        _ => g.deg(p[1]) == 7,
    };
    walk_paths(g, 3, &ok, &mut |p| emit(1, p));
}

fn common_check(g: &Graph, _: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x, y, z] = vs else { return Outcome::Skip };
    let dx = g.deg(x);
    if !is_path(g, vs) || !(3..=4).contains(&dx) || g.deg(y) != 7 || dx + g.deg(z) > 8 {
        return Outcome::Skip;
    }
    let common = g.common_neighbors(y, z);
    outcome(require(common + 3 <= dx, 1, || {
        format!("{y} and {z} have {common} common neighbors, at most {} allowed", dx - 3)
    }))
}

pub fn check_common_neighbors(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::CommonNeighbors))
}

// ---- neighbors with a 2-neighbor

/// `{z ∈ N(v) : z has a neighbor of degree 2}`.
pub fn n_delta_2(g: &Graph, v: Vertex) -> Vec<Vertex> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&z| count(g, z, |d| d == 2) > 0)
        .collect()
}

fn n_delta_2_generate(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    vertices(g, 1, emit, |_| true)
}

fn n_delta_2_check(g: &Graph, _: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[v] = vs else { return Outcome::Skip };
    if v >= g.n() {
        return Outcome::Skip;
    }
    let set = n_delta_2(g, v);
    if set.len() <= 5 {
        return Outcome::Holds;
    }
    Outcome::Fails {
        clause: 1,
        reason: format!("{} neighbors of {v} have a 2-neighbor", set.len()),
        extra: Some(json!({ "n_delta_2": set })),
    }
}

pub fn check_two_vertex_neighbors(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::TwoVertexNeighbors))
}

// ---- five-vertex paths from a 3-vertex

/// Paths `x y r s t` with `d(x) = 3` and `d(y)` accepted by `y_ok`,
/// followed by each extra neighbor `z` of `y` outside `{x, r, s}`
/// accepted by `z_ok`.
fn three_paths(
    g: &Graph,
    y_ok: &dyn Fn(usize) -> bool,
    z_ok: Option<&dyn Fn(usize) -> bool>,
    clause: u8,
    emit: &mut Emit<'_>,
) {
    let ok = |p: &[Vertex]| match p.len() {
        0 => true,
        1 => g.deg(p[0]) == 3,
        _ => y_ok(g.deg(p[1])),
    };
    walk_paths(g, 5, &ok, &mut |p| {
        let Some(z_ok) = z_ok else { return emit(clause, p) };
        for &z in g.neighbors(p[1]) {
            if ![p[0], p[2], p[3]].contains(&z) && z_ok(g.deg(z)) {
                let mut t = p.to_vec();
                t.push(z);
                if !emit(clause, &t) {
                    return false;
                }
            }
        }
        true
    });
}

/// Splits `x y r s t [z]`, checking the path and the position of `z`.
fn three_tuple(g: &Graph, vs: &[Vertex], with_z: bool) -> Option<([Vertex; 5], Option<Vertex>)> {
    let (path, z) = match (vs.len(), with_z) {
        (5, false) => (vs, None),
        (6, true) => (&vs[..5], Some(vs[5])),
        _ => return None,
    };
    if !is_path(g, path) || g.deg(path[0]) != 3 {
        return None;
    }
    if let Some(z) = z {
        if !g.has_edge(path[1], z) || [path[0], path[2], path[3]].contains(&z) {
            return None;
        }
    }
    Some((path.try_into().unwrap(), z))
}

fn three_long_generate(g: &Graph, delta: usize, emit: &mut Emit<'_>) {
    three_paths(g, &|d| d == delta, Some(&|d| d + 2 <= delta), 1, emit)
}

fn three_long_check(g: &Graph, delta: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let Some(([_, y, _, s, t], Some(z))) = three_tuple(g, vs, true) else {
        return Outcome::Skip;
    };
    if g.deg(y) != delta || g.deg(z) + 2 > delta {
        return Outcome::Skip;
    }
    let (ds, dt, dz) = (g.deg(s), g.deg(t), g.deg(z));
    outcome((|| {
        require(ds + 1 >= delta, 1, || format!("d(s) = d({s}) = {ds} < {}", delta - 1))?;
        require(dt + 4 > delta || dz + dt > delta, 2, || {
            format!("d(t) = d({t}) = {dt} <= Δ-4 and d(z) + d(t) = {} < {}", dz + dt, delta + 1)
        })
    })())
}

pub fn check_three_vertex_long_paths(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::ThreeVertexLongPath))
}

fn three_seven_generate(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    let mut go_on = true;
    three_paths(g, &|d| d == 6, None, 1, &mut |c, p| {
        go_on = emit(c, p);
        go_on
    });
    if !go_on {
        return;
    }
    three_paths(g, &|d| d == 7, Some(&|d| d <= 4), 2, &mut |c, p| {
        go_on = emit(c, p);
        go_on
    });
    if !go_on {
        return;
    }
    three_paths(g, &|d| d == 7, Some(&|d| d == 5), 3, emit);
}

fn three_seven_check(g: &Graph, _: usize, clause: u8, vs: &[Vertex]) -> Outcome {
    let Some(([_, y, r, s, t], z)) = three_tuple(g, vs, clause != 1) else {
        return Outcome::Skip;
    };
    let (dy, dr, ds, dt) = (g.deg(y), g.deg(r), g.deg(s), g.deg(t));
    let dz = z.map(|z| g.deg(z));
    match clause {
        1 if dy == 6 => outcome(require(dr == 7 && ds == 7 && dt >= 5, 1, || {
            format!("d(y) = 6 but (d(r), d(s), d(t)) = ({dr}, {ds}, {dt})")
        })),
        2 if dy == 7 && dz.is_some_and(|d| d <= 4) => outcome(require(ds >= 6 && dt >= 4, 2, || {
            format!("y has another 4⁻-neighbor but (d(s), d(t)) = ({ds}, {dt})")
        })),
        3 if dy == 7 && dz == Some(5) => outcome(require(
            (ds == 6 && dt >= 4) || (ds == 7 && dt >= 3),
            3,
            || format!("y has a 5-neighbor but (d(s), d(t)) = ({ds}, {dt})"),
        )),
        _ => Outcome::Skip,
    }
}

pub fn check_three_vertex_paths_seven(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::ThreeVertexPathSeven))
}

// ---- edges of degree sum Δ + 3

fn delta_plus_3_generate(g: &Graph, delta: usize, emit: &mut Emit<'_>) {
    for x in g.vertices() {
        for &y in g.neighbors(x) {
            let (dx, dy) = (g.deg(x), g.deg(y));
            if dx + dy == delta + 3 && dx.max(dy) < delta && !emit(1, &[x, y]) {
                return;
            }
        }
    }
}

fn delta_plus_3_check(g: &Graph, delta: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x, y] = vs else { return Outcome::Skip };
    if !is_path(g, vs) {
        return Outcome::Skip;
    }
    let (dx, dy) = (g.deg(x), g.deg(y));
    if dx + dy != delta + 3 || dx.max(dy) >= delta {
        return Outcome::Skip;
    }
    let good = g
        .neighbors(x)
        .iter()
        .filter(|&&w| {
            g.deg(w) == delta
                && g.neighbors(w)
                    .iter()
                    .all(|&u| u == x || u == y || g.deg(u) + 2 > delta)
        })
        .count();
    outcome(require(good + 2 >= dx, 1, || {
        format!("{x} has {good} clean neighbors of degree {delta}, needs {}", dx - 2)
    }))
}

pub fn check_delta_plus_three_edges(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::DeltaPlusThreeEdge))
}

// ---- 5-vertices, Δ = 7

fn five_vertex_generate(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    for x in g.vertices().filter(|&x| g.deg(x) == 5) {
        let d6 = count(g, x, |d| d == 6);
        let d7 = count(g, x, |d| d == 7);
        for (clause, hit) in [(1, d6 >= 3), (2, d6 == 2), (3, d7 == 4)] {
            if hit && !emit(clause, &[x]) {
                return;
            }
        }
    }
}

fn five_vertex_check(g: &Graph, _: usize, clause: u8, vs: &[Vertex]) -> Outcome {
    let &[x] = vs else { return Outcome::Skip };
    if x >= g.n() || g.deg(x) != 5 {
        return Outcome::Skip;
    }
    let d6 = count(g, x, |d| d == 6);
    let sevens: Vec<(Vertex, usize)> = g
        .neighbors(x)
        .iter()
        .filter(|&&w| g.deg(w) == 7)
        .map(|&w| (w, count(g, w, |d| d <= 5)))
        .collect();
    let at_most = |k: usize| sevens.iter().filter(|&&(_, c)| c <= k).count();
    let detail = || format!("7-neighbors of {x} with their 5⁻-neighbor counts: {sevens:?}");
    match clause {
        1 if d6 >= 3 => outcome(require(sevens.iter().all(|&(_, c)| c == 1), 1, detail)),
        2 if d6 == 2 => outcome(require(at_most(2) >= 2, 2, detail)),
        3 if sevens.len() == 4 => outcome(require(at_most(3) >= 2, 3, detail)),
        _ => Outcome::Skip,
    }
}

pub fn check_five_vertex(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::FiveVertex))
}

// ---- the sets A, B, C around 7-vertices without 5⁻-neighbors

fn abc_generate(g: &Graph, _: usize, emit: &mut Emit<'_>) {
    vertices(g, 1, emit, |x| g.deg(x) == 7 && count(g, x, |d| d <= 5) == 0)
}

fn abc_check(g: &Graph, _: usize, _: u8, vs: &[Vertex]) -> Outcome {
    let &[x] = vs else { return Outcome::Skip };
    if x >= g.n() || g.deg(x) != 7 || count(g, x, |d| d <= 5) > 0 {
        return Outcome::Skip;
    }
    let cls = classify_abc(g);
    let pick = |set: &[bool]| -> Vec<Vertex> { g.neighbors(x).iter().copied().filter(|&w| set[w]).collect() };
    let (a, b, c) = (pick(&cls.a), pick(&cls.b), pick(&cls.c));
    let extra = json!({ "a": a, "b": b, "c": c });
    let nonempty = [&a, &b, &c].iter().filter(|s| !s.is_empty()).count();
    let failure = if nonempty > 1 {
        Some((1, format!("{x} meets {nonempty} of the sets A, B, C")))
    } else if a.len() > 5 || b.len() > 1 {
        Some((2, format!("{x} has {} neighbors in A and {} in B", a.len(), b.len())))
    } else {
        None
    };
    match failure {
        None => Outcome::Holds,
        Some((clause, reason)) => Outcome::Fails {
            clause,
            reason,
            extra: Some(extra),
        },
    }
}

pub fn check_abc_sets(g: &Graph) -> LemmaReport {
    evaluate(g, predicate(LemmaId::AbcSets))
}

static PREDICATES: [Predicate; 13] = [
    Predicate {
        id: LemmaId::Val,
        gate: any_delta,
        generate: val_generate,
        check: val_check,
    },
    Predicate {
        id: LemmaId::ThreeVertexStrongNeighbors,
        gate: |d| at_least(5, d),
        generate: three_vertices,
        check: strong_neighbors_check,
    },
    Predicate {
        id: LemmaId::ThreeVertexSecondNeighborhood,
        gate: |d| at_least(6, d),
        generate: three_vertices,
        check: second_neighborhood_check,
    },
    Predicate {
        id: LemmaId::DeltaPlusTwoPath,
        gate: any_delta,
        generate: delta_plus_2_generate,
        check: delta_plus_2_check,
    },
    Predicate {
        id: LemmaId::FourVertex,
        gate: |d| at_least(6, d),
        generate: four_vertex_generate,
        check: four_vertex_check,
    },
    Predicate {
        id: LemmaId::CommonNeighbors,
        gate: exactly_seven,
        generate: common_generate,
        check: common_check,
    },
    Predicate {
        id: LemmaId::TwoVertexNeighbors,
        gate: |d| at_least(7, d),
        generate: n_delta_2_generate,
        check: n_delta_2_check,
    },
    Predicate {
        id: LemmaId::DeltaPlusTwoLongPath,
        gate: any_delta,
        generate: long_path_generate,
        check: long_path_check,
    },
    Predicate {
        id: LemmaId::ThreeVertexLongPath,
        gate: any_delta,
        generate: three_long_generate,
        check: three_long_check,
    },
    Predicate {
        id: LemmaId::ThreeVertexPathSeven,
        gate: exactly_seven,
        generate: three_seven_generate,
        check: three_seven_check,
    },
    Predicate {
        id: LemmaId::DeltaPlusThreeEdge,
        gate: any_delta,
        generate: delta_plus_3_generate,
        check: delta_plus_3_check,
    },
    Predicate {
        id: LemmaId::FiveVertex,
        gate: exactly_seven,
        generate: five_vertex_generate,
        check: five_vertex_check,
    },
    Predicate {
        id: LemmaId::AbcSets,
        gate: exactly_seven,
        generate: abc_generate,
        check: abc_check,
    },
];
