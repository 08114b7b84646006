//! Graphs of maximum degree Δ and average degree exactly Δ - 1 built from
//! low-degree "spoke" vertices attached to a regular "hub".

use super::{Graph, GraphError};

/// Which incidence pattern to realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyVariant {
    /// Δ = 7 only: degree sequence `(4^t, 7^{2t})`, each 4-vertex has four
    /// 7-neighbors and each 7-vertex has exactly two 4-neighbors.
    TwoSpokesPerHub,
    /// Δ = 2k + 1: degree sequence `(k^t, Δ^{kt})`, each k-vertex has k
    /// Δ-neighbors and each Δ-vertex has exactly one k-neighbor.
    OneSpokePerHub,
}

fn fail(msg: impl Into<String>) -> GraphError {
    GraphError::Construction(msg.into())
}

/// Builds the family member for `(delta, t)`.
///
/// Vertices `0..s` are the low-degree spokes and the remaining vertices
/// form the hub.
///
/// For [`FamilyVariant::TwoSpokesPerHub`] the hub is a 5-regular graph on
/// `2t` vertices chosen so that no 7-vertex shares more than one neighbor
/// with any 4-vertex adjacent to it whenever that is possible:
///
/// * `t = 3`: the hub is forced to be `K6`; spoke `i` meets `2i..2i+3 (mod 6)`.
/// * `t = 4`: circulant on `Z_8` with offsets `±1, ±3, 4`; spokes `0, 2`
///   meet the even hub vertices and spokes `1, 3` the odd ones.
/// * `t >= 5`: circulant on `Z_{2t}` with offsets `±2, ±4, t`; spoke `i`
///   meets `2i..2i+3 (mod 2t)`.
pub fn build_family(delta: usize, t: usize, variant: FamilyVariant) -> Result<Graph, GraphError> {
    match variant {
        FamilyVariant::TwoSpokesPerHub => two_spokes(delta, t),
        FamilyVariant::OneSpokePerHub => one_spoke(delta, t),
    }
}

/// Edges `{i, i + d}` for every offset `d`; each offset stands for `±d`.
fn circulant(h: usize, offsets: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..h)
        .flat_map(|i| offsets.iter().map(move |&d| (i, (i + d) % h)))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn two_spokes(delta: usize, t: usize) -> Result<Graph, GraphError> {
    if delta != 7 {
        return Err(fail(format!(
            "the two-spokes-per-hub variant is defined for delta = 7, got {delta}"
        )));
    }
    if t < 3 {
        return Err(fail(format!(
            "t = {t}: the hub must be 5-regular on 2t = {} vertices, which needs 2t >= 6",
            2 * t
        )));
    }
    let h = 2 * t;
    let (offsets, spokes): (Vec<usize>, Vec<Vec<usize>>) = match t {
        3 => (vec![1, 2, 3], consecutive_spokes(t, h)),
        4 => (
            vec![1, 3, 4],
            vec![vec![0, 2, 4, 6], vec![1, 3, 5, 7], vec![0, 2, 4, 6], vec![1, 3, 5, 7]],
        ),
        _ => (vec![2, 4, t], consecutive_spokes(t, h)),
    };
    assemble(t, h, &offsets, &spokes)
}

fn consecutive_spokes(t: usize, h: usize) -> Vec<Vec<usize>> {
    (0..t).map(|i| (0..4).map(|j| (2 * i + j) % h).collect()).collect()
}

fn one_spoke(delta: usize, t: usize) -> Result<Graph, GraphError> {
    if delta < 7 || delta % 2 == 0 {
        return Err(fail(format!("delta must be odd and at least 7, got {delta}")));
    }
    let k = (delta - 1) / 2;
    let h = k * t;
    // hub is 2k-regular: circulant with offsets 1..=k needs h >= 2k + 1
    if h < 2 * k + 1 {
        return Err(fail(format!(
            "t = {t}: the hub must be {}-regular on kt = {h} vertices, which needs kt >= {}",
            2 * k,
            2 * k + 1
        )));
    }
    let offsets: Vec<usize> = (1..=k).collect();
    let spokes: Vec<Vec<usize>> = (0..t).map(|i| (i * k..(i + 1) * k).collect()).collect();
    assemble(t, h, &offsets, &spokes)
}

fn assemble(
    spokes: usize,
    hub: usize,
    offsets: &[usize],
    attach: &[Vec<usize>],
) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = circulant(hub, offsets)
        .into_iter()
        .map(|(a, b)| (spokes + a, spokes + b))
        .collect();
    for (i, hubs) in attach.iter().enumerate() {
        edges.extend(hubs.iter().map(|&j| (i, spokes + j)));
    }
    Graph::from_edges(spokes + hub, edges)
}
