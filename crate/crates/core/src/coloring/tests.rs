use super::*;
use crate::graph::tests::{complete, cycle, petersen, star};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn path(edges: usize) -> Graph {
    Graph::from_edges(edges + 1, (0..edges).map(|i| (i, i + 1))).unwrap()
}

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}

/// Plain recursive counter over edges in id order, no pruning at all.
fn brute_count(g: &Graph, skip: Option<EdgeId>, k: Color) -> u64 {
    fn go(g: &Graph, skip: Option<EdgeId>, k: Color, e: usize, colors: &mut Vec<Option<Color>>) -> u64 {
        if e == g.m() {
            return 1;
        }
        if Some(e) == skip {
            return go(g, skip, k, e + 1, colors);
        }
        let mut total = 0;
        for c in 1..=k {
            colors[e] = Some(c);
            if is_proper_assignment(g, k, colors) {
                total += go(g, skip, k, e + 1, colors);
            }
        }
        colors[e] = None;
        total
    }
    go(g, skip, k, 0, &mut vec![None; g.m()])
}

fn brute_colorable(g: &Graph, k: Color) -> bool {
    fn go(g: &Graph, k: Color, e: usize, colors: &mut Vec<Option<Color>>) -> bool {
        if e == g.m() {
            return true;
        }
        for c in 1..=k {
            colors[e] = Some(c);
            if is_proper_assignment(g, k, colors) && go(g, k, e + 1, colors) {
                return true;
            }
        }
        colors[e] = None;
        false
    }
    go(g, k, 0, &mut vec![None; g.m()])
}

fn brute_chi(g: &Graph) -> usize {
    (0..).find(|&k| brute_colorable(g, k as Color)).unwrap()
}

fn path_coloring<'g>(g: &'g Graph, colors: &[Color]) -> PartialEdgeColoring<'g> {
    let a: Vec<Option<Color>> = colors.iter().map(|&c| Some(c)).collect();
    PartialEdgeColoring::from_assignment(g, 3, &a).unwrap()
}

#[test]
fn missing_colors_on_a_path() {
    let g = path(2);
    let phi = path_coloring(&g, &[1, 2]);
    assert_eq!(phi.missing_colors(1), [3].into_iter().collect());
    assert_eq!(phi.missing_colors(0), [2, 3].into_iter().collect());
    assert_eq!(phi.present_colors(1), [1, 2].into_iter().collect());
}

#[test]
fn set_rejects_conflicts_and_out_of_range() {
    let g = path(2);
    let mut phi = PartialEdgeColoring::new(&g, 3);
    phi.set(0, Some(1)).unwrap();
    assert_eq!(
        phi.set(1, Some(1)),
        Err(ColoringError::Conflict { color: 1, vertex: 1 })
    );
    assert!(matches!(phi.set(1, Some(4)), Err(ColoringError::ColorOutOfRange { .. })));
    assert!(matches!(phi.set(1, Some(0)), Err(ColoringError::ColorOutOfRange { .. })));
    phi.set(0, Some(2)).unwrap();
    phi.set(1, Some(1)).unwrap();
    assert!(phi.is_proper());
}

#[test]
fn kempe_path_and_flip() {
    // 0-1-2-3 colored 1,2,1
    let g = path(3);
    let mut phi = path_coloring(&g, &[1, 2, 1]);
    let chain = phi.kempe_chain(1, 1, 2);
    assert_eq!(chain.shape, ChainShape::Path);
    assert_eq!(chain.vertices.len(), 4);
    assert!(chain.ends_at(0) && chain.ends_at(3) && !chain.ends_at(1));
    let from_end = phi.kempe_chain(3, 2, 1);
    assert_eq!(from_end.ends(), Some((0, 3)));
    let before = phi.clone();
    phi.flip(&chain).unwrap();
    assert_eq!(phi.assignment(), &[Some(2), Some(1), Some(2)]);
    assert!(phi.is_proper());
    let back = phi.kempe_chain(1, 1, 2);
    phi.flip(&back).unwrap();
    assert_eq!(phi, before);
}

#[test]
fn kempe_chain_of_equal_colors_is_the_vertex() {
    let g = path(3);
    let phi = path_coloring(&g, &[1, 2, 1]);
    let ch = phi.kempe_chain(2, 2, 2);
    assert_eq!(ch.vertices, [2]);
    assert!(ch.is_trivial());
    let ch = phi.kempe_chain(0, 2, 3);
    assert_eq!(ch.vertices, [0]);
}

#[test]
fn kempe_cycle() {
    let g = cycle(4);
    // edges 0-1, 0-3, 1-2, 2-3
    let a = [Some(1), Some(2), Some(2), Some(1)];
    let phi = PartialEdgeColoring::from_assignment(&g, 3, &a).unwrap();
    let ch = phi.kempe_chain(0, 1, 2);
    assert_eq!(ch.shape, ChainShape::Cycle);
    assert_eq!(ch.vertices, [0, 1, 2, 3]);
    assert_eq!(ch.edges.len(), 4);
    assert!(!ch.ends_at(0));
}

#[test]
fn stale_chain_is_rejected_without_mutation() {
    let g = path(3);
    let mut phi = path_coloring(&g, &[1, 2, 1]);
    let chain = phi.kempe_chain(1, 1, 2);
    phi.set(2, Some(3)).unwrap();
    let snapshot = phi.clone();
    assert!(matches!(phi.flip(&chain), Err(ColoringError::StaleChain { .. })));
    assert_eq!(phi, snapshot);
}

#[test]
fn elementary_sets() {
    let g = path(2);
    let mut phi = PartialEdgeColoring::new(&g, 2);
    phi.set(0, Some(1)).unwrap();
    phi.set(1, Some(2)).unwrap();
    // 0 misses 2, 2 misses 1
    assert!(is_elementary(&phi, &[0, 2]));
    assert!(is_elementary(&phi, &[0]));
    assert!(is_elementary(&phi, &[]));
    let g = star(3);
    let mut phi = PartialEdgeColoring::new(&g, 3);
    phi.set(0, Some(2)).unwrap();
    phi.set(1, Some(3)).unwrap();
    // two leaves both missing color 1
    assert!(!is_elementary(&phi, &[1, 2]));
}

#[test]
fn json_round_trip() {
    let g = petersen();
    let phi = color_with_delta_plus_one(&g);
    let back = PartialEdgeColoring::from_json(&g, &phi.to_json()).unwrap();
    assert_eq!(back, phi);
}

#[test]
fn chains_partition_the_two_colored_subgraph() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(2..30);
        let g = random_graph(n, rng.gen_range(0.05..0.6), &mut rng);
        let phi = color_with_delta_plus_one(&g);
        let k = phi.k();
        for a in 1..=k {
            for b in a + 1..=k {
                for u in g.vertices() {
                    let pu = phi.kempe_chain(u, a, b);
                    for &w in &pu.vertices {
                        let pw = phi.kempe_chain(w, a, b);
                        let mut s1 = pu.vertices.clone();
                        let mut s2 = pw.vertices.clone();
                        s1.sort_unstable();
                        s2.sort_unstable();
                        assert_eq!(s1, s2);
                    }
                }
            }
        }
    }
}

#[test]
fn random_flips_stay_proper() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let n = rng.gen_range(2..40);
        let g = random_graph(n, rng.gen_range(0.05..0.5), &mut rng);
        let mut phi = color_with_delta_plus_one(&g);
        let k = phi.k();
        for _ in 0..50 {
            let v = rng.gen_range(0..n);
            let a = rng.gen_range(1..=k);
            let b = rng.gen_range(1..=k);
            let ch = phi.kempe_chain(v, a, b);
            phi.flip(&ch).unwrap();
            assert!(is_proper_assignment(&g, k, phi.assignment()));
            for v in g.vertices() {
                assert_eq!(phi.missing_colors(v).len(), k as usize - g.deg(v));
            }
        }
    }
}

#[test]
fn chromatic_index_matches_brute_force() {
    for (g, chi) in [
        (cycle(5), 3),
        (cycle(6), 2),
        (complete(4), 3),
        (complete(5), 5),
        (petersen(), 4),
    ] {
        let v = chromatic_index_exact(&g, SearchBudget::default()).unwrap();
        assert_eq!(v.chi_prime, chi);
        assert_eq!(brute_chi(&g), chi);
        let w = v.witness.unwrap();
        assert!(w.is_total() && w.is_proper() && w.colors_used() <= chi);
    }
}

#[test]
fn chromatic_index_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let n = rng.gen_range(1..8);
        let g = random_graph(n, rng.gen_range(0.2..0.9), &mut rng);
        let v = chromatic_index_exact(&g, SearchBudget::default()).unwrap();
        assert_eq!(v.chi_prime, brute_chi(&g), "{:?}", g.edges());
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = petersen();
    let r = chromatic_index_exact(&g, SearchBudget(3));
    assert_eq!(r.unwrap_err(), ColoringError::BudgetExhausted(3));
    assert!(matches!(
        is_k_colorable(&g, None, 64, SearchBudget::default()),
        Err(ColoringError::PaletteTooLarge(64))
    ));
}

#[test]
fn odd_cycles_are_critical() {
    for j in 1..=6 {
        let c = is_critical(&cycle(2 * j + 1), SearchBudget::default()).unwrap();
        assert!(c.critical, "C{}", 2 * j + 1);
    }
}

#[test]
fn non_critical_witnesses() {
    let c = is_critical(&petersen(), SearchBudget::default()).unwrap();
    assert!(!c.critical);
    let Some(CriticalityWitness::NonCriticalEdge(edge)) = c.witness else {
        panic!("{c:?}");
    };
    let g = petersen();
    let id = g.edge_id(edge.u, edge.v).unwrap();
    assert_eq!(brute_count_k_colorable(&g, id, 3), false);

    let c = is_critical(&complete(4), SearchBudget::default()).unwrap();
    assert_eq!(c.witness, Some(CriticalityWitness::ClassOne));
    let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
    let c = is_critical(&two, SearchBudget::default()).unwrap();
    assert_eq!(c.witness, Some(CriticalityWitness::Disconnected));
    // K5 minus an edge is still overfull
    let k5 = complete(5);
    let c = is_critical(&k5, SearchBudget::default()).unwrap();
    assert!(!c.critical);
}

fn brute_count_k_colorable(g: &Graph, skip: EdgeId, k: Color) -> bool {
    let h = g.without_edge(skip);
    brute_colorable(&h, k)
}

#[test]
fn enumeration_counts() {
    let tri = cycle(3);
    let total = count_colorings(&tri, 0, 2, false, EnumerationBudget::default()).unwrap();
    assert_eq!(total, Some(2));
    let canon = count_colorings(&tri, 0, 2, true, EnumerationBudget::default()).unwrap();
    assert_eq!(canon, Some(1));

    // path of three edges, as G - e for a 4-cycle
    let c4 = cycle(4);
    assert_eq!(count_colorings(&c4, 0, 2, true, EnumerationBudget::default()).unwrap(), Some(1));

    let c5 = cycle(5);
    for e in 0..5 {
        let total = count_colorings(&c5, e, 3, false, EnumerationBudget::default()).unwrap();
        assert_eq!(total, Some(brute_count(&c5, Some(e), 3)));
        assert_eq!(total, Some(24));
        let canon = count_colorings(&c5, e, 3, true, EnumerationBudget::default()).unwrap();
        assert_eq!(canon, Some(4));
    }
}

#[test]
fn enumeration_against_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..25 {
        let n = rng.gen_range(3..7);
        let g = random_graph(n, 0.6, &mut rng);
        if g.m() == 0 {
            continue;
        }
        let e = rng.gen_range(0..g.m());
        let k = g.max_degree() as Color;
        let fast = count_colorings(&g, e, k, false, EnumerationBudget::default()).unwrap();
        assert_eq!(fast, Some(brute_count(&g, Some(e), k)));
        let all: Vec<_> = enumerate_colorings(&g, e, k, false, EnumerationBudget::default())
            .unwrap()
            .collect();
        for phi in &all {
            assert!(phi.is_proper());
            assert_eq!(phi.uncolored_edges().collect::<Vec<_>>(), [e]);
        }
    }
}

#[test]
fn truncated_enumeration_is_flagged() {
    let g = cycle(5);
    let budget = EnumerationBudget {
        max_colorings: 5,
        max_nodes: u64::MAX,
    };
    let mut it = enumerate_colorings(&g, 0, 3, false, budget).unwrap();
    assert_eq!(it.by_ref().count(), 5);
    assert_eq!(it.is_complete(), Some(false));
    assert_eq!(count_colorings(&g, 0, 3, false, budget).unwrap(), None);
    let mut it = enumerate_colorings(&g, 0, 3, true, EnumerationBudget::default()).unwrap();
    assert_eq!(it.by_ref().count(), 4);
    assert_eq!(it.is_complete(), Some(true));
}

proptest! {
    #[test]
    fn flip_twice_is_identity(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..20);
        let g = random_graph(n, 0.3, &mut rng);
        let phi = color_with_delta_plus_one(&g);
        let v = rng.gen_range(0..n);
        let a = rng.gen_range(1..=phi.k());
        let b = rng.gen_range(1..=phi.k());
        let once = phi.flipped(&phi.kempe_chain(v, a, b)).unwrap();
        let twice = once.flipped(&once.kempe_chain(v, a, b)).unwrap();
        prop_assert_eq!(twice.assignment(), phi.assignment());
    }
}
