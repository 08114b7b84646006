use super::*;
use crate::coloring::{enumerate_colorings, is_critical, Color, EnumerationBudget, SearchBudget};
use crate::graph::tests::{complete, cycle, petersen};

fn colored<'g>(g: &'g Graph, k: Color, colors: &[((Vertex, Vertex), Color)]) -> PartialEdgeColoring<'g> {
    let mut phi = PartialEdgeColoring::new(g, k);
    for &((a, b), c) in colors {
        phi.set(g.edge_id(a, b).unwrap(), Some(c)).unwrap();
    }
    phi
}

/// K4 with the edge 2-3 subdivided by vertex 4.
fn subdivided_k4() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

fn petersen_minus_vertex() -> Graph {
    let p = petersen();
    let edges: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .filter(|e| !e.contains(9))
        .map(|e| (e.u, e.v))
        .collect();
    Graph::from_edges(9, edges).unwrap()
}

fn all_colorings(g: &Graph, e: EdgeId) -> Vec<PartialEdgeColoring<'_>> {
    enumerate_colorings(g, e, g.max_degree() as Color, true, EnumerationBudget::default())
        .unwrap()
        .collect()
}

/// Every ordered sequence of distinct neighbors checked straight against
/// the definition.
fn fan_oracle(phi: &PartialEdgeColoring<'_>, x: Vertex, y1: Vertex) -> usize {
    fn go(phi: &PartialEdgeColoring<'_>, x: Vertex, seq: &mut Vec<Vertex>) -> usize {
        let mut count = 1;
        for &y in phi.graph().neighbors(x) {
            if seq.contains(&y) {
                continue;
            }
            let c = phi.color_between(x, y);
            if c.is_some_and(|c| seq.iter().any(|&w| phi.is_missing(w, c))) {
                seq.push(y);
                count += go(phi, x, seq);
                seq.pop();
            }
        }
        count
    }
    go(phi, x, &mut vec![y1])
}

#[test]
fn star_fans_match_hand_enumeration() {
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let phi = colored(&g, 3, &[((0, 2), 1), ((0, 3), 2)]);
    let fans = find_multifans(&phi, 0, false).unwrap();
    let at_center: Vec<&Vec<Vertex>> = fans.iter().filter(|f| f.center == 0).map(|f| &f.leaves).collect();
    assert_eq!(
        at_center,
        [&vec![1], &vec![1, 2], &vec![1, 2, 3], &vec![1, 3], &vec![1, 3, 2]]
    );
    assert_eq!(at_center.len(), fan_oracle(&phi, 0, 1));
    let maximal = find_multifans(&phi, 0, true).unwrap();
    assert_eq!(maximal[0].leaves, [1, 2, 3]);
    assert_eq!(maximal[1].center, 1);
    assert_eq!(maximal[1].leaves, [0]);
}

#[test]
fn fan_growth_agrees_with_oracle_on_colored_graphs() {
    for g in [petersen(), subdivided_k4(), petersen_minus_vertex()] {
        for e in 0..g.m() {
            for phi in all_colorings(&g, e).iter().take(30) {
                let edge = g.edge(e);
                let fans = find_multifans(phi, e, false).unwrap();
                let at_u = fans.iter().filter(|f| f.center == edge.u).count();
                assert_eq!(at_u, fan_oracle(phi, edge.u, edge.v));
                for f in &fans {
                    verify_multifan(phi, e, f).unwrap();
                }
            }
        }
    }
}

#[test]
fn trivial_fan_always_present_and_unrelated_edge_excluded() {
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap();
    let e = g.edge_id(0, 1).unwrap();
    let phi = colored(&g, 2, &[((0, 2), 1), ((1, 3), 1)]);
    let fans = find_multifans(&phi, e, false).unwrap();
    assert!(fans.iter().any(|f| f.center == 0 && f.leaves == [1]));
    assert!(fans.iter().all(|f| !f.leaves.contains(&2)));
    assert!(matches!(
        find_multifans(&phi, 1, true),
        Err(StructureError::EdgeColored(1))
    ));
}

#[test]
fn malformed_fans_are_input_errors() {
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap();
    let phi = colored(&g, 2, &[((0, 2), 1), ((1, 3), 1)]);
    let bad = MultiFan {
        center: 0,
        leaves: vec![1, 2],
        edges: vec![0, 1],
    };
    assert!(matches!(verify_multifan(&phi, 0, &bad), Err(StructureError::Invalid { .. })));
}

#[test]
fn trivial_fan_is_elementary_exactly_when_the_edge_cannot_be_colored() {
    for g in [cycle(5), cycle(6), petersen(), subdivided_k4(), cycle(4)] {
        let class_two = crate::coloring::chromatic_index_exact(&g, SearchBudget::default())
            .unwrap()
            .classification
            == crate::coloring::Classification::Two;
        for e in 0..g.m() {
            let edge = g.edge(e);
            for phi in all_colorings(&g, e) {
                let elementary = crate::coloring::is_elementary(&phi, &[edge.u, edge.v]);
                let extendable = (1..=phi.k()).any(|c| phi.is_missing(edge.u, c) && phi.is_missing(edge.v, c));
                assert_eq!(elementary, !extendable);
                if class_two {
                    assert!(elementary);
                }
            }
        }
    }
}

#[test]
fn shared_missing_color_at_a_fan_is_reported() {
    // K4 minus an edge is class one, so some coloring of G - e extends
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let found = (0..g.m()).any(|e| {
        all_colorings(&g, e).iter().any(|phi| {
            find_multifans(phi, e, true)
                .unwrap()
                .iter()
                .any(|f| verify_multifan(phi, e, f).unwrap().is_violation())
        })
    });
    assert!(found);
}

#[test]
fn path_lemma_cases() {
    // 0-1-2 with 0-1 uncolored, Δ = 2: the color of 1-2 is missing at 0
    let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let phi = colored(&g, 2, &[((1, 2), 1)]);
    let r = verify_path_lemma(&phi, 0, 1, 2).unwrap();
    assert!(r.is_violation(), "{r:?}");
    assert!(r.detail.is_some());

    // cubic: the first hypothesis never holds, the second only when φ(yz) misses at x
    let p = complete(4);
    let e = p.edge_id(0, 1).unwrap();
    let mut seen_na = false;
    for phi in all_colorings(&p, e) {
        for &z in p.neighbors(1) {
            if z == 0 {
                continue;
            }
            let r = verify_path_lemma(&phi, 0, 1, z).unwrap();
            let alpha = phi.color_between(1, z).unwrap();
            if phi.is_missing(0, alpha) {
                assert_ne!(r.verdict, Verdict::NotApplicable);
            } else {
                assert_eq!(r.verdict, Verdict::NotApplicable);
                assert!(r.detail.is_none());
                seen_na = true;
            }
        }
    }
    assert!(seen_na);
    assert!(verify_path_lemma(&phi, 0, 2, 1).is_err());
}

#[test]
fn path_lemma_holds_on_critical_graphs() {
    for g in [cycle(7), subdivided_k4()] {
        for e in 0..g.m() {
            let edge = g.edge(e);
            for phi in all_colorings(&g, e) {
                for (x, y) in [(edge.u, edge.v), (edge.v, edge.u)] {
                    for &z in g.neighbors(y) {
                        if z != x {
                            let r = verify_path_lemma(&phi, x, y, z).unwrap();
                            assert!(!r.is_violation(), "{r:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn kierstead_relaxed_branch_on_a_three_critical_graph() {
    let g = subdivided_k4();
    assert!(is_critical(&g, SearchBudget::default()).unwrap().critical);
    let mut relaxed = 0;
    for e in 0..g.m() {
        for phi in all_colorings(&g, e) {
            for path in find_kierstead_p4(&phi, e).unwrap() {
                let r = verify_kierstead_p4(&phi, &path).unwrap();
                assert!(!r.is_violation(), "{r:?}");
                let v = &path.vertices;
                if g.deg(v[1]) == 3 && g.deg(v[2]) == 3 {
                    relaxed += 1;
                }
            }
        }
    }
    assert!(relaxed > 0);
}

#[test]
fn malformed_kierstead_path_is_an_input_error() {
    let g = cycle(5);
    let phi = all_colorings(&g, 0).remove(0);
    let edge = g.edge(0);
    let not_path = KiersteadPath {
        vertices: vec![edge.u, edge.v, edge.u, 3],
    };
    assert!(verify_kierstead_p4(&phi, &not_path).is_err());
    let short = KiersteadPath {
        vertices: vec![edge.u, edge.v],
    };
    assert!(verify_kierstead_p4(&phi, &short).is_err());
}

#[test]
fn kierstead_violation_on_a_class_one_graph() {
    // path 0-1-2-3 plus pendant 3-4; Δ = 2
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let phi = colored(&g, 2, &[((1, 2), 1), ((2, 3), 2), ((3, 4), 1)]);
    let path = KiersteadPath {
        vertices: vec![0, 1, 2, 3],
    };
    // 0 misses {1, 2}; 3 misses nothing, 1 misses 2, 2 misses nothing
    let r = verify_kierstead_p4(&phi, &path).unwrap();
    assert!(r.is_violation(), "{r:?}");
}

#[test]
fn p4link_gating_and_violation() {
    let path = KiersteadPath {
        vertices: vec![0, 1, 2, 3],
    };
    // Δ = 2, so both inner vertices have degree Δ
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 5), (3, 4)]).unwrap();
    let phi = colored(&g, 2, &[((1, 2), 1), ((2, 3), 2), ((0, 5), 2), ((3, 4), 1)]);
    let r = verify_p4link(&phi, &path, 1, 2, 1).unwrap();
    assert_eq!(r.verdict, Verdict::NotApplicable);

    // Δ = 3 with d(y1) = 2; y0 misses 1, y1 misses {2, 3}, y3 misses {1, 3}
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (2, 4), (0, 5), (0, 6)]).unwrap();
    let phi = colored(&g, 3, &[((1, 2), 1), ((2, 3), 2), ((2, 4), 3), ((0, 5), 2), ((0, 6), 3)]);
    // β = 1 is the color of y1y2
    let r = verify_p4link(&phi, &path, 1, 1, 0).unwrap();
    assert_eq!(r.verdict, Verdict::NotApplicable);
    // α is not missing at y3
    let r = verify_p4link(&phi, &path, 2, 3, 1).unwrap();
    assert_eq!(r.verdict, Verdict::NotApplicable);
    // the (1, 3)-chain at y3 is y3 alone
    let r = verify_p4link(&phi, &path, 1, 3, 1).unwrap();
    assert!(r.is_violation(), "{r:?}");
}

#[test]
fn brooms() {
    // stem 0-1-2, bristles 3, 4 at 2; d(1) = 2 < Δ = 3
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
    let phi = colored(&g, 3, &[((1, 2), 1), ((2, 3), 2), ((2, 4), 3)]);
    let found = find_brooms(&phi, 0).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].stem, [0, 1, 2]);
    assert_eq!(found[0].bristles, [3, 4]);
    // 0 misses all colors, so the vertex set is not elementary
    let r = verify_broom(&phi, &found[0]).unwrap();
    assert!(r.is_violation());

    // both stem vertices of degree Δ: not applicable
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
    let phi = colored(&g, 3, &[((1, 2), 1), ((1, 4), 2), ((2, 3), 2), ((2, 5), 3)]);
    let b = Broom {
        stem: [0, 1, 2],
        bristles: vec![3],
    };
    assert_eq!(verify_broom(&phi, &b).unwrap().verdict, Verdict::NotApplicable);
    let bad = Broom {
        stem: [0, 1, 2],
        bristles: vec![],
    };
    assert!(verify_broom(&phi, &bad).is_err());
}

fn kite_graph() -> Graph {
    // a=0 b=1 c=2 u=3 s1=4 s2=5 t1=6 t2=7
    Graph::from_edges(8, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7)]).unwrap()
}

fn mask(phi: &PartialEdgeColoring<'_>, v: Vertex) -> u64 {
    (1..=phi.k()).filter(|&c| phi.is_missing(v, c)).fold(0, |m, c| m | 1 << c)
}

#[test]
fn kite_count_matches_bitmask_oracle() {
    let g = kite_graph();
    let kite = Kite { a: 0, b: 1, c: 2, u: 3, s1: 4, s2: 5, t1: 6, t2: 7 };
    // palette of 9 so that a, b, t1, t2 miss many colors
    let phi = colored(
        &g,
        9,
        &[((0, 2), 1), ((1, 3), 2), ((2, 3), 3), ((3, 4), 4), ((3, 5), 5), ((4, 6), 6), ((5, 7), 6)],
    );
    let r = verify_kite(&phi, &kite).unwrap();
    let expect = (mask(&phi, 6) & mask(&phi, 7) & (mask(&phi, 0) | mask(&phi, 1))).count_ones();
    // every color except 6 misses at t1, t2; a misses all but 1, b all but 2
    assert_eq!(expect, 8);
    assert!(r.is_violation());
    assert!(r.detail.unwrap().starts_with("8 colors"));
    let kites = find_kites(&phi, 0).unwrap();
    let swapped = Kite { s1: 5, s2: 4, t1: 7, t2: 6, ..kite };
    assert_eq!(kites, [kite, swapped]);

    let unequal = colored(
        &g,
        9,
        &[((0, 2), 1), ((1, 3), 2), ((2, 3), 3), ((3, 4), 4), ((3, 5), 5), ((4, 6), 6), ((5, 7), 7)],
    );
    assert_eq!(verify_kite(&unequal, &kite).unwrap().verdict, Verdict::NotApplicable);
    assert!(find_kites(&unequal, 0).unwrap().is_empty());
}

#[test]
fn hand_built_fork_is_found_once() {
    // a=0 b=1 u=2 s1=3 s2=4 t1=5 t2=6
    let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6)]).unwrap();
    let phi = colored(&g, 3, &[((1, 2), 1), ((2, 3), 2), ((2, 4), 3), ((3, 5), 1), ((4, 6), 2)]);
    let forks = find_forks(&phi, 0).unwrap();
    assert_eq!(forks, [Fork { a: 0, b: 1, u: 2, s1: 3, s2: 4, t1: 5, t2: 6 }]);
    // Δ = 3 < d(a) + d(t1) + d(t2) + 1 = 4
    assert_eq!(check_fork(&phi, &forks[0]).verdict, Verdict::NotApplicable);
    let bigger = colored(&g, 8, &[((1, 2), 1), ((2, 3), 2), ((2, 4), 3), ((3, 5), 1), ((4, 6), 2)]);
    // the palette does not change the degree bound
    assert_eq!(find_forks(&bigger, 0).unwrap().len(), 1);
}

#[test]
fn reports_serialize() {
    let g = kite_graph();
    let phi = colored(&g, 3, &[((0, 2), 1), ((1, 3), 2)]);
    let fans = find_multifans(&phi, 0, true).unwrap();
    let r = verify_multifan(&phi, 0, &fans[0]).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["kind"], "multi_fan");
    assert!(v["instance"]["leaves"].is_array());
}

#[test]
fn every_coloring_of_critical_graphs_is_consistent() {
    let mut graphs: Vec<Graph> = (1..=4).map(|j| cycle(2 * j + 1)).collect();
    graphs.push(subdivided_k4());
    graphs.push(petersen_minus_vertex());
    for g in &graphs {
        assert!(is_critical(g, SearchBudget::default()).unwrap().critical);
        let r = verify_all_colorings(g, 1_000_000).unwrap();
        assert_eq!(r.verdict, QuantifiedVerdict::Consistent, "{:#?}", r.violations);
        assert!(r.colorings > 0);
    }
}

#[test]
fn class_one_graphs_show_violations() {
    let r = verify_all_colorings(&cycle(6), 1_000_000).unwrap();
    assert_eq!(r.verdict, QuantifiedVerdict::Violation);
    assert!(!r.violations.is_empty());
}

#[test]
fn tight_budget_is_flagged() {
    let r = verify_all_colorings(&petersen_minus_vertex(), 3).unwrap();
    assert_eq!(r.verdict, QuantifiedVerdict::ConsistentWithinBudget);
    assert!(r.colorings <= 3);
}
