//! Definition-level properties checked over every labeled graph on up to
//! five or six vertices, against oracles written straight from the
//! definitions.

mod common;

use common::{brute_max_clique, edges_conflict};
use strongedge::families::all_graphs;
use strongedge::{
    build_conflict_graph, enumerate_induced_matchings, exact_strong_chromatic_index,
    greedy_strong_coloring, is_induced_matching, max_clique, verify_strong_coloring,
    EdgeDistance,
};

#[test]
fn edge_distance_matches_its_definition() {
    for n in 2..=6 {
        for g in all_graphs(n) {
            let m = g.m();
            for e in 0..m {
                for f in 0..m {
                    if e == f {
                        continue;
                    }
                    let d = g.edge_distance(e, f);
                    assert_eq!(d, g.edge_distance(f, e), "symmetry on {g:?}");

                    let (a, b) = g.edge(e);
                    let (c, x) = g.edge(f);
                    let intersect = a == c || a == x || b == c || b == x;
                    assert_eq!(
                        d == EdgeDistance::Finite(1),
                        intersect,
                        "distance one means a shared endpoint on {g:?}"
                    );
                    assert_eq!(
                        d.at_most(2),
                        edges_conflict(&g, e, f),
                        "conflict is distance at most two on {g:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn conflict_graph_matches_the_oracle_relation() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let l = build_conflict_graph(&g);
            for e in 0..g.m() {
                for f in e + 1..g.m() {
                    assert_eq!(
                        l.adjacent(e, f),
                        edges_conflict(&g, e, f),
                        "conflict adjacency on {g:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn conflict_degree_is_bounded_by_the_degree_sum() {
    // Each edge conflicts with at most 2*max_degree*(max_degree - 1)
    // others beside those sharing its endpoints: in total the conflict
    // degree never exceeds 2*max_degree^2 - 2*max_degree.
    for n in 0..=6 {
        for g in all_graphs(n) {
            let l = build_conflict_graph(&g);
            let d = g.max_degree();
            let cap = 2 * d * d - 2 * d;
            for e in 0..g.m() {
                assert!(
                    l.degree(e) <= cap,
                    "conflict degree {} over cap {cap} on {g:?}",
                    l.degree(e)
                );
            }
        }
    }
}

#[test]
fn greedy_coloring_is_valid_and_within_the_trivial_bound() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let coloring = greedy_strong_coloring(&g);
            assert!(verify_strong_coloring(&g, &coloring), "greedy invalid on {g:?}");
            if g.m() > 0 {
                let d = g.max_degree();
                assert!(
                    coloring.num_colors <= 2 * d * d - 2 * d + 1,
                    "greedy used {} colors on {g:?}",
                    coloring.num_colors
                );
            }
        }
    }
}

#[test]
fn induced_matchings_are_exactly_the_independent_sets() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            let l = build_conflict_graph(&g);
            let matchings = enumerate_induced_matchings(&g, usize::MAX).unwrap();
            // Every enumerated set is independent in the conflict graph and
            // valid by the public checker.
            for matching in &matchings {
                let ids = matching.members();
                assert!(is_induced_matching(&g, ids));
                for (i, &e) in ids.iter().enumerate() {
                    for &f in &ids[i + 1..] {
                        assert!(!l.adjacent(e, f));
                    }
                }
            }
            // And the count agrees with direct subset filtering (the
            // enumeration promises every nonempty matching, so skip mask 0).
            let m = g.m();
            let direct = (1u32..1 << m)
                .filter(|mask| {
                    let ids: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
                    ids.iter().enumerate().all(|(i, &e)| {
                        ids[i + 1..].iter().all(|&f| !edges_conflict(&g, e, f))
                    })
                })
                .count();
            assert_eq!(matchings.len(), direct, "matching count on {g:?}");
        }
    }
}

#[test]
fn clique_number_is_sandwiched_and_matches_brute_force() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            let l = build_conflict_graph(&g);
            let omega = max_clique(&l).size();
            assert_eq!(omega, brute_max_clique(&g), "clique number on {g:?}");

            let exact = exact_strong_chromatic_index(&g);
            let greedy = greedy_strong_coloring(&g);
            assert!(
                omega <= exact.num_colors && exact.num_colors <= greedy.num_colors,
                "ordering omega={omega} exact={} greedy={} on {g:?}",
                exact.num_colors,
                greedy.num_colors
            );
            assert!(verify_strong_coloring(&g, &exact));
        }
    }
}
