//! Fractional strong chromatic index via column generation.
//!
//! The master program assigns a nonnegative weight to each known induced
//! matching and asks every edge to be covered with total weight at least
//! one; its optimum equals the fractional strong chromatic index once no
//! induced matching prices out. Pricing is an exact maximum-weight
//! independent set search on the conflict graph, so termination certifies
//! optimality rather than approximating it.

use crate::conflict::{enumerate_induced_matchings, CapExceeded, ConflictGraph, InducedMatching};
use crate::graph::{EdgeId, Graph};
use crate::simplex::{solve_min_cover, SimplexStatus};
use serde::Serialize;
use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

/// Optimum and certificate of one master solve.
#[derive(Debug, Clone)]
pub struct MasterSolution {
    /// One weight per input column, nonnegative.
    pub weights: Vec<f64>,
    /// One dual per edge, nonnegative.
    pub duals: Vec<f64>,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MasterError {
    /// No input column contains this edge, so no weighting can cover it.
    UncoveredEdge(EdgeId),
    /// The solver gave up; not expected on these instances.
    Numerical,
}

impl fmt::Display for MasterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MasterError::UncoveredEdge(e) => {
                write!(f, "edge {e} appears in no column, master program is infeasible")
            }
            MasterError::Numerical => write!(f, "master program solve failed numerically"),
        }
    }
}

impl Error for MasterError {}

/// Solves the covering master program over the given induced matchings.
/// Edges are the rows `0..num_edges`; `tol` is the reduced-cost tolerance
/// passed through to the simplex.
pub fn solve_master_lp(
    columns: &[InducedMatching],
    num_edges: usize,
    tol: f64,
) -> Result<MasterSolution, MasterError> {
    if num_edges == 0 {
        return Ok(MasterSolution {
            weights: vec![0.0; columns.len()],
            duals: Vec::new(),
            objective: 0.0,
        });
    }
    let mut covered = vec![false; num_edges];
    let mut a = vec![vec![0.0; columns.len()]; num_edges];
    for (j, col) in columns.iter().enumerate() {
        for &e in col.members() {
            assert!(e < num_edges, "column mentions edge {e} outside 0..{num_edges}");
            covered[e] = true;
            a[e][j] = 1.0;
        }
    }
    if let Some(e) = covered.iter().position(|&c| !c) {
        return Err(MasterError::UncoveredEdge(e));
    }
    let costs = vec![1.0; columns.len()];
    let ones = vec![1.0; num_edges];
    let r = solve_min_cover(&a, &ones, &costs, tol);
    match r.status {
        SimplexStatus::Optimal => Ok(MasterSolution {
            weights: r.x.iter().map(|&w| w.max(0.0)).collect(),
            duals: r.duals,
            objective: r.objective,
        }),
        _ => Err(MasterError::Numerical),
    }
}

/// Finds an induced matching of maximum total dual weight, exactly.
/// Ties break toward the lexicographically smallest edge-id list; edges
/// with non-positive dual are treated as weight zero and never included.
/// Returns the matching and its value.
pub fn price_induced_matching(l: &ConflictGraph<'_>, duals: &[f64]) -> (InducedMatching, f64) {
    let m = l.m();
    assert_eq!(duals.len(), m, "need one dual per edge");
    let w: Vec<f64> = duals.iter().map(|&d| d.max(0.0)).collect();
    // suffix[i] = total weight of edges i.., an upper bound on what any
    // extension drawn from i.. can still add.
    let mut suffix = vec![0.0; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] + w[i];
    }

    struct Search<'s, 'g> {
        l: &'s ConflictGraph<'g>,
        w: &'s [f64],
        suffix: &'s [f64],
        current: Vec<EdgeId>,
        best: Vec<EdgeId>,
        best_weight: f64,
    }
    impl Search<'_, '_> {
        fn go(&mut self, start: usize, weight: f64) {
            if weight > self.best_weight {
                self.best_weight = weight;
                self.best = self.current.clone();
            }
            for v in start..self.w.len() {
                if weight + self.suffix[v] <= self.best_weight {
                    return;
                }
                // Zero-weight edges can never strictly improve a column;
                // leaving them out keeps the generated matchings minimal.
                if self.w[v] <= 0.0 {
                    continue;
                }
                if self.current.iter().any(|&u| self.l.adjacent(u, v)) {
                    continue;
                }
                self.current.push(v);
                self.go(v + 1, weight + self.w[v]);
                self.current.pop();
            }
        }
    }

    let mut s = Search { l, w: &w, suffix: &suffix, current: Vec::new(), best: Vec::new(), best_weight: 0.0 };
    s.go(0, 0.0);
    let value = s.best.iter().map(|&e| w[e]).sum();
    (InducedMatching::new(s.best), value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FractionalStatus {
    /// No induced matching prices out: the objective is the true optimum.
    Optimal,
    /// Stopped at the iteration cap; the objective is only an upper bound.
    IterationLimit,
}

/// One column of the final solution: an induced matching and its weight.
#[derive(Debug, Clone, Serialize)]
pub struct WeightedMatching {
    pub matching: InducedMatching,
    pub weight: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FractionalSolution {
    pub objective: f64,
    pub status: FractionalStatus,
    /// Every generated column, including zero-weight ones.
    pub columns: Vec<WeightedMatching>,
    /// One dual per edge from the final master solve.
    pub duals: Vec<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct FractionalOptions {
    /// Convergence tolerance: generation stops once the best-priced column
    /// has value at most `1 + tolerance`.
    pub tolerance: f64,
    /// Cap on generated columns before giving up with `IterationLimit`.
    pub max_iterations: usize,
}

impl Default for FractionalOptions {
    fn default() -> Self {
        FractionalOptions { tolerance: 1e-7, max_iterations: 10_000 }
    }
}

/// Computes the fractional strong chromatic index by column generation,
/// starting from the single-edge matchings.
pub fn fractional_strong_chromatic_index(g: &Graph, opts: &FractionalOptions) -> FractionalSolution {
    let m = g.m();
    if m == 0 {
        return FractionalSolution {
            objective: 0.0,
            status: FractionalStatus::Optimal,
            columns: Vec::new(),
            duals: Vec::new(),
        };
    }
    let l = ConflictGraph::build(g);
    let mut pool: Vec<InducedMatching> =
        (0..m).map(|e| InducedMatching::new(vec![e])).collect();
    let mut seen: BTreeSet<Vec<EdgeId>> =
        pool.iter().map(|c| c.members().to_vec()).collect();

    let mut status = FractionalStatus::IterationLimit;
    let mut master = solve_master_lp(&pool, m, opts.tolerance)
        .expect("master program with all single-edge columns must be feasible");
    for _ in 0..opts.max_iterations {
        let (candidate, value) = price_induced_matching(&l, &master.duals);
        if value <= 1.0 + opts.tolerance {
            status = FractionalStatus::Optimal;
            break;
        }
        if !seen.insert(candidate.members().to_vec()) {
            // The priced column is already in the pool, so the master
            // already enforces it; the violation is tolerance noise.
            status = FractionalStatus::Optimal;
            break;
        }
        pool.push(candidate);
        master = solve_master_lp(&pool, m, opts.tolerance)
            .expect("master program keeps its single-edge columns");
    }

    let columns = pool
        .into_iter()
        .zip(&master.weights)
        .map(|(matching, &weight)| WeightedMatching { matching, weight })
        .collect();
    FractionalSolution { objective: master.objective, status, columns, duals: master.duals }
}

/// Reference implementation: enumerates every induced matching and solves
/// the master program once. Only viable on small graphs; `cap` bounds the
/// number of matchings enumerated.
pub fn fractional_by_enumeration(
    g: &Graph,
    cap: usize,
    tol: f64,
) -> Result<FractionalSolution, CapExceeded> {
    let m = g.m();
    if m == 0 {
        return Ok(FractionalSolution {
            objective: 0.0,
            status: FractionalStatus::Optimal,
            columns: Vec::new(),
            duals: Vec::new(),
        });
    }
    let pool = enumerate_induced_matchings(g, cap)?;
    let master = solve_master_lp(&pool, m, tol)
        .expect("every edge is itself an induced matching");
    let columns = pool
        .into_iter()
        .zip(&master.weights)
        .map(|(matching, &weight)| WeightedMatching { matching, weight })
        .collect();
    Ok(FractionalSolution {
        objective: master.objective,
        status: FractionalStatus::Optimal,
        columns,
        duals: master.duals,
    })
}

/// Upper bound on the fractional strong chromatic index in terms of the
/// conflict clique number and the conflict maximum degree:
/// `(omega + conflict_max_degree + 1) / 2`.
pub fn mr_fractional_bound(g: &Graph, omega: usize) -> f64 {
    let l = ConflictGraph::build(g);
    (omega + l.max_degree() + 1) as f64 / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{blowup_c5, complete_bipartite, cycle, path, star};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-6
    }

    fn check_solution(g: &Graph, sol: &FractionalSolution) {
        assert_eq!(sol.status, FractionalStatus::Optimal);
        let mut coverage = vec![0.0; g.m()];
        for col in &sol.columns {
            assert!(col.weight >= 0.0);
            assert!(crate::conflict::is_induced_matching(g, col.matching.members()));
            for &e in col.matching.members() {
                coverage[e] += col.weight;
            }
        }
        for (e, &cov) in coverage.iter().enumerate() {
            assert!(cov >= 1.0 - 1e-6, "edge {e} covered only {cov}");
        }
        let total: f64 = sol.columns.iter().map(|c| c.weight).sum();
        assert!(close(total, sol.objective));
        // Weak duality the other way: the duals sum to the same optimum.
        assert!(close(sol.duals.iter().sum::<f64>(), sol.objective));
    }

    #[test]
    fn known_values_by_column_generation() {
        let cases: Vec<(Graph, f64)> = vec![
            (cycle(5), 5.0),
            (cycle(6), 3.0),
            (cycle(7), 3.5),
            (path(4), 3.0),
            (star(4), 4.0),
            (complete_bipartite(3, 3), 9.0),
            (blowup_c5(2), 20.0),
            (Graph::new(4, &[(0, 1), (2, 3)]).unwrap(), 1.0),
        ];
        for (g, expect) in cases {
            let sol = fractional_strong_chromatic_index(&g, &FractionalOptions::default());
            assert!(
                close(sol.objective, expect),
                "expected {expect}, got {} on n={} m={}",
                sol.objective,
                g.n(),
                g.m()
            );
            check_solution(&g, &sol);
        }
    }

    #[test]
    fn empty_graph_needs_no_colors() {
        let g = Graph::new(3, &[]).unwrap();
        let sol = fractional_strong_chromatic_index(&g, &FractionalOptions::default());
        assert_eq!(sol.objective, 0.0);
        assert_eq!(sol.status, FractionalStatus::Optimal);
        assert!(sol.columns.is_empty());
    }

    #[test]
    fn enumeration_agrees_with_column_generation() {
        let graphs = vec![
            cycle(5),
            cycle(6),
            cycle(7),
            path(5),
            star(3),
            complete_bipartite(2, 3),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap(),
        ];
        for g in graphs {
            let cg = fractional_strong_chromatic_index(&g, &FractionalOptions::default());
            let brute = fractional_by_enumeration(&g, 1_000_000, 1e-7).unwrap();
            assert!(
                close(cg.objective, brute.objective),
                "column generation {} vs enumeration {} on m={}",
                cg.objective,
                brute.objective,
                g.m()
            );
            check_solution(&g, &brute);
        }
    }

    #[test]
    fn final_duals_are_feasible_for_every_matching() {
        for g in [cycle(6), cycle(7)] {
            let sol = fractional_strong_chromatic_index(&g, &FractionalOptions::default());
            for matching in enumerate_induced_matchings(&g, 1_000_000).unwrap() {
                let total: f64 = matching.members().iter().map(|&e| sol.duals[e]).sum();
                assert!(total <= 1.0 + 1e-6, "dual packing violated: {total}");
            }
        }
    }

    #[test]
    fn master_on_single_edge_columns() {
        let g = cycle(5);
        let columns: Vec<InducedMatching> =
            (0..g.m()).map(|e| InducedMatching::new(vec![e])).collect();
        let sol = solve_master_lp(&columns, g.m(), 1e-7).unwrap();
        assert!(close(sol.objective, 5.0));
        for w in &sol.weights {
            assert!(close(*w, 1.0));
        }
    }

    #[test]
    fn master_without_single_edge_columns() {
        // Two disjoint edges covered by one two-edge column.
        let columns = vec![InducedMatching::new(vec![0, 1])];
        let sol = solve_master_lp(&columns, 2, 1e-7).unwrap();
        assert!(close(sol.objective, 1.0));
        assert!(close(sol.weights[0], 1.0));
    }

    #[test]
    fn master_reports_uncovered_edge() {
        let columns = vec![InducedMatching::new(vec![0])];
        match solve_master_lp(&columns, 2, 1e-7) {
            Err(MasterError::UncoveredEdge(1)) => {}
            other => panic!("expected uncovered edge 1, got {other:?}"),
        }
    }

    #[test]
    fn pricing_finds_heaviest_matching() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let l = ConflictGraph::build(&g);
        let (m, v) = price_induced_matching(&l, &[1.0, 1.0]);
        assert_eq!(m.members(), &[0, 1]);
        assert!(close(v, 2.0));

        let c5 = cycle(5);
        let lc5 = ConflictGraph::build(&c5);
        // Conflict graph of a five-cycle is complete: best is one edge, and
        // the tie breaks to the smallest id.
        let (m, v) = price_induced_matching(&lc5, &[1.0; 5]);
        assert_eq!(m.members(), &[0]);
        assert!(close(v, 1.0));

        let (m, v) = price_induced_matching(&lc5, &[0.25, 0.5, 0.5, 0.25, 0.25]);
        assert_eq!(m.members(), &[1]);
        assert!(close(v, 0.5));
    }

    #[test]
    fn pricing_with_zero_duals_is_empty() {
        let g = cycle(6);
        let l = ConflictGraph::build(&g);
        let (m, v) = price_induced_matching(&l, &[0.0; 6]);
        assert!(m.is_empty());
        assert_eq!(v, 0.0);
    }

    #[test]
    fn pricing_ignores_negative_duals() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let l = ConflictGraph::build(&g);
        let (m, v) = price_induced_matching(&l, &[-3.0, 0.5]);
        assert_eq!(m.members(), &[1]);
        assert!(close(v, 0.5));
    }

    #[test]
    fn clique_based_upper_bound_examples() {
        let single = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(close(mr_fractional_bound(&single, 1), 1.0));
        // Two disjoint complete bipartite blocks: the conflict graph is two
        // disjoint 4-cliques, so omega = 4, the conflict degree is 3, and
        // the bound is (4 + 3 + 1)/2.
        let mut edges = Vec::new();
        for u in 0..2 {
            for v in 2..4 {
                edges.push((u, v));
                edges.push((u + 4, v + 4));
            }
        }
        let g = Graph::new(8, &edges).unwrap();
        assert!(close(mr_fractional_bound(&g, 4), 4.0));
        assert!(close(mr_fractional_bound(&cycle(5), 5), 5.0));
    }
}
