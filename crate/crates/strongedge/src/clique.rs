//! Exact maximum clique on the conflict graph, i.e. the largest set of edges
//! pairwise within distance 2. Branch and bound in the style of Tomita:
//! candidates are greedily colored and a branch is cut once the clique so far
//! plus the color bound cannot beat the incumbent. All orderings are fixed,
//! so identical inputs give identical witnesses.

use crate::conflict::ConflictGraph;
use crate::graph::{EdgeId, Graph};
use std::fmt;
use std::time::{Duration, Instant};

/// Edges forming a clique in the conflict graph, sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    members: Vec<EdgeId>,
}

impl CliqueWitness {
    pub fn members(&self) -> &[EdgeId] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Search ran out of budget; `incumbent` is the best clique found and hence
/// a valid lower bound on the true clique number.
#[derive(Debug, Clone)]
pub struct CliqueTimeout {
    pub incumbent: CliqueWitness,
}

impl fmt::Display for CliqueTimeout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clique search timed out; best clique found has {} edges", self.incumbent.size())
    }
}

impl std::error::Error for CliqueTimeout {}

struct Search<'a, 'g> {
    l: &'a ConflictGraph<'g>,
    rank: Vec<usize>,
    best: Vec<EdgeId>,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_, '_> {
    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out = true;
            }
        }
        self.timed_out
    }

    /// `cands` arrives sorted by rank and every member is adjacent to all of
    /// `current`.
    fn expand(&mut self, cands: &[EdgeId], current: &mut Vec<EdgeId>) {
        if self.out_of_time() {
            return;
        }
        // Greedy sequential coloring in rank order; colors start at 1 and
        // bound the largest clique inside `cands`.
        let mut color_of = vec![0usize; cands.len()];
        for i in 0..cands.len() {
            let mut used = vec![false; i + 2];
            for j in 0..i {
                if self.l.adjacent(cands[i], cands[j]) {
                    used[color_of[j]] = true;
                }
            }
            color_of[i] = (1..).find(|&c| !used[c]).unwrap();
        }
        // Process highest color first, smallest id within a color.
        let mut stack: Vec<(usize, EdgeId)> =
            cands.iter().enumerate().map(|(i, &v)| (color_of[i], v)).collect();
        stack.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        while let Some((color, v)) = stack.pop() {
            if current.len() + color <= self.best.len() {
                return;
            }
            current.push(v);
            let mut child: Vec<EdgeId> =
                stack.iter().map(|&(_, w)| w).filter(|&w| self.l.adjacent(v, w)).collect();
            child.sort_unstable_by_key(|&w| self.rank[w]);
            if child.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(&child, current);
            }
            current.pop();
            if self.timed_out {
                return;
            }
        }
    }
}

fn solve(l: &ConflictGraph, deadline: Option<Instant>) -> Result<CliqueWitness, CliqueTimeout> {
    let m = l.m();
    // Base order: non-increasing degree, ties by smallest id.
    let mut order: Vec<EdgeId> = (0..m).collect();
    order.sort_unstable_by(|&a, &b| l.degree(b).cmp(&l.degree(a)).then(a.cmp(&b)));
    let mut rank = vec![0usize; m];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // Greedy seed so even an immediate timeout carries a usable incumbent.
    let mut seed: Vec<EdgeId> = Vec::new();
    for &v in &order {
        if seed.iter().all(|&w| l.adjacent(v, w)) {
            seed.push(v);
        }
    }
    let mut search = Search { l, rank, best: seed, deadline, timed_out: false };
    let mut current = Vec::new();
    search.expand(&order, &mut current);
    search.best.sort_unstable();
    let witness = CliqueWitness { members: search.best };
    if search.timed_out {
        Err(CliqueTimeout { incumbent: witness })
    } else {
        Ok(witness)
    }
}

/// Largest clique in the conflict graph, searched to completion.
pub fn max_clique(l: &ConflictGraph) -> CliqueWitness {
    solve(l, None).expect("search without a deadline cannot time out")
}

/// As [`max_clique`] but aborts once `budget` has elapsed, handing back the
/// incumbent found so far.
pub fn max_clique_within(
    l: &ConflictGraph,
    budget: Duration,
) -> Result<CliqueWitness, CliqueTimeout> {
    solve(l, Some(Instant::now() + budget))
}

/// Re-checks a claimed witness straight from pairwise edge distances, not
/// via the conflict graph, so the two routes validate each other. Duplicate
/// ids are collapsed; ids must be valid edges of `g`.
pub fn verify_clique_witness(g: &Graph, s: &[EdgeId]) -> bool {
    let mut ids = s.to_vec();
    ids.sort_unstable();
    ids.dedup();
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            if !g.edge_distance(e, f).at_most(2) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn omega(g: &Graph) -> usize {
        max_clique(&ConflictGraph::build(g)).size()
    }

    #[test]
    fn named_graph_clique_numbers() {
        assert_eq!(omega(&families::cycle(5)), 5);
        assert_eq!(omega(&families::complete_bipartite(3, 3)), 9);
        assert_eq!(omega(&families::blowup_c5(2)), 20);
        assert_eq!(omega(&families::star(4)), 4);
        assert_eq!(omega(&families::path(4)), 3);
        assert_eq!(omega(&Graph::new(0, &[]).unwrap()), 0);
    }

    #[test]
    fn edgeless_conflict_graph_gives_singleton() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let w = max_clique(&ConflictGraph::build(&g));
        assert_eq!(w.size(), 1);
    }

    #[test]
    fn witness_is_sorted_valid_and_deterministic() {
        let g = families::blowup_c5(2);
        let l = ConflictGraph::build(&g);
        let a = max_clique(&l);
        let b = max_clique(&l);
        assert_eq!(a, b);
        assert!(a.members().windows(2).all(|p| p[0] < p[1]));
        assert!(verify_clique_witness(&g, a.members()));
    }

    #[test]
    fn verify_rejects_far_pairs() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!verify_clique_witness(&g, &[0, 1]));
        assert!(verify_clique_witness(&g, &[0]));
        assert!(verify_clique_witness(&g, &[1, 1]));
        assert!(verify_clique_witness(&g, &[]));
    }

    #[test]
    fn verify_accepts_complete_bipartite_edge_set() {
        let g = families::complete_bipartite(3, 3);
        let all: Vec<usize> = (0..9).collect();
        assert!(verify_clique_witness(&g, &all));
    }

    #[test]
    fn zero_budget_times_out_with_valid_incumbent() {
        let g = families::blowup_c5(3);
        let l = ConflictGraph::build(&g);
        let err = max_clique_within(&l, Duration::ZERO).unwrap_err();
        assert!(err.incumbent.size() >= 1);
        assert!(verify_clique_witness(&g, err.incumbent.members()));
    }

    #[test]
    fn generous_budget_completes() {
        let g = families::cycle(7);
        let l = ConflictGraph::build(&g);
        let w = max_clique_within(&l, Duration::from_secs(60)).unwrap();
        assert_eq!(w.size(), 3);
    }

    #[test]
    fn matches_subset_brute_force_on_small_graphs() {
        for n in 0..=4 {
            for g in families::all_graphs(n) {
                let m = g.m();
                let mut brute = 0usize;
                for mask in 0u32..1 << m {
                    let set: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
                    if verify_clique_witness(&g, &set) {
                        brute = brute.max(set.len());
                    }
                }
                assert_eq!(omega(&g), brute);
            }
        }
    }
}
