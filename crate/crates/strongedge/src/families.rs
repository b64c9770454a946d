//! Deterministic graph constructors: small named families, the extremal
//! families used by the bound checks, seeded random graphs, and exhaustive
//! enumeration of all labeled graphs on few vertices.

use crate::certify::Lemma1Instance;
use crate::graph::Graph;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Path on `n` vertices: edges (0,1), (1,2), ...
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Cycle on `n` vertices; for `n < 3` there is no simple cycle and the graph
/// is edgeless.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return Graph::new(n, &[]).unwrap();
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Star with center 0 and `k` leaves.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|leaf| (0, leaf)).collect();
    Graph::new(k + 1, &edges).unwrap()
}

/// Complete bipartite graph; the left class is `0..a`, the right `a..a+b`,
/// edges in lexicographic order.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

/// Blown-up 5-cycle: five independent classes of size `t` (class `i` holds
/// vertices `i*t..(i+1)*t`), consecutive classes completely joined. Has
/// `5t^2` edges, maximum degree `2t`, and every pair of edges lies within
/// distance 2, so all the edges form one strong clique.
pub fn blowup_c5(t: usize) -> Graph {
    let class = |i: usize| (i * t)..((i + 1) * t);
    let mut edges = Vec::with_capacity(5 * t * t);
    for i in 0..5 {
        for u in class(i) {
            for v in class((i + 1) % 5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(5 * t, &edges).unwrap()
}

/// Two disjoint copies of K_{d,d} together with the vertex-cover family that
/// meets the cover-counting bound with equality: `d` covers holding the left
/// classes of both copies, then `d` covers holding the right classes, with
/// `p = w = 2d`. The instance has `2d^2` edges against a ceiling of
/// `w^2 - pw/2 = 2d^2`.
pub fn double_kdd_with_covers(d: usize) -> Lemma1Instance {
    // Copy 1: left 0..d, right d..2d.  Copy 2: left 2d..3d, right 3d..4d.
    let mut edges = Vec::with_capacity(2 * d * d);
    for u in 0..d {
        for v in d..2 * d {
            edges.push((u, v));
        }
    }
    for u in 2 * d..3 * d {
        for v in 3 * d..4 * d {
            edges.push((u, v));
        }
    }
    let graph = Graph::new(4 * d, &edges).unwrap();
    let lefts: Vec<usize> = (0..d).chain(2 * d..3 * d).collect();
    let rights: Vec<usize> = (d..2 * d).chain(3 * d..4 * d).collect();
    let mut covers = Vec::with_capacity(2 * d);
    for _ in 0..d {
        covers.push(lefts.clone());
    }
    for _ in 0..d {
        covers.push(rights.clone());
    }
    Lemma1Instance { s: graph, covers, p: 2 * d, w: 2 * d }
}

/// G(n, p) with a fixed, documented draw rule: one 64-bit word from
/// ChaCha8 seeded with `seed` per vertex pair, pairs in lexicographic order,
/// the edge present when `word / 2^64 < prob`. Identical seeds give
/// identical graphs on every platform.
pub fn random_gnp(n: usize, prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let word = rng.next_u64();
            if (word as f64) / (u64::MAX as f64 + 1.0) < prob {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices. Vertex pairs are
/// ordered lexicographically and bit `i` of the subset counter selects pair
/// `i`, so the sequence and every edge list are deterministic. Capped at
/// `n <= 6` (32768 graphs); beyond that exhaustive sweeps stop being a
/// desk-scale tool.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 6, "all_graphs is exhaustive and capped at n <= 6");
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shapes() {
        assert_eq!(path(1).n(), 1);
        assert_eq!(path(1).m(), 0);
        let p4 = path(4);
        assert_eq!(p4.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn star_shapes() {
        let s = star(4);
        assert_eq!(s.n(), 5);
        assert_eq!(s.m(), 4);
        assert_eq!(s.degree(0), 4);
        assert_eq!(star(0).m(), 0);
    }

    #[test]
    fn tiny_cycles_are_edgeless() {
        assert_eq!(cycle(1).m(), 0);
        assert_eq!(cycle(2).m(), 0);
        assert_eq!(cycle(3).m(), 3);
    }

    #[test]
    fn blowup_counts() {
        for t in 1..=5 {
            let g = blowup_c5(t);
            assert_eq!(g.n(), 5 * t);
            assert_eq!(g.m(), 5 * t * t);
            assert_eq!(g.max_degree(), 2 * t);
        }
    }

    #[test]
    fn blowup_of_one_is_the_plain_cycle() {
        assert_eq!(blowup_c5(1), cycle(5));
    }

    #[test]
    fn complete_bipartite_counts() {
        let g = complete_bipartite(2, 3);
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 6);
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn double_kdd_instance_shape() {
        for d in 1..=4 {
            let inst = double_kdd_with_covers(d);
            assert_eq!(inst.s.n(), 4 * d);
            assert_eq!(inst.s.m(), 2 * d * d);
            assert_eq!(inst.s.max_degree(), d);
            assert_eq!(inst.covers.len(), 2 * d);
            assert_eq!(inst.p, 2 * d);
            assert_eq!(inst.w, 2 * d);
            for cover in &inst.covers {
                assert_eq!(cover.len(), 2 * d);
            }
        }
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = random_gnp(12, 0.4, 77);
        let b = random_gnp(12, 0.4, 77);
        assert_eq!(a, b);
        let c = random_gnp(12, 0.4, 78);
        assert_ne!(a, c);
    }

    #[test]
    fn gnp_extreme_probabilities() {
        assert_eq!(random_gnp(6, 0.0, 1).m(), 0);
        assert_eq!(random_gnp(6, 1.0, 1).m(), 15);
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(1).count(), 1);
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn all_graphs_order_is_fixed() {
        let graphs: Vec<_> = all_graphs(3).collect();
        assert_eq!(graphs[0].m(), 0);
        assert_eq!(graphs[1].edges(), &[(0, 1)]);
        assert_eq!(graphs[7].edges(), &[(0, 1), (0, 2), (1, 2)]);
    }
}
