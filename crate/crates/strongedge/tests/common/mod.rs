//! Brute-force oracles, written from the definitions and sharing no
//! search machinery with the library: the conflict relation is recomputed
//! directly, cliques come from subset enumeration, and colorings from
//! unpruned backtracking.

// Each integration test target compiles this module separately and none
// uses every oracle.
#![allow(dead_code)]

use strongedge::Graph;

/// Two edges conflict when they intersect or some third edge meets both.
pub fn edges_conflict(g: &Graph, e: usize, f: usize) -> bool {
    let meets = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        a == c || a == d || b == c || b == d
    };
    let (pe, pf) = (g.edge(e), g.edge(f));
    meets(pe, pf) || g.edges().iter().any(|&h| meets(h, pe) && meets(h, pf))
}

/// Largest set of pairwise conflicting edges, by trying every subset.
/// Only sensible for graphs with few edges.
pub fn brute_max_clique(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 20, "subset enumeration needs a small edge count");
    let mut best = 0;
    for mask in 0u32..1 << m {
        let members: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let all_conflict = members
            .iter()
            .enumerate()
            .all(|(i, &e)| members[i + 1..].iter().all(|&f| edges_conflict(g, e, f)));
        if all_conflict {
            best = members.len();
        }
    }
    best
}

/// Minimum number of colors in a strong edge coloring, by backtracking
/// over all assignments with at most `k` colors for growing `k`.
pub fn brute_min_strong_coloring(g: &Graph) -> usize {
    fn extend(g: &Graph, colors: &mut Vec<usize>, k: usize) -> bool {
        let e = colors.len();
        if e == g.m() {
            return true;
        }
        for c in 0..k {
            if (0..e).all(|f| colors[f] != c || !edges_conflict(g, e, f)) {
                colors.push(c);
                if extend(g, colors, k) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }

    if g.m() == 0 {
        return 0;
    }
    (1..=g.m())
        .find(|&k| extend(g, &mut Vec::new(), k))
        .expect("m colors always suffice")
}
