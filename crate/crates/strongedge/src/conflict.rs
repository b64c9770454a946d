//! Conflict graph of a graph G: one vertex per edge of G, adjacent when the
//! two edges lie within distance 2 of each other. A strong edge coloring of
//! G is exactly a proper vertex coloring of this graph, and an induced
//! matching is exactly an independent set in it.

use crate::graph::{EdgeId, Graph};
use serde::Serialize;
use std::fmt;

/// Build bit rows for the adjacency test only while they stay cheap.
const BITROW_EDGE_LIMIT: usize = 4096;

/// Square of the line graph, with adjacency lists and (for small edge
/// counts) bit rows for O(1) adjacency tests.
pub struct ConflictGraph<'a> {
    source: &'a Graph,
    adj: Vec<Vec<EdgeId>>,
    rows: Option<Vec<Vec<u64>>>,
}

impl<'a> ConflictGraph<'a> {
    /// Walks the two-neighborhood of every edge instead of running pairwise
    /// searches, so construction stays near `sum(deg^2)` work.
    pub fn build(g: &'a Graph) -> ConflictGraph<'a> {
        let m = g.m();
        let mut adj: Vec<Vec<EdgeId>> = vec![Vec::new(); m];
        // seen[f] == stamp marks f as already recorded for the current edge.
        let mut seen = vec![usize::MAX; m];
        let mut marked_vertices = Vec::new();
        for e in 0..m {
            let (u, v) = g.edge(e);
            marked_vertices.clear();
            marked_vertices.push(u);
            marked_vertices.push(v);
            marked_vertices.extend_from_slice(g.neighbors(u));
            marked_vertices.extend_from_slice(g.neighbors(v));
            seen[e] = e;
            for &x in &marked_vertices {
                for &f in g.incident_edges(x) {
                    if seen[f] != e {
                        seen[f] = e;
                        adj[e].push(f);
                    }
                }
            }
            adj[e].sort_unstable();
        }
        let rows = if m <= BITROW_EDGE_LIMIT {
            let words = m.div_ceil(64);
            let mut rows = vec![vec![0u64; words]; m];
            for (e, nbrs) in adj.iter().enumerate() {
                for &f in nbrs {
                    rows[e][f / 64] |= 1 << (f % 64);
                }
            }
            Some(rows)
        } else {
            None
        };
        ConflictGraph { source: g, adj, rows }
    }

    pub fn graph(&self) -> &Graph {
        self.source
    }

    /// Number of vertices, i.e. edges of the source graph.
    pub fn m(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        match &self.rows {
            Some(rows) => rows[e][f / 64] >> (f % 64) & 1 == 1,
            None => self.adj[e].binary_search(&f).is_ok(),
        }
    }

    /// Conflicting edges of `e` in ascending order.
    pub fn neighbors(&self, e: EdgeId) -> &[EdgeId] {
        &self.adj[e]
    }

    pub fn degree(&self, e: EdgeId) -> usize {
        self.adj[e].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Free-function form of [`ConflictGraph::build`].
pub fn build_conflict_graph(g: &Graph) -> ConflictGraph<'_> {
    ConflictGraph::build(g)
}

/// A set of edges pairwise at distance >= 3, kept sorted. The constructors in
/// this crate only produce valid matchings; `is_induced_matching` is the
/// ground-truth check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct InducedMatching {
    members: Vec<EdgeId>,
}

impl InducedMatching {
    pub fn new(mut members: Vec<EdgeId>) -> InducedMatching {
        members.sort_unstable();
        members.dedup();
        InducedMatching { members }
    }

    pub fn members(&self) -> &[EdgeId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// True iff all pairs in `s` are at edge distance >= 3. Checked against the
/// source graph directly, not against a prebuilt conflict graph, so it can
/// serve as an independent verifier. Empty and singleton sets pass.
pub fn is_induced_matching(g: &Graph, s: &[EdgeId]) -> bool {
    for (i, &e) in s.iter().enumerate() {
        for &f in &s[i + 1..] {
            if e == f || g.edge_distance(e, f).at_most(2) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapExceeded {
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "more than {} induced matchings", self.cap)
    }
}

impl std::error::Error for CapExceeded {}

/// Every nonempty induced matching of `g`, in lexicographic order of the
/// member lists. Bails out once more than `cap` matchings exist.
pub fn enumerate_induced_matchings(
    g: &Graph,
    cap: usize,
) -> Result<Vec<InducedMatching>, CapExceeded> {
    let l = ConflictGraph::build(g);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        l: &ConflictGraph,
        first: usize,
        current: &mut Vec<EdgeId>,
        out: &mut Vec<InducedMatching>,
        cap: usize,
    ) -> Result<(), CapExceeded> {
        for e in first..l.m() {
            if current.iter().any(|&f| l.adjacent(e, f)) {
                continue;
            }
            current.push(e);
            if out.len() == cap {
                return Err(CapExceeded { cap });
            }
            out.push(InducedMatching::new(current.clone()));
            extend(l, e + 1, current, out, cap)?;
            current.pop();
        }
        Ok(())
    }
    extend(&l, 0, &mut current, &mut out, cap)?;
    Ok(out)
}
