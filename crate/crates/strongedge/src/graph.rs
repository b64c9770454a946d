//! Simple undirected graphs with dense vertex and edge ids.
//!
//! Vertices are `0..n`. Edges are stored as normalized `(min, max)` pairs and
//! an edge's id is its position in the edge list, so every id can index a
//! plain `Vec`. Loops and parallel edges are rejected at construction.

use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;

/// Index of an edge in `Graph::edges`.
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// Edge at this position joins a vertex to itself.
    SelfLoop { index: usize },
    /// Edge at this position repeats an earlier edge (in either orientation).
    DuplicateEdge { index: usize },
    /// Edge at this position mentions a vertex >= n.
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::SelfLoop { index } => write!(f, "edge {index} is a self-loop"),
            GraphError::DuplicateEdge { index } => write!(f, "edge {index} duplicates an earlier edge"),
            GraphError::VertexOutOfRange { index, vertex, n } => {
                write!(f, "edge {index} mentions vertex {vertex} but the graph has {n} vertices")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Distance between two distinct edges: one more than the number of edges on
/// a shortest path connecting them, so intersecting edges are at distance 1.
/// `Infinite` when the edges lie in different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeDistance {
    Finite(usize),
    Infinite,
}

impl EdgeDistance {
    pub fn at_most(self, k: usize) -> bool {
        match self {
            EdgeDistance::Finite(d) => d <= k,
            EdgeDistance::Infinite => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A proper 2-coloring of the vertices, canonicalized so that the
/// lowest-numbered vertex of every connected component is `Left`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
    delta_left: usize,
    delta_right: usize,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    /// Maximum degree over vertices on the left side (0 if the side is empty).
    pub fn delta_left(&self) -> usize {
        self.delta_left
    }

    /// Maximum degree over vertices on the right side (0 if the side is empty).
    pub fn delta_right(&self) -> usize {
        self.delta_right
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
    #[serde(skip)]
    inc: Vec<Vec<EdgeId>>,
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Graph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Each pair is normalized to
    /// `(min, max)`; edge ids follow the order of `edges`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut norm = Vec::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (index, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(GraphError::SelfLoop { index });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if v >= n {
                return Err(GraphError::VertexOutOfRange { index, vertex: v, n });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { index });
            }
            adj[u].push(v);
            adj[v].push(u);
            inc[u].push(index);
            inc[v].push(index);
            norm.push((u, v));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj, inc })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Ids of the edges incident to `v`, in edge-id order.
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// BFS distances from the endpoints of `e` to every vertex.
    fn vertex_distances_from_edge(&self, e: EdgeId) -> Vec<Option<usize>> {
        let (u, v) = self.edges[e];
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[u] = Some(0);
        dist[v] = Some(0);
        queue.push_back(u);
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Distance between two distinct edges; see [`EdgeDistance`].
    /// Panics if `e == f`: the distance from an edge to itself is not defined.
    pub fn edge_distance(&self, e: EdgeId, f: EdgeId) -> EdgeDistance {
        assert!(e != f, "edge_distance needs two distinct edges");
        let dist = self.vertex_distances_from_edge(e);
        let (x, y) = self.edges[f];
        match (dist[x], dist[y]) {
            (Some(a), Some(b)) => EdgeDistance::Finite(a.min(b) + 1),
            (Some(a), None) => EdgeDistance::Finite(a + 1),
            (None, Some(b)) => EdgeDistance::Finite(b + 1),
            (None, None) => EdgeDistance::Infinite,
        }
    }

    /// Splits the vertices into two independent sides if possible. Returns
    /// `None` as soon as an odd cycle is found. Isolated vertices land on the
    /// left, as does the lowest vertex of every component.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(Side::Left);
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                let opposite = match sx {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                };
                for &y in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(opposite);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side: Vec<Side> = side.into_iter().map(Option::unwrap).collect();
        let mut delta_left = 0;
        let mut delta_right = 0;
        for (v, s) in side.iter().enumerate() {
            match s {
                Side::Left => delta_left = delta_left.max(self.degree(v)),
                Side::Right => delta_right = delta_right.max(self.degree(v)),
            }
        }
        Some(Bipartition { side, delta_left, delta_right })
    }
}
