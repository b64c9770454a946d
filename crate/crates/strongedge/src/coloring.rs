//! Strong edge colorings: every color class is an induced matching, i.e. a
//! proper coloring of the conflict graph. Greedy first-fit gives the upper
//! bound; the exact solver runs iterative deepening on k, seeding each
//! k-colorability search with a maximum clique pre-colored 0..w-1 to break
//! color symmetry.

use crate::clique::{max_clique, CliqueWitness};
use crate::conflict::{is_induced_matching, ConflictGraph};
use crate::graph::Graph;
use std::fmt;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongColoring {
    /// Color of each edge, indexed by edge id; colors are `0..num_colors`.
    pub color_of: Vec<usize>,
    pub num_colors: usize,
}

/// Exact search ran out of budget. `incumbent` is the best proper coloring
/// in hand and `lower_bound` the largest k proven necessary, so the true
/// value lies in `lower_bound..=incumbent.num_colors`.
#[derive(Debug, Clone)]
pub struct ColoringTimeout {
    pub incumbent: StrongColoring,
    pub lower_bound: usize,
}

impl fmt::Display for ColoringTimeout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exact coloring timed out in [{}, {}]",
            self.lower_bound, self.incumbent.num_colors
        )
    }
}

impl std::error::Error for ColoringTimeout {}

/// First-fit over edges in id order.
pub fn greedy_strong_coloring(g: &Graph) -> StrongColoring {
    let l = ConflictGraph::build(g);
    let mut color_of = vec![usize::MAX; l.m()];
    let mut num_colors = 0;
    for e in 0..l.m() {
        let mut used = vec![false; num_colors + 1];
        for &f in l.neighbors(e) {
            if f < e {
                used[color_of[f]] = true;
            }
        }
        let c = (0..).find(|&c| !used[c]).unwrap();
        color_of[e] = c;
        num_colors = num_colors.max(c + 1);
    }
    StrongColoring { color_of, num_colors }
}

/// True iff `c` colors every edge of `g`, `num_colors` is tight, and every
/// color class is an induced matching.
pub fn verify_strong_coloring(g: &Graph, c: &StrongColoring) -> bool {
    if c.color_of.len() != g.m() {
        return false;
    }
    let max = c.color_of.iter().max().map_or(0, |&x| x + 1);
    if c.num_colors != max {
        return false;
    }
    let mut classes = vec![Vec::new(); c.num_colors];
    for (e, &col) in c.color_of.iter().enumerate() {
        classes[col].push(e);
    }
    classes.iter().all(|class| is_induced_matching(g, class))
}

enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    TimedOut,
}

struct KSearch<'a, 'g> {
    l: &'a ConflictGraph<'g>,
    k: usize,
    words: usize,
    domain: Vec<u64>,
    avail: Vec<usize>,
    color_of: Vec<usize>,
    uncolored: usize,
    used_colors: usize,
    deadline: Option<Instant>,
    ticks: u32,
}

const UNCOLORED: usize = usize::MAX;

impl KSearch<'_, '_> {
    fn new<'a, 'g>(l: &'a ConflictGraph<'g>, k: usize, deadline: Option<Instant>) -> KSearch<'a, 'g> {
        let m = l.m();
        let words = k.div_ceil(64);
        let mut domain = vec![0u64; m * words];
        for e in 0..m {
            for c in 0..k {
                domain[e * words + c / 64] |= 1 << (c % 64);
            }
        }
        KSearch {
            l,
            k,
            words,
            domain,
            avail: vec![k; m],
            color_of: vec![UNCOLORED; m],
            uncolored: m,
            used_colors: 0,
            deadline,
            ticks: 0,
        }
    }

    fn has_color(&self, v: usize, c: usize) -> bool {
        self.domain[v * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn clear_color(&mut self, v: usize, c: usize) {
        self.domain[v * self.words + c / 64] &= !(1 << (c % 64));
        self.avail[v] -= 1;
    }

    fn restore_color(&mut self, v: usize, c: usize) {
        self.domain[v * self.words + c / 64] |= 1 << (c % 64);
        self.avail[v] += 1;
    }

    /// Assigns `c` to `v` and prunes neighbor domains. Returns the neighbors
    /// pruned, or None if some uncolored neighbor ran dry (already undone).
    fn assign(&mut self, v: usize, c: usize) -> Option<Vec<usize>> {
        self.color_of[v] = c;
        self.uncolored -= 1;
        let mut pruned = Vec::new();
        let mut dead = false;
        for i in 0..self.l.neighbors(v).len() {
            let w = self.l.neighbors(v)[i];
            if self.color_of[w] == UNCOLORED && self.has_color(w, c) {
                self.clear_color(w, c);
                pruned.push(w);
                if self.avail[w] == 0 {
                    dead = true;
                    break;
                }
            }
        }
        if dead {
            self.unassign(v, c, &pruned);
            None
        } else {
            Some(pruned)
        }
    }

    fn unassign(&mut self, v: usize, c: usize, pruned: &[usize]) {
        for &w in pruned {
            self.restore_color(w, c);
        }
        self.color_of[v] = UNCOLORED;
        self.uncolored += 1;
    }

    fn out_of_time(&mut self) -> bool {
        self.ticks += 1;
        if self.ticks & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                return Instant::now() >= d;
            }
        }
        false
    }

    fn run(&mut self) -> Outcome {
        if self.uncolored == 0 {
            return Outcome::Found(self.color_of.clone());
        }
        if self.out_of_time() {
            return Outcome::TimedOut;
        }
        // Most constrained vertex, ties by smallest id.
        let mut v = UNCOLORED;
        let mut best = usize::MAX;
        for e in 0..self.l.m() {
            if self.color_of[e] == UNCOLORED && self.avail[e] < best {
                best = self.avail[e];
                v = e;
            }
        }
        if best == 0 {
            return Outcome::Exhausted;
        }
        // A fresh color index only ever enters as the next unused one; any
        // solution can be renamed to respect that, so nothing is lost.
        let cap = self.k.min(self.used_colors + 1);
        for c in 0..cap {
            if !self.has_color(v, c) {
                continue;
            }
            let introduces = c == self.used_colors;
            if let Some(pruned) = self.assign(v, c) {
                if introduces {
                    self.used_colors += 1;
                }
                match self.run() {
                    Outcome::Exhausted => {}
                    done => return done,
                }
                if introduces {
                    self.used_colors -= 1;
                }
                self.unassign(v, c, &pruned);
            }
        }
        Outcome::Exhausted
    }
}

fn try_k_coloring(
    l: &ConflictGraph,
    k: usize,
    seed: &CliqueWitness,
    deadline: Option<Instant>,
) -> Outcome {
    let mut search = KSearch::new(l, k, deadline);
    // Pre-color the clique 0..size-1; within a clique that is forced up to a
    // renaming of colors.
    for (i, &e) in seed.members().iter().enumerate() {
        match search.assign(e, i) {
            Some(_) => search.used_colors += 1,
            None => return Outcome::Exhausted,
        }
    }
    search.run()
}

fn solve(g: &Graph, budget: Option<Duration>) -> Result<StrongColoring, ColoringTimeout> {
    if g.m() == 0 {
        return Ok(StrongColoring { color_of: Vec::new(), num_colors: 0 });
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let l = ConflictGraph::build(g);
    let greedy = greedy_strong_coloring(g);
    let (clique, lower) = match deadline {
        None => {
            let w = max_clique(&l);
            let size = w.size();
            (w, size)
        }
        Some(d) => match crate::clique::max_clique_within(&l, d.saturating_duration_since(Instant::now())) {
            Ok(w) => {
                let size = w.size();
                (w, size)
            }
            Err(t) => {
                let size = t.incumbent.size();
                return Err(ColoringTimeout { incumbent: greedy, lower_bound: size.max(1) });
            }
        },
    };
    let mut proven = lower;
    for k in lower..greedy.num_colors {
        match try_k_coloring(&l, k, &clique, deadline) {
            Outcome::Found(color_of) => {
                let num_colors = color_of.iter().max().unwrap() + 1;
                return Ok(StrongColoring { color_of, num_colors });
            }
            Outcome::Exhausted => proven = k + 1,
            Outcome::TimedOut => {
                return Err(ColoringTimeout { incumbent: greedy, lower_bound: proven })
            }
        }
    }
    Ok(greedy)
}

/// Minimum number of colors in a strong edge coloring, with a witness
/// coloring. Runs to completion.
pub fn exact_strong_chromatic_index(g: &Graph) -> StrongColoring {
    solve(g, None).expect("search without a deadline cannot time out")
}

/// As [`exact_strong_chromatic_index`] but gives up after `budget`,
/// reporting the incumbent coloring and the proven bracket.
pub fn exact_strong_chromatic_index_within(
    g: &Graph,
    budget: Duration,
) -> Result<StrongColoring, ColoringTimeout> {
    solve(g, Some(budget))
}
