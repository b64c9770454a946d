//! Dense tableau simplex for small covering programs:
//!
//! ```text
//! minimize    c . x
//! subject to  A x >= b,  x >= 0        (all of b nonnegative)
//! ```
//!
//! Surplus variables turn the rows into equalities; artificial variables
//! give phase 1 its starting basis, and phase 2 reuses the same pivot loop
//! on the real objective. Entering columns follow Dantzig's rule until the
//! objective stalls, then Bland's rule takes over so degenerate instances
//! cannot cycle. Row duals are read off the surplus reduced costs.

const PIVOT_EPS: f64 = 1e-10;
const RATIO_EPS: f64 = 1e-12;
const STALL_EPS: f64 = 1e-12;
const STALL_PIVOT_LIMIT: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SimplexStatus {
    Optimal,
    Infeasible,
    /// Pivot cap exceeded or no admissible pivot; not expected on covering
    /// instances and surfaced instead of silently returning garbage.
    Stuck,
}

#[derive(Debug, Clone)]
pub(crate) struct SimplexResult {
    pub status: SimplexStatus,
    /// Primal values for the original variables.
    pub x: Vec<f64>,
    /// One dual per row, nonnegative at optimality.
    pub duals: Vec<f64>,
    pub objective: f64,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    zrow: Vec<f64>,
    basis: Vec<usize>,
    ncols: usize,
    rhs: usize,
    eps: f64,
}

impl Tableau {
    fn pivot(&mut self, r: usize, jc: usize) {
        let piv = self.rows[r][jc];
        for x in &mut self.rows[r] {
            *x /= piv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                let f = row[jc];
                if f != 0.0 {
                    for (x, &p) in row.iter_mut().zip(&pivot_row) {
                        *x -= f * p;
                    }
                }
            }
        }
        let f = self.zrow[jc];
        if f != 0.0 {
            for (x, &p) in self.zrow.iter_mut().zip(&pivot_row) {
                *x -= f * p;
            }
        }
        self.basis[r] = jc;
    }

    /// Runs pivots until optimal. `allowed` limits which columns may enter.
    fn optimize(&mut self, allowed: &dyn Fn(usize) -> bool) -> SimplexStatus {
        let cap = 10_000 + 200 * (self.rows.len() + self.ncols);
        let mut stalled = 0usize;
        let mut bland = false;
        for _ in 0..cap {
            let before = self.zrow[self.rhs];
            let mut entering = None;
            if bland {
                for j in 0..self.ncols {
                    if allowed(j) && self.zrow[j] < -self.eps {
                        entering = Some(j);
                        break;
                    }
                }
            } else {
                let mut most = -self.eps;
                for j in 0..self.ncols {
                    if allowed(j) && self.zrow[j] < most {
                        most = self.zrow[j];
                        entering = Some(j);
                    }
                }
            }
            let jc = match entering {
                Some(j) => j,
                None => return SimplexStatus::Optimal,
            };
            let mut leaving = None;
            let mut best_ratio = f64::INFINITY;
            for i in 0..self.rows.len() {
                let coef = self.rows[i][jc];
                if coef > PIVOT_EPS {
                    let ratio = self.rows[i][self.rhs] / coef;
                    let better = ratio < best_ratio - RATIO_EPS
                        || (ratio < best_ratio + RATIO_EPS
                            && leaving.is_some_and(|r: usize| self.basis[i] < self.basis[r]));
                    if better {
                        best_ratio = ratio;
                        leaving = Some(i);
                    }
                }
            }
            let r = match leaving {
                Some(r) => r,
                // Unbounded direction; cannot occur when costs are
                // nonnegative, so treat it as numerical trouble.
                None => return SimplexStatus::Stuck,
            };
            self.pivot(r, jc);
            if !bland {
                if (self.zrow[self.rhs] - before).abs() <= STALL_EPS {
                    stalled += 1;
                    if stalled >= STALL_PIVOT_LIMIT {
                        bland = true;
                    }
                } else {
                    stalled = 0;
                }
            }
        }
        SimplexStatus::Stuck
    }
}

/// Solves the covering program; see the module comment. `a` is row-major
/// with one row per covering constraint. `eps` is the reduced-cost
/// tolerance.
pub(crate) fn solve_min_cover(a: &[Vec<f64>], b: &[f64], c: &[f64], eps: f64) -> SimplexResult {
    let nrows = a.len();
    let nvars = c.len();
    let surplus = nvars;
    let artificial = nvars + nrows;
    let ncols = nvars + 2 * nrows;
    let rhs = ncols;

    let mut rows = Vec::with_capacity(nrows);
    for i in 0..nrows {
        let mut row = vec![0.0; ncols + 1];
        row[..nvars].copy_from_slice(&a[i]);
        row[surplus + i] = -1.0;
        row[artificial + i] = 1.0;
        row[rhs] = b[i];
        rows.push(row);
    }
    // Phase 1: minimize the artificial sum. Reduced cost of column j is
    // -sum of its rows; artificial columns sit at zero.
    let mut zrow = vec![0.0; ncols + 1];
    for j in 0..ncols + 1 {
        if j < artificial || j == rhs {
            zrow[j] = -rows.iter().map(|row| row[j]).sum::<f64>();
        }
    }
    let basis: Vec<usize> = (0..nrows).map(|i| artificial + i).collect();
    let mut t = Tableau { rows, zrow, basis, ncols, rhs, eps };

    let empty = |status| SimplexResult {
        status,
        x: vec![0.0; nvars],
        duals: vec![0.0; nrows],
        objective: 0.0,
    };
    if t.optimize(&|_| true) != SimplexStatus::Optimal {
        return empty(SimplexStatus::Stuck);
    }
    if -t.zrow[rhs] > eps.max(1e-9) {
        return empty(SimplexStatus::Infeasible);
    }
    // Kick leftover artificials out of the basis where possible; rows that
    // offer no pivot are redundant and stay parked at zero.
    for r in 0..nrows {
        if t.basis[r] >= artificial {
            if let Some(j) = (0..artificial).find(|&j| t.rows[r][j].abs() > PIVOT_EPS) {
                t.pivot(r, j);
            }
        }
    }

    // Phase 2: real objective, artificials barred from entering.
    for j in 0..ncols + 1 {
        let cost_j = if j < nvars { c[j] } else { 0.0 };
        let basis_part: f64 = t
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let cb = if t.basis[i] < nvars { c[t.basis[i]] } else { 0.0 };
                cb * row[j]
            })
            .sum();
        t.zrow[j] = if j == rhs { -basis_part } else { cost_j - basis_part };
    }
    if t.optimize(&|j| j < artificial) != SimplexStatus::Optimal {
        return empty(SimplexStatus::Stuck);
    }

    let mut x = vec![0.0; nvars];
    for (i, &bv) in t.basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = t.rows[i][rhs].max(0.0);
        }
    }
    let duals: Vec<f64> = (0..nrows).map(|i| t.zrow[surplus + i].max(0.0)).collect();
    let objective = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    SimplexResult { status: SimplexStatus::Optimal, x, duals, objective }
}
