//! Dense two-phase primal simplex solver.
//!
//! Small and deliberately boring: full-tableau pivoting with Bland's rule
//! (smallest-index entering column, smallest-basic-index tie-break on the
//! ratio test), which cannot cycle, plus an iteration cap as a belt-and-
//! braces failure mode.  Problem sizes in this crate are tiny (tens of rows
//! and columns), so an O(m·n) pivot update is perfectly adequate and easy
//! to audit.
//!
//! The public problem form allows equality and `<=` rows, per-variable
//! optional lower bounds (absent means free), and either optimization
//! sense.  Internally everything is rewritten to standard form
//! `min c·z, A z = b, z >= 0`: bounded variables are shifted, free
//! variables split into positive and negative parts, inequality rows get
//! slacks, and phase 1 starts from slack or artificial columns.

use nalgebra::{DMatrix, DVector};

use crate::{Error, Result};

/// Pivot entries smaller than this (in absolute value) are treated as zero,
/// both for selecting entering columns and in the ratio test.
pub const PIVOT_TOL: f64 = 1e-10;

/// Default relative feasibility tolerance: phase 1 declares the problem
/// infeasible when its optimum exceeds `feas_tol * (1 + |b|_inf)`.
pub const DEFAULT_FEAS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// The pivot cap (`50 * (rows + columns)`) was reached; the returned
    /// point is whatever the tableau held and must not be trusted.
    IterationLimit,
}

#[derive(Debug, Clone)]
pub struct LpProblem {
    sense: Sense,
    objective: DVector<f64>,
    a_ub: DMatrix<f64>,
    b_ub: DVector<f64>,
    a_eq: DMatrix<f64>,
    b_eq: DVector<f64>,
    /// Per-variable lower bound; `None` means the variable is free.
    lower: Vec<Option<f64>>,
    feas_tol: f64,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal point in the original variable space (zeros unless
    /// `status == Optimal`).
    pub x: DVector<f64>,
    /// Objective value at `x` in the original sense (NaN unless optimal).
    pub objective: f64,
    /// Original variables that ended up basic, sorted and deduplicated.
    pub basis: Vec<usize>,
}

impl LpSolution {
    /// Converts a non-optimal status into the corresponding error.
    pub fn into_result(self) -> Result<LpSolution> {
        match self.status {
            LpStatus::Optimal => Ok(self),
            LpStatus::Infeasible => Err(Error::Infeasible),
            LpStatus::Unbounded => Err(Error::Unbounded),
            LpStatus::IterationLimit => Err(Error::IterationLimit),
        }
    }
}

impl LpProblem {
    /// New problem with the given sense and objective, no constraints, and
    /// all variables free.
    pub fn new(sense: Sense, objective: DVector<f64>) -> Self {
        let n = objective.len();
        LpProblem {
            sense,
            objective,
            a_ub: DMatrix::zeros(0, n),
            b_ub: DVector::zeros(0),
            a_eq: DMatrix::zeros(0, n),
            b_eq: DVector::zeros(0),
            lower: vec![None; n],
            feas_tol: DEFAULT_FEAS_TOL,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.objective.len()
    }

    /// Adds rows `a·x <= b`.
    pub fn with_ub(mut self, a: DMatrix<f64>, b: DVector<f64>) -> Result<Self> {
        if a.ncols() != self.n_vars() || a.nrows() != b.len() {
            return Err(Error::Dimension {
                expected: self.n_vars(),
                got: a.ncols(),
            });
        }
        self.a_ub = stack_rows(&self.a_ub, &a);
        self.b_ub = stack_vecs(&self.b_ub, &b);
        Ok(self)
    }

    /// Adds rows `a·x = b`.
    pub fn with_eq(mut self, a: DMatrix<f64>, b: DVector<f64>) -> Result<Self> {
        if a.ncols() != self.n_vars() || a.nrows() != b.len() {
            return Err(Error::Dimension {
                expected: self.n_vars(),
                got: a.ncols(),
            });
        }
        self.a_eq = stack_rows(&self.a_eq, &a);
        self.b_eq = stack_vecs(&self.b_eq, &b);
        Ok(self)
    }

    /// Sets per-variable lower bounds (`None` = free).
    pub fn with_lower(mut self, lower: Vec<Option<f64>>) -> Result<Self> {
        if lower.len() != self.n_vars() {
            return Err(Error::Dimension {
                expected: self.n_vars(),
                got: lower.len(),
            });
        }
        self.lower = lower;
        Ok(self)
    }

    /// Constrains every variable to be nonnegative.
    pub fn all_nonneg(mut self) -> Self {
        self.lower = vec![Some(0.0); self.n_vars()];
        self
    }

    /// Overrides the relative feasibility tolerance used by phase 1.
    pub fn with_feas_tol(mut self, tol: f64) -> Self {
        self.feas_tol = tol;
        self
    }

    pub fn solve(&self) -> LpSolution {
        Tableau::build(self).solve(self)
    }
}

fn stack_rows(top: &DMatrix<f64>, bottom: &DMatrix<f64>) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(top.nrows() + bottom.nrows(), top.ncols());
    out.rows_mut(0, top.nrows()).copy_from(top);
    out.rows_mut(top.nrows(), bottom.nrows()).copy_from(bottom);
    out
}

fn stack_vecs(top: &DVector<f64>, bottom: &DVector<f64>) -> DVector<f64> {
    let mut out = DVector::zeros(top.len() + bottom.len());
    out.rows_mut(0, top.len()).copy_from(top);
    out.rows_mut(top.len(), bottom.len()).copy_from(bottom);
    out
}

/// Where a standard-form column comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColKind {
    /// Positive part of original variable `j` (or the shifted variable when
    /// `j` has a lower bound).
    Plus(usize),
    /// Negative part of free original variable `j`.
    Minus(usize),
    Slack,
}

struct Tableau {
    /// `m x (n_total)` constraint matrix kept in current-basis canonical
    /// form, plus the right-hand side.
    a: DMatrix<f64>,
    b: DVector<f64>,
    /// Basic column per row.
    basis: Vec<usize>,
    /// Provenance of the first `n_std` columns; artificial columns live in
    /// `n_std..n_total` and exist only during phase 1.
    cols: Vec<ColKind>,
    n_std: usize,
    pivots_left: usize,
}

enum PhaseOutcome {
    Done,
    Unbounded,
    OutOfPivots,
}

impl Tableau {
    fn build(p: &LpProblem) -> Tableau {
        let m = p.a_ub.nrows() + p.a_eq.nrows();

        let mut cols = Vec::new();
        for (j, lb) in p.lower.iter().enumerate() {
            cols.push(ColKind::Plus(j));
            if lb.is_none() {
                cols.push(ColKind::Minus(j));
            }
        }
        let n_body = cols.len();
        let n_slack = p.a_ub.nrows();
        for _ in 0..n_slack {
            cols.push(ColKind::Slack);
        }
        let n_std = n_body + n_slack;

        // Assemble rows over the expanded columns; shift bounded variables
        // so the standard-form variable is `x_j - l_j >= 0`.
        let mut a = DMatrix::zeros(m, n_std);
        let mut b = DVector::zeros(m);
        for i in 0..m {
            let (src_a, row_idx, src_b): (&DMatrix<f64>, usize, f64) = if i < p.a_ub.nrows() {
                (&p.a_ub, i, p.b_ub[i])
            } else {
                (&p.a_eq, i - p.a_ub.nrows(), p.b_eq[i - p.a_ub.nrows()])
            };
            let mut rhs = src_b;
            for (k, kind) in cols.iter().take(n_body).enumerate() {
                match kind {
                    ColKind::Plus(j) => {
                        a[(i, k)] = src_a[(row_idx, *j)];
                        if let Some(l) = p.lower[*j] {
                            rhs -= src_a[(row_idx, *j)] * l;
                        }
                    }
                    ColKind::Minus(j) => a[(i, k)] = -src_a[(row_idx, *j)],
                    ColKind::Slack => unreachable!(),
                }
            }
            if i < p.a_ub.nrows() {
                a[(i, n_body + i)] = 1.0;
            }
            b[i] = rhs;
        }

        // Make the right-hand side nonnegative.
        let mut flipped = vec![false; m];
        for i in 0..m {
            if b[i] < 0.0 {
                for k in 0..n_std {
                    a[(i, k)] = -a[(i, k)];
                }
                b[i] = -b[i];
                flipped[i] = true;
            }
        }

        // Initial basis: a slack column where it survived unflipped,
        // otherwise a fresh artificial column.
        let mut basis = vec![usize::MAX; m];
        let mut n_art = 0;
        for i in 0..m {
            if i < p.a_ub.nrows() && !flipped[i] {
                basis[i] = n_body + i;
            } else {
                n_art += 1;
            }
        }
        let n_total = n_std + n_art;
        let mut full = DMatrix::zeros(m, n_total);
        full.columns_mut(0, n_std).copy_from(&a);
        let mut next_art = n_std;
        for i in 0..m {
            if basis[i] == usize::MAX {
                full[(i, next_art)] = 1.0;
                basis[i] = next_art;
                next_art += 1;
            }
        }

        let pivots_left = 50 * (m + n_total);
        Tableau {
            a: full,
            b,
            basis,
            cols,
            n_std,
            pivots_left,
        }
    }

    fn m(&self) -> usize {
        self.a.nrows()
    }

    fn n_total(&self) -> usize {
        self.a.ncols()
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.a[(row, col)];
        for k in 0..self.n_total() {
            self.a[(row, k)] /= piv;
        }
        self.b[row] /= piv;
        for i in 0..self.m() {
            if i == row {
                continue;
            }
            let factor = self.a[(i, col)];
            if factor == 0.0 {
                continue;
            }
            for k in 0..self.n_total() {
                self.a[(i, k)] -= factor * self.a[(row, k)];
            }
            self.b[i] -= factor * self.b[row];
            self.a[(i, col)] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Canonical reduced costs for the given standard-form cost vector.
    fn reduced_costs(&self, cost: &DVector<f64>) -> DVector<f64> {
        let mut red = cost.clone();
        for (i, &bi) in self.basis.iter().enumerate() {
            let cb = cost[bi];
            if cb == 0.0 {
                continue;
            }
            for k in 0..self.n_total() {
                red[k] -= cb * self.a[(i, k)];
            }
        }
        red
    }

    /// Runs Bland-rule pivoting for the given costs over columns
    /// `0..allowed`, minimizing.
    fn run(&mut self, cost: &DVector<f64>, allowed: usize) -> PhaseOutcome {
        loop {
            if self.pivots_left == 0 {
                return PhaseOutcome::OutOfPivots;
            }
            let red = self.reduced_costs(cost);
            // Bland: smallest-index improving column.
            let Some(entering) = (0..allowed).find(|&j| red[j] < -PIVOT_TOL) else {
                return PhaseOutcome::Done;
            };
            // Ratio test; ties go to the row whose basic variable has the
            // smallest index (Bland again).
            let mut best: Option<(f64, usize)> = None;
            for i in 0..self.m() {
                let coeff = self.a[(i, entering)];
                if coeff > PIVOT_TOL {
                    let theta = (self.b[i].max(0.0)) / coeff;
                    best = match best {
                        None => Some((theta, i)),
                        Some((t, r)) => {
                            let tie = (theta - t).abs() <= 1e-12 * (1.0 + t.abs());
                            if (tie && self.basis[i] < self.basis[r]) || (!tie && theta < t) {
                                Some((theta, i))
                            } else {
                                Some((t, r))
                            }
                        }
                    };
                }
            }
            let Some((_, leaving_row)) = best else {
                return PhaseOutcome::Unbounded;
            };
            self.pivot(leaving_row, entering);
            self.pivots_left -= 1;
        }
    }

    fn solve(mut self, p: &LpProblem) -> LpSolution {
        let n = p.n_vars();
        let fail = |status: LpStatus| LpSolution {
            status,
            x: DVector::zeros(n),
            objective: f64::NAN,
            basis: Vec::new(),
        };

        // Phase 1: minimize the sum of artificial variables.
        if self.n_total() > self.n_std {
            let mut art_cost = DVector::zeros(self.n_total());
            for j in self.n_std..self.n_total() {
                art_cost[j] = 1.0;
            }
            match self.run(&art_cost, self.n_total()) {
                PhaseOutcome::Done => {}
                // Phase 1 is bounded below by zero, so Unbounded cannot
                // happen; treat it as a solver failure if it does.
                PhaseOutcome::Unbounded => return fail(LpStatus::IterationLimit),
                PhaseOutcome::OutOfPivots => return fail(LpStatus::IterationLimit),
            }
            let resid: f64 = (0..self.m())
                .filter(|&i| self.basis[i] >= self.n_std)
                .map(|i| self.b[i].max(0.0))
                .sum();
            let scale = 1.0 + self.b.amax();
            if resid > p.feas_tol * scale {
                return fail(LpStatus::Infeasible);
            }
            self.drive_out_artificials();
        }

        // Phase 2 on the original objective (internally always minimize).
        let mut cost = DVector::zeros(self.n_total());
        for (k, kind) in self.cols.clone().iter().enumerate() {
            let c = match kind {
                ColKind::Plus(j) => self.signed_cost(p, *j),
                ColKind::Minus(j) => -self.signed_cost(p, *j),
                ColKind::Slack => 0.0,
            };
            cost[k] = c;
        }
        let status = match self.run(&cost, self.n_std) {
            PhaseOutcome::Done => LpStatus::Optimal,
            PhaseOutcome::Unbounded => return fail(LpStatus::Unbounded),
            PhaseOutcome::OutOfPivots => return fail(LpStatus::IterationLimit),
        };

        // Recover the original variables.
        let mut x = DVector::zeros(n);
        for (j, lb) in p.lower.iter().enumerate() {
            if let Some(l) = lb {
                x[j] = *l;
            }
        }
        for (i, &bi) in self.basis.iter().enumerate() {
            if bi >= self.n_std {
                continue; // zero-level artificial on a redundant row
            }
            match self.cols[bi] {
                ColKind::Plus(j) => x[j] += self.b[i],
                ColKind::Minus(j) => x[j] -= self.b[i],
                ColKind::Slack => {}
            }
        }
        let mut basis: Vec<usize> = self
            .basis
            .iter()
            .filter(|&&bi| bi < self.n_std)
            .filter_map(|&bi| match self.cols[bi] {
                ColKind::Plus(j) | ColKind::Minus(j) => Some(j),
                ColKind::Slack => None,
            })
            .collect();
        basis.sort_unstable();
        basis.dedup();

        LpSolution {
            status,
            objective: p.objective.dot(&x),
            x,
            basis,
        }
    }

    fn signed_cost(&self, p: &LpProblem, j: usize) -> f64 {
        match p.sense {
            Sense::Minimize => p.objective[j],
            Sense::Maximize => -p.objective[j],
        }
    }

    /// After phase 1, pivot zero-level artificial variables out of the
    /// basis where possible; rows where no structural pivot exists are
    /// linearly dependent on the others and are dropped together with all
    /// artificial columns.
    fn drive_out_artificials(&mut self) {
        for i in 0..self.m() {
            if self.basis[i] < self.n_std {
                continue;
            }
            let mut best_col = None;
            let mut best_abs = PIVOT_TOL;
            for j in 0..self.n_std {
                let v = self.a[(i, j)].abs();
                if v > best_abs {
                    best_abs = v;
                    best_col = Some(j);
                }
            }
            if let Some(j) = best_col {
                self.pivot(i, j);
            }
        }
        let keep: Vec<usize> = (0..self.m())
            .filter(|&i| self.basis[i] < self.n_std)
            .collect();
        if keep.len() < self.m() {
            let mut a = DMatrix::zeros(keep.len(), self.n_std);
            let mut b = DVector::zeros(keep.len());
            let mut basis = Vec::with_capacity(keep.len());
            for (new_i, &old_i) in keep.iter().enumerate() {
                for j in 0..self.n_std {
                    a[(new_i, j)] = self.a[(old_i, j)];
                }
                b[new_i] = self.b[old_i];
                basis.push(self.basis[old_i]);
            }
            self.a = a;
            self.b = b;
            self.basis = basis;
        } else {
            // Keep only structural columns; artificials are dead weight now.
            let a = self.a.columns(0, self.n_std).into_owned();
            self.a = a;
        }
        // In either branch artificial columns must be gone.
        if self.a.ncols() > self.n_std {
            let a = self.a.columns(0, self.n_std).into_owned();
            self.a = a;
        }
    }
}

/// A basic feasible point of `{x : E x = f, x >= 0}`.
#[derive(Debug, Clone)]
pub struct BasicSolution {
    pub x: DVector<f64>,
    /// Indices with `x_i > eps` after snapping; basicness guarantees there
    /// are at most `rank E` of them.
    pub support: Vec<usize>,
}

/// Finds a basic feasible solution of `{E x = f, x >= 0}` via phase 1.
///
/// Entries below `eps` are snapped to exact zero provided the residual
/// `|E x - f|_inf` stays within `1e-8 * (1 + |f|_inf)`; otherwise the
/// unsnapped point is returned.
pub fn basic_feasible_solution(
    e: &DMatrix<f64>,
    f: &DVector<f64>,
    eps: f64,
) -> Result<BasicSolution> {
    let n = e.ncols();
    let problem = LpProblem::new(Sense::Minimize, DVector::zeros(n))
        .with_eq(e.clone(), f.clone())?
        .all_nonneg()
        .with_feas_tol(eps.max(DEFAULT_FEAS_TOL));
    let sol = problem.solve().into_result()?;

    let mut snapped = sol.x.clone();
    for v in snapped.iter_mut() {
        if v.abs() < eps {
            *v = 0.0;
        }
    }
    let resid = (e * &snapped - f).amax();
    let x = if resid <= 1e-8 * (1.0 + f.amax()) {
        snapped
    } else {
        sol.x
    };
    let support = (0..n).filter(|&i| x[i] > eps).collect();
    Ok(BasicSolution { x, support })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dv(data: &[f64]) -> DVector<f64> {
        DVector::from_column_slice(data)
    }

    #[test]
    fn single_bound_maximize() {
        // max x s.t. x <= 3, x free.
        let sol = LpProblem::new(Sense::Maximize, dv(&[1.0]))
            .with_ub(DMatrix::from_row_slice(1, 1, &[1.0]), dv(&[3.0]))
            .unwrap()
            .solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_relative_eq!(sol.objective, 3.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[0], 3.0, epsilon = 1e-9);
    }

    #[test]
    fn square_corner() {
        // max x + y over [-1, 1]^2.
        let a = DMatrix::from_row_slice(4, 2, &[1.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, -1.0]);
        let sol = LpProblem::new(Sense::Maximize, dv(&[1.0, 1.0]))
            .with_ub(a, dv(&[1.0, 1.0, 1.0, 1.0]))
            .unwrap()
            .solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_relative_eq!(sol.objective, 2.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[0], 1.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[1], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn detects_infeasible() {
        // x >= 0 and x <= -1.
        let sol = LpProblem::new(Sense::Minimize, dv(&[1.0]))
            .with_ub(DMatrix::from_row_slice(1, 1, &[1.0]), dv(&[-1.0]))
            .unwrap()
            .all_nonneg()
            .solve();
        assert_eq!(sol.status, LpStatus::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        let sol = LpProblem::new(Sense::Maximize, dv(&[1.0]))
            .all_nonneg()
            .solve();
        assert_eq!(sol.status, LpStatus::Unbounded);
    }

    #[test]
    fn beale_degenerate_example_terminates() {
        // Beale's classic cycling instance; Bland's rule must terminate at
        // the optimum value -1/20.
        let a = DMatrix::from_row_slice(
            3,
            4,
            &[
                0.25, -60.0, -1.0 / 25.0, 9.0, //
                0.5, -90.0, -1.0 / 50.0, 3.0, //
                0.0, 0.0, 1.0, 0.0,
            ],
        );
        let sol = LpProblem::new(Sense::Minimize, dv(&[-0.75, 150.0, -0.02, 6.0]))
            .with_ub(a, dv(&[0.0, 0.0, 1.0]))
            .unwrap()
            .all_nonneg()
            .solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_relative_eq!(sol.objective, -0.05, epsilon = 1e-9);
    }

    #[test]
    fn equality_with_negative_rhs() {
        // min x + y s.t. x - y = -2, x, y >= 0  ->  (0, 2).
        let sol = LpProblem::new(Sense::Minimize, dv(&[1.0, 1.0]))
            .with_eq(DMatrix::from_row_slice(1, 2, &[1.0, -1.0]), dv(&[-2.0]))
            .unwrap()
            .all_nonneg()
            .solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_relative_eq!(sol.objective, 2.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[1], 2.0, epsilon = 1e-9);
    }

    #[test]
    fn shifted_lower_bounds() {
        // min x + y with x >= 2, y >= -3, x + y <= 10.
        let sol = LpProblem::new(Sense::Minimize, dv(&[1.0, 1.0]))
            .with_ub(DMatrix::from_row_slice(1, 2, &[1.0, 1.0]), dv(&[10.0]))
            .unwrap()
            .with_lower(vec![Some(2.0), Some(-3.0)])
            .unwrap()
            .solve();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_relative_eq!(sol.objective, -1.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[0], 2.0, epsilon = 1e-9);
        assert_relative_eq!(sol.x[1], -3.0, epsilon = 1e-9);
    }

    /// Brute-force LP oracle: enumerate every basis of the standard-form
    /// system `E x = f, x >= 0` and return the best feasible basic value.
    fn best_basic_value(e: &DMatrix<f64>, f: &DVector<f64>, c: &DVector<f64>) -> Option<f64> {
        use itertools::Itertools;
        let m = e.nrows();
        let n = e.ncols();
        let mut best: Option<f64> = None;
        for subset in (0..n).combinations(m) {
            let cols: Vec<_> = subset.iter().map(|&j| e.column(j)).collect();
            let basis_mat = DMatrix::from_columns(&cols);
            let lu = basis_mat.clone().lu();
            if lu.determinant().abs() < 1e-10 {
                continue;
            }
            let Some(xb) = lu.solve(f) else { continue };
            if xb.iter().any(|&v| v < -1e-9) {
                continue;
            }
            let val: f64 = subset.iter().zip(xb.iter()).map(|(&j, &v)| c[j] * v).sum();
            best = Some(match best {
                None => val,
                Some(b) => b.min(val),
            });
        }
        best
    }

    #[test]
    fn matches_basis_enumeration_on_random_programs() {
        // min c·x, E x = f, x >= 0 with c >= 0 (so the value is bounded)
        // and f = E x0 for a nonnegative x0 (so the program is feasible).
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..20 {
            let e = DMatrix::from_fn(5, 8, |_, _| rng.random_range(-1.0..1.0));
            let x0 = DVector::from_fn(8, |_, _| rng.random_range(0.0..1.0));
            let f = &e * &x0;
            let c = DVector::from_fn(8, |_, _| rng.random_range(0.0..1.0));

            let sol = LpProblem::new(Sense::Minimize, c.clone())
                .with_eq(e.clone(), f.clone())
                .unwrap()
                .all_nonneg()
                .solve();
            assert_eq!(sol.status, LpStatus::Optimal);

            let oracle = best_basic_value(&e, &f, &c).expect("oracle found no feasible basis");
            assert_relative_eq!(sol.objective, oracle, epsilon = 1e-8, max_relative = 1e-8);
        }
    }

    #[test]
    fn weak_duality_bound_holds() {
        // For max c·x, A x <= b, x >= 0: any y >= 0 with A^T y >= c gives
        // the bound c·x* <= b·y.  Choose c = A^T y - margin so y is dual
        // feasible by construction.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = DMatrix::from_fn(4, 6, |_, _| rng.random_range(-1.0..1.0));
            let b = DVector::from_fn(4, |_, _| rng.random_range(0.5..2.0));
            let y = DVector::from_fn(4, |_, _| rng.random_range(0.0..1.0));
            let margin = DVector::from_fn(6, |_, _| rng.random_range(0.0..0.5));
            let c = a.transpose() * &y - margin;

            let sol = LpProblem::new(Sense::Maximize, c)
                .with_ub(a, b.clone())
                .unwrap()
                .all_nonneg()
                .solve();
            assert_eq!(sol.status, LpStatus::Optimal);
            assert!(sol.objective <= b.dot(&y) + 1e-9);
        }
    }

    #[test]
    fn barycenter_of_square_has_small_support() {
        // Convex weights on the 4 corners of the unit square producing the
        // barycenter; the system has rank 3, so a basic solution uses at
        // most 3 corners.
        let e = DMatrix::from_row_slice(
            3,
            4,
            &[
                0.0, 1.0, 0.0, 1.0, // x-coordinates
                0.0, 0.0, 1.0, 1.0, // y-coordinates
                1.0, 1.0, 1.0, 1.0, // weights sum to one
            ],
        );
        let f = dv(&[0.5, 0.5, 1.0]);
        let bs = basic_feasible_solution(&e, &f, 1e-9).unwrap();
        assert!(bs.support.len() <= 3, "support {:?}", bs.support);
        let resid = (&e * &bs.x - &f).amax();
        assert!(resid <= 1e-9);
    }

    #[test]
    fn edge_midpoint_uses_two_corners() {
        // (0.5, 0) on the bottom edge forces weights on the two bottom
        // corners only: any convex combination must put zero weight on
        // points with positive y-coordinate.
        let e = DMatrix::from_row_slice(
            3,
            4,
            &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
        );
        let f = dv(&[0.5, 0.0, 1.0]);
        let bs = basic_feasible_solution(&e, &f, 1e-9).unwrap();
        assert_eq!(bs.support, vec![0, 1]);
        assert_relative_eq!(bs.x[0], 0.5, epsilon = 1e-9);
        assert_relative_eq!(bs.x[1], 0.5, epsilon = 1e-9);
    }

    #[test]
    fn infeasible_convex_combination_detected() {
        // The point (2, 2) is outside the unit square's corner hull.
        let e = DMatrix::from_row_slice(
            3,
            4,
            &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
        );
        let f = dv(&[2.0, 2.0, 1.0]);
        assert!(matches!(
            basic_feasible_solution(&e, &f, 1e-9),
            Err(Error::Infeasible)
        ));
    }

    #[test]
    fn support_bound_on_random_systems() {
        // 1000 random feasible systems with up to 6 rows: the support of a
        // basic solution never exceeds rank(E).
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let m = rng.random_range(1..=6usize);
            let n = rng.random_range(m..=m + 8);
            let e = DMatrix::from_fn(m, n, |_, _| rng.random_range(-1.0..1.0));
            let x0 = DVector::from_fn(n, |_, _| rng.random_range(0.0..1.0));
            let f = &e * &x0;
            let bs = basic_feasible_solution(&e, &f, 1e-9).unwrap();
            let rank = e.clone().svd(false, false).rank(1e-8);
            assert!(
                bs.support.len() <= rank,
                "support {} exceeds rank {rank} for {m}x{n} system",
                bs.support.len()
            );
        }
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        // Duplicate an equality row; the duplicate is dependent and must be
        // dropped without declaring infeasibility.
        let e = DMatrix::from_row_slice(2, 3, &[1.0, 1.0, 1.0, 1.0, 1.0, 1.0]);
        let f = dv(&[1.0, 1.0]);
        let bs = basic_feasible_solution(&e, &f, 1e-9).unwrap();
        assert!(bs.support.len() <= 1);
        assert_relative_eq!(bs.x.sum(), 1.0, epsilon = 1e-9);
    }
}
