//! Dense two-phase simplex over exact big rationals.
//!
//! Pivoting follows Bland's rule throughout (smallest eligible entering
//! index; ties in the ratio test broken by smallest basic variable index),
//! so the solver terminates on degenerate programs. Every OPTIMAL solve
//! returns a dual vector recovered from the final basis by solving
//! `B^T y = c_B` against the original data, and both vectors are re-checked
//! (feasibility, strong duality) before the solution is handed back.
//!
//! Dual sign convention, per row sense:
//! - Maximize: `<=` rows give `y >= 0`, `>=` rows give `y <= 0`, `=` free.
//! - Minimize: `<=` rows give `y <= 0`, `>=` rows give `y >= 0`, `=` free.
//!
//! In both directions `b^T y` equals the optimal objective value.

use num_traits::{One, Signed, Zero};

use crate::exact::Rat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarBound {
    NonNegative,
    Free,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub sense: Sense,
    pub rhs: Rat,
}

#[derive(Debug, Clone)]
pub struct ExactLp {
    pub direction: Direction,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<VarBound>,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub objective: Rat,
    pub primal: Vec<Rat>,
    pub dual: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

struct Tableau {
    // rows[i][0..ncols] = coefficients, rows[i][ncols] = rhs
    rows: Vec<Vec<Rat>>,
    ncols: usize,
    basis: Vec<usize>,
    a0: Vec<Vec<Rat>>,
    first_artificial: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &inv;
            }
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for j in 0..=self.ncols {
                if !self.rows[r][j].is_zero() {
                    let delta = &factor * &self.rows[r][j];
                    self.rows[i][j] -= delta;
                }
            }
            self.rows[i][c] = Rat::zero();
        }
        self.basis[r] = c;
    }

    /// Bland iteration for `maximize c x` with reduced costs maintained in
    /// `z` (costs `cost`). Returns false on unboundedness.
    fn optimize(&mut self, cost: &[Rat]) -> bool {
        let m = self.rows.len();
        loop {
            // z_j = cost_j - sum_i cost_{basis i} rows[i][j], computed fresh
            // per scan; columns past first_artificial never re-enter.
            let mut entering = None;
            for j in 0..self.first_artificial {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j].clone();
                for i in 0..m {
                    if !cost[self.basis[i]].is_zero() && !self.rows[i][j].is_zero() {
                        red -= &cost[self.basis[i]] * &self.rows[i][j];
                    }
                }
                if red.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..m {
                if self.rows[i][c].is_positive() {
                    let ratio = &self.rows[i][self.ncols] / &self.rows[i][c];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, c);
        }
    }
}

impl ExactLp {
    /// Solves the program. `Err` is reserved for malformed input and failed
    /// internal re-checks; infeasibility and unboundedness are outcomes.
    pub fn solve(&self) -> Result<LpOutcome> {
        let nv = self.objective.len();
        if self.bounds.len() != nv {
            return Err(Error::Domain("one bound per variable required".into()));
        }
        for c in &self.constraints {
            if c.coeffs.len() != nv {
                return Err(Error::Domain("constraint width mismatch".into()));
            }
        }
        let m = self.constraints.len();

        // Internal maximization over nonnegative columns: free variables are
        // split x = x+ - x-.
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(nv);
        let mut ns = 0usize;
        for b in &self.bounds {
            match b {
                VarBound::NonNegative => {
                    col_of.push((ns, None));
                    ns += 1;
                }
                VarBound::Free => {
                    col_of.push((ns, Some(ns + 1)));
                    ns += 2;
                }
            }
        }
        let sign = match self.direction {
            Direction::Maximize => Rat::one(),
            Direction::Minimize => -Rat::one(),
        };
        let mut cint = vec![Rat::zero(); ns];
        for j in 0..nv {
            let (p, neg) = col_of[j];
            cint[p] = &sign * &self.objective[j];
            if let Some(q) = neg {
                cint[q] = -cint[p].clone();
            }
        }

        // Row normalization to rhs >= 0; slack/surplus/artificial layout.
        let mut row_sign = vec![Rat::one(); m];
        let mut senses = Vec::with_capacity(m);
        let mut amat: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut rhs: Vec<Rat> = Vec::with_capacity(m);
        for (i, c) in self.constraints.iter().enumerate() {
            let mut coeffs = vec![Rat::zero(); ns];
            for j in 0..nv {
                let (p, neg) = col_of[j];
                coeffs[p] = c.coeffs[j].clone();
                if let Some(q) = neg {
                    coeffs[q] = -c.coeffs[j].clone();
                }
            }
            let mut b = c.rhs.clone();
            let mut sense = c.sense;
            if b.is_negative() {
                row_sign[i] = -Rat::one();
                for v in coeffs.iter_mut() {
                    *v = -v.clone();
                }
                b = -b;
                sense = match sense {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                };
            }
            senses.push(sense);
            amat.push(coeffs);
            rhs.push(b);
        }

        let n_slack = senses.iter().filter(|s| **s != Sense::Eq).count();
        let n_art = senses.iter().filter(|s| **s != Sense::Le).count();
        let first_artificial = ns + n_slack;
        let ncols = first_artificial + n_art;

        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut basis = vec![usize::MAX; m];
        {
            let mut slack_at = ns;
            let mut art_at = first_artificial;
            for i in 0..m {
                let mut row = amat[i].clone();
                row.resize(ncols + 1, Rat::zero());
                match senses[i] {
                    Sense::Le => {
                        row[slack_at] = Rat::one();
                        basis[i] = slack_at;
                        slack_at += 1;
                    }
                    Sense::Ge => {
                        row[slack_at] = -Rat::one();
                        slack_at += 1;
                        row[art_at] = Rat::one();
                        basis[i] = art_at;
                        art_at += 1;
                    }
                    Sense::Eq => {
                        row[art_at] = Rat::one();
                        basis[i] = art_at;
                        art_at += 1;
                    }
                }
                row[ncols] = rhs[i].clone();
                rows.push(row);
            }
        }
        let a0: Vec<Vec<Rat>> = rows.iter().map(|r| r[..ncols].to_vec()).collect();
        let mut t = Tableau { rows, ncols, basis, a0, first_artificial };

        if n_art > 0 {
            // Phase 1: maximize -sum(artificials); allow artificial columns
            // to leave but never re-enter.
            let mut cost1 = vec![Rat::zero(); ncols];
            for j in first_artificial..ncols {
                cost1[j] = -Rat::one();
            }
            if !t.optimize(&cost1) {
                return Err(Error::Internal("phase 1 cannot be unbounded".into()));
            }
            let mut infeas = Rat::zero();
            for i in 0..m {
                if t.basis[i] >= first_artificial {
                    infeas += &t.rows[i][t.ncols];
                }
            }
            if !infeas.is_zero() {
                return Ok(LpOutcome::Infeasible);
            }
            // Drive basic artificials out on any nonzero real column; rows
            // with no such column are redundant and stay inert.
            for i in 0..m {
                if t.basis[i] >= first_artificial {
                    if let Some(j) =
                        (0..first_artificial).find(|&j| !t.rows[i][j].is_zero())
                    {
                        t.pivot(i, j);
                    }
                }
            }
        }

        let mut cost2 = cint.clone();
        cost2.resize(ncols, Rat::zero());
        if !t.optimize(&cost2) {
            return Ok(LpOutcome::Unbounded);
        }

        // Primal in original variables.
        let mut xint = vec![Rat::zero(); ncols];
        for i in 0..m {
            xint[t.basis[i]] = t.rows[i][t.ncols].clone();
        }
        let mut primal = Vec::with_capacity(nv);
        for j in 0..nv {
            let (p, neg) = col_of[j];
            let v = match neg {
                None => xint[p].clone(),
                Some(q) => &xint[p] - &xint[q],
            };
            primal.push(v);
        }
        let mut objective = Rat::zero();
        for j in 0..nv {
            objective += &self.objective[j] * &primal[j];
        }

        // Duals: solve B^T y = c_B on the original (pre-pivot) columns.
        let mut sys: Vec<Vec<Rat>> = Vec::with_capacity(m);
        for p in 0..m {
            let mut row: Vec<Rat> = (0..m).map(|i| t.a0[i][t.basis[p]].clone()).collect();
            row.push(cost2[t.basis[p]].clone());
            sys.push(row);
        }
        let yint = gauss_solve(&mut sys)
            .ok_or_else(|| Error::Internal("singular basis in dual recovery".into()))?;
        let mut dual = Vec::with_capacity(m);
        for i in 0..m {
            let mut y = &row_sign[i] * &yint[i];
            if self.direction == Direction::Minimize {
                y = -y;
            }
            dual.push(y);
        }

        let sol = LpSolution { objective, primal, dual };
        self.verify(&sol)?;
        Ok(LpOutcome::Optimal(sol))
    }

    /// Exact feasibility, dual feasibility, and strong duality re-check
    /// against the original data.
    fn verify(&self, sol: &LpSolution) -> Result<()> {
        let bad = |what: &str| Err(Error::Internal(format!("lp re-check failed: {what}")));
        for (j, b) in self.bounds.iter().enumerate() {
            if *b == VarBound::NonNegative && sol.primal[j].is_negative() {
                return bad("primal bound");
            }
        }
        let mut by = Rat::zero();
        for (i, c) in self.constraints.iter().enumerate() {
            let mut lhs = Rat::zero();
            for j in 0..c.coeffs.len() {
                lhs += &c.coeffs[j] * &sol.primal[j];
            }
            let ok = match c.sense {
                Sense::Le => lhs <= c.rhs,
                Sense::Eq => lhs == c.rhs,
                Sense::Ge => lhs >= c.rhs,
            };
            if !ok {
                return bad("primal row");
            }
            let y = &sol.dual[i];
            let sign_ok = match (self.direction, c.sense) {
                (_, Sense::Eq) => true,
                (Direction::Maximize, Sense::Le) => !y.is_negative(),
                (Direction::Maximize, Sense::Ge) => !y.is_positive(),
                (Direction::Minimize, Sense::Le) => !y.is_positive(),
                (Direction::Minimize, Sense::Ge) => !y.is_negative(),
            };
            if !sign_ok {
                return bad("dual sign");
            }
            by += y * &c.rhs;
        }
        if by != sol.objective {
            return bad("strong duality");
        }
        for j in 0..self.objective.len() {
            let mut s = Rat::zero();
            for (i, c) in self.constraints.iter().enumerate() {
                s += &sol.dual[i] * &c.coeffs[j];
            }
            let ok = match (self.direction, self.bounds[j]) {
                (_, VarBound::Free) => s == self.objective[j],
                (Direction::Maximize, VarBound::NonNegative) => s >= self.objective[j],
                (Direction::Minimize, VarBound::NonNegative) => s <= self.objective[j],
            };
            if !ok {
                return bad("dual row");
            }
        }
        Ok(())
    }
}

/// Solves a square system given as rows `[a | b]`; returns `None` if
/// singular.
fn gauss_solve(rows: &mut Vec<Vec<Rat>>) -> Option<Vec<Rat>> {
    let m = rows.len();
    let mut perm: Vec<usize> = (0..m).collect();
    for col in 0..m {
        let p = (col..m).find(|&r| !rows[perm[r]][col].is_zero())?;
        perm.swap(col, p);
        let prow = perm[col];
        for r in 0..m {
            if r == col {
                continue;
            }
            let i = perm[r];
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &rows[prow][col];
            for j in col..=m {
                let delta = &factor * &rows[prow][j];
                rows[i][j] -= delta;
            }
        }
    }
    let mut x = vec![Rat::zero(); m];
    for col in 0..m {
        let i = perm[col];
        x[col] = &rows[i][m] / &rows[i][col];
    }
    Some(x)
}
