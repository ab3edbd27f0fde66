//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Problems are given in inequality form `A·x ≤ b` with free variables.
//! Internally the free variables are split as `x = x⁺ − x⁻` and slacks are
//! added. Basic solutions of the lifted problem need not project to
//! vertices of `{A·x ≤ b}`, so the optimum is walked to a vertex of the
//! optimal face afterwards whenever the region is pointed.

use num_traits::{Signed, Zero};

use super::{dot, Matrix, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub point: Option<Vec<Rational>>,
    pub objective: Option<Rational>,
}

impl LpOutcome {
    fn infeasible() -> Self {
        Self { status: LpStatus::Infeasible, point: None, objective: None }
    }

    fn unbounded() -> Self {
        Self { status: LpStatus::Unbounded, point: None, objective: None }
    }
}

struct Tableau {
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.t[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip();
        for v in self.t[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= p * &f;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · columns` over the allowed columns. Returns `false`
    /// if the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let mut entering = None;
            for j in 0..self.ncols {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.t[i][j].is_zero() {
                        reduced -= &cost[b] * &self.t[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((i, _)) => self.pivot(i, j),
                None => return false,
            }
        }
    }
}

/// Optimizes `c · x` subject to `a · x ≤ b`. With `c = 0` this is a plain
/// feasibility test. When the region is pointed the returned optimum is a
/// vertex.
pub fn lp_solve(a: &Matrix, b: &[Rational], c: &[Rational], sense: Sense) -> Result<LpOutcome> {
    if a.rows() != b.len() || a.cols() != c.len() {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{}, b has {}, c has {}",
            a.rows(),
            a.cols(),
            b.len(),
            c.len()
        )));
    }
    let c_max: Vec<Rational> = match sense {
        Sense::Max => c.to_vec(),
        Sense::Min => c.iter().map(|x| -x).collect(),
    };
    let mut out = solve_max(a, b, &c_max);
    if sense == Sense::Min {
        out.objective = out.objective.map(|v| -v);
    }
    Ok(out)
}

fn solve_max(a: &Matrix, b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.rows();
    let d = a.cols();
    let needs_art: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let ncols = 2 * d + m + needs_art.len();
    let mut t = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); ncols + 1];
        let neg = b[i].is_negative();
        for j in 0..d {
            let v = &a[(i, j)];
            row[j] = if neg { -v } else { v.clone() };
            row[d + j] = if neg { v.clone() } else { -v };
        }
        row[2 * d + i] = if neg { -Rational::from_integer(1.into()) } else { Rational::from_integer(1.into()) };
        row[ncols] = b[i].abs();
        if neg {
            let k = needs_art.iter().position(|&x| x == i).unwrap();
            row[2 * d + m + k] = Rational::from_integer(1.into());
            basis.push(2 * d + m + k);
        } else {
            basis.push(2 * d + i);
        }
        t.push(row);
    }
    let mut tab = Tableau { t, basis, ncols };
    let art_start = 2 * d + m;

    if !needs_art.is_empty() {
        let mut cost = vec![Rational::zero(); ncols];
        for c in cost.iter_mut().skip(art_start) {
            *c = -Rational::from_integer(1.into());
        }
        let all = vec![true; ncols];
        tab.optimize(&cost, &all);
        let infeas: Rational =
            (0..tab.t.len()).filter(|&i| tab.basis[i] >= art_start).map(|i| tab.rhs(i).clone()).sum();
        if infeas.is_positive() {
            return LpOutcome::infeasible();
        }
        // drive remaining artificials out of the basis
        let mut i = 0;
        while i < tab.t.len() {
            if tab.basis[i] >= art_start {
                match (0..art_start).find(|&j| !tab.t[i][j].is_zero()) {
                    Some(j) => {
                        tab.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        tab.t.remove(i);
                        tab.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..d {
        cost[j] = c[j].clone();
        cost[d + j] = -c[j].clone();
    }
    let allowed: Vec<bool> = (0..ncols).map(|j| j < art_start).collect();
    if !tab.optimize(&cost, &allowed) {
        return LpOutcome::unbounded();
    }
    let mut x = vec![Rational::zero(); d];
    for (i, &bv) in tab.basis.iter().enumerate() {
        if bv < d {
            x[bv] += tab.rhs(i);
        } else if bv < 2 * d {
            x[bv - d] -= tab.rhs(i);
        }
    }
    let x = walk_to_vertex(a, b, x);
    let objective = dot(c, &x);
    LpOutcome { status: LpStatus::Optimal, point: Some(x), objective: Some(objective) }
}

/// Indices of the rows of `a · x ≤ b` that hold with equality at `x`.
pub fn active_rows(a: &Matrix, b: &[Rational], x: &[Rational]) -> Vec<usize> {
    (0..a.rows()).filter(|&i| dot(a.row(i), x) == b[i]).collect()
}

/// Moves a feasible point inside its minimal face until the active rows
/// have full rank. Each step follows a direction in the kernel of the
/// active rows until a new row becomes tight; such a direction keeps any
/// objective constant when `x` is optimal. If both orientations of a
/// kernel direction are unbounded the region contains a line and `x` is
/// returned unchanged.
pub fn walk_to_vertex(a: &Matrix, b: &[Rational], mut x: Vec<Rational>) -> Vec<Rational> {
    let d = a.cols();
    loop {
        let active = active_rows(a, b, &x);
        let m = Matrix::from_rows(d, active.iter().map(|&i| a.row(i).to_vec())).unwrap();
        let ns = m.nullspace();
        let Some(delta) = ns.into_iter().next() else {
            return x;
        };
        let step = |dir: &[Rational]| -> Option<Rational> {
            let mut best: Option<Rational> = None;
            for (row, bi) in a.iter_rows().zip(b) {
                let ad = dot(row, dir);
                if ad.is_positive() {
                    let t = (bi - dot(row, &x)) / ad;
                    if best.as_ref().is_none_or(|bt| t < *bt) {
                        best = Some(t);
                    }
                }
            }
            best
        };
        let neg: Vec<Rational> = delta.iter().map(|v| -v).collect();
        let (dir, t) = match step(&delta) {
            Some(t) => (delta, t),
            None => match step(&neg) {
                Some(t) => (neg, t),
                None => return x,
            },
        };
        for (xi, di) in x.iter_mut().zip(&dir) {
            *xi += di * &t;
        }
    }
}
