//! Exact rational linear programming.
//!
//! Dense two-phase tableau simplex with Bland's pivot rule. Intended for the
//! small programs produced by hull-membership and W-membership queries (tens
//! of variables), where exactness matters more than speed.

use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// `maximize objective·x` subject to `row·x = rhs` for every equality row,
/// `x_i >= 0` for the variables flagged nonnegative, and `x_i <= u_i` where an
/// upper bound is given.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub eq_constraints: Vec<(Vec<Rational>, Rational)>,
    pub nonneg: Vec<bool>,
    pub upper_bounds: Vec<Option<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn status(&self) -> &'static str {
        match self {
            LpOutcome::Optimal { .. } => "optimal",
            LpOutcome::Infeasible => "infeasible",
            LpOutcome::Unbounded => "unbounded",
        }
    }
}

impl LinearProgram {
    /// A program over `num_vars` nonnegative variables with zero objective and
    /// no constraints.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            eq_constraints: Vec::new(),
            nonneg: vec![true; num_vars],
            upper_bounds: vec![None; num_vars],
        }
    }

    pub fn maximize(mut self, objective: Vec<Rational>) -> Self {
        self.objective = objective;
        self
    }

    pub fn add_eq(&mut self, row: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.eq_constraints.push((row, rhs));
        self
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.nonneg[var] = false;
        self
    }

    pub fn set_upper(&mut self, var: usize, bound: Rational) -> &mut Self {
        self.upper_bounds[var] = Some(bound);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars;
        if n == 0 {
            return Err(Error::InvalidInput("program has no variables".into()));
        }
        if self.objective.len() != n || self.nonneg.len() != n || self.upper_bounds.len() != n {
            return Err(Error::InvalidInput("per-variable data does not match num_vars".into()));
        }
        for (i, (row, _)) in self.eq_constraints.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "constraint row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        Ok(())
    }

    /// Checks a candidate point against every constraint exactly.
    pub fn is_feasible_point(&self, point: &[Rational]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        let rows_ok = self.eq_constraints.iter().all(|(row, rhs)| {
            row.iter().zip(point).map(|(a, x)| a * x).sum::<Rational>() == *rhs
        });
        let bounds_ok = point.iter().enumerate().all(|(i, x)| {
            (!self.nonneg[i] || !x.is_negative())
                && self.upper_bounds[i].as_ref().map_or(true, |u| x <= u)
        });
        rows_ok && bounds_ok
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        self.objective.iter().zip(point).map(|(c, x)| c * x).sum()
    }
}

/// Column layout of the standard-form program `A y = b, y >= 0`.
struct StandardForm {
    /// Per original variable: (positive column, optional negative column).
    columns: Vec<(usize, Option<usize>)>,
    num_cols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    objective: Vec<Rational>,
}

impl StandardForm {
    fn build(prog: &LinearProgram) -> Self {
        let mut columns = Vec::with_capacity(prog.num_vars);
        let mut next = 0;
        for i in 0..prog.num_vars {
            let pos = next;
            next += 1;
            let neg = if prog.nonneg[i] {
                None
            } else {
                next += 1;
                Some(next - 1)
            };
            columns.push((pos, neg));
        }
        let bounded: Vec<usize> = (0..prog.num_vars).filter(|&i| prog.upper_bounds[i].is_some()).collect();
        let num_cols = next + bounded.len();

        let expand = |row: &[Rational]| {
            let mut out = vec![Rational::zero(); num_cols];
            for (i, a) in row.iter().enumerate() {
                let (pos, neg) = columns[i];
                out[pos] = a.clone();
                if let Some(neg) = neg {
                    out[neg] = -a;
                }
            }
            out
        };

        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (row, b) in &prog.eq_constraints {
            rows.push(expand(row));
            rhs.push(b.clone());
        }
        for (k, &i) in bounded.iter().enumerate() {
            let mut unit = vec![Rational::zero(); prog.num_vars];
            unit[i] = Rational::one();
            let mut row = expand(&unit);
            row[next + k] = Rational::one();
            rows.push(row);
            rhs.push(prog.upper_bounds[i].clone().expect("bounded"));
        }
        let objective = expand(&prog.objective);
        StandardForm { columns, num_cols, rows, rhs, objective }
    }

    fn recover(&self, values: &[Rational]) -> Vec<Rational> {
        self.columns
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect()
    }
}

/// Simplex tableau. Each row stores its coefficients followed by the
/// right-hand side; `z` stores reduced costs followed by minus the objective
/// value of the current basis.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    z: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.width]
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let mut z: Vec<Rational> = cost.to_vec();
        z.resize(self.width, Rational::zero());
        z.push(Rational::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &z[b];
            if cb.is_zero() {
                continue;
            }
            let cb = cb.clone();
            for (zj, a) in z.iter_mut().zip(&self.rows[r]) {
                if !a.is_zero() {
                    *zj = &*zj - &cb * a;
                }
            }
        }
        self.z = z;
    }

    fn value(&self) -> Rational {
        -&self.z[self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip().expect("nonzero pivot");
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a = &*a * &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |target: &mut Vec<Rational>| {
            let f = target[col].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                target[j] = &target[j] - &f * &pivot_row[j];
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.z);
        self.rows[r] = pivot_row;
        self.basis[r] = col;
    }

    /// Runs Bland-rule pivots until optimal. Returns false when unbounded.
    fn optimize(&mut self, allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let Some(col) = (0..self.width).find(|&j| allowed(j) && self.z[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            write!(f, "x{:<3}|", self.basis[r])?;
            for a in row {
                write!(f, " {a:>6}")?;
            }
            writeln!(f)?;
        }
        write!(f, "z   |")?;
        for a in &self.z {
            write!(f, " {a:>6}")?;
        }
        writeln!(f)
    }
}

/// Solves `prog` exactly. Deterministic for a fixed input.
pub fn lp_solve(prog: &LinearProgram) -> Result<LpOutcome> {
    solve_impl(prog, None)
}

/// Like [`lp_solve`], but also returns a text dump of the final tableau.
pub fn lp_solve_traced(prog: &LinearProgram) -> Result<(LpOutcome, String)> {
    let mut dump = String::new();
    let out = solve_impl(prog, Some(&mut dump))?;
    Ok((out, dump))
}

fn solve_impl(prog: &LinearProgram, dump: Option<&mut String>) -> Result<LpOutcome> {
    prog.validate()?;
    let sf = StandardForm::build(prog);
    let n = sf.num_cols;
    let m = sf.rows.len();

    // Nonnegative right-hand sides, then one artificial per row.
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, b)) in sf.rows.iter().zip(&sf.rhs).enumerate() {
        let flip = b.is_negative();
        let mut full: Vec<Rational> = row.iter().map(|a| if flip { -a } else { a.clone() }).collect();
        full.resize(width, Rational::zero());
        full[n + i] = Rational::one();
        full.push(if flip { -b } else { b.clone() });
        rows.push(full);
    }
    let mut t = Tableau { rows, z: Vec::new(), basis: (n..n + m).collect(), width };

    let mut phase1 = vec![Rational::zero(); width];
    for c in phase1.iter_mut().skip(n) {
        *c = -Rational::one();
    }
    t.set_objective(&phase1);
    let bounded = t.optimize(|_| true);
    debug_assert!(bounded, "phase one is bounded by zero");
    if t.value().is_negative() {
        if let Some(d) = dump {
            *d = t.to_string();
        }
        return Ok(LpOutcome::Infeasible);
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(col) => t.pivot(r, col),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    t.set_objective(&sf.objective);
    let bounded = t.optimize(|j| j < n);
    if let Some(d) = dump {
        *d = t.to_string();
    }
    if !bounded {
        return Ok(LpOutcome::Unbounded);
    }

    let mut values = vec![Rational::zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        values[b] = t.rhs(r).clone();
    }
    let point = sf.recover(&values);
    let value = prog.objective_value(&point);
    debug_assert_eq!(value, t.value());
    Ok(LpOutcome::Optimal { value, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn box_corner() {
        let mut lp = LinearProgram::new(2).maximize(vec![r(1), r(1)]);
        lp.set_upper(0, r(1)).set_upper(1, r(1));
        assert_eq!(
            lp_solve(&lp).unwrap(),
            LpOutcome::Optimal { value: r(2), point: vec![r(1), r(1)] }
        );
    }

    #[test]
    fn infeasible_equality() {
        let mut lp = LinearProgram::new(1).maximize(vec![r(1)]);
        lp.add_eq(vec![r(1)], r(-1));
        assert_eq!(lp_solve(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        let lp = LinearProgram::new(1).maximize(vec![r(1)]);
        assert_eq!(lp_solve(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn malformed_rows_rejected() {
        let mut lp = LinearProgram::new(2);
        lp.add_eq(vec![r(1)], r(0));
        assert!(matches!(lp_solve(&lp), Err(Error::InvalidInput(_))));
        assert!(lp_solve(&LinearProgram::new(0)).is_err());
    }

    #[test]
    fn free_variable_goes_negative() {
        // maximize -x subject to x free, x >= -3 written as x - s = -3.
        let mut lp = LinearProgram::new(2).maximize(vec![r(-1), r(0)]);
        lp.set_free(0);
        lp.add_eq(vec![r(1), r(-1)], r(-3));
        match lp_solve(&lp).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, r(3));
                assert_eq!(point[0], r(-3));
                assert!(lp.is_feasible_point(&point));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let mut lp = LinearProgram::new(2).maximize(vec![r(1), r(2)]);
        lp.add_eq(vec![r(1), r(1)], r(1));
        lp.add_eq(vec![r(2), r(2)], r(2));
        lp.add_eq(vec![q(1, 2), q(1, 2)], q(1, 2));
        assert_eq!(
            lp_solve(&lp).unwrap(),
            LpOutcome::Optimal { value: r(2), point: vec![r(0), r(1)] }
        );
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's cycling instance with slacks x5..x7; optimum 5/4 at x1 = x3 = 1.
        let mut lp = LinearProgram::new(7).maximize(vec![
            q(3, 4),
            r(-20),
            q(1, 2),
            r(-6),
            r(0),
            r(0),
            r(0),
        ]);
        lp.add_eq(vec![q(1, 4), r(-8), r(-1), r(9), r(1), r(0), r(0)], r(0));
        lp.add_eq(vec![q(1, 2), r(-12), q(-1, 2), r(3), r(0), r(1), r(0)], r(0));
        lp.add_eq(vec![r(0), r(0), r(1), r(0), r(0), r(0), r(1)], r(1));
        match lp_solve(&lp).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(5, 4));
                assert!(lp.is_feasible_point(&point));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn traced_dump_mentions_basis() {
        let mut lp = LinearProgram::new(1).maximize(vec![r(1)]);
        lp.set_upper(0, q(1, 3));
        let (out, dump) = lp_solve_traced(&lp).unwrap();
        assert_eq!(out.status(), "optimal");
        assert!(dump.contains('z'));
    }
}
