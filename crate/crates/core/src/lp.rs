//! Exact two-phase primal simplex with Bland's rule.
//!
//! Every outcome carries a certificate that is checked in exact arithmetic
//! before it is returned: a dual solution for optima, an improving ray for
//! unbounded problems and a Farkas combination for infeasible ones.

use crate::error::{Error, Result};
use crate::polyhedra::{HPolyhedron, Halfspace};
use crate::scalar::{dot, Field};

/// Minimize `objective · x` over `feasible`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram<T> {
    pub objective: Vec<T>,
    pub feasible: HPolyhedron<T>,
}

/// Multipliers for the inequality rows (nonnegative) and the equation rows
/// (free), in the row order of the feasible system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipliers<T> {
    pub inequalities: Vec<T>,
    pub equations: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<T> {
    /// `dual` satisfies `Aᵀy + Eᵀz = c`, `y ≥ 0` and `b·y + f·z = value`.
    Optimal {
        point: Vec<T>,
        value: T,
        dual: Multipliers<T>,
    },
    /// `point` is feasible, `ray` recedes and `c·ray < 0`.
    Unbounded { point: Vec<T>, ray: Vec<T> },
    /// `Aᵀy + Eᵀz = 0`, `y ≥ 0` and `b·y + f·z > 0`.
    Infeasible { farkas: Multipliers<T> },
}

impl<T> LpOutcome<T> {
    pub fn optimum(&self) -> Option<(&[T], &T)> {
        match self {
            LpOutcome::Optimal { point, value, .. } => Some((point, value)),
            _ => None,
        }
    }
}

impl<T: Field> LinearProgram<T> {
    pub fn new(objective: Vec<T>, feasible: HPolyhedron<T>) -> Result<Self> {
        if objective.len() != feasible.dim {
            return Err(Error::BadShape(format!(
                "objective of length {} in dimension {}",
                objective.len(),
                feasible.dim
            )));
        }
        Ok(Self {
            objective,
            feasible,
        })
    }
}

/// One column of the standard form `M z = g, z ≥ 0`.
#[derive(Clone, Copy)]
enum Column {
    /// `x_j` itself (nonnegative variable) or one half of a split free one.
    Var {
        j: usize,
        negated: bool,
    },
    Slack(usize),
}

struct Standard<T> {
    columns: Vec<Column>,
    /// For each variable, an inequality `α x_j ≥ 0` making it nonnegative.
    sign_row: Vec<Option<usize>>,
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    flip: Vec<bool>,
}

fn standard_form<T: Field>(h: &HPolyhedron<T>) -> Standard<T> {
    let n = h.dim;
    let mut sign_row = vec![None; n];
    for (k, ineq) in h.inequalities.iter().enumerate() {
        if !ineq.offset.is_zero() {
            continue;
        }
        let mut nz = ineq.normal.iter().enumerate().filter(|(_, a)| !a.is_zero());
        if let (Some((j, a)), None) = (nz.next(), nz.next()) {
            if a.is_positive() && sign_row[j].is_none() {
                sign_row[j] = Some(k);
            }
        }
    }
    let mut columns = Vec::new();
    for (j, s) in sign_row.iter().enumerate() {
        columns.push(Column::Var { j, negated: false });
        if s.is_none() {
            columns.push(Column::Var { j, negated: true });
        }
    }
    columns.extend((0..h.inequalities.len()).map(Column::Slack));

    let all: Vec<&Halfspace<T>> = h.inequalities.iter().chain(&h.equations).collect();
    let mut rows = Vec::with_capacity(all.len());
    let mut rhs = Vec::with_capacity(all.len());
    let mut flip = Vec::with_capacity(all.len());
    for (i, hs) in all.iter().enumerate() {
        let negate = hs.offset.is_negative();
        let row: Vec<T> = columns
            .iter()
            .map(|c| {
                let v = match *c {
                    Column::Var { j, negated } => {
                        if negated {
                            -hs.normal[j].clone()
                        } else {
                            hs.normal[j].clone()
                        }
                    }
                    Column::Slack(k) if k == i => -T::one(),
                    Column::Slack(_) => T::zero(),
                };
                if negate {
                    -v
                } else {
                    v
                }
            })
            .collect();
        rows.push(row);
        rhs.push(if negate {
            -hs.offset.clone()
        } else {
            hs.offset.clone()
        });
        flip.push(negate);
    }
    Standard {
        columns,
        sign_row,
        rows,
        rhs,
        flip,
    }
}

/// Dense tableau; the last entry of each row is the right-hand side and the
/// last row holds reduced costs (with `-value` as its right-hand side).
struct Tableau<T> {
    t: Vec<Vec<T>>,
    basis: Vec<usize>,
}

impl<T: Field> Tableau<T> {
    fn m(&self) -> usize {
        self.basis.len()
    }

    fn rhs_col(&self) -> usize {
        self.t[0].len() - 1
    }

    fn pivot(&mut self, p: usize, q: usize) {
        let inv = T::one() / self.t[p][q].clone();
        for x in self.t[p].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let prow = self.t[p].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == p || row[q].is_zero() {
                continue;
            }
            let f = row[q].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        self.basis[p] = q;
    }

    fn set_costs(&mut self, cost: &[T]) {
        let m = self.m();
        let mut obj: Vec<T> = cost
            .iter()
            .cloned()
            .chain(std::iter::once(T::zero()))
            .collect();
        for i in 0..m {
            let cb = cost[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for (o, t) in obj.iter_mut().zip(&self.t[i]) {
                *o = o.clone() - cb.clone() * t.clone();
            }
        }
        self.t[m] = obj;
    }

    /// Runs Bland's rule over columns `< limit`. Returns the entering column
    /// when the objective is unbounded.
    fn run(&mut self, limit: usize) -> Option<usize> {
        let m = self.m();
        let rc = self.rhs_col();
        loop {
            let q = (0..limit).find(|&j| self.t[m][j].is_negative())?;
            let mut best: Option<(usize, T)> = None;
            for i in 0..m {
                if !self.t[i][q].is_positive() {
                    continue;
                }
                let ratio = self.t[i][rc].clone() / self.t[i][q].clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((p, _)) => self.pivot(p, q),
                None => return Some(q),
            }
        }
    }

    fn primal(&self, ncols: usize) -> Vec<T> {
        let rc = self.rhs_col();
        let mut z = vec![T::zero(); ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < ncols {
                z[b] = self.t[i][rc].clone();
            }
        }
        z
    }
}

fn to_x<T: Field>(std: &Standard<T>, z: &[T], n: usize) -> Vec<T> {
    let mut x = vec![T::zero(); n];
    for (c, v) in std.columns.iter().zip(z) {
        if let Column::Var { j, negated } = *c {
            x[j] = if negated {
                x[j].clone() - v.clone()
            } else {
                x[j].clone() + v.clone()
            };
        }
    }
    x
}

/// `Aᵀy + Eᵀz`.
fn combination<T: Field>(h: &HPolyhedron<T>, mult: &Multipliers<T>) -> Vec<T> {
    let mut out = vec![T::zero(); h.dim];
    for (hs, y) in h
        .inequalities
        .iter()
        .chain(&h.equations)
        .zip(mult.inequalities.iter().chain(&mult.equations))
    {
        if y.is_zero() {
            continue;
        }
        for (o, a) in out.iter_mut().zip(&hs.normal) {
            *o = o.clone() + y.clone() * a.clone();
        }
    }
    out
}

fn rhs_value<T: Field>(h: &HPolyhedron<T>, mult: &Multipliers<T>) -> T {
    h.inequalities
        .iter()
        .chain(&h.equations)
        .zip(mult.inequalities.iter().chain(&mult.equations))
        .fold(T::zero(), |acc, (hs, y)| {
            acc + y.clone() * hs.offset.clone()
        })
}

/// Splits the standard-form row multipliers and moves any slack left on a
/// sign-constrained variable onto its sign row, so that the combination
/// matches `target` exactly.
fn multipliers<T: Field>(
    h: &HPolyhedron<T>,
    std: &Standard<T>,
    pi: Vec<T>,
    target: &[T],
) -> Multipliers<T> {
    let k = h.inequalities.len();
    let y: Vec<T> = pi
        .into_iter()
        .zip(&std.flip)
        .map(|(p, &f)| if f { -p } else { p })
        .collect();
    let mut mult = Multipliers {
        inequalities: y[..k].to_vec(),
        equations: y[k..].to_vec(),
    };
    let comb = combination(h, &mult);
    for (j, row) in std.sign_row.iter().enumerate() {
        if let Some(r) = *row {
            let gap = target[j].clone() - comb[j].clone();
            if !gap.is_zero() {
                let alpha = h.inequalities[r].normal[j].clone();
                mult.inequalities[r] = mult.inequalities[r].clone() + gap / alpha;
            }
        }
    }
    mult
}

pub fn solve<T: Field>(lp: &LinearProgram<T>) -> Result<LpOutcome<T>> {
    let h = &lp.feasible;
    let n = h.dim;
    if lp.objective.len() != n {
        return Err(Error::BadShape("objective length".into()));
    }
    let std = standard_form(h);
    let m = std.rows.len();
    let n0 = std.columns.len();

    let mut t: Vec<Vec<T>> = std
        .rows
        .iter()
        .zip(&std.rhs)
        .enumerate()
        .map(|(i, (row, g))| {
            let mut r = row.clone();
            r.extend((0..m).map(|a| if a == i { T::one() } else { T::zero() }));
            r.push(g.clone());
            r
        })
        .collect();
    t.push(vec![T::zero(); n0 + m + 1]);
    let mut tab = Tableau {
        t,
        basis: (n0..n0 + m).collect(),
    };

    // Phase 1.
    let phase1: Vec<T> = (0..n0 + m)
        .map(|j| if j < n0 { T::zero() } else { T::one() })
        .collect();
    tab.set_costs(&phase1);
    tab.run(n0);
    let rc = tab.rhs_col();
    let infeasibility = -tab.t[m][rc].clone();
    if infeasibility.is_positive() {
        let pi: Vec<T> = (0..m)
            .map(|i| T::one() - tab.t[m][n0 + i].clone())
            .collect();
        let farkas = multipliers(h, &std, pi, &vec![T::zero(); n]);
        check_farkas(h, &farkas)?;
        return Ok(LpOutcome::Infeasible { farkas });
    }
    for i in 0..m {
        if tab.basis[i] >= n0 {
            if let Some(q) = (0..n0).find(|&q| !tab.t[i][q].is_zero()) {
                tab.pivot(i, q);
            }
        }
    }

    // Phase 2.
    let cost: Vec<T> = std
        .columns
        .iter()
        .map(|c| match *c {
            Column::Var { j, negated: false } => lp.objective[j].clone(),
            Column::Var { j, negated: true } => -lp.objective[j].clone(),
            Column::Slack(_) => T::zero(),
        })
        .chain((0..m).map(|_| T::zero()))
        .collect();
    tab.set_costs(&cost);
    let entering = tab.run(n0);
    let z = tab.primal(n0);
    let point = to_x(&std, &z, n);

    if let Some(q) = entering {
        let mut dz = vec![T::zero(); n0];
        dz[q] = T::one();
        for (i, &b) in tab.basis.iter().enumerate() {
            if b < n0 {
                dz[b] = -tab.t[i][q].clone();
            }
        }
        let ray = to_x(&std, &dz, n);
        check_ray(lp, &point, &ray)?;
        return Ok(LpOutcome::Unbounded { point, ray });
    }

    let value = dot(&lp.objective, &point);
    let pi: Vec<T> = (0..m).map(|i| -tab.t[m][n0 + i].clone()).collect();
    let dual = multipliers(h, &std, pi, &lp.objective);
    check_optimal(lp, &point, &value, &dual)?;
    Ok(LpOutcome::Optimal { point, value, dual })
}

fn check_optimal<T: Field>(
    lp: &LinearProgram<T>,
    point: &[T],
    value: &T,
    dual: &Multipliers<T>,
) -> Result<()> {
    let h = &lp.feasible;
    if !h.contains(point) {
        return Err(Error::Certificate("optimal point is infeasible".into()));
    }
    if dual.inequalities.iter().any(|y| y.is_negative()) {
        return Err(Error::Certificate("negative dual multiplier".into()));
    }
    if combination(h, dual) != lp.objective {
        return Err(Error::Certificate(
            "dual combination differs from objective".into(),
        ));
    }
    if rhs_value(h, dual) != *value {
        return Err(Error::Certificate("duality gap".into()));
    }
    Ok(())
}

fn check_ray<T: Field>(lp: &LinearProgram<T>, point: &[T], ray: &[T]) -> Result<()> {
    if !lp.feasible.contains(point) {
        return Err(Error::Certificate(
            "unbounded witness point is infeasible".into(),
        ));
    }
    if !lp.feasible.recedes_along(ray) || !dot(&lp.objective, ray).is_negative() {
        return Err(Error::Certificate(
            "ray does not improve the objective".into(),
        ));
    }
    Ok(())
}

fn check_farkas<T: Field>(h: &HPolyhedron<T>, farkas: &Multipliers<T>) -> Result<()> {
    if farkas.inequalities.iter().any(|y| y.is_negative())
        || combination(h, farkas).iter().any(|c| !c.is_zero())
        || !rhs_value(h, farkas).is_positive()
    {
        return Err(Error::Certificate("invalid Farkas certificate".into()));
    }
    Ok(())
}

/// Indices of the inequalities tight at `x`.
pub fn tight_set<T: Field>(h: &HPolyhedron<T>, x: &[T]) -> Vec<usize> {
    h.inequalities
        .iter()
        .enumerate()
        .filter(|(_, hs)| hs.slack(x).is_zero())
        .map(|(k, _)| k)
        .collect()
}

/// Inequalities tight at every optimal point.
///
/// Starting from the tight set `U` of one optimizer, repeatedly maximize the
/// total slack of `U` over the optimal face. A zero maximum means all of `U`
/// is tight on the face; otherwise the optimizer (or improving ray) has
/// positive slack on some members of `U`, which are dropped.
pub fn optimal_face_tight_set<T: Field>(lp: &LinearProgram<T>) -> Result<Vec<usize>> {
    let LpOutcome::Optimal { point, value, .. } = solve(lp)? else {
        return Err(Error::NotOptimal);
    };
    let h = &lp.feasible;
    let mut face = h.clone();
    face.equations
        .push(Halfspace::new(lp.objective.clone(), value));
    face.irredundant = false;

    let mut undecided = tight_set(h, &point);
    while !undecided.is_empty() {
        let mut objective = vec![T::zero(); h.dim];
        for &k in &undecided {
            for (c, a) in objective.iter_mut().zip(&h.inequalities[k].normal) {
                *c = c.clone() - a.clone();
            }
        }
        let aux = LinearProgram {
            objective,
            feasible: face.clone(),
        };
        let before = undecided.len();
        match solve(&aux)? {
            LpOutcome::Optimal { point, .. } => {
                undecided.retain(|&k| h.inequalities[k].slack(&point).is_zero());
                if undecided.len() == before {
                    return Ok(undecided);
                }
            }
            LpOutcome::Unbounded { point, ray } => {
                undecided.retain(|&k| {
                    let hs = &h.inequalities[k];
                    hs.slack(&point).is_zero() && dot(&hs.normal, &ray).is_zero()
                });
                if undecided.len() == before {
                    return Err(Error::Certificate(
                        "improving ray keeps every slack at zero".into(),
                    ));
                }
            }
            LpOutcome::Infeasible { .. } => {
                return Err(Error::Certificate("optimal face is empty".into()));
            }
        }
    }
    Ok(undecided)
}
