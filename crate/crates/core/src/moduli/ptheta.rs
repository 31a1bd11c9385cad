use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::charts::{chart_at_vertex, Chart};
use super::GitParameter;
use crate::error::{Error, Result};
use crate::lp::{solve, LpOutcome};
use crate::polyhedra::{h_to_v, normal_fan, project, v_to_h, Halfspace};
use crate::quiver::McKayQuiver;
use crate::{Fan, HPoly, LinearProgram, Rational, VPoly};

/// How `P_θ` is obtained from the lifted polyhedron `{u ≥ 0 : Bu = θ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    /// Enumerate the lifted polyhedron, map it by `D` and re-derive facets.
    /// Exact but expensive for large quivers.
    Lifted,
    /// Grow an inner approximation from support-function queries until every
    /// facet is certified by an LP.
    Oracle,
}

/// `P_θ ⊂ Q^n` in both descriptions.
#[derive(Debug, Clone)]
pub struct PThetaData {
    pub quiver: McKayQuiver,
    pub theta: GitParameter,
    pub h: HPoly,
    pub v: VPoly,
}

#[derive(Debug, Clone)]
pub struct ThetaFan {
    pub fan: Fan,
    /// One chart per maximal cone, parallel to `fan.maximal`.
    pub charts: Option<Vec<Chart>>,
}

fn q(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// `{u ∈ Q^{nr} : u ≥ 0, Bu = θ}` for an integral `θ`.
pub fn lifted_polyhedron(quiver: &McKayQuiver, theta: &[BigInt]) -> HPoly {
    let inc = quiver.incidence();
    let cols = quiver.num_arrows();
    let mut h = HPoly::nonneg_orthant(cols);
    h.irredundant = false;
    h.equations = inc
        .b
        .iter()
        .zip(theta)
        .map(|(row, t)| {
            Halfspace::new(
                row.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect(),
                q(t),
            )
        })
        .collect();
    h
}

fn d_matrix(quiver: &McKayQuiver) -> Vec<Vec<Rational>> {
    quiver
        .incidence()
        .d
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

/// Computes `P_θ`, using the integral rescaling of `θ`.
pub fn p_theta(
    quiver: &McKayQuiver,
    theta: &GitParameter,
    pipeline: Pipeline,
) -> Result<PThetaData> {
    theta.check_len(quiver.num_vertices())?;
    let lifted = lifted_polyhedron(quiver, theta.integral());
    let (h, v) = match pipeline {
        Pipeline::Lifted => {
            let lv = h_to_v(&lifted).ok_or(Error::Empty)?;
            let v = project(&lv, &d_matrix(quiver))?;
            (v_to_h(&v), v)
        }
        Pipeline::Oracle => oracle(quiver, &lifted)?,
    };
    Ok(PThetaData {
        quiver: quiver.clone(),
        theta: theta.clone(),
        h,
        v,
    })
}

/// Minimizes `a·Du` over the lifted polyhedron; returns `(Du, value)`.
fn support(
    quiver: &McKayQuiver,
    lifted: &HPoly,
    a: &[Rational],
) -> Result<(Vec<Rational>, Rational)> {
    let objective = quiver
        .arrows()
        .iter()
        .map(|arrow| a[arrow.label - 1].clone())
        .collect();
    let lp = LinearProgram::new(objective, lifted.clone())?;
    match solve(&lp)? {
        LpOutcome::Optimal { point, value, .. } => {
            let mut image = vec![Rational::zero(); quiver.dim()];
            for (arrow, u) in quiver.arrows().iter().zip(&point) {
                image[arrow.label - 1] += u;
            }
            Ok((image, value))
        }
        LpOutcome::Infeasible { .. } => Err(Error::Empty),
        LpOutcome::Unbounded { .. } => Err(Error::Certificate(
            "support query unbounded for a facet normal".into(),
        )),
    }
}

fn oracle(quiver: &McKayQuiver, lifted: &HPoly) -> Result<(HPoly, VPoly)> {
    let n = quiver.dim();
    // Every e_i is a recession direction (a label-i cycle), and Du ≥ 0, so
    // the recession cone is the orthant.
    let rays: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut points = BTreeSet::new();
    points.insert(support(quiver, lifted, &vec![Rational::one(); n])?.0);
    let mut confirmed: BTreeSet<Halfspace<Rational>> = BTreeSet::new();
    loop {
        let inner = VPoly::new(
            n,
            points.iter().cloned().collect(),
            rays.clone(),
            Vec::new(),
        )?;
        let h = v_to_h(&inner);
        let mut grew = false;
        for ineq in &h.inequalities {
            if confirmed.contains(ineq) {
                continue;
            }
            let (p, value) = support(quiver, lifted, &ineq.normal)?;
            if value < ineq.offset {
                points.insert(p);
                grew = true;
            } else {
                confirmed.insert(ineq.clone());
            }
        }
        if !grew {
            let v = h_to_v(&h).ok_or(Error::Empty)?;
            return Ok((h, v));
        }
    }
}

/// The inner normal fan of `P_θ`, with chart data when `chart_bound` is set.
pub fn fan_of_y_theta(pt: &PThetaData, chart_bound: Option<u32>) -> Result<ThetaFan> {
    let fan = normal_fan(&pt.h, &pt.v)?;
    let charts = match chart_bound {
        None => None,
        Some(bound) => Some(
            pt.v.vertices
                .iter()
                .map(|m| chart_at_vertex(pt, m, bound))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Ok(ThetaFan { fan, charts })
}

/// `min { Σ u : u ≥ 0, Bu = θ }` for integral `θ`.
pub fn d_theta(quiver: &McKayQuiver, theta: &GitParameter) -> Result<BigInt> {
    theta.check_len(quiver.num_vertices())?;
    if !theta.is_integral() {
        return Err(Error::BadTheta(
            "d_theta needs an integral parameter".into(),
        ));
    }
    let lifted = lifted_polyhedron(quiver, theta.integral());
    let lp = LinearProgram::new(vec![Rational::one(); quiver.num_arrows()], lifted)?;
    match solve(&lp)? {
        LpOutcome::Optimal { value, .. } if value.is_integer() => Ok(value.to_integer()),
        LpOutcome::Optimal { value, .. } => {
            Err(Error::Certificate(format!("fractional flow value {value}")))
        }
        _ => Err(Error::Empty),
    }
}
