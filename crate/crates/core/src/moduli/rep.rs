use super::{check_w, GitParameter};
use crate::error::{Error, Result};
use crate::lp::{optimal_face_tight_set, solve, tight_set, LpOutcome};
use crate::polyhedra::Halfspace;
use crate::quiver::McKayQuiver;
use crate::{HPoly, LinearProgram, Rational};

/// `P^∨_w = {v ∈ Q^r : w_i + v_ρ - v_{ρρ_i} ≥ 0}` with `v_{ρ_0} = 0` pinned.
/// Inequality `k` belongs to arrow `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSlice {
    pub w: Vec<Rational>,
    pub h: HPoly,
}

/// Which inequalities count as tight when reading off `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TightSetPolicy {
    /// Tight at every optimizer.
    #[default]
    WholeFace,
    /// Tight at the optimizer the simplex method returns.
    SingleOptimizer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedRep {
    /// `b_i^ρ` in arrow order.
    pub b: Vec<u8>,
    /// Arrow indices with `b = 1`.
    pub tight: Vec<usize>,
    /// The optimizer found, with `v_{ρ_0} = 0`.
    pub v: Vec<Rational>,
    /// `min θ·v`.
    pub value: Rational,
}

pub fn dual_slice(quiver: &McKayQuiver, w: &[Rational]) -> Result<DualSlice> {
    check_w(w, quiver.dim())?;
    let r = quiver.num_vertices();
    let inequalities = quiver
        .arrows()
        .iter()
        .map(|a| {
            let mut normal = vec![Rational::default(); r];
            normal[a.head] += Rational::from_integer(1.into());
            normal[a.tail] -= Rational::from_integer(1.into());
            Halfspace::new(normal, -w[a.label - 1].clone())
        })
        .collect();
    let mut pin = vec![Rational::default(); r];
    pin[0] = Rational::from_integer(1.into());
    let h = HPoly::new(
        r,
        inequalities,
        vec![Halfspace::new(pin, Rational::default())],
    )?;
    Ok(DualSlice { w: w.to_vec(), h })
}

/// Minimizes `θ·v` over `P^∨_w` and sets `b_i^ρ = 1` exactly on the tight
/// arrows. The relations `b_j^{ρρ_i} b_i^ρ = b_i^{ρρ_j} b_j^ρ` are checked.
pub fn distinguished_rep(
    quiver: &McKayQuiver,
    theta: &GitParameter,
    w: &[Rational],
    policy: TightSetPolicy,
) -> Result<DistinguishedRep> {
    theta.check_len(quiver.num_vertices())?;
    let slice = dual_slice(quiver, w)?;
    let lp = LinearProgram::new(theta.theta().to_vec(), slice.h.clone())?;
    let (v, value) = match solve(&lp)? {
        LpOutcome::Optimal { point, value, .. } => (point, value),
        LpOutcome::Unbounded { .. } => return Err(Error::UnboundedObjective),
        LpOutcome::Infeasible { .. } => {
            return Err(Error::Certificate("dual slice is empty".into()))
        }
    };
    let tight = match policy {
        TightSetPolicy::WholeFace => optimal_face_tight_set(&lp)?,
        TightSetPolicy::SingleOptimizer => tight_set(&slice.h, &v),
    };
    let mut b = vec![0u8; quiver.num_arrows()];
    for &k in &tight {
        b[k] = 1;
    }
    let as_i64: Vec<i64> = b.iter().map(|&x| x as i64).collect();
    if let Some((rho, i, j)) = quiver.violated_relation(&as_i64) {
        return Err(Error::RelationsViolated { rho, i, j });
    }
    Ok(DistinguishedRep { b, tight, v, value })
}
