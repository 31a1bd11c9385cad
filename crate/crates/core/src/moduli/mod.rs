//! The fan of the coherent component `Y_θ` and the distinguished
//! representations attached to its cones.
//!
//! `θ` is indexed by the quiver's vertex order and must sum to zero. Outputs
//! are valid for every such `θ`; whether `θ` is generic is not decided here.

mod charts;
mod ptheta;
mod rep;

pub use charts::{chart_at_vertex, Chart, Saturation};
pub use ptheta::{
    d_theta, fan_of_y_theta, lifted_polyhedron, p_theta, PThetaData, Pipeline, ThetaFan,
};
pub use rep::{distinguished_rep, dual_slice, DistinguishedRep, DualSlice, TightSetPolicy};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quiver::AbelianGroupData;
use crate::Rational;

/// A point of `Θ = {θ ∈ Q^r : Σθ_ρ = 0}` together with its smallest
/// positive integral multiple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GitParameter {
    theta: Vec<Rational>,
    integral: Vec<BigInt>,
}

impl GitParameter {
    pub fn new(theta: Vec<Rational>) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::BadTheta("empty parameter".into()));
        }
        let sum = theta.iter().fold(Rational::zero(), |acc, t| acc + t);
        if !sum.is_zero() {
            return Err(Error::BadTheta(format!("entries sum to {sum}, not 0")));
        }
        let lcd = theta
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.denom()));
        let integral = theta
            .iter()
            .map(|t| t.numer() * (&lcd / t.denom()))
            .collect();
        Ok(Self { theta, integral })
    }

    pub fn from_ints(theta: &[i64]) -> Result<Self> {
        Self::new(
            theta
                .iter()
                .map(|&t| Rational::from_integer(t.into()))
                .collect(),
        )
    }

    pub fn theta(&self) -> &[Rational] {
        &self.theta
    }

    /// `θ` scaled by the least common denominator of its entries.
    pub fn integral(&self) -> &[BigInt] {
        &self.integral
    }

    pub fn is_integral(&self) -> bool {
        self.theta.iter().all(|t| t.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.theta.iter().all(Zero::is_zero)
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub(crate) fn check_len(&self, r: usize) -> Result<()> {
        if self.theta.len() != r {
            return Err(Error::BadTheta(format!(
                "expected {r} entries, got {}",
                self.theta.len()
            )));
        }
        Ok(())
    }
}

/// `θ = (1 - r, 1, …, 1)`, a parameter in the chamber of the `G`-Hilbert
/// scheme.
pub fn ghilb_theta(group: &AbelianGroupData) -> Result<GitParameter> {
    let r = group.order() as i64;
    if r == 1 {
        return Err(Error::TrivialGroup);
    }
    let mut theta = vec![1i64; r as usize];
    theta[0] = 1 - r;
    GitParameter::from_ints(&theta)
}

pub(crate) fn check_w(w: &[Rational], n: usize) -> Result<()> {
    if w.len() != n {
        return Err(Error::BadShape(format!(
            "w has {} entries, expected {n}",
            w.len()
        )));
    }
    if w.iter().any(|x| x.is_negative()) {
        let shown: Vec<String> = w.iter().map(ToString::to_string).collect();
        return Err(Error::NegativeW(shown.join(",")));
    }
    Ok(())
}
