//! Exact rational polyhedra: H- and V-descriptions, conversion between them,
//! linear images, vertex-facet incidences and inner normal fans.

mod convert;
mod dd;
mod fan;
pub mod linalg;

pub use convert::{h_to_v, project, v_to_h, vertex_facet_incidence};
pub use dd::{cone_generators, ConeGenerators};
pub use fan::{locate_cone, normal_fan, Fan, FanCone};

use crate::error::{Error, Result};
use crate::scalar::{dot, from_ints, Field};

/// `normal · x ≥ offset` (or `= offset` when used as an equation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace<T> {
    pub normal: Vec<T>,
    pub offset: T,
}

impl<T: Field> Halfspace<T> {
    pub fn new(normal: Vec<T>, offset: T) -> Self {
        Self { normal, offset }
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Self {
        Self::new(from_ints(normal), T::from_i64(offset))
    }

    /// `normal · x - offset`.
    pub fn slack(&self, x: &[T]) -> T {
        dot(&self.normal, x) - self.offset.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron<T> {
    pub dim: usize,
    pub inequalities: Vec<Halfspace<T>>,
    pub equations: Vec<Halfspace<T>>,
    /// Set when no inequality is implied by the others.
    pub irredundant: bool,
}

impl<T: Field> HPolyhedron<T> {
    pub fn new(
        dim: usize,
        inequalities: Vec<Halfspace<T>>,
        equations: Vec<Halfspace<T>>,
    ) -> Result<Self> {
        for h in inequalities.iter().chain(&equations) {
            if h.normal.len() != dim {
                return Err(Error::BadShape(format!(
                    "row of length {} in dimension {dim}",
                    h.normal.len()
                )));
            }
        }
        Ok(Self {
            dim,
            inequalities,
            equations,
            irredundant: false,
        })
    }

    /// `{x ∈ Q^dim : x ≥ 0}`.
    pub fn nonneg_orthant(dim: usize) -> Self {
        let inequalities = (0..dim)
            .map(|i| {
                let mut a = vec![T::zero(); dim];
                a[i] = T::one();
                Halfspace::new(a, T::zero())
            })
            .collect();
        Self {
            dim,
            inequalities,
            equations: Vec::new(),
            irredundant: true,
        }
    }

    pub fn contains(&self, x: &[T]) -> bool {
        self.inequalities.iter().all(|h| !h.slack(x).is_negative())
            && self.equations.iter().all(|h| h.slack(x).is_zero())
    }

    /// Whether `r` is a direction of the recession cone.
    pub fn recedes_along(&self, r: &[T]) -> bool {
        self.inequalities
            .iter()
            .all(|h| !dot(&h.normal, r).is_negative())
            && self.equations.iter().all(|h| dot(&h.normal, r).is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolyhedron<T> {
    pub dim: usize,
    pub vertices: Vec<Vec<T>>,
    pub rays: Vec<Vec<T>>,
    pub lineality: Vec<Vec<T>>,
}

impl<T: Field> VPolyhedron<T> {
    pub fn new(
        dim: usize,
        vertices: Vec<Vec<T>>,
        rays: Vec<Vec<T>>,
        lineality: Vec<Vec<T>>,
    ) -> Result<Self> {
        for v in vertices.iter().chain(&rays).chain(&lineality) {
            if v.len() != dim {
                return Err(Error::BadShape(format!(
                    "generator of length {} in dimension {dim}",
                    v.len()
                )));
            }
        }
        Ok(Self {
            dim,
            vertices,
            rays,
            lineality,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Rational polyhedra over arbitrary-precision rationals.
pub type HPoly = HPolyhedron<crate::Rational>;
pub type VPoly = VPolyhedron<crate::Rational>;
