//! Toric fans of coherent components of McKay quiver moduli, and the
//! distinguished quiver representations attached to their cones.
//!
//! The polyhedral and LP layers are generic over an exact [`scalar::Field`];
//! the aliases below fix arbitrary-precision rationals.

pub mod error;
pub mod lattice;
pub mod lp;
pub mod moduli;
pub mod polyhedra;
pub mod quiver;
pub mod scalar;

pub use error::{Error, Result};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Rationals over `i64`, for small inputs where overflow is ruled out.
pub type Rational64 = num_rational::Rational64;

pub type LinearProgram = lp::LinearProgram<Rational>;
pub type LpOutcome = lp::LpOutcome<Rational>;
pub type Fan = polyhedra::Fan<Rational>;
pub use polyhedra::{HPoly, VPoly};
