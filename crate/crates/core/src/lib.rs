//! Exact-arithmetic computer algebra for tangent spaces of Hilbert schemes
//! of points.
//!
//! The crate provides, from the ground up and without any external computer
//! algebra system: arbitrary-precision rational linear algebra, multivariate
//! polynomial rings with multigradings and heft vectors, Buchberger's
//! algorithm with reduced Gröbner bases, standard-monomial bases of quotient
//! rings, several independent solvers for `dim Hom(I, S/I)` (the tangent
//! space of the Hilbert scheme of points at `[I]`), framed three-loop quiver
//! representations with the trace superpotential, and symbolic one-form
//! identities for semi-invariant functions.
//!
//! The headline computation verifies that the colength-24 ideal
//! `((x^2) + (y,z)^2)^2 + (y^3 - x^3*z)` has a 99-dimensional tangent space
//! whose torus-fixed part is one-dimensional; see [`tangent::verify_counterexample`].

pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod quotient;
pub mod tangent;
pub mod theory;

pub use error::{Error, Result};
