//! Exact symbolic calculus for Lie algebroids presented in local coordinates.
//!
//! An algebroid is described on a single chart by an anchor matrix and
//! structure functions with entries in the ring of multivariate polynomials
//! (or rational functions) over arbitrary-precision rationals. On top of that
//! presentation the crate provides:
//!
//! * the exterior algebras of multivectors and forms with wedge, contraction
//!   and duality pairing ([`exterior`]);
//! * the Schouten bracket, structure validation and section brackets
//!   ([`algebroid`]);
//! * the Cartan calculus: differential, Lie derivatives, divergences and
//!   generating operators, including Witten-type deformations ([`calculus`]);
//! * fiber metrics, Levi-Civita connections, curvature and the induced
//!   divergences ([`metric`]);
//! * finite-dimensional (co)homology with exact Betti numbers and duality
//!   checks for constant structure functions ([`homology`]);
//! * modular classes of base-preserving morphisms and of algebroids
//!   ([`modular`]);
//! * cotangent algebroids of Poisson bivectors ([`poisson`]).
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebroid;
pub mod calculus;
pub mod coeff;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod metric;
pub mod modular;
pub mod poisson;
pub mod sample;

pub use coeff::{Coeff, Poly, RatFunc, Rational};
pub use error::Error;
