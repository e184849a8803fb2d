//! Exact topological zeta functions of matroids.

pub mod algebra;
pub mod error;
pub mod lab;
pub mod lattice;
pub mod matroid;
pub mod zeta;

pub use algebra::{Polynomial, RationalFunction, TaylorPrefix};
pub use error::{Error, Result};
pub use lattice::LatticeOfFlats;
pub use matroid::{Flag, Graph, Matroid, Subset};

/// Arbitrary-precision rational, the default scalar everywhere.
pub type Rational = num_rational::BigRational;

/// Integer polynomials, used for characteristic polynomials.
pub type IntPoly = Polynomial<i64>;
