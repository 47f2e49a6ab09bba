//! Elliptic Bernoulli polynomials of the quantum Euler top and the
//! coefficients of Lamé spectral polynomials, computed in exact arithmetic.

pub mod algebra;
pub mod asymptotics;
pub mod ebp;
pub mod error;
pub mod fixtures;
pub mod lame;
pub mod top;
pub mod verify;

pub use algebra::{Monomial, MultiPoly, Rational, UniPoly, Var};
pub use error::{Error, Result};
