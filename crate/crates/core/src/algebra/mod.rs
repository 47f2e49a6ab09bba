//! Exact arithmetic: rationals, sparse multivariate polynomials, classical
//! Bernoulli machinery and symmetric-function rewriting.

pub mod bernoulli;
pub mod latex;
pub mod poly;
pub mod rational;
pub mod symmetric;
pub mod text;
pub mod univariate;

pub use bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_polynomial, symmetric_range_sum, LatticeSums};
pub use latex::{to_latex, to_latex_factored};
pub use poly::{Monomial, MultiPoly, Var};
pub use rational::{int, parse_rational, rat, Rational};
pub use symmetric::{g_to_a, params_from_a, params_from_a_rational, symmetric_to_g};
pub use univariate::UniPoly;
