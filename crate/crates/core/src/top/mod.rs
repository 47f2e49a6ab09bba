//! The quantum Euler top on spin-`s` representations.

mod model;
mod numeric;
mod spin;

pub use model::{char_poly_exact, diagonal_poly, offdiag_sq_poly, trace_power_oracle, ExactSpinMatrix, SpinMatrixModel};
pub use numeric::{eigenvalues_numeric, eigenvalues_numeric_f64, eigenvalues_polished};
pub use spin::Spin;
