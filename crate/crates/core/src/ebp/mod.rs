//! Elliptic Bernoulli polynomials `B_{2k+1}(s; g1, g2, g3) = tr H_s^k`.
//!
//! The main route runs the local-density recurrence of the difference
//! equation for the top Hamiltonian, sums the densities over the spin
//! lattice in closed form, and rewrites the symmetric result in `g1, g2, g3`.

mod density;
mod interpolation;
mod polynomial;
mod special;

pub use density::{build_density_table, LocalDensityTable};
pub use interpolation::{elliptic_bernoulli_by_interpolation, symbolic_trace};
pub use polynomial::{
    elliptic_bernoulli, elliptic_bernoulli_direct, elliptic_bernoulli_series, g_weight, EllipticBernoulli, Provenance,
    ENGINE_VERSION,
};
pub use special::{specialize, SpecialCase};
