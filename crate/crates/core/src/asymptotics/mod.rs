//! Large-`s` behaviour of the elliptic Bernoulli polynomials: the leading
//! coefficient from a residue formula and from a sphere average, normalized
//! component curves, and real-root reports.

mod curve;
mod leading;
mod roots;

pub use curve::{exact_unit_slope, normalized_component_curve, normalized_curve_of, NormalizedCurve};
pub use leading::{leading_term_residue, sphere_moment_integral, LeadingTerm};
pub use roots::{real_roots, RootReport, MAX_ROOT_DENOMINATOR};
