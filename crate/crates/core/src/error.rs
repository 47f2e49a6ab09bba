use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid rational literal `{0}` (expected `p` or `p/q`; decimals are not accepted)")]
    InvalidRational(String),

    #[error("invalid spin `{0}`: {1}")]
    InvalidSpin(String, &'static str),

    #[error("polynomial is not symmetric under the transposition {0}")]
    NotSymmetric(&'static str),

    #[error("index j = {j} is not on the lattice -{spin}..{spin} of spin {spin}")]
    OffLattice { j: String, spin: String },

    #[error("parameter {0} is not finite")]
    NonFinite(&'static str),

    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),

    #[error("unknown specialization `{0}` (expected reduced, trigonometric, lemniscatic, equianharmonic or isotropic)")]
    UnknownCase(String),

    #[error("spin {spin} needs coefficients b_1..b_{needed} but only b_1..b_{available} were computed; raise K to at least {needed}")]
    InsufficientCoefficients {
        spin: String,
        needed: usize,
        available: usize,
    },

    #[error("reduced coefficients assume g1 = 0, got g1 = {0}")]
    ReducedMismatch(String),

    #[error("component g1^{p} g2^{q} g3^{r} does not occur in B_{index}; available: {available}")]
    AbsentComponent {
        index: usize,
        p: u32,
        q: u32,
        r: u32,
        available: String,
    },

    #[error("component g1^{p} g2^{q} g3^{r} of B_{index} has zero slope at s = 0")]
    ZeroSlope { index: usize, p: u32, q: u32, r: u32 },

    #[error("expected a polynomial in {expected} only, found variable {found}")]
    NotUnivariate { expected: &'static str, found: &'static str },

    #[error("divisor must have a constant nonzero leading coefficient in {0}")]
    BadDivisor(&'static str),

    #[error("interval endpoints must be finite with lo <= hi, got [{0}, {1}]")]
    BadInterval(f64, f64),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
