use std::fmt;
use std::str::FromStr;

use super::polynomial::EllipticBernoulli;
use crate::algebra::poly::{MultiPoly, Var};
use crate::error::Error;

/// Classical specializations of the g-parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    /// `g1 = 0`.
    Reduced,
    /// `g2 = g3 = 0`.
    Trigonometric,
    /// `g1 = g3 = 0`.
    Lemniscatic,
    /// `g1 = g2 = 0`.
    Equianharmonic,
    /// `a1 = a2 = a3 = a`, i.e. `(g1, g2, g3) = (12a, -12a^2, 4a^3)`. The
    /// common value `a` is written with the variable `a1`.
    Isotropic,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 5] = [
        SpecialCase::Reduced,
        SpecialCase::Trigonometric,
        SpecialCase::Lemniscatic,
        SpecialCase::Equianharmonic,
        SpecialCase::Isotropic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialCase::Reduced => "reduced",
            SpecialCase::Trigonometric => "trigonometric",
            SpecialCase::Lemniscatic => "lemniscatic",
            SpecialCase::Equianharmonic => "equianharmonic",
            SpecialCase::Isotropic => "isotropic",
        }
    }

    pub fn apply(self, p: &MultiPoly) -> MultiPoly {
        let zero = MultiPoly::zero();
        let subs: Vec<(Var, MultiPoly)> = match self {
            SpecialCase::Reduced => vec![(Var::G1, zero)],
            SpecialCase::Trigonometric => vec![(Var::G2, zero.clone()), (Var::G3, zero)],
            SpecialCase::Lemniscatic => vec![(Var::G1, zero.clone()), (Var::G3, zero)],
            SpecialCase::Equianharmonic => vec![(Var::G1, zero.clone()), (Var::G2, zero)],
            SpecialCase::Isotropic => {
                let parse = |t: &str| -> MultiPoly { t.parse().expect("valid literal") };
                vec![(Var::G1, parse("12 a1")), (Var::G2, parse("-12 a1^2")), (Var::G3, parse("4 a1^3"))]
            }
        };
        p.substitute(&subs)
    }
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialCase {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self, Error> {
        SpecialCase::ALL
            .into_iter()
            .find(|c| c.name() == text)
            .ok_or_else(|| Error::UnknownCase(text.to_string()))
    }
}

pub fn specialize(b: &EllipticBernoulli, case: SpecialCase) -> MultiPoly {
    case.apply(&b.poly)
}
