use std::fmt;
use std::str::FromStr;

use crate::algebra::rational::{rat, Rational};
use crate::error::Error;

/// A spin `s ∈ {0, 1/2, 1, 3/2, ...}`, stored as `2s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub fn from_twice(twice: u32) -> Self {
        Spin { twice }
    }

    pub fn integer(s: u32) -> Self {
        Spin { twice: 2 * s }
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    /// `2s + 1`.
    pub fn dimension(self) -> usize {
        self.twice as usize + 1
    }

    pub fn is_half_integer(self) -> bool {
        self.twice % 2 == 1
    }

    pub fn value(self) -> Rational {
        rat(self.twice as i64, 2)
    }

    /// `j = -s, -s+1, ..., s`, ascending.
    pub fn lattice(self) -> Vec<Rational> {
        (0..=self.twice).map(|i| rat(2 * i as i64 - self.twice as i64, 2)).collect()
    }

    /// Position of `j` on the lattice, if it lies there.
    pub fn lattice_index(self, j: &Rational) -> Option<usize> {
        let shifted = j + self.value();
        if !shifted.is_integer() {
            return None;
        }
        let i: i64 = num_traits::ToPrimitive::to_i64(&shifted.to_integer())?;
        (0..=self.twice as i64).contains(&i).then_some(i as usize)
    }

    /// Every spin from 0 up to `max`, step 1/2.
    pub fn up_to(max: Spin) -> impl Iterator<Item = Spin> {
        (0..=max.twice).map(Spin::from_twice)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    /// Accepts `"2"` or `"3/2"`-style literals. Decimals are rejected.
    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = |why| Error::InvalidSpin(text.to_string(), why);
        if text.contains('.') || text.contains('e') {
            return Err(bad("decimals are not accepted; write e.g. 3/2"));
        }
        let value = crate::algebra::rational::parse_rational(text).map_err(|_| bad("not a rational literal"))?;
        let doubled = value * rat(2, 1);
        if !doubled.is_integer() {
            return Err(bad("must be an integer or half-integer"));
        }
        let twice: i64 = num_traits::ToPrimitive::to_i64(&doubled.to_integer()).ok_or(bad("too large"))?;
        if twice < 0 {
            return Err(bad("must be non-negative"));
        }
        u32::try_from(twice).map(Spin::from_twice).map_err(|_| bad("too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("3/2".parse::<Spin>().unwrap(), Spin::from_twice(3));
        assert_eq!("2".parse::<Spin>().unwrap(), Spin::integer(2));
        assert_eq!("4/2".parse::<Spin>().unwrap(), Spin::integer(2));
        assert_eq!(Spin::from_twice(5).to_string(), "5/2");
        for bad in ["1.5", "-1", "1/3", "x", ""] {
            assert!(bad.parse::<Spin>().is_err(), "{bad}");
        }
    }

    #[test]
    fn lattice_has_dimension_points() {
        let s = Spin::from_twice(3);
        assert_eq!(s.lattice(), vec![rat(-3, 2), rat(-1, 2), rat(1, 2), rat(3, 2)]);
        assert_eq!(s.lattice_index(&rat(1, 2)), Some(2));
        assert_eq!(s.lattice_index(&rat(1, 1)), None);
        assert_eq!(s.lattice_index(&rat(5, 2)), None);
    }
}
