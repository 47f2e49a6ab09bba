//! Reference polynomials shipped with the crate as plain-text data files.

use std::collections::BTreeSet;

use crate::algebra::poly::{Monomial, MultiPoly, Var};
use crate::error::{Error, Result};

const ELLIPTIC_BERNOULLI: &str = include_str!("../fixtures/elliptic_bernoulli.txt");
const LAME_REDUCED: &str = include_str!("../fixtures/lame_reduced.txt");
const SPECIAL_VALUES: &str = include_str!("../fixtures/special_values.txt");
const ERRATA: &str = include_str!("../fixtures/errata.txt");

/// A named polynomial read from a fixture file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub poly: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSet {
    /// `B_1, B_3, ..., B_15`.
    pub ebp: Vec<Fixture>,
    /// Reduced `b_1, ..., b_7`.
    pub lame_reduced: Vec<Fixture>,
    /// Spectral polynomials in `E` at spin 1/2 and at spin 3/2 with `g1 = 0`.
    pub special_values: Vec<Fixture>,
    /// Replacement g-components for entries of `ebp`, keyed by fixture name.
    pub errata: Vec<Fixture>,
}

/// Splits `[name]`-headed sections, dropping `#` comments and joining the
/// lines of each body.
pub fn parse_sections(text: &str) -> Result<Vec<Fixture>> {
    let mut sections: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            sections.push((name.trim().to_string(), String::new()));
        } else if let Some((_, body)) = sections.last_mut() {
            body.push(' ');
            body.push_str(line);
        } else {
            return Err(Error::InvalidArgument(format!("fixture text before any section header: {line}")));
        }
    }
    sections
        .into_iter()
        .map(|(name, body)| {
            let poly = body.parse::<MultiPoly>().map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset,
                    message: format!("in fixture [{name}]: {message}"),
                },
                other => other,
            })?;
            Ok(Fixture { name, poly })
        })
        .collect()
}

impl FixtureSet {
    pub fn embedded() -> Result<Self> {
        Ok(FixtureSet {
            ebp: parse_sections(ELLIPTIC_BERNOULLI)?,
            lame_reduced: parse_sections(LAME_REDUCED)?,
            special_values: parse_sections(SPECIAL_VALUES)?,
            errata: parse_sections(ERRATA)?,
        })
    }

    /// A copy with one coefficient of `B_9` altered, for exercising the
    /// failure path of the verification suites.
    pub fn corrupted() -> Result<Self> {
        let mut set = Self::embedded()?;
        let target = &mut set.ebp[4].poly;
        let bump = MultiPoly::var(Var::G2).pow(2) * MultiPoly::var(Var::S).pow(9);
        *target = &*target + &bump;
        Ok(set)
    }

    /// `ebp` with every erratum applied: each erratum's g-components replace
    /// the matching components of the named fixture.
    pub fn ebp_amended(&self) -> Vec<Fixture> {
        self.ebp
            .iter()
            .map(|f| {
                let mut poly = f.poly.clone();
                for e in self.errata.iter().filter(|e| e.name == f.name) {
                    for key in g_keys(&e.poly) {
                        poly = &poly - &g_component_term(&poly, key);
                    }
                    poly = &poly + &e.poly;
                }
                Fixture { name: f.name.clone(), poly }
            })
            .collect()
    }

    pub fn all(&self) -> impl Iterator<Item = &Fixture> {
        self.ebp
            .iter()
            .chain(&self.lame_reduced)
            .chain(&self.special_values)
            .chain(&self.errata)
    }

    /// Names of fixtures whose canonical text does not parse back to the
    /// same polynomial.
    pub fn round_trip_failures(&self) -> Vec<String> {
        self.all()
            .filter(|f| f.poly.to_string().parse::<MultiPoly>().as_ref() != Ok(&f.poly))
            .map(|f| f.name.clone())
            .collect()
    }
}

fn g_key(m: &Monomial) -> (u32, u32, u32) {
    (m.exponent(Var::G1), m.exponent(Var::G2), m.exponent(Var::G3))
}

/// The distinct `(p, q, r)` with a `g1^p g2^q g3^r` term in `p`.
pub fn g_keys(p: &MultiPoly) -> BTreeSet<(u32, u32, u32)> {
    p.terms().map(|(m, _)| g_key(m)).collect()
}

/// All terms of `p` whose g-part is `g1^p g2^q g3^r`.
pub fn g_component_term(p: &MultiPoly, key: (u32, u32, u32)) -> MultiPoly {
    MultiPoly::from_terms(p.terms().filter(|(m, _)| g_key(m) == key).map(|(m, c)| (*m, c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_sets_have_expected_shape() {
        let set = FixtureSet::embedded().unwrap();
        assert_eq!(set.ebp.len(), 8);
        assert_eq!(set.lame_reduced.len(), 7);
        assert_eq!(set.special_values.len(), 2);
        assert_eq!(set.errata.len(), 2);
        for (k, f) in set.ebp.iter().enumerate() {
            assert_eq!(f.name, format!("B{}", 2 * k + 1));
            assert_eq!(f.poly.degree(Var::S) as usize, 2 * k + 1);
        }
        assert!(set.round_trip_failures().is_empty());
    }

    #[test]
    fn sections_join_continuation_lines() {
        let f = parse_sections("# c\n[x]\n1 + s\n  + s^2 # tail\n[y]\n0\n").unwrap();
        assert_eq!(f[0].poly, "1 + s + s^2".parse().unwrap());
        assert!(f[1].poly.is_zero());
        assert!(parse_sections("s\n[x]\n1").is_err());
    }

    #[test]
    fn errata_replace_single_components() {
        let set = FixtureSet::embedded().unwrap();
        let amended = set.ebp_amended();
        for (orig, new) in set.ebp.iter().zip(&amended) {
            let diff = &orig.poly - &new.poly;
            match orig.name.as_str() {
                "B13" => assert_eq!(g_keys(&diff), BTreeSet::from([(3, 0, 1)])),
                "B15" => assert_eq!(g_keys(&diff), BTreeSet::from([(1, 3, 0)])),
                _ => assert!(diff.is_zero()),
            }
        }
    }

    #[test]
    fn corruption_changes_one_fixture() {
        let good = FixtureSet::embedded().unwrap();
        let bad = FixtureSet::corrupted().unwrap();
        let differing: Vec<_> = good.ebp.iter().zip(&bad.ebp).filter(|(a, b)| a != b).map(|(a, _)| &a.name).collect();
        assert_eq!(differing, ["B9"]);
    }
}
