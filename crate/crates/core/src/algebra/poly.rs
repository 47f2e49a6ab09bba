//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::rational::{lcm, Rational};
use crate::error::{Error, Result};

pub const NUM_VARS: usize = 13;

/// The symbols every polynomial in the crate is written in.
///
/// The declaration order is the canonical variable order used for printing,
/// hashing and term ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    N,
    A1,
    A2,
    A3,
    G1,
    G2,
    G3,
    Lambda,
    E,
    X,
    Xi,
    /// Stands for `s(s+1)` in intermediate computations.
    U,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::S,
        Var::N,
        Var::A1,
        Var::A2,
        Var::A3,
        Var::G1,
        Var::G2,
        Var::G3,
        Var::Lambda,
        Var::E,
        Var::X,
        Var::Xi,
        Var::U,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::N => "n",
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::A3 => "a3",
            Var::G1 => "g1",
            Var::G2 => "g2",
            Var::G3 => "g3",
            Var::Lambda => "lambda",
            Var::E => "E",
            Var::X => "x",
            Var::Xi => "xi",
            Var::U => "u",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::N => "n",
            Var::A1 => "a_1",
            Var::A2 => "a_2",
            Var::A3 => "a_3",
            Var::G1 => "g_1",
            Var::G2 => "g_2",
            Var::G3 => "g_3",
            Var::Lambda => "\\lambda",
            Var::E => "E",
            Var::X => "x",
            Var::Xi => "\\xi",
            Var::U => "u",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Some(match name {
            "s" => Var::S,
            "n" => Var::N,
            "a1" => Var::A1,
            "a2" => Var::A2,
            "a3" => Var::A3,
            "g1" => Var::G1,
            "g2" => Var::G2,
            "g3" => Var::G3,
            "lambda" | "λ" => Var::Lambda,
            "E" => Var::E,
            "x" => Var::X,
            "xi" | "ξ" => Var::Xi,
            "u" => Var::U,
            _ => return None,
        })
    }
}

/// Exponent vector over [`Var::ALL`]. Ordered lexicographically in canonical
/// variable order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([u16; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NUM_VARS])
    }

    pub fn var(v: Var, exp: u32) -> Self {
        Monomial::one().with_exponent(v, exp)
    }

    pub fn from_exponents(exps: &[(Var, u32)]) -> Self {
        exps.iter()
            .fold(Monomial::one(), |m, &(v, e)| m.with_exponent(v, m.exponent(v) + e))
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()] as u32
    }

    pub fn with_exponent(mut self, v: Var, exp: u32) -> Self {
        self.0[v.index()] = u16::try_from(exp).expect("exponent overflow");
        self
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Nonzero exponents in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .iter()
            .filter(|v| self.0[v.index()] > 0)
            .map(|&v| (v, self.0[v.index()] as u32))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NUM_VARS];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[i].checked_add(other.0[i]).expect("exponent overflow");
        }
        Monomial(out)
    }
}

/// A sparse polynomial: a map from exponent vectors to nonzero rationals.
///
/// Two polynomials are equal exactly when their term maps are equal, so
/// `==` is structural equality of canonical forms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Variables with a nonzero exponent somewhere, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Common denominator and integer numerators of all coefficients.
    fn integer_form(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| lcm(&acc, c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
            .collect();
        (nums, den)
    }

    fn mul_impl(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        // Accumulate over integers and normalize each output coefficient once.
        let (lhs, dl) = self.integer_form();
        let (rhs, dr) = other.integer_form();
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        acc.reserve(lhs.len().max(rhs.len()) * 4);
        for (ml, cl) in &lhs {
            for (mr, cr) in &rhs {
                let prod = cl * cr;
                match acc.entry(ml.mul(mr)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let den = dl * dr;
        MultiPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, Rational::new(c, den.clone())))
                .collect(),
        }
    }

    /// Simultaneous substitution `v -> image` for every pair.
    pub fn substitute(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        if subs.is_empty() {
            return self.clone();
        }
        let mut powers: Vec<Vec<MultiPoly>> = subs.iter().map(|_| vec![MultiPoly::one()]).collect();
        let mut grouped: FxHashMap<Vec<u32>, MultiPoly> = FxHashMap::default();
        // Group by the exponents of substituted variables so each product of
        // images is formed once.
        for (m, c) in &self.terms {
            let key: Vec<u32> = subs.iter().map(|(v, _)| m.exponent(*v)).collect();
            let mut rest = *m;
            for (v, _) in subs {
                rest = rest.with_exponent(*v, 0);
            }
            grouped.entry(key).or_default().add_term(rest, c.clone());
        }
        let mut keys: Vec<_> = grouped.into_iter().collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = MultiPoly::zero();
        for (key, rest) in keys {
            let mut factor = MultiPoly::one();
            for (i, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i].1;
                    powers[i].push(next);
                }
                factor = &factor * &powers[i][e as usize];
            }
            out += &(&rest * &factor);
        }
        out
    }

    /// Substitutes rational values for the given variables.
    pub fn evaluate(&self, values: &[(Var, Rational)]) -> MultiPoly {
        let mut powers: Vec<Vec<Rational>> = values.iter().map(|_| vec![Rational::one()]).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = *m;
            for (i, (v, x)) in values.iter().enumerate() {
                let e = m.exponent(*v) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * x;
                    powers[i].push(next);
                }
                coef *= &powers[i][e];
                rest = rest.with_exponent(*v, 0);
            }
            out.add_term(rest, coef);
        }
        out
    }

    /// Full evaluation; variables not listed are treated as zero.
    pub fn evaluate_rational(&self, values: &[(Var, Rational)]) -> Rational {
        let partial = self.evaluate(values);
        partial.constant_term()
    }

    /// Evaluation at floating-point values (variables not listed count as zero).
    pub fn evaluate_f64(&self, values: &[(Var, f64)]) -> f64 {
        self.terms
            .iter()
            .filter(|(m, _)| {
                m.factors().all(|(v, _)| values.iter().any(|(w, _)| *w == v))
            })
            .map(|(m, c)| {
                let mut t = super::rational::to_f64(c);
                for (v, x) in values {
                    let e = m.exponent(*v);
                    if e > 0 {
                        t *= x.powi(e as i32);
                    }
                }
                t
            })
            .sum()
    }

    /// Simultaneous renaming of variables (e.g. a permutation).
    pub fn rename(&self, map: &[(Var, Var)]) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut out = *m;
            for (from, _) in map {
                out = out.with_exponent(*from, 0);
            }
            for (from, to) in map {
                out = out.with_exponent(*to, out.exponent(*to) + m.exponent(*from));
            }
            (out, c.clone())
        }))
    }

    /// `p(v + delta)`.
    pub fn shift(&self, v: Var, delta: &Rational) -> MultiPoly {
        let image = &MultiPoly::var(v) + &MultiPoly::constant(delta.clone());
        let coeffs = self.coefficients_in(v);
        // Horner in the shifted variable.
        let mut out = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * &image) + c;
        }
        out
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().filter(|(m, _)| m.exponent(v) > 0).map(|(m, c)| {
            let e = m.exponent(v);
            (m.with_exponent(v, e - 1), c * Rational::from_integer(BigInt::from(e)))
        }))
    }

    /// Dense coefficient list `[c_0, c_1, ...]` with `self = Σ c_i v^i`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree(v) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            out[e].add_term(m.with_exponent(v, 0), c.clone());
        }
        out
    }

    pub fn coefficient_in(&self, v: Var, exp: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == exp)
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone())),
        )
    }

    pub fn from_coefficients_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            out += &c.mul_monomial(&Monomial::var(v, i as u32));
        }
        out
    }

    /// Division with remainder in `v`. The divisor's leading coefficient in
    /// `v` must be a nonzero constant; other coefficients may involve any
    /// variables.
    pub fn div_rem(&self, v: Var, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let dcoeffs = divisor.coefficients_in(v);
        let ddeg = dcoeffs.len() - 1;
        let lead = dcoeffs[ddeg]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::BadDivisor(v.name()))?;
        let lead_inv = lead.recip();
        let mut rem = self.coefficients_in(v);
        if rem.len() <= ddeg {
            return Ok((MultiPoly::zero(), self.clone()));
        }
        let mut quot = vec![MultiPoly::zero(); rem.len() - ddeg];
        for i in (0..quot.len()).rev() {
            let q = rem[i + ddeg].scale(&lead_inv);
            if q.is_zero() {
                continue;
            }
            for (j, dc) in dcoeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &(&q * dc);
                }
            }
            quot[i] = q;
        }
        rem.truncate(ddeg);
        Ok((
            MultiPoly::from_coefficients_in(v, &quot),
            MultiPoly::from_coefficients_in(v, &rem),
        ))
    }

    /// `Some(quotient)` when `divisor` divides `self` exactly in `v`.
    pub fn exact_div(&self, v: Var, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        let (q, r) = self.div_rem(v, divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn is_divisible_by(&self, v: Var, divisor: &MultiPoly) -> Result<bool> {
        Ok(self.div_rem(v, divisor)?.1.is_zero())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_impl(rhs)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.mul_impl(&rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

/// Sign helper used by printers: `(is_negative, |c|)`.
pub(crate) fn split_sign(c: &Rational) -> (bool, Rational) {
    (c.is_negative(), c.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn s() -> MultiPoly {
        MultiPoly::var(Var::S)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &s() - &s();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn product_and_degree() {
        let p = &(&s() + &MultiPoly::one()) * &(&s() - &MultiPoly::one());
        assert_eq!(p.degree(Var::S), 2);
        assert_eq!(p.constant_term(), int(-1));
        assert_eq!(p.coeff(&Monomial::var(Var::S, 1)), int(0));
    }

    #[test]
    fn division_with_remainder() {
        // (s^3 - 1) / (s - 1) = s^2 + s + 1
        let num = &s().pow(3) - &MultiPoly::one();
        let den = &s() - &MultiPoly::one();
        let (q, r) = num.div_rem(Var::S, &den).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &(&s().pow(2) + &s()) + &MultiPoly::one());
        let (_, r) = (&num + &MultiPoly::one()).div_rem(Var::S, &den).unwrap();
        assert_eq!(r, MultiPoly::one());
    }

    #[test]
    fn division_with_multivariate_coefficients() {
        let g1 = MultiPoly::var(Var::G1);
        let p = &(&g1 * &s()) * &(&(&s() * &MultiPoly::from_int(2)) + &MultiPoly::one());
        let d = &(&s() * &MultiPoly::from_int(2)) + &MultiPoly::one();
        assert_eq!(p.exact_div(Var::S, &d).unwrap(), Some(&g1 * &s()));
    }

    #[test]
    fn non_constant_lead_rejected() {
        let d = &MultiPoly::var(Var::G1) * &s();
        assert!(s().div_rem(Var::S, &d).is_err());
    }

    #[test]
    fn shift_and_evaluate() {
        let p = s().pow(3);
        let shifted = p.shift(Var::S, &int(1));
        assert_eq!(shifted.evaluate_rational(&[(Var::S, rat(1, 2))]), rat(27, 8));
    }

    #[test]
    fn simultaneous_substitution() {
        // a1 -> a2, a2 -> a1 is a swap, not a collapse.
        let p = &MultiPoly::var(Var::A1) * &MultiPoly::var(Var::A1).pow(1) + MultiPoly::var(Var::A2);
        let q = p.substitute(&[(Var::A1, MultiPoly::var(Var::A2)), (Var::A2, MultiPoly::var(Var::A1))]);
        assert_eq!(q, &MultiPoly::var(Var::A2).pow(2) + &MultiPoly::var(Var::A1));
        assert_eq!(q, p.rename(&[(Var::A1, Var::A2), (Var::A2, Var::A1)]));
    }
}
