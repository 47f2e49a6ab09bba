//! Coefficients `b_k(s)` of the Lamé spectral polynomial
//! `R_{2s+1}(E) = E^{2s+1} + b_1 E^{2s} + ... + b_{2s+1}`, obtained from the
//! elliptic Bernoulli polynomials (the power sums of the spectrum) through
//! Newton's identities.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::poly::{MultiPoly, Var};
use crate::algebra::rational::Rational;
use crate::algebra::symmetric::params_from_a_rational;
use crate::algebra::univariate::UniPoly;
use crate::ebp::{elliptic_bernoulli_series, SpecialCase, ENGINE_VERSION};
use crate::error::{Error, Result};
use crate::top::{char_poly_exact, Spin, SpinMatrixModel};

/// `b_0 = 1, b_1, ..., b_K` as polynomials in `s, g1, g2, g3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralCoefficients {
    pub max_k: usize,
    pub b: Vec<MultiPoly>,
    pub reduced: bool,
}

/// From power sums `p_1, ..., p_K` to `b_0, ..., b_K`, where
/// `Π (E - x_i) = Σ b_k E^{n-k}`: `k b_k = -Σ_{j=1}^{k} p_j b_{k-j}`.
pub fn power_sums_to_coefficients<T: NewtonRing>(p: &[T]) -> Vec<T> {
    let mut b = vec![T::ring_one()];
    for k in 1..=p.len() {
        let mut acc = T::ring_zero();
        for j in 1..=k {
            acc = acc.add(&p[j - 1].mul(&b[k - j]));
        }
        b.push(acc.scale(&Rational::new(BigInt::from(-1), BigInt::from(k))));
    }
    b
}

/// Inverse of [`power_sums_to_coefficients`]:
/// `p_k = -k b_k - Σ_{j=1}^{k-1} p_j b_{k-j}`.
pub fn coefficients_to_power_sums<T: NewtonRing>(b: &[T]) -> Vec<T> {
    let mut p: Vec<T> = Vec::new();
    for k in 1..b.len() {
        let mut acc = b[k].scale(&Rational::from_integer(BigInt::from(-(k as i64))));
        for j in 1..k {
            acc = acc.add(&p[j - 1].mul(&b[k - j]).scale(&Rational::from_integer(BigInt::from(-1))));
        }
        p.push(acc);
    }
    p
}

/// The arithmetic Newton's identities need.
pub trait NewtonRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl NewtonRing for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl NewtonRing for MultiPoly {
    fn ring_zero() -> Self {
        MultiPoly::zero()
    }
    fn ring_one() -> Self {
        MultiPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        MultiPoly::scale(self, c)
    }
}

type CacheKey = (u32, usize, bool);

fn cache() -> &'static Mutex<HashMap<CacheKey, MultiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, MultiPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `b_0..b_K`, from the full `B_{2j+1}(s; g1, g2, g3)` or, when `reduced`,
/// from their `g1 = 0` specializations.
pub fn lame_coefficients(max_k: usize, reduced: bool) -> SpectralCoefficients {
    let lookup = |k: usize| -> Option<MultiPoly> {
        cache().lock().unwrap_or_else(|e| e.into_inner()).get(&(ENGINE_VERSION, k, reduced)).cloned()
    };
    let cached: Option<Vec<MultiPoly>> = (0..=max_k).map(lookup).collect();
    if let Some(b) = cached {
        return SpectralCoefficients { max_k, b, reduced };
    }
    let power_sums: Vec<MultiPoly> = elliptic_bernoulli_series(max_k)
        .into_iter()
        .skip(1)
        .map(|e| if reduced { SpecialCase::Reduced.apply(&e.poly) } else { e.poly })
        .collect();
    let b = power_sums_to_coefficients(&power_sums);
    let mut guard = cache().lock().unwrap_or_else(|e| e.into_inner());
    for (k, bk) in b.iter().enumerate() {
        guard.insert((ENGINE_VERSION, k, reduced), bk.clone());
    }
    SpectralCoefficients { max_k, b, reduced }
}

impl SpectralCoefficients {
    /// `R_{2s+1}(E)` at concrete `s` and `g`, as a polynomial in [`Var::E`].
    pub fn spectral_polynomial(&self, spin: Spin, g: &[Rational; 3]) -> Result<MultiPoly> {
        let dim = spin.dimension();
        if dim > self.max_k {
            return Err(Error::InsufficientCoefficients {
                spin: spin.to_string(),
                needed: dim,
                available: self.max_k,
            });
        }
        if self.reduced && !g[0].is_zero() {
            return Err(Error::ReducedMismatch(g[0].to_string()));
        }
        let point = [
            (Var::S, spin.value()),
            (Var::G1, g[0].clone()),
            (Var::G2, g[1].clone()),
            (Var::G3, g[2].clone()),
        ];
        let coeffs: Vec<Rational> = (0..=dim).map(|i| self.b[dim - i].evaluate_rational(&point)).collect();
        Ok(UniPoly::new(coeffs).to_multi(Var::E))
    }
}

/// `R_{2s+1}(E)` for concrete `s` and `g`, computing `b_1..b_{2s+1}` as needed.
pub fn spectral_polynomial(spin: Spin, g: &[Rational; 3]) -> Result<MultiPoly> {
    lame_coefficients(spin.dimension(), false).spectral_polynomial(spin, g)
}

/// The outcome of comparing `det(E - H_s)` with `R_{2s+1}(E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyReport {
    pub spin: Spin,
    pub a: [Rational; 3],
    pub pass: bool,
    /// Characteristic polynomial of the matrix model, in `E`.
    pub lhs: MultiPoly,
    /// Spectral polynomial from the elliptic Bernoulli polynomials, in `E`.
    pub rhs: MultiPoly,
    pub diff: MultiPoly,
    /// Highest power of `E` whose coefficients differ, with both values.
    pub first_difference: Option<(usize, Rational, Rational)>,
    /// Whether `lhs` is an exact square over the rationals.
    pub perfect_square: bool,
}

pub fn verify_charpoly_equivalence(spin: Spin, a: &[Rational; 3]) -> Result<CharPolyReport> {
    let coeffs = lame_coefficients(spin.dimension(), false);
    verify_with(&coeffs, spin, a)
}

/// [`verify_charpoly_equivalence`] against precomputed coefficients.
pub fn verify_with(coeffs: &SpectralCoefficients, spin: Spin, a: &[Rational; 3]) -> Result<CharPolyReport> {
    let model = SpinMatrixModel::new(spin, a.clone());
    let lhs = char_poly_exact(&model).rename(&[(Var::Lambda, Var::E)]);
    let rhs = coeffs.spectral_polynomial(spin, &params_from_a_rational(a))?;
    let diff = &lhs - &rhs;
    let l = UniPoly::from_multi(&lhs, Var::E)?;
    let r = UniPoly::from_multi(&rhs, Var::E)?;
    let top = l.coeffs().len().max(r.coeffs().len());
    let at = |p: &UniPoly, i: usize| p.coeffs().get(i).cloned().unwrap_or_else(Rational::zero);
    let first_difference = (0..top).rev().find(|&i| at(&l, i) != at(&r, i)).map(|i| (i, at(&l, i), at(&r, i)));
    Ok(CharPolyReport {
        spin,
        a: a.clone(),
        pass: diff.is_zero(),
        perfect_square: l.exact_sqrt().is_some(),
        lhs,
        rhs,
        diff,
        first_difference,
    })
}

/// `(s+1) s (s-1) ... (s - ⌊(k-2)/2⌋)`, the factor every `b_k` carries.
pub fn falling_factor(k: usize) -> MultiPoly {
    let s = MultiPoly::var(Var::S);
    let mut out = &s + &MultiPoly::one();
    if k >= 2 {
        for i in 0..=((k - 2) / 2) {
            out = &out * &(&s - &MultiPoly::from_int(i as i64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn newton_round_trip_on_numbers() {
        // Roots 3, 4, 5.
        let p = vec![int(12), int(50), int(216)];
        let b = power_sums_to_coefficients(&p);
        assert_eq!(b, vec![int(1), int(-12), int(47), int(-60)]);
        assert_eq!(coefficients_to_power_sums(&b), p);
    }

    #[test]
    fn falling_factor_shapes() {
        let p = |t: &str| -> MultiPoly { t.parse().unwrap() };
        assert_eq!(falling_factor(1), p("s + 1"));
        assert_eq!(falling_factor(2), p("(s+1) s"));
        assert_eq!(falling_factor(3), p("(s+1) s"));
        assert_eq!(falling_factor(4), p("(s+1) s (s-1)"));
        assert_eq!(falling_factor(7), p("(s+1) s (s-1)(s-2)"));
    }
}
