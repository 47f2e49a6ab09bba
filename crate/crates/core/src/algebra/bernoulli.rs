//! Classical Bernoulli numbers and polynomials, and closed-form lattice sums
//! over the symmetric range `n = -s, -s+1, ..., s`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::poly::{Monomial, MultiPoly, Var};
use super::rational::Rational;

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// `B_0, ..., B_upto` with the convention `B_1 = -1/2`, from
/// `Σ_{j<m+1} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(upto: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(upto + 1);
    b.push(Rational::one());
    for m in 1..=upto {
        let sum = (0..m).fold(Rational::zero(), |acc, j| acc + binom(m + 1, j) * &b[j]);
        b.push(-sum / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli_number(k: usize) -> Rational {
    bernoulli_numbers(k).pop().expect("nonempty")
}

/// `B_k(x) = Σ_j C(k, j) B_j x^{k-j}` as a polynomial in [`Var::X`].
pub fn bernoulli_polynomial(k: usize) -> MultiPoly {
    bernoulli_polynomial_with(k, &bernoulli_numbers(k))
}

fn bernoulli_polynomial_with(k: usize, numbers: &[Rational]) -> MultiPoly {
    MultiPoly::from_terms(
        (0..=k).map(|j| (Monomial::var(Var::X, (k - j) as u32), binom(k, j) * &numbers[j])),
    )
}

/// Closed forms of `Σ_{n=-s}^{s} n^m` for `m = 0..=max_power`, computed as
/// `[B_{m+1}(s+1) - B_{m+1}(-s)] / (m+1)`. The identity holds whenever
/// `2s` is a non-negative integer, so integer and half-integer spins share it.
pub struct LatticeSums {
    sums: Vec<MultiPoly>,
}

impl LatticeSums {
    pub fn new(max_power: usize) -> Self {
        let numbers = bernoulli_numbers(max_power + 1);
        let s = MultiPoly::var(Var::S);
        let upper = &s + &MultiPoly::one();
        let lower = -s;
        let sums = (0..=max_power)
            .map(|m| {
                let b = bernoulli_polynomial_with(m + 1, &numbers);
                let hi = b.substitute(&[(Var::X, upper.clone())]);
                let lo = b.substitute(&[(Var::X, lower.clone())]);
                (&hi - &lo).scale(&Rational::new(BigInt::one(), BigInt::from(m + 1)))
            })
            .collect();
        LatticeSums { sums }
    }

    pub fn power(&self, m: usize) -> &MultiPoly {
        &self.sums[m]
    }
}

/// `Σ_{n=-s}^{s} p(n)` with `n` eliminated and `s` introduced. Other
/// variables (including `s` itself) pass through as coefficients.
///
/// Exponents are non-negative integers by construction of [`MultiPoly`], so
/// the only inputs this could reject cannot be represented.
pub fn symmetric_range_sum(p: &MultiPoly) -> MultiPoly {
    let coeffs = p.coefficients_in(Var::N);
    let sums = LatticeSums::new(coeffs.len().saturating_sub(1));
    symmetric_range_sum_with(&coeffs, &sums)
}

pub(crate) fn symmetric_range_sum_with(coeffs: &[MultiPoly], sums: &LatticeSums) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, c) in coeffs.iter().enumerate() {
        // Odd powers cancel over the symmetric range.
        if m % 2 == 1 || c.is_zero() {
            continue;
        }
        out += &(c * sums.power(m));
    }
    out
}
