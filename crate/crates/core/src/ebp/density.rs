//! Local spectral densities of the three-term difference equation
//! `ψ_{n+2} + v_n ψ_n + c²_{n-2} ψ_{n-2} = λ ψ_n` (in the radical-free gauge).
//!
//! With `χ_n = Σ_k χ_{n,k} λ^{-(k+1)}` solving the Riccati form, the
//! coefficients obey
//!
//! ```text
//! χ_{n,0} = v_n,   χ_{n,1} = c²_{n-2},
//! χ_{n,k+1} = Σ_{i=1}^{k} χ_{n,i} χ_{n-2,k-i},
//! ```
//!
//! and the densities `𝓘_{n,i}` are the coefficients of `λ^{-i}` in
//! `-log(1 - X)`, `X = Σ_k χ_{n,k} λ^{-(k+1)}`. Then
//! `tr H^k = k Σ_{n=-s}^{s} 𝓘_{n,k}`.

use num_bigint::BigInt;

use crate::algebra::poly::{MultiPoly, Var};
use crate::algebra::rational::{int, Rational};
use crate::top::{diagonal_poly, offdiag_sq_poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDensityTable {
    chi: Vec<MultiPoly>,
    log_densities: Vec<MultiPoly>,
}

impl LocalDensityTable {
    /// Runs the recurrence for arbitrary site polynomials `v(n)` and
    /// `c²(n)`, both polynomials in [`Var::N`] with any other coefficients.
    pub fn from_elements(v: &MultiPoly, c_sq: &MultiPoly, max_k: usize) -> Self {
        assert!(max_k >= 1, "the density table needs K >= 1");
        let chi = chi_coefficients(v, c_sq, max_k, max_k);
        let log_densities = log_densities(&chi, max_k);
        LocalDensityTable { chi, log_densities }
    }

    /// Like [`from_elements`](Self::from_elements) but stops the `χ`
    /// recurrence at `χ_{n,K-1}`, the last one the densities up to `K` need.
    pub(crate) fn densities_only(v: &MultiPoly, c_sq: &MultiPoly, max_k: usize) -> Self {
        assert!(max_k >= 1, "the density table needs K >= 1");
        let chi = chi_coefficients(v, c_sq, max_k - 1, max_k);
        let log_densities = log_densities(&chi, max_k);
        LocalDensityTable { chi, log_densities }
    }

    pub fn max_k(&self) -> usize {
        self.log_densities.len()
    }

    /// `χ_{n,k}`.
    pub fn chi(&self, k: usize) -> &MultiPoly {
        &self.chi[k]
    }

    pub fn chis(&self) -> &[MultiPoly] {
        &self.chi
    }

    /// `𝓘_{n,i}` for `1 <= i <= K`.
    pub fn density(&self, i: usize) -> &MultiPoly {
        assert!(i >= 1, "densities are indexed from 1");
        &self.log_densities[i - 1]
    }

    /// `tr H^k = k Σ_n 𝓘_{n,k}` as a polynomial in `s` and the remaining
    /// coefficient variables.
    pub fn trace(&self, k: usize) -> MultiPoly {
        use crate::algebra::bernoulli::{symmetric_range_sum_with, LatticeSums};
        let coeffs = self.density(k).coefficients_in(Var::N);
        let sums = LatticeSums::new(coeffs.len().saturating_sub(1));
        symmetric_range_sum_with(&coeffs, &sums).scale(&int(k as i64))
    }
}

/// The table for the top Hamiltonian, in `(n, s, a1, a2, a3)`.
pub fn build_density_table(max_k: usize) -> LocalDensityTable {
    LocalDensityTable::from_elements(&diagonal_poly(), &offdiag_sq_poly(), max_k)
}

fn chi_coefficients(v: &MultiPoly, c_sq: &MultiPoly, last: usize, max_k: usize) -> Vec<MultiPoly> {
    let down = Rational::from_integer(BigInt::from(-2));
    let mut chi = vec![v.clone(), c_sq.shift(Var::N, &down)];
    let mut shifted = vec![v.shift(Var::N, &down)];
    chi.truncate(last + 1);
    for k in 1..last.min(max_k) {
        shifted.push(chi[k].shift(Var::N, &down));
        let mut next = MultiPoly::zero();
        for i in 1..=k {
            next += &(&chi[i] * &shifted[k - i]);
        }
        chi.push(next);
    }
    chi
}

/// Coefficients of `μ^1..μ^K` in `-log(1 - Σ_k χ_k μ^{k+1})`.
fn log_densities(chi: &[MultiPoly], max_k: usize) -> Vec<MultiPoly> {
    // G = -log(1 - X) satisfies (1 - X) G' = X', so with X_k = χ_{k-1}:
    // k 𝓘_k = k X_k + Σ_{j=1}^{k-1} j 𝓘_j X_{k-j}.
    let x = |k: usize| &chi[k - 1];
    let mut dens: Vec<MultiPoly> = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        let mut acc = x(k).scale(&int(k as i64));
        for j in 1..k {
            acc += &(&dens[j - 1] * x(k - j)).scale(&int(j as i64));
        }
        dens.push(acc.scale(&Rational::new(BigInt::from(1), BigInt::from(k))));
    }
    dens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn first_coefficients() {
        let t = build_density_table(3);
        let down = Rational::from_integer(BigInt::from(-2));
        let v = diagonal_poly();
        let c2m = offdiag_sq_poly().shift(Var::N, &down);
        let vm = v.shift(Var::N, &down);
        assert_eq!(t.chi(0), &v);
        assert_eq!(t.chi(1), &c2m);
        assert_eq!(t.chi(2), &(&c2m * &vm));
        assert_eq!(t.density(1), &v);
        assert_eq!(t.density(2), &(&c2m + &(&v * &v).scale(&Rational::new(1.into(), 2.into()))));
    }

    #[test]
    fn densities_only_agrees() {
        let full = build_density_table(4);
        let lean = LocalDensityTable::densities_only(&diagonal_poly(), &offdiag_sq_poly(), 4);
        for i in 1..=4 {
            assert_eq!(full.density(i), lean.density(i));
        }
        assert_eq!(lean.chis().len(), 4);
        assert_eq!(full.chis().len(), 5);
    }

    #[test]
    fn free_chain_traces() {
        // v = 0, c² = 1 on every site: tr H^2 sums twice the number of links
        // as a polynomial identity in s.
        let t = LocalDensityTable::from_elements(&MultiPoly::zero(), &MultiPoly::one(), 2);
        assert_eq!(t.trace(1), MultiPoly::zero());
        assert_eq!(t.trace(2), p("4 s + 2"));
    }
}
