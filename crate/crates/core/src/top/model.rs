//! The quantum Euler top `a1 M1^2 + a2 M2^2 + a3 M3^2` in the spin-`s`
//! representation, in the `M3` eigenbasis `|j>`, `j = -s..s`.
//!
//! The Hamiltonian is tridiagonal in steps of two:
//!
//! ```text
//! <j|H|j>   = v(j)  = (a1 + a2)/2 * (s(s+1) - j^2) + a3 j^2
//! <j|H|j+2> = c(j), c(j)^2 = (a1 - a2)^2/16 * (s-j)(s-j-1)(s+j+1)(s+j+2)
//! ```
//!
//! `c(j)` is irrational in general. Every exact computation here runs on the
//! diagonally similar matrix with entries `T[j][j] = v(j)`,
//! `T[j][j+2] = c(j)^2`, `T[j+2][j] = 1`, which has the same characteristic
//! polynomial.

use num_traits::{One, Zero};

use super::spin::Spin;
use crate::algebra::poly::{MultiPoly, Var};
use crate::algebra::rational::{rat, Rational};
use crate::algebra::symmetric::params_from_a_rational;
use crate::error::{Error, Result};

/// `v(n)` as a polynomial in `n, s, a1, a2, a3`.
pub fn diagonal_poly() -> MultiPoly {
    "1/2 (a1 + a2)(s^2 + s - n^2) + a3 n^2".parse().expect("valid literal")
}

/// `c(n)^2` as a polynomial in `n, s, a1, a2, a3`.
pub fn offdiag_sq_poly() -> MultiPoly {
    "1/16 (a1 - a2)^2 (s - n)(s - n - 1)(s + n + 1)(s + n + 2)"
        .parse()
        .expect("valid literal")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinMatrixModel {
    spin: Spin,
    a: [Rational; 3],
}

impl SpinMatrixModel {
    pub fn new(spin: Spin, a: [Rational; 3]) -> Self {
        SpinMatrixModel { spin, a }
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn a(&self) -> &[Rational; 3] {
        &self.a
    }

    pub fn g(&self) -> [Rational; 3] {
        params_from_a_rational(&self.a)
    }

    pub fn dimension(&self) -> usize {
        self.spin.dimension()
    }

    /// `v(j)` from the closed form; valid at any `j`.
    pub fn diagonal(&self, j: &Rational) -> Rational {
        let s = self.spin.value();
        let [a1, a2, a3] = &self.a;
        (a1 + a2) * rat(1, 2) * (&s * (&s + Rational::one()) - j * j) + a3 * j * j
    }

    /// `c(j)^2` from the closed form; valid at any `j`.
    pub fn offdiag_sq(&self, j: &Rational) -> Rational {
        let s = self.spin.value();
        let one = Rational::one();
        let two = &one + &one;
        let d = &self.a[0] - &self.a[1];
        &d * &d * rat(1, 16) * (&s - j) * (&s - j - &one) * (&s + j + &one) * (&s + j + &two)
    }

    /// `(v(j), c(j)^2)` for `j` on the lattice.
    pub fn matrix_elements(&self, j: &Rational) -> Result<(Rational, Rational)> {
        if self.spin.lattice_index(j).is_none() {
            return Err(Error::OffLattice {
                j: j.to_string(),
                spin: self.spin.to_string(),
            });
        }
        Ok((self.diagonal(j), self.offdiag_sq(j)))
    }

    pub fn exact_matrix(&self) -> ExactSpinMatrix {
        let lattice = self.spin.lattice();
        let dim = lattice.len();
        let mut entries = vec![vec![Rational::zero(); dim]; dim];
        for (i, j) in lattice.iter().enumerate() {
            entries[i][i] = self.diagonal(j);
            if i + 2 < dim {
                entries[i][i + 2] = self.offdiag_sq(j);
                entries[i + 2][i] = Rational::one();
            }
        }
        ExactSpinMatrix { entries }
    }

    /// The two decoupled chains on lattice positions of equal parity, as
    /// `(diagonal, squared off-diagonal)` pairs. Sizes sum to `2s + 1`.
    pub fn chains(&self) -> [(Vec<Rational>, Vec<Rational>); 2] {
        let lattice = self.spin.lattice();
        let chain = |start: usize| {
            let js: Vec<&Rational> = lattice.iter().skip(start).step_by(2).collect();
            let diag = js.iter().map(|j| self.diagonal(j)).collect();
            let off = js
                .iter()
                .take(js.len().saturating_sub(1))
                .map(|j| self.offdiag_sq(j))
                .collect();
            (diag, off)
        };
        [chain(0), chain(1)]
    }
}

/// The rational matrix similar to the top Hamiltonian (see module docs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpinMatrix {
    entries: Vec<Vec<Rational>>,
}

impl ExactSpinMatrix {
    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    fn mul(&self, other: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let n = self.dimension();
        let mut out = vec![vec![Rational::zero(); n]; n];
        for (row, out_row) in self.entries.iter().zip(out.iter_mut()) {
            for (a, other_row) in row.iter().zip(other) {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(other_row) {
                    if !b.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        out
    }

    /// `tr T^k` for `k = 0..=max_k`.
    pub fn trace_powers(&self, max_k: usize) -> Vec<Rational> {
        let n = self.dimension();
        let mut power: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        let mut out = Vec::with_capacity(max_k + 1);
        for k in 0..=max_k {
            if k > 0 {
                power = self.mul(&power);
            }
            out.push((0..n).fold(Rational::zero(), |acc, i| acc + &power[i][i]));
        }
        out
    }

    /// `det(λ I - T)` by fraction-free (Bareiss) elimination over `Q[λ]`.
    /// Leading principal minors of `λI - T` are monic in `λ`, so no pivoting
    /// is needed and every division is exact.
    pub fn char_poly(&self) -> MultiPoly {
        let n = self.dimension();
        let lambda = MultiPoly::var(Var::Lambda);
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let t = MultiPoly::constant(-self.entries[i][j].clone());
                        if i == j {
                            &lambda + &t
                        } else {
                            t
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = MultiPoly::one();
        for k in 0..n.saturating_sub(1) {
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_div(Var::Lambda, &prev)
                        .expect("monic pivot")
                        .expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].clone()
    }

    /// Lattice positions of the two parity blocks. The matrix has no entries
    /// coupling them.
    pub fn parity_blocks(&self) -> [Vec<usize>; 2] {
        let n = self.dimension();
        [(0..n).step_by(2).collect(), (1..n).step_by(2).collect()]
    }
}

/// `tr H_s^k` computed on the exact similar matrix.
pub fn trace_power_oracle(model: &SpinMatrixModel, k: usize) -> Rational {
    model.exact_matrix().trace_powers(k).pop().expect("nonempty")
}

/// `det(λ I - H_s)` as a monic polynomial in [`Var::Lambda`].
pub fn char_poly_exact(model: &SpinMatrixModel) -> MultiPoly {
    model.exact_matrix().char_poly()
}
