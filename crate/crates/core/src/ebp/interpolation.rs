//! An independent route to `B_{2k+1}`: exact symbolic traces at `2k + 2`
//! spins, Lagrange-interpolated in `s`.

use rayon::prelude::*;

use super::polynomial::{EllipticBernoulli, Provenance};
use crate::algebra::poly::{MultiPoly, Var};
use crate::algebra::rational::Rational;
use crate::algebra::symmetric::symmetric_to_g;
use crate::top::{diagonal_poly, offdiag_sq_poly, Spin};

/// `tr T^k` for spin `s` with `a1, a2, a3` left symbolic.
pub fn symbolic_trace(spin: Spin, k: usize) -> MultiPoly {
    let v = diagonal_poly();
    let c_sq = offdiag_sq_poly();
    let at = |p: &MultiPoly, j: &Rational| {
        p.evaluate(&[(Var::S, spin.value()), (Var::N, j.clone())])
    };
    let lattice = spin.lattice();
    let mut total = MultiPoly::zero();
    for start in 0..2 {
        let js: Vec<&Rational> = lattice.iter().skip(start).step_by(2).collect();
        let n = js.len();
        if n == 0 {
            continue;
        }
        let mut t = vec![vec![MultiPoly::zero(); n]; n];
        for (i, j) in js.iter().enumerate() {
            t[i][i] = at(&v, j);
            if i + 1 < n {
                t[i][i + 1] = at(&c_sq, j);
                t[i + 1][i] = MultiPoly::one();
            }
        }
        let mut power: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { MultiPoly::one() } else { MultiPoly::zero() }).collect())
            .collect();
        for _ in 0..k {
            let mut next = vec![vec![MultiPoly::zero(); n]; n];
            for i in 0..n {
                for m in 0..n {
                    if power[i][m].is_zero() {
                        continue;
                    }
                    for j in m.saturating_sub(1)..(m + 2).min(n) {
                        if !t[m][j].is_zero() {
                            next[i][j] += &(&power[i][m] * &t[m][j]);
                        }
                    }
                }
            }
            power = next;
        }
        for (i, row) in power.iter().enumerate() {
            total += &row[i];
        }
    }
    total
}

/// `B_{2k+1}` interpolated from [`symbolic_trace`] at `s = 0, 1/2, ..., k + 1/2`.
pub fn elliptic_bernoulli_by_interpolation(k: usize) -> EllipticBernoulli {
    let nodes: Vec<Spin> = (0..=(2 * k as u32 + 1)).map(Spin::from_twice).collect();
    let values: Vec<MultiPoly> = nodes.par_iter().map(|&s| symbolic_trace(s, k)).collect();
    let s = MultiPoly::var(Var::S);
    let mut poly = MultiPoly::zero();
    for (i, yi) in values.iter().enumerate() {
        let si = nodes[i].value();
        let mut basis = MultiPoly::one();
        let mut denom = Rational::from_integer(1.into());
        for (j, node) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            let sj = node.value();
            basis = &basis * &(&s - &MultiPoly::constant(sj.clone()));
            denom *= &si - &sj;
        }
        poly += &(yi * &basis).scale(&denom.recip());
    }
    let poly = symmetric_to_g(&poly).expect("traces are symmetric in a1, a2, a3");
    EllipticBernoulli::new(k, poly, Provenance::OracleInterpolation)
}
