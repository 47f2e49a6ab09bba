use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::poly::{Monomial, MultiPoly, Var};
use crate::algebra::rational::Rational;
use crate::algebra::symmetric::{check_symmetric, symmetric_to_g};
use crate::error::Result;

/// The coefficient `A0` of `s^{2k+1}` in `B_{2k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub k: usize,
    /// `A0` in `a1, a2, a3`.
    pub a0: MultiPoly,
    /// `A0` in `g1, g2, g3`.
    pub a0_g: MultiPoly,
    /// `(a1 + a2)/2`.
    pub alpha: MultiPoly,
    /// `(2 a3 - a1 - a2)/2`.
    pub beta: MultiPoly,
    /// `(a1 - a2)/4`.
    pub gamma: MultiPoly,
}

/// `A0 s^{2k+1} = 2 ∫_0^s [ξ^0] (γ(s²-j²)ξ + (αs² + βj²) + γ(s²-j²)ξ^{-1})^k dj`.
///
/// The Laurent polynomial is multiplied through by `ξ`, so the constant
/// term becomes the coefficient of `ξ^k`. The variable `n` plays `j`.
pub fn leading_term_residue(k: usize) -> Result<LeadingTerm> {
    let parse = |t: &str| -> MultiPoly { t.parse().expect("valid literal") };
    let alpha = parse("1/2 a1 + 1/2 a2");
    let beta = parse("a3 - 1/2 a1 - 1/2 a2");
    let gamma = parse("1/4 a1 - 1/4 a2");
    let edge = &gamma * &parse("s^2 - n^2");
    let middle = &(&alpha * &parse("s^2")) + &(&beta * &parse("n^2"));
    let xi = MultiPoly::var(Var::Xi);
    let shifted = &(&(&edge * &xi.pow(2)) + &(&middle * &xi)) + &edge;
    let residue = shifted.pow(k as u32).coefficient_in(Var::Xi, k as u32);

    // 2 ∫_0^s n^m dn = 2 s^{m+1} / (m+1), then divide by s^{2k+1}.
    let mut a0 = MultiPoly::zero();
    for (m, c) in residue.terms() {
        let e = m.exponent(Var::N);
        let total_s = m.exponent(Var::S) + e + 1;
        debug_assert_eq!(total_s as usize, 2 * k + 1);
        let coef = c * Rational::new(BigInt::from(2), BigInt::from(e + 1));
        a0.add_term(m.with_exponent(Var::N, 0).with_exponent(Var::S, 0), coef);
    }
    check_symmetric(&a0)?;
    let a0_g = symmetric_to_g(&a0)?;
    Ok(LeadingTerm { k, a0, a0_g, alpha, beta, gamma })
}

fn double_factorial_odd(n: i64) -> BigInt {
    // (2m-1)!! with (-1)!! = 1.
    let mut out = BigInt::one();
    let mut i = n;
    while i > 1 {
        out *= i;
        i -= 2;
    }
    out
}

/// `(1/2π) ∫_{|M|=1} (a1 M1² + a2 M2² + a3 M3²)^k dΩ`, exactly, from
/// `∫ M1^{2p} M2^{2q} M3^{2r} dΩ = 4π (2p-1)!!(2q-1)!!(2r-1)!!/(2p+2q+2r+1)!!`.
pub fn sphere_moment_integral(k: usize) -> MultiPoly {
    let k = k as u32;
    let mut factorial = vec![BigInt::one()];
    for i in 1..=k {
        let next = &factorial[i as usize - 1] * BigInt::from(i);
        factorial.push(next);
    }
    let mut out = MultiPoly::zero();
    for p in 0..=k {
        for q in 0..=(k - p) {
            let r = k - p - q;
            let multinomial = &factorial[k as usize]
                / (&factorial[p as usize] * &factorial[q as usize] * &factorial[r as usize]);
            let num = BigInt::from(2)
                * multinomial
                * double_factorial_odd(2 * p as i64 - 1)
                * double_factorial_odd(2 * q as i64 - 1)
                * double_factorial_odd(2 * r as i64 - 1);
            let den = double_factorial_odd(2 * k as i64 + 1);
            let g = num.gcd(&den);
            let m = Monomial::from_exponents(&[(Var::A1, p), (Var::A2, q), (Var::A3, r)]);
            let c = Rational::new(num / &g, den / g);
            if !c.is_zero() {
                out.add_term(m, c);
            }
        }
    }
    out
}
