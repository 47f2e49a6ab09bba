//! Elementary-symmetric rewriting in the top parameters `a1, a2, a3`.
//!
//! The g-parameters are defined by
//! `4(z - a1)(z - a2)(z - a3) = 4z^3 - g1 z^2 - g2 z - g3`,
//! i.e. `e1 = g1/4`, `e2 = -g2/4`, `e3 = g3/4`.

use std::cmp::Ordering;

use rustc_hash::FxHashMap;

use super::poly::{Monomial, MultiPoly, Var};
use super::rational::{int, rat, Rational};
use crate::error::{Error, Result};

const A: [Var; 3] = [Var::A1, Var::A2, Var::A3];

/// `(g1, g2, g3)` for symbolic or numeric `(a1, a2, a3)`.
pub fn params_from_a(a1: &MultiPoly, a2: &MultiPoly, a3: &MultiPoly) -> [MultiPoly; 3] {
    let four = int(4);
    let e1 = &(a1 + a2) + a3;
    let e2 = &(&(a1 * a2) + &(a2 * a3)) + &(a1 * a3);
    let e3 = &(a1 * a2) * a3;
    [e1.scale(&four), e2.scale(&-four.clone()), e3.scale(&four)]
}

pub fn params_from_a_rational(a: &[Rational; 3]) -> [Rational; 3] {
    let [g1, g2, g3] = params_from_a(
        &MultiPoly::constant(a[0].clone()),
        &MultiPoly::constant(a[1].clone()),
        &MultiPoly::constant(a[2].clone()),
    );
    [g1.constant_term(), g2.constant_term(), g3.constant_term()]
}

/// Ok when `p` is invariant under every permutation of `a1, a2, a3`; the two
/// transpositions `(a1 a2)` and `(a2 a3)` generate the group.
pub fn check_symmetric(p: &MultiPoly) -> Result<()> {
    if p.rename(&[(Var::A1, Var::A2), (Var::A2, Var::A1)]) != *p {
        return Err(Error::NotSymmetric("(a1 a2)"));
    }
    if p.rename(&[(Var::A2, Var::A3), (Var::A3, Var::A2)]) != *p {
        return Err(Error::NotSymmetric("(a2 a3)"));
    }
    Ok(())
}

fn a_part(m: &Monomial) -> [u32; 3] {
    [m.exponent(Var::A1), m.exponent(Var::A2), m.exponent(Var::A3)]
}

/// Graded lexicographic order on `(a1, a2, a3)` exponents.
fn grlex(x: &[u32; 3], y: &[u32; 3]) -> Ordering {
    let dx: u32 = x.iter().sum();
    let dy: u32 = y.iter().sum();
    dx.cmp(&dy).then_with(|| x.cmp(y))
}

/// Rewrites a polynomial symmetric in `a1, a2, a3` as a polynomial in
/// `g1, g2, g3` by repeated leading-term elimination against products of
/// elementary symmetric polynomials. Other variables ride along as
/// coefficients.
pub fn symmetric_to_g(p: &MultiPoly) -> Result<MultiPoly> {
    check_symmetric(p)?;
    let e = [
        &(&MultiPoly::var(Var::A1) + &MultiPoly::var(Var::A2)) + &MultiPoly::var(Var::A3),
        &(&(&MultiPoly::var(Var::A1) * &MultiPoly::var(Var::A2))
            + &(&MultiPoly::var(Var::A2) * &MultiPoly::var(Var::A3)))
            + &(&MultiPoly::var(Var::A1) * &MultiPoly::var(Var::A3)),
        &(&MultiPoly::var(Var::A1) * &MultiPoly::var(Var::A2)) * &MultiPoly::var(Var::A3),
    ];
    let g_image = [
        MultiPoly::var(Var::G1).scale(&rat(1, 4)),
        MultiPoly::var(Var::G2).scale(&rat(-1, 4)),
        MultiPoly::var(Var::G3).scale(&rat(1, 4)),
    ];
    let mut e_powers: [Vec<MultiPoly>; 3] = Default::default();
    let mut g_powers: [Vec<MultiPoly>; 3] = Default::default();
    let power = |cache: &mut Vec<MultiPoly>, base: &MultiPoly, k: usize| -> MultiPoly {
        if cache.is_empty() {
            cache.push(MultiPoly::one());
        }
        while cache.len() <= k {
            let next = &cache[cache.len() - 1] * base;
            cache.push(next);
        }
        cache[k].clone()
    };

    let mut rest = p.clone();
    let mut out = MultiPoly::zero();
    let mut product_cache: FxHashMap<[u32; 3], MultiPoly> = FxHashMap::default();
    while !rest.is_zero() {
        let lead = rest
            .terms()
            .map(|(m, _)| a_part(m))
            .max_by(grlex)
            .expect("nonzero");
        // For a symmetric polynomial the grlex-leading exponent is sorted.
        debug_assert!(lead[0] >= lead[1] && lead[1] >= lead[2]);
        let coeff = MultiPoly::from_terms(
            rest.terms()
                .filter(|(m, _)| a_part(m) == lead)
                .map(|(m, c)| {
                    let mut stripped = *m;
                    for v in A {
                        stripped = stripped.with_exponent(v, 0);
                    }
                    (stripped, c.clone())
                }),
        );
        let exps = [lead[0] - lead[1], lead[1] - lead[2], lead[2]];
        let product = match product_cache.get(&exps) {
            Some(p) => p.clone(),
            None => {
                let mut prod = MultiPoly::one();
                for i in 0..3 {
                    prod = &prod * &power(&mut e_powers[i], &e[i], exps[i] as usize);
                }
                product_cache.insert(exps, prod.clone());
                prod
            }
        };
        rest -= &(&coeff * &product);
        let mut g_mono = MultiPoly::one();
        for i in 0..3 {
            g_mono = &g_mono * &power(&mut g_powers[i], &g_image[i], exps[i] as usize);
        }
        out += &(&coeff * &g_mono);
        debug_assert!(rest.terms().all(|(m, _)| grlex(&a_part(m), &lead) != Ordering::Equal));
    }
    Ok(out)
}

/// Inverse map: substitute `g1, g2, g3` by their expressions in `a1, a2, a3`.
pub fn g_to_a(p: &MultiPoly) -> MultiPoly {
    let [g1, g2, g3] = params_from_a(
        &MultiPoly::var(Var::A1),
        &MultiPoly::var(Var::A2),
        &MultiPoly::var(Var::A3),
    );
    p.substitute(&[(Var::G1, g1), (Var::G2, g2), (Var::G3, g3)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn g_from_a_examples() {
        assert_eq!(params_from_a_rational(&[int(1), int(2), int(3)]), [int(24), int(-44), int(24)]);
        assert_eq!(params_from_a_rational(&[int(0), int(0), int(0)]), [int(0), int(0), int(0)]);
        let a = MultiPoly::var(Var::A1);
        let [g1, g2, g3] = params_from_a(&a, &a, &a);
        assert_eq!((g1, g2, g3), (p("12 a1"), p("-12 a1^2"), p("4 a1^3")));
    }

    #[test]
    fn rewrites_into_g_basis() {
        assert_eq!(symmetric_to_g(&p("a1 + a2 + a3")).unwrap(), p("g1/4"));
        assert_eq!(symmetric_to_g(&p("a1 a2 a3")).unwrap(), p("g3/4"));
        assert_eq!(symmetric_to_g(&p("a1^2 + a2^2 + a3^2")).unwrap(), p("g1^2/16 + g2/2"));
    }

    #[test]
    fn carries_other_variables() {
        let q = p("s^2 (a1 + a2 + a3) + s a1 a2 a3");
        assert_eq!(symmetric_to_g(&q).unwrap(), p("1/4 s^2 g1 + 1/4 s g3"));
    }

    #[test]
    fn names_violated_transposition() {
        assert_eq!(symmetric_to_g(&p("a1")), Err(Error::NotSymmetric("(a1 a2)")));
        assert_eq!(symmetric_to_g(&p("a1 + a2")), Err(Error::NotSymmetric("(a2 a3)")));
    }
}
