use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::poly::{MultiPoly, Var};
use crate::algebra::rational::{from_f64, to_f64, Rational};
use crate::algebra::univariate::UniPoly;
use crate::error::{Error, Result};

/// Largest denominator tried when searching for rational roots.
pub const MAX_ROOT_DENOMINATOR: i64 = 1000;

/// A real root located in the requested interval.
#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub value: f64,
    /// Set when the root was found to be rational.
    pub exact: Option<Rational>,
    /// `|p(value)|` evaluated in floating point.
    pub residual: f64,
}

/// Real roots of a polynomial in `s` inside `[lo, hi]`, ascending, each
/// listed once. Roots are isolated with an exact Sturm sequence on the
/// squarefree part. Each bracket is then checked for a rational root with
/// denominator up to [`MAX_ROOT_DENOMINATOR`], which is reported exactly;
/// otherwise the bracket is bisected down to width `tol`.
pub fn real_roots(p: &MultiPoly, interval: (f64, f64), tol: f64) -> Result<Vec<RootReport>> {
    let (lo, hi) = interval;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::BadInterval(lo, hi));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::BadTolerance(tol));
    }
    let poly = UniPoly::from_multi(p, Var::S)?;
    if poly.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial has no isolated roots".into()));
    }
    let lo_q = from_f64(lo).expect("finite");
    let hi_q = from_f64(hi).expect("finite");
    let (primitive, _) = poly.primitive();
    let lead = primitive.integer_coeffs().last().cloned().unwrap_or_else(BigInt::zero).abs();
    let sqf = primitive.squarefree();
    let mut brackets: Vec<(Rational, Rational)> = Vec::new();
    if sqf.degree().unwrap_or(0) > 0 {
        let sturm = sturm_sequence(&sqf);
        isolate(&sturm, lo_q.clone(), hi_q.clone(), &mut brackets);
    }
    let mut out: Vec<RootReport> = Vec::new();
    if sqf.eval(&lo_q).is_zero() {
        out.push(RootReport { value: lo, exact: Some(lo_q.clone()), residual: 0.0 });
    }
    let tol_q = from_f64(tol).expect("finite");
    for (a, b) in brackets {
        out.push(match refine(&sqf, a, b, &tol_q, &lead) {
            Located::Exact(r) => RootReport { value: to_f64(&r), exact: Some(r), residual: 0.0 },
            Located::Approx(r) => {
                let x = to_f64(&r);
                RootReport { value: x, exact: None, residual: poly.eval_f64(x).abs() }
            }
        });
    }
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(out)
}

enum Located {
    Exact(Rational),
    Approx(Rational),
}

/// Two distinct fractions with denominators at most `Q` differ by at least
/// `1/Q²`, so a bracket narrower than that holds at most one of them.
fn rational_in(p: &UniPoly, a: &Rational, b: &Rational, lead: &BigInt) -> Option<Rational> {
    for q in 1..=MAX_ROOT_DENOMINATOR {
        let qb = BigInt::from(q);
        if !lead.is_multiple_of(&qb) {
            continue;
        }
        let num = ((a + b) * Rational::new(qb.clone(), BigInt::from(2))).round().to_integer();
        let candidate = Rational::new(num, qb);
        if &candidate > a && &candidate <= b && p.eval(&candidate).is_zero() {
            return Some(candidate);
        }
    }
    None
}

/// Narrows a bracket `(a, b]` holding exactly one simple root of `p`.
fn refine(p: &UniPoly, mut a: Rational, mut b: Rational, tol: &Rational, lead: &BigInt) -> Located {
    if p.eval(&b).is_zero() {
        return Located::Exact(b);
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let q = BigInt::from(MAX_ROOT_DENOMINATOR);
    let separation = Rational::new(BigInt::from(1), BigInt::from(2) * &q * &q);
    // `a` may itself be a root of a neighbouring bracket; `b` is not.
    let b_positive = p.eval(&b).is_positive();
    let mut rational_checked = false;
    loop {
        let width = &b - &a;
        if !rational_checked && width <= separation {
            rational_checked = true;
            if let Some(r) = rational_in(p, &a, &b, lead) {
                return Located::Exact(r);
            }
        }
        if rational_checked && width <= *tol {
            return Located::Approx((&a + &b) * &half);
        }
        let mid = (&a + &b) * &half;
        let v = p.eval(&mid);
        if v.is_zero() {
            return Located::Exact(mid);
        }
        if v.is_positive() == b_positive {
            b = mid;
        } else {
            a = mid;
        }
    }
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&Rational::from_integer(BigInt::from(-1))));
    }
    seq
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i32> = seq
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Brackets `(a, b]`, each holding exactly one root of the squarefree
/// polynomial whose Sturm sequence is given.
fn isolate(sturm: &[UniPoly], a: Rational, b: Rational, out: &mut Vec<(Rational, Rational)>) {
    let count = sign_changes(sturm, &a).saturating_sub(sign_changes(sturm, &b));
    match count {
        0 => {}
        1 => out.push((a, b)),
        _ => {
            let mid = (&a + &b) * Rational::new(BigInt::from(1), BigInt::from(2));
            isolate(sturm, a, mid.clone(), out);
            isolate(sturm, mid, b, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(t: &str) -> MultiPoly {
        t.parse().unwrap()
    }

    #[test]
    fn rational_roots_of_reduced_b5() {
        let roots = real_roots(&p("1/60 s(s+1)(2s-1)(2s+1)(2s+3)"), (-2.0, 1.0), 1e-12).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![rat(-3, 2), rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2)]);
    }

    #[test]
    fn linear_and_irrational() {
        let r = real_roots(&p("2s + 1"), (-5.0, 5.0), 1e-12).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].exact, Some(rat(-1, 2)));
        let r = real_roots(&p("(s^2 - 2)(s - 1)^2"), (-2.0, 2.0), 1e-13).unwrap();
        assert_eq!(r[1].exact, Some(rat(1, 1)));
        let values: Vec<f64> = r.iter().map(|x| x.value).collect();
        assert_eq!(values.len(), 3);
        assert!((values[0] + 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(values[1], 1.0);
        assert!((values[2] - 2f64.sqrt()).abs() < 1e-12);
        assert!(r.iter().all(|x| x.residual < 1e-10));
    }

    #[test]
    fn endpoints_and_wide_intervals() {
        let r = real_roots(&p("(s - 3)(3 s - 1)(7 s + 2000)"), (-1e4, 3.0), 1e-12).unwrap();
        let exact: Vec<_> = r.iter().map(|x| x.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![rat(-2000, 7), rat(1, 3), rat(3, 1)]);
        let r = real_roots(&p("s (s - 1)"), (0.0, 1.0), 1e-12).unwrap();
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(real_roots(&p("s"), (f64::NAN, 1.0), 1e-9).is_err());
        assert!(real_roots(&p("s"), (0.0, f64::INFINITY), 1e-9).is_err());
        assert!(real_roots(&p("s"), (0.0, 1.0), 0.0).is_err());
        assert!(real_roots(&p("s g1"), (0.0, 1.0), 1e-9).is_err());
    }
}
