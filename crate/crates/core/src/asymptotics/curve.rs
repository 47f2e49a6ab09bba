use std::f64::consts::PI;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::poly::Var;
use crate::algebra::univariate::UniPoly;
use crate::ebp::{elliptic_bernoulli, EllipticBernoulli};
use crate::error::{Error, Result};

/// Samples of `2π P(s) / P'(0)` for one g-component `P` of `B_{2k+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedCurve {
    pub k: usize,
    /// `(p, q, r)` for the component at `g1^p g2^q g3^r`.
    pub monomial: (u32, u32, u32),
    /// `2π P / P'(0)` as an exact polynomial in `s`, divided by `2π`.
    pub normalized: UniPoly,
    pub samples: Vec<(f64, f64)>,
}

impl NormalizedCurve {
    pub fn value(&self, s: f64) -> f64 {
        2.0 * PI * self.normalized.eval_f64(s)
    }

    /// `d/ds` of [`value`](Self::value) at `s`.
    pub fn slope(&self, s: f64) -> f64 {
        2.0 * PI * self.normalized.derivative().eval_f64(s)
    }

    /// Rows `(s, value, sin(2πs))`.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.samples.iter().map(|&(s, v)| (s, v, (2.0 * PI * s).sin()))
    }
}

pub(crate) fn describe_components(b: &EllipticBernoulli) -> String {
    b.g_components()
        .keys()
        .map(|&(p, q, r)| format!("({p},{q},{r})"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// The normalized g-component of a given polynomial, sampled at `count`
/// evenly spaced points of `[lo, hi]`.
pub fn normalized_curve_of(
    b: &EllipticBernoulli,
    monomial: (u32, u32, u32),
    range: (f64, f64),
    count: usize,
) -> Result<NormalizedCurve> {
    let (p, q, r) = monomial;
    let (lo, hi) = range;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::BadInterval(lo, hi));
    }
    let components = b.g_components();
    let component = components.get(&monomial).ok_or_else(|| Error::AbsentComponent {
        index: b.index(),
        p,
        q,
        r,
        available: describe_components(b),
    })?;
    let poly = UniPoly::from_multi(component, Var::S)?;
    let slope = poly.derivative().eval(&Zero::zero());
    if slope.is_zero() {
        return Err(Error::ZeroSlope { index: b.index(), p, q, r });
    }
    let normalized = poly.scale(&slope.recip());
    let grid: Vec<f64> = match count {
        0 => Vec::new(),
        1 => vec![lo],
        n => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    };
    let samples = grid
        .par_iter()
        .map(|&s| (s, 2.0 * PI * normalized.eval_f64(s)))
        .collect();
    Ok(NormalizedCurve { k: b.k, monomial, normalized, samples })
}

/// [`normalized_curve_of`] applied to `B_{2k+1}` from the engine.
pub fn normalized_component_curve(
    k: usize,
    monomial: (u32, u32, u32),
    range: (f64, f64),
    count: usize,
) -> Result<NormalizedCurve> {
    normalized_curve_of(&elliptic_bernoulli(k), monomial, range, count)
}

/// Exact value of the normalized polynomial's slope at zero, which the
/// normalization fixes to one before the factor `2π`.
pub fn exact_unit_slope(curve: &NormalizedCurve) -> bool {
    curve.normalized.derivative().eval(&Zero::zero()) == num_traits::One::one()
        && curve.normalized.eval(&Zero::zero()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_curve_at_half() {
        let c = normalized_component_curve(1, (1, 0, 0), (0.0, 1.0), 3).unwrap();
        assert_eq!(c.samples[0], (0.0, 0.0));
        assert!((c.samples[1].1 - 3.0 * PI).abs() < 1e-12);
        assert!((c.slope(0.0) - 2.0 * PI).abs() < 1e-12);
        assert!(exact_unit_slope(&c));
    }

    #[test]
    fn absent_component_lists_alternatives() {
        let err = normalized_component_curve(2, (0, 0, 1), (0.0, 1.0), 3).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("(0,1,0)") && msg.contains("(2,0,0)"), "{msg}");
        assert!(normalized_component_curve(1, (1, 0, 0), (1.0, 0.0), 3).is_err());
    }
}
