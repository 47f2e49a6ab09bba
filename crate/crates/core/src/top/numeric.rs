//! Floating-point spectrum of the top Hamiltonian by Sturm-count bisection
//! on its two parity chains.

use super::model::SpinMatrixModel;
use super::spin::Spin;
use crate::algebra::rational::{from_f64, to_f64};
use crate::algebra::Rational;
use num_traits::{One, Signed, Zero};
use crate::error::{Error, Result};

struct Chain {
    diag: Vec<f64>,
    off_sq: Vec<f64>,
}

impl Chain {
    /// Number of eigenvalues strictly below `x`.
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0f64;
        for (i, d) in self.diag.iter().enumerate() {
            let coupling = if i == 0 { 0.0 } else { self.off_sq[i - 1] / q };
            q = d - x - coupling;
            if q == 0.0 {
                q = -f64::EPSILON * (1.0 + x.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn bounds(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off_sq[i - 1].abs().sqrt() } else { 0.0 };
            let right = if i + 1 < n { self.off_sq[i].abs().sqrt() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn eigenvalues(&self, tol: f64) -> Vec<f64> {
        let n = self.diag.len();
        if n == 0 {
            return Vec::new();
        }
        let (lo, hi) = self.bounds();
        let pad = tol + 1e-15 * (lo.abs() + hi.abs());
        let (lo, hi) = (lo - pad, hi + pad);
        (0..n)
            .map(|k| {
                let (mut a, mut b) = (lo, hi);
                while b - a > tol {
                    let mid = 0.5 * (a + b);
                    if mid <= a || mid >= b {
                        break;
                    }
                    if self.count_below(mid) > k {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
                0.5 * (a + b)
            })
            .collect()
    }
}

fn default_tol(a: &[f64; 3], spin: Spin) -> f64 {
    let s = spin.twice() as f64 / 2.0;
    let scale = a.iter().map(|x| x.abs()).fold(0.0, f64::max) * (s * (s + 1.0) + 1.0);
    1e-12 * (1.0 + scale)
}

fn spectrum_of_chains(chains: [Chain; 2], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = chains.iter().flat_map(|c| c.eigenvalues(tol)).collect();
    out.sort_by(f64::total_cmp);
    out
}

fn check_tol(tol: Option<f64>) -> Result<Option<f64>> {
    match tol {
        Some(t) if !(t.is_finite() && t > 0.0) => Err(Error::BadTolerance(t)),
        other => Ok(other),
    }
}

/// Sorted eigenvalues of `H_s` for rational parameters. `tol` bounds the
/// width of each bisection bracket; `None` picks a tolerance relative to the
/// spectral radius.
pub fn eigenvalues_numeric(model: &SpinMatrixModel, tol: Option<f64>) -> Result<Vec<f64>> {
    let tol = check_tol(tol)?;
    let a = model.a().clone().map(|x| to_f64(&x));
    let tol = tol.unwrap_or_else(|| default_tol(&a, model.spin()));
    let chains = model.chains().map(|(d, o)| Chain {
        diag: d.iter().map(to_f64).collect(),
        off_sq: o.iter().map(to_f64).collect(),
    });
    Ok(spectrum_of_chains(chains, tol))
}

/// Same as [`eigenvalues_numeric`] for floating-point parameters.
pub fn eigenvalues_numeric_f64(spin: Spin, a: [f64; 3], tol: Option<f64>) -> Result<Vec<f64>> {
    for (x, name) in a.iter().zip(["a1", "a2", "a3"]) {
        if !x.is_finite() {
            return Err(Error::NonFinite(name));
        }
    }
    let tol = check_tol(tol)?.unwrap_or_else(|| default_tol(&a, spin));
    let s = spin.twice() as f64 / 2.0;
    let v = |j: f64| 0.5 * (a[0] + a[1]) * (s * (s + 1.0) - j * j) + a[2] * j * j;
    let c2 = |j: f64| {
        let d = a[0] - a[1];
        d * d / 16.0 * (s - j) * (s - j - 1.0) * (s + j + 1.0) * (s + j + 2.0)
    };
    let lattice: Vec<f64> = (0..=spin.twice()).map(|i| i as f64 - s).collect();
    let chain = |start: usize| {
        let js: Vec<f64> = lattice.iter().copied().skip(start).step_by(2).collect();
        Chain {
            diag: js.iter().map(|&j| v(j)).collect(),
            off_sq: js.iter().take(js.len().saturating_sub(1)).map(|&j| c2(j)).collect(),
        }
    };
    Ok(spectrum_of_chains([chain(0), chain(1)], tol))
}

struct ExactChain {
    diag: Vec<Rational>,
    off_sq: Vec<Rational>,
}

impl ExactChain {
    /// Exact count of negative pivots of `T - x`; a zero pivot counts as
    /// negative, so an eigenvalue at `x` is included.
    fn count_below(&self, x: f64) -> usize {
        enum Pivot {
            Finite(Rational),
            NegZero,
            Infinite,
        }
        let x = from_f64(x).expect("finite bisection point");
        let mut count = 0;
        let mut prev = Pivot::Infinite;
        for (i, d) in self.diag.iter().enumerate() {
            let coupling = if i == 0 { None } else { Some(&self.off_sq[i - 1]) };
            let q = match (&prev, coupling) {
                (Pivot::NegZero, Some(c)) if !c.is_zero() => {
                    prev = Pivot::Infinite;
                    continue;
                }
                (Pivot::Finite(p), Some(c)) => d - &x - c / p,
                _ => d - &x,
            };
            if q.is_zero() {
                count += 1;
                prev = Pivot::NegZero;
            } else {
                if q.is_negative() {
                    count += 1;
                }
                prev = Pivot::Finite(q);
            }
        }
        count
    }

    fn det_abs(&self, x: f64) -> Rational {
        let x = from_f64(x).expect("finite candidate");
        let (mut p0, mut p1) = (Rational::one(), Rational::one());
        for (i, d) in self.diag.iter().enumerate() {
            let next = if i == 0 { d - &x } else { (d - &x) * &p1 - &self.off_sq[i - 1] * &p0 };
            p0 = std::mem::replace(&mut p1, next);
        }
        p1.abs()
    }

    fn polish(&self, k: usize, estimate: f64) -> f64 {
        let mut step = 1e-12 * (1.0 + estimate.abs());
        let mut lo = estimate;
        while self.count_below(lo) > k {
            lo -= step;
            step *= 2.0;
        }
        let mut step = 1e-12 * (1.0 + estimate.abs());
        let mut hi = estimate;
        while self.count_below(hi) <= k {
            hi += step;
            step *= 2.0;
        }
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if self.count_below(lo) > k || self.det_abs(hi) < self.det_abs(lo) {
            hi
        } else {
            lo
        }
    }
}

/// Sorted eigenvalues of `H_s`, each one of the two doubles adjacent to the
/// exact eigenvalue: floating-point bisection supplies brackets that are then
/// narrowed with exact rational Sturm counts.
pub fn eigenvalues_polished(model: &SpinMatrixModel) -> Result<Vec<f64>> {
    let a = model.a().clone().map(|x| to_f64(&x));
    let tol = default_tol(&a, model.spin());
    let mut out = Vec::with_capacity(model.dimension());
    for (d, o) in model.chains() {
        let approx = Chain { diag: d.iter().map(to_f64).collect(), off_sq: o.iter().map(to_f64).collect() };
        let exact = ExactChain { diag: d, off_sq: o };
        for (k, e) in approx.eigenvalues(tol).into_iter().enumerate() {
            out.push(exact.polish(k, e));
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn spin_one_spectrum() {
        let m = SpinMatrixModel::new(Spin::integer(1), [1, 2, 3].map(int));
        let ev = eigenvalues_numeric(&m, None).unwrap();
        for (x, want) in ev.iter().zip([3.0, 4.0, 5.0]) {
            assert!((x - want).abs() < 1e-10, "{ev:?}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let s = Spin::integer(1);
        assert!(matches!(eigenvalues_numeric_f64(s, [f64::NAN, 0.0, 1.0], None), Err(Error::NonFinite("a1"))));
        assert!(matches!(eigenvalues_numeric_f64(s, [1.0, 0.0, f64::INFINITY], None), Err(Error::NonFinite("a3"))));
        assert!(matches!(eigenvalues_numeric_f64(s, [1.0, 0.0, 1.0], Some(0.0)), Err(Error::BadTolerance(_))));
        assert!(matches!(eigenvalues_numeric_f64(s, [1.0, 0.0, 1.0], Some(-1.0)), Err(Error::BadTolerance(_))));
    }

    #[test]
    fn trace_matches_diagonal_sum() {
        let a = [2.5, -1.25, 0.75];
        let spin = Spin::from_twice(9);
        let ev = eigenvalues_numeric_f64(spin, a, None).unwrap();
        assert_eq!(ev.len(), 10);
        let s = 4.5f64;
        let expected: f64 = (0..10)
            .map(|i| {
                let j = i as f64 - s;
                0.5 * (a[0] + a[1]) * (s * (s + 1.0) - j * j) + a[2] * j * j
            })
            .sum();
        assert!((ev.iter().sum::<f64>() - expected).abs() < 1e-9);
    }

    #[test]
    fn polished_values_bracket_exact_eigenvalues() {
        let a = [rat(1, 2), int(-5), rat(2, 9)];
        let m = SpinMatrixModel::new(Spin::integer(4), a);
        let ev = eigenvalues_polished(&m).unwrap();
        let [(d0, o0), (d1, o1)] = m.chains();
        let chains = [ExactChain { diag: d0, off_sq: o0 }, ExactChain { diag: d1, off_sq: o1 }];
        for x in ev {
            let below: usize = chains.iter().map(|c| c.count_below(x.next_down())).sum();
            let above: usize = chains.iter().map(|c| c.count_below(x.next_up())).sum();
            assert!(above > below, "no eigenvalue within one ulp of {x}");
        }
    }

    #[test]
    fn polished_handles_degenerate_couplings() {
        let m = SpinMatrixModel::new(Spin::integer(2), [1, 1, 1].map(int));
        assert_eq!(eigenvalues_polished(&m).unwrap(), vec![6.0; 5]);
        let m = SpinMatrixModel::new(Spin::from_twice(3), [1, 1, 3].map(int));
        let ev = eigenvalues_polished(&m).unwrap();
        assert_eq!(ev[0], ev[1]);
        assert_eq!(ev[2], ev[3]);
    }

    #[test]
    fn exact_count_through_zero_pivots() {
        let c = ExactChain { diag: vec![int(0), int(0), int(0)], off_sq: vec![int(1), int(1)] };
        let two = 2f64.sqrt();
        assert_eq!(c.count_below(0.0), 2);
        assert_eq!(c.count_below(-1.0), 1);
        assert_eq!(c.count_below(-two - 1e-9), 0);
        assert_eq!(c.count_below(two + 1e-9), 3);
        assert_eq!(c.count_below(1.0), 2);
    }
}
