//! Dense univariate polynomials over the rationals.
//!
//! Used where a dense view is natural: characteristic polynomials, exact
//! square roots, gcds and Sturm sequences.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, MultiPoly, Var};
use super::rational::{lcm, Rational};
use crate::error::{Error, Result};

/// Coefficients in ascending order; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `a*x + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        UniPoly::new(vec![b, a])
    }

    pub fn from_multi(p: &MultiPoly, v: Var) -> Result<Self> {
        if let Some(other) = p.variables().into_iter().find(|&w| w != v) {
            return Err(Error::NotUnivariate {
                expected: v.name(),
                found: other.name(),
            });
        }
        Ok(UniPoly::new(
            p.coefficients_in(v).iter().map(MultiPoly::constant_term).collect(),
        ))
    }

    pub fn to_multi(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let ddeg = divisor.degree().expect("division by zero polynomial");
        let Some(ndeg) = self.degree().filter(|&n| n >= ddeg) else {
            return (UniPoly::zero(), self.clone());
        };
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); ndeg - ddeg + 1];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + ddeg] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(ddeg);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive().0;
        }
        a.monic()
    }

    /// `(p, c)` with `self = c * p`, `p` having coprime integer coefficients
    /// and positive leading coefficient.
    pub fn primitive(&self) -> (UniPoly, Rational) {
        if self.is_zero() {
            return (UniPoly::zero(), Rational::one());
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| lcm(&acc, c.denom()));
        let nums: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = nums
            .iter()
            .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
        if self.leading().is_negative() {
            g = -g;
        }
        let content = Rational::new(g.clone(), den);
        (
            UniPoly::new(nums.into_iter().map(|x| Rational::from_integer(x / &g)).collect()),
            content,
        )
    }

    /// Integer coefficients of the primitive part.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.primitive().0.coeffs.iter().map(|c| c.numer().clone()).collect()
    }

    /// Squarefree part (monic).
    pub fn squarefree(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// `Some(q)` with `q * q == self` and `q` having positive leading
    /// coefficient, when `self` is the square of a rational polynomial.
    pub fn exact_sqrt(&self) -> Option<UniPoly> {
        let Some(deg) = self.degree() else {
            return Some(UniPoly::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let lead_root = rational_sqrt(&self.leading())?;
        let half = deg / 2;
        // Solve for the root's coefficients from the top down.
        let mut root = vec![Rational::zero(); half + 1];
        root[half] = lead_root.clone();
        let two_lead = &lead_root + &lead_root;
        for i in (0..half).rev() {
            let target = &self.coeffs[half + i];
            let mut acc = Rational::zero();
            for j in (i + 1)..=half {
                let k = half + i - j;
                if k > i && k <= half {
                    acc += &root[j] * &root[k];
                }
            }
            root[i] = (target - acc) / &two_lead;
        }
        let q = UniPoly::new(root);
        (q.mul(&q) == *self).then_some(q)
    }
}

/// Exact square root of a non-negative rational, when it exists.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn up(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let a = up(&[-1, 1]).mul(&up(&[2, 1])); // (x-1)(x+2)
        let b = up(&[-1, 1]).mul(&up(&[3, 1])); // (x-1)(x+3)
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
    }

    #[test]
    fn square_root_detects_squares() {
        let q = UniPoly::new(vec![rat(-3, 2), int(0), int(1)]);
        assert_eq!(q.mul(&q).exact_sqrt(), Some(q.clone()));
        assert_eq!(q.mul(&q).add(&up(&[1])).exact_sqrt(), None);
        assert_eq!(up(&[1, 2]).exact_sqrt(), None);
    }

    #[test]
    fn primitive_part_has_integer_coefficients() {
        let p = UniPoly::new(vec![rat(-1, 6), rat(1, 4)]);
        let (prim, c) = p.primitive();
        assert_eq!(prim, up(&[-2, 3]));
        assert_eq!(c, rat(1, 12));
    }

    #[test]
    fn squarefree_removes_repeats() {
        let p = up(&[-1, 1]).mul(&up(&[-1, 1])).mul(&up(&[0, 1]));
        assert_eq!(p.squarefree(), up(&[0, -1, 1]));
    }
}
