use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::binomial;
use rayon::prelude::*;

use super::density::LocalDensityTable;
use crate::algebra::bernoulli::{symmetric_range_sum_with, LatticeSums};
use crate::algebra::poly::{Monomial, MultiPoly, Var};
use crate::algebra::rational::{int, Rational};
use crate::algebra::symmetric::symmetric_to_g;

/// Bumped whenever a change could alter computed polynomials; part of every
/// cache key.
pub const ENGINE_VERSION: u32 = 1;

/// How an [`EllipticBernoulli`] value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Recurrence,
    OracleInterpolation,
    Fixture,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Recurrence => "recurrence",
            Provenance::OracleInterpolation => "oracle-interpolation",
            Provenance::Fixture => "fixture",
        })
    }
}

/// `B_{2k+1}(s; g1, g2, g3) = tr H_s^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticBernoulli {
    pub k: usize,
    pub poly: MultiPoly,
    pub method: Provenance,
}

impl EllipticBernoulli {
    pub fn new(k: usize, poly: MultiPoly, method: Provenance) -> Self {
        EllipticBernoulli { k, poly, method }
    }

    /// The subscript `2k + 1`.
    pub fn index(&self) -> usize {
        2 * self.k + 1
    }

    /// Splits the polynomial by g-monomial: `(p, q, r) -> coefficient in s`,
    /// where the key stands for `g1^p g2^q g3^r`.
    pub fn g_components(&self) -> BTreeMap<(u32, u32, u32), MultiPoly> {
        let mut out: BTreeMap<(u32, u32, u32), MultiPoly> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let key = (m.exponent(Var::G1), m.exponent(Var::G2), m.exponent(Var::G3));
            let rest = m.with_exponent(Var::G1, 0).with_exponent(Var::G2, 0).with_exponent(Var::G3, 0);
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Evaluates at a concrete spin and concrete `g`.
    pub fn evaluate(&self, s: &Rational, g: &[Rational; 3]) -> Rational {
        self.poly.evaluate_rational(&[
            (Var::S, s.clone()),
            (Var::G1, g[0].clone()),
            (Var::G2, g[1].clone()),
            (Var::G3, g[2].clone()),
        ])
    }
}

impl fmt::Display for EllipticBernoulli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

fn b1() -> EllipticBernoulli {
    EllipticBernoulli::new(0, "2 s + 1".parse().expect("valid literal"), Provenance::Recurrence)
}

/// Shifted frame: `H = p u I + H'` with `u = s(s+1)`, `p = (a1 + a2)/2`.
/// The reduced Hamiltonian `H'` has `v' = q n^2` and
/// `c'^2 = h^2/4 (u - n(n+1))(u - (n+1)(n+2))`, where `h = (a1 - a2)/2` and
/// `q = a3 - p`. During the recurrence `h`, `p`, `q` occupy the slots of
/// `a1`, `a2`, `a3`.
fn shifted_table(max_k: usize) -> LocalDensityTable {
    let v: MultiPoly = "a3 n^2".parse().expect("valid literal");
    let c_sq: MultiPoly = "1/4 a1^2 (u - n^2 - n)(u - n^2 - 3n - 2)".parse().expect("valid literal");
    LocalDensityTable::densities_only(&v, &c_sq, max_k)
}

fn frame_back() -> Vec<(Var, MultiPoly)> {
    let parse = |t: &str| -> MultiPoly { t.parse().expect("valid literal") };
    vec![
        (Var::A1, parse("1/2 a1 - 1/2 a2")),
        (Var::A2, parse("1/2 a1 + 1/2 a2")),
        (Var::A3, parse("a3 - 1/2 a1 - 1/2 a2")),
    ]
}

/// `Σ_n 𝓘'_{n,m}` times `m`, with `u` kept symbolic.
fn shifted_trace(table: &LocalDensityTable, m: usize, sums: &LatticeSums) -> MultiPoly {
    if m == 0 {
        return "2 s + 1".parse().expect("valid literal");
    }
    let coeffs = table.density(m).coefficients_in(Var::N);
    symmetric_range_sum_with(&coeffs, sums).scale(&int(m as i64))
}

fn assemble(k: usize, traces: &[MultiPoly], u_value: &MultiPoly, back: &[(Var, MultiPoly)]) -> EllipticBernoulli {
    let pu = &MultiPoly::var(Var::A2) * &MultiPoly::var(Var::U);
    let mut pu_pow = vec![MultiPoly::one()];
    for _ in 0..k {
        let next = &pu_pow[pu_pow.len() - 1] * &pu;
        pu_pow.push(next);
    }
    let mut frame = MultiPoly::zero();
    for (m, t) in traces.iter().enumerate().take(k + 1) {
        let c = Rational::from_integer(binomial(BigInt::from(k), BigInt::from(m)));
        frame += &(&pu_pow[k - m] * t).scale(&c);
    }
    let mut subs = back.to_vec();
    subs.push((Var::U, u_value.clone()));
    let in_a = frame.substitute(&subs);
    let poly = symmetric_to_g(&in_a).expect("traces are symmetric in a1, a2, a3");
    EllipticBernoulli::new(k, poly, Provenance::Recurrence)
}

/// `B_1, B_3, ..., B_{2K+1}` from the density recurrence.
pub fn elliptic_bernoulli_series(max_k: usize) -> Vec<EllipticBernoulli> {
    let mut cache = series_cache().lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() <= max_k {
        *cache = compute_series(max_k);
    }
    cache[..=max_k].to_vec()
}

/// `B_{2k+1}` from the density recurrence; `B_1 = 2s + 1`.
pub fn elliptic_bernoulli(k: usize) -> EllipticBernoulli {
    let cached = series_cache().lock().unwrap_or_else(|e| e.into_inner()).get(k).cloned();
    cached.unwrap_or_else(|| elliptic_bernoulli_series(k).pop().expect("nonempty"))
}

fn series_cache() -> &'static Mutex<Vec<EllipticBernoulli>> {
    static CACHE: OnceLock<Mutex<Vec<EllipticBernoulli>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn compute_series(max_k: usize) -> Vec<EllipticBernoulli> {
    if max_k == 0 {
        return vec![b1()];
    }
    let table = shifted_table(max_k);
    let max_n = (1..=max_k).map(|m| table.density(m).degree(Var::N) as usize).max().unwrap_or(0);
    let sums = LatticeSums::new(max_n);
    let traces: Vec<MultiPoly> = (0..=max_k)
        .into_par_iter()
        .map(|m| shifted_trace(&table, m, &sums))
        .collect();
    let u_value: MultiPoly = "s^2 + s".parse().expect("valid literal");
    let back = frame_back();
    let mut out: Vec<EllipticBernoulli> = (1..=max_k)
        .into_par_iter()
        .map(|k| assemble(k, &traces, &u_value, &back))
        .collect();
    out.insert(0, b1());
    out
}

/// `B_{2k+1}` straight from the literal density table in `(n, s, a1, a2, a3)`,
/// without the shifted frame. Slower; kept as an independent route.
pub fn elliptic_bernoulli_direct(k: usize) -> EllipticBernoulli {
    if k == 0 {
        return b1();
    }
    let table = super::density::build_density_table(k);
    let poly = symmetric_to_g(&table.trace(k)).expect("traces are symmetric in a1, a2, a3");
    EllipticBernoulli::new(k, poly, Provenance::Recurrence)
}

/// The g-weight `2p + 4q + 6r` of a monomial.
pub fn g_weight(m: &Monomial) -> u32 {
    2 * m.exponent(Var::G1) + 4 * m.exponent(Var::G2) + 6 * m.exponent(Var::G3)
}
