//! Invariant suites over seeded random inputs, shared by the command-line
//! `verify` command and the acceptance tests.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::bernoulli::bernoulli_polynomial;
use crate::algebra::poly::{MultiPoly, Var};
use crate::algebra::rational::{from_f64, rat, to_f64, Rational};
use crate::algebra::symmetric::{params_from_a_rational, symmetric_to_g};
use crate::algebra::univariate::UniPoly;
use crate::asymptotics::{leading_term_residue, normalized_curve_of, real_roots, sphere_moment_integral};
use crate::ebp::{elliptic_bernoulli_series, g_weight, EllipticBernoulli, SpecialCase};
use crate::error::Error;
use crate::fixtures::{g_keys, g_component_term, FixtureSet};
use crate::lame::{falling_factor, lame_coefficients, verify_with, SpectralCoefficients};
use crate::top::{char_poly_exact, eigenvalues_polished, trace_power_oracle, Spin, SpinMatrixModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Latex,
    Json,
    Text,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "latex" => Ok(OutputFormat::Latex),
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidArgument(format!(
                "unknown format `{other}` (expected latex, json, text or csv)"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Latex => "latex",
            OutputFormat::Json => "json",
            OutputFormat::Text => "text",
            OutputFormat::Csv => "csv",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Largest `k` for the `B_{2k+1}` suites.
    pub max_k: usize,
    pub max_spin: Spin,
    /// Random parameter triples per spin.
    pub trials: usize,
    pub rng_seed: u64,
    pub output_format: OutputFormat,
    /// Bound on the scaled residual `|R(λ)| / (1 + |λ|)^{2s+1}` of numeric
    /// eigenvalues.
    pub tolerance: f64,
    /// Check against a deliberately damaged fixture set.
    pub corrupt_fixture: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_k: 7,
            max_spin: Spin::integer(5),
            trials: 5,
            rng_seed: 0x5eed_2024,
            output_format: OutputFormat::Text,
            tolerance: 1e-8,
            corrupt_fixture: false,
        }
    }
}

/// `trials` parameter triples with numerators in `[-10, 10]` and
/// denominators in `[1, 10]`, fully determined by `seed`.
pub fn seeded_triples(seed: u64, trials: usize) -> Vec<[Rational; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| [(); 3].map(|_| rat(rng.gen_range(-10..=10), rng.gen_range(1..=10))))
        .collect()
}

/// Result of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    /// Report-only lines; never affect pass/fail.
    pub notes: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: usize,
    first_failure: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self.notes.extend(other.notes);
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult {
            name,
            checks: self.checks,
            failures: self.failures,
            first_failure: self.first_failure,
            notes: self.notes,
        }
    }
}

fn merged(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

fn fmt_triple(a: &[Rational; 3]) -> String {
    format!("({}, {}, {})", a[0], a[1], a[2])
}

/// Names the first differing term of two polynomials.
pub fn describe_difference(expected: &MultiPoly, actual: &MultiPoly) -> String {
    let diff = actual - expected;
    let Some(m) = diff.terms().next_back().map(|(m, _)| *m) else {
        return "no difference".into();
    };
    let mono = MultiPoly::term(Rational::one(), m);
    format!("coefficient of {mono}: expected {}, got {}", expected.coeff(&m), actual.coeff(&m))
}

/// Shared inputs computed once per run.
pub struct Context {
    pub config: RunConfig,
    pub fixtures: FixtureSet,
    pub ebp: Vec<EllipticBernoulli>,
    pub triples: Vec<[Rational; 3]>,
    pub spins: Vec<Spin>,
    pub general: SpectralCoefficients,
    pub reduced: SpectralCoefficients,
}

impl Context {
    pub fn new(config: RunConfig) -> Result<Self, Error> {
        let fixtures = if config.corrupt_fixture { FixtureSet::corrupted()? } else { FixtureSet::embedded()? };
        let spins: Vec<Spin> = Spin::up_to(config.max_spin).collect();
        let dim = config.max_spin.dimension();
        let kmax = config.max_k.max(dim);
        let ebp = elliptic_bernoulli_series(kmax.max(config.max_k + 1));
        Ok(Context {
            triples: seeded_triples(config.rng_seed, config.trials),
            general: lame_coefficients(kmax, false),
            reduced: lame_coefficients(config.max_k.max(1), true),
            fixtures,
            ebp,
            spins,
            config,
        })
    }

    fn ks(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.config.max_k
    }
}

/// Computed `B_{2k+1}` against the reference polynomials, after amendments.
pub fn suite_fixtures(ctx: &Context) -> SuiteResult {
    let mut t = Tally::default();
    for name in ctx.fixtures.round_trip_failures() {
        t.check(false, || format!("fixture {name} does not survive a print/parse round trip"));
    }
    t.checks += ctx.fixtures.all().count() - t.checks;
    let amended = ctx.fixtures.ebp_amended();
    for (k, f) in amended.iter().enumerate().take(ctx.config.max_k + 1) {
        t.check(ctx.ebp[k].poly == f.poly, || {
            format!("{}: {}", f.name, describe_difference(&f.poly, &ctx.ebp[k].poly))
        });
    }
    for (k, f) in ctx.fixtures.lame_reduced.iter().enumerate() {
        if k + 1 > ctx.config.max_k {
            break;
        }
        let b = &ctx.reduced.b[k + 1];
        t.check(*b == f.poly, || format!("reduced {}: {}", f.name, describe_difference(&f.poly, b)));
    }
    t.finish("fixtures")
}

/// Every erratum must be refuted, as printed, by the trace oracle and
/// confirmed once corrected.
pub fn suite_errata(ctx: &Context) -> SuiteResult {
    let mut t = Tally::default();
    for e in &ctx.fixtures.errata {
        let Some(k) = ctx.fixtures.ebp.iter().position(|f| f.name == e.name) else {
            t.check(false, || format!("erratum for unknown fixture {}", e.name));
            continue;
        };
        if k > ctx.config.max_k {
            continue;
        }
        let printed = &ctx.fixtures.ebp[k].poly;
        let amended = &ctx.fixtures.ebp_amended()[k].poly;
        let (mut printed_ok, mut amended_ok) = (true, true);
        for spin in &ctx.spins {
            for a in &ctx.triples {
                let model = SpinMatrixModel::new(*spin, a.clone());
                let trace = trace_power_oracle(&model, k);
                let g = params_from_a_rational(a);
                let at = |p: &MultiPoly| {
                    p.evaluate_rational(&[
                        (Var::S, spin.value()),
                        (Var::G1, g[0].clone()),
                        (Var::G2, g[1].clone()),
                        (Var::G3, g[2].clone()),
                    ])
                };
                printed_ok &= at(printed) == trace;
                amended_ok &= at(amended) == trace;
            }
        }
        let keys: Vec<String> = g_keys(&e.poly).iter().map(|(p, q, r)| format!("g1^{p} g2^{q} g3^{r}")).collect();
        t.check(!printed_ok, || format!("{} as printed already agrees with the trace oracle", e.name));
        t.check(amended_ok, || format!("{} amended disagrees with the trace oracle", e.name));
        let printed_component: Vec<String> =
            g_keys(&e.poly).iter().map(|&key| g_component_term(printed, key).to_string()).collect();
        t.notes.push(format!(
            "{} component {} replaced; printed form refuted by the trace oracle: {}",
            e.name,
            keys.join(", "),
            !printed_ok && !printed_component.is_empty()
        ));
    }
    t.finish("errata")
}

/// `B_{2k+1}` evaluated at `(s, g(a))` against `tr H_s^k` on the exact matrix.
pub fn suite_oracle(ctx: &Context) -> SuiteResult {
    let cells: Vec<(Spin, &[Rational; 3])> =
        ctx.spins.iter().flat_map(|&s| ctx.triples.iter().map(move |a| (s, a))).collect();
    let parts: Vec<Tally> = cells
        .par_iter()
        .map(|&(spin, a)| {
            let mut t = Tally::default();
            let model = SpinMatrixModel::new(spin, a.clone());
            let traces = model.exact_matrix().trace_powers(ctx.config.max_k);
            let g = params_from_a_rational(a);
            for k in ctx.ks() {
                let value = ctx.ebp[k].evaluate(&spin.value(), &g);
                t.check(value == traces[k], || {
                    format!(
                        "k = {k}, s = {spin}, a = {}: polynomial gives {value}, trace gives {}",
                        fmt_triple(a),
                        traces[k]
                    )
                });
            }
            t
        })
        .collect();
    merged(parts).finish("oracle")
}

fn trig_reference(k: usize) -> MultiPoly {
    let shifted = bernoulli_polynomial(2 * k + 1).substitute(&[(Var::X, "s + 1".parse().expect("valid literal"))]);
    let scale = Rational::new(BigInt::one(), BigInt::from(2 * k + 1) * BigInt::from(2).pow(2 * k as u32))
        * Rational::from_integer(BigInt::from(2));
    &MultiPoly::var(Var::G1).pow(k as u32) * &shifted.scale(&scale)
}

/// Anti-symmetry, homogeneity, divisibility, vanishing and closed-form
/// specializations of `B_{2k+1}`.
pub fn suite_structure(ctx: &Context) -> SuiteResult {
    let parse = |t: &str| -> MultiPoly { t.parse().expect("valid literal") };
    let base = parse("s(s+1)(2s+1)");
    let reduced_base = parse("s(s+1)(2s-1)(2s+1)(2s+3)");
    let extra = parse("(2s-3)(2s+5)");
    let reflect = vec![(Var::S, parse("-1 - s"))];
    let parts: Vec<Tally> = ctx
        .ks()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&k| {
            let mut t = Tally::default();
            let b = &ctx.ebp[k].poly;
            let name = format!("B{}", 2 * k + 1);
            t.check((b + &b.substitute(&reflect)).is_zero(), || format!("{name} is not odd under s -> -1-s"));
            t.check(b.degree(Var::S) as usize == 2 * k + 1, || format!("{name} has s-degree {}", b.degree(Var::S)));
            let bad_weight = b.terms().find(|(m, _)| g_weight(m) as usize != 2 * k).map(|(m, _)| *m);
            t.check(bad_weight.is_none(), || {
                format!("{name} has a g-monomial of weight {}", g_weight(&bad_weight.expect("present")))
            });
            if k >= 1 {
                t.check(b.is_divisible_by(Var::S, &base).unwrap_or(false), || {
                    format!("s(s+1)(2s+1) does not divide {name}")
                });
            }
            let w = SpecialCase::Reduced.apply(b);
            if k == 1 {
                t.check(w.is_zero(), || "reduced B3 is not zero".into());
            }
            if k >= 2 {
                t.check(w.is_divisible_by(Var::S, &reduced_base).unwrap_or(false), || {
                    format!("s(s+1)(2s-1)(2s+1)(2s+3) does not divide reduced {name}")
                });
                if k % 2 == 1 {
                    let full = &reduced_base * &extra;
                    t.check(w.is_divisible_by(Var::S, &full).unwrap_or(false), || {
                        format!("(2s-3)(2s+5) does not divide reduced {name}")
                    });
                }
            }
            if k % 2 == 1 {
                t.check(SpecialCase::Lemniscatic.apply(b).is_zero(), || format!("lemniscatic {name} is not zero"));
            }
            if k % 3 != 0 {
                t.check(SpecialCase::Equianharmonic.apply(b).is_zero(), || {
                    format!("equianharmonic {name} is not zero")
                });
            }
            let iso = SpecialCase::Isotropic.apply(b);
            let expected_iso = &parse("2s + 1") * &parse("a1 s (s + 1)").pow(k as u32);
            t.check(iso == expected_iso, || format!("isotropic {name}: {}", describe_difference(&expected_iso, &iso)));
            t
        })
        .collect();
    merged(parts).finish("structure")
}

/// `B_{2k+1}(s; g1, 0, 0) = g1^k / ((2k+1) 2^{2k-1}) B_{2k+1}(s + 1)`.
pub fn suite_trigonometric(ctx: &Context) -> SuiteResult {
    let mut t = Tally::default();
    for k in ctx.ks() {
        let trig = SpecialCase::Trigonometric.apply(&ctx.ebp[k].poly);
        let expected = trig_reference(k);
        t.check(trig == expected, || {
            format!("trigonometric B{}: {}", 2 * k + 1, describe_difference(&expected, &trig))
        });
    }
    t.finish("trigonometric")
}

/// Degree and divisibility properties of `b_k`.
pub fn suite_lame_structure(ctx: &Context) -> SuiteResult {
    let mut t = Tally::default();
    for k in 1..=ctx.config.max_k {
        let b = &ctx.general.b[k];
        t.check(b.degree(Var::S) as usize == 3 * k, || format!("b{k} has s-degree {}", b.degree(Var::S)));
        t.check(b.is_divisible_by(Var::S, &falling_factor(k)).unwrap_or(false), || {
            format!("falling factor does not divide b{k}")
        });
        let w = &ctx.reduced.b[k];
        if k >= 2 {
            t.check(w.degree(Var::S) as usize <= 5 * k / 2, || {
                format!("reduced b{k} has s-degree {} > {}", w.degree(Var::S), 5 * k / 2)
            });
        }
        t.check(w.is_divisible_by(Var::S, &falling_factor(k)).unwrap_or(false), || {
            format!("falling factor does not divide reduced b{k}")
        });
    }
    t.finish("lame-structure")
}

/// Spectral polynomials at spin 1/2 and 3/2 against the reference forms.
pub fn suite_special_values(ctx: &Context) -> SuiteResult {
    let mut t = Tally::default();
    let cases = [(Spin::from_twice(1), false), (Spin::from_twice(3), true)];
    for (fixture, (spin, reduced)) in ctx.fixtures.special_values.iter().zip(cases) {
        let coeffs = if reduced { &ctx.reduced } else { &ctx.general };
        let dim = spin.dimension();
        if dim > coeffs.max_k {
            continue;
        }
        let e = MultiPoly::var(Var::E);
        let mut r = MultiPoly::zero();
        for (i, b) in coeffs.b.iter().take(dim + 1).enumerate() {
            let at_s = b.evaluate(&[(Var::S, spin.value())]);
            r += &(&at_s * &e.pow((dim - i) as u32));
        }
        t.check(r == fixture.poly, || format!("{}: {}", fixture.name, describe_difference(&fixture.poly, &r)));
    }
    t.finish("special-values")
}

/// `det(E - H_s)` against `R_{2s+1}(E)` from the `b_k`.
pub fn suite_charpoly(ctx: &Context) -> SuiteResult {
    let cells: Vec<(Spin, &[Rational; 3])> =
        ctx.spins.iter().flat_map(|&s| ctx.triples.iter().map(move |a| (s, a))).collect();
    let parts: Vec<Tally> = cells
        .par_iter()
        .map(|&(spin, a)| {
            let mut t = Tally::default();
            match verify_with(&ctx.general, spin, a) {
                Ok(report) => {
                    t.check(report.pass, || {
                        let (deg, l, r) = report.first_difference.clone().expect("differs");
                        format!(
                            "s = {spin}, a = {}: coefficient of E^{deg} is {l} in det(E - H) but {r} in R",
                            fmt_triple(a)
                        )
                    });
                    if spin.is_half_integer() {
                        t.check(report.perfect_square, || {
                            format!("s = {spin}, a = {}: characteristic polynomial is not a square", fmt_triple(a))
                        });
                    }
                }
                Err(e) => t.check(false, || format!("s = {spin}: {e}")),
            }
            t
        })
        .collect();
    merged(parts).finish("charpoly")
}

/// Residue formula, sphere average and top coefficient of `B_{2k+1}`.
pub fn suite_leading(ctx: &Context) -> SuiteResult {
    let top = ctx.config.max_k + 1;
    let parts: Vec<Tally> = (0..=top)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&k| {
            let mut t = Tally::default();
            match leading_term_residue(k) {
                Ok(lt) => {
                    let sphere = symmetric_to_g(&sphere_moment_integral(k)).expect("symmetric");
                    let coeff = ctx.ebp[k].poly.coefficient_in(Var::S, 2 * k as u32 + 1);
                    t.check(lt.a0_g == sphere, || {
                        format!("k = {k}: residue {} but sphere average {}", lt.a0_g, sphere)
                    });
                    t.check(lt.a0_g == coeff, || {
                        format!("k = {k}: residue {} but leading coefficient {}", lt.a0_g, coeff)
                    });
                }
                Err(e) => t.check(false, || format!("k = {k}: {e}")),
            }
            t
        })
        .collect();
    merged(parts).finish("leading-term")
}

/// Largest scaled residual `|R(λ)| / (1 + |λ|)^{2s+1}` over the numeric
/// spectrum, with `R` exact and evaluated at the exact value of each `λ`.
pub fn scaled_residual(r: &UniPoly, eigenvalues: &[f64]) -> f64 {
    let n = r.degree().unwrap_or(0) as i32;
    eigenvalues
        .iter()
        .map(|&x| {
            let exact = from_f64(x).expect("finite eigenvalue");
            to_f64(&r.eval(&exact)).abs() / (1.0 + x.abs()).powi(n)
        })
        .fold(0.0, f64::max)
}

/// Numeric spectra against the exact characteristic polynomial.
pub fn suite_spectra(ctx: &Context) -> SuiteResult {
    let max_twice = ctx.config.max_spin.twice().min(8);
    let cells: Vec<(Spin, &[Rational; 3])> = ctx
        .spins
        .iter()
        .filter(|s| s.twice() <= max_twice)
        .flat_map(|&s| ctx.triples.iter().map(move |a| (s, a)))
        .collect();
    let tol = ctx.config.tolerance;
    let parts: Vec<(Tally, f64)> = cells
        .par_iter()
        .map(|&(spin, a)| {
            let mut t = Tally::default();
            let model = SpinMatrixModel::new(spin, a.clone());
            let r = UniPoly::from_multi(&char_poly_exact(&model), Var::Lambda).expect("univariate");
            let ev = match eigenvalues_polished(&model) {
                Ok(ev) => ev,
                Err(e) => {
                    t.check(false, || format!("s = {spin}: {e}"));
                    return (t, f64::NAN);
                }
            };
            t.check(ev.len() == spin.dimension(), || format!("s = {spin}: {} eigenvalues", ev.len()));
            let worst = scaled_residual(&r, &ev);
            t.check(worst <= tol, || {
                format!("s = {spin}, a = {}: scaled residual {worst:.3e} exceeds {tol:.1e}", fmt_triple(a))
            });
            if spin.is_half_integer() {
                let gap = ev.chunks(2).map(|p| (p[1] - p[0]).abs()).fold(0.0, f64::max);
                t.check(gap <= KRAMERS_TOL, || {
                    format!("s = {spin}, a = {}: Kramers partners differ by {gap:.3e}", fmt_triple(a))
                });
            }
            (t, worst)
        })
        .collect();
    let worst = parts.iter().map(|p| p.1).fold(0.0, f64::max);
    let mut t = merged(parts.into_iter().map(|p| p.0).collect());
    t.notes.push(format!("largest scaled residual {worst:.3e}"));
    t.finish("spectra")
}

/// Allowed gap between the two members of a Kramers pair.
pub const KRAMERS_TOL: f64 = 1e-10;
/// Allowed error of `value(0) = 0` and `slope(0) = 2π` on normalized curves.
pub const CURVE_TOL: f64 = 1e-9;

/// The components plotted for `B_15`, plus the single component of `B_3`.
pub fn report_components(max_k: usize) -> Vec<(usize, (u32, u32, u32))> {
    let mut out = vec![(1, (1, 0, 0))];
    if max_k >= 7 {
        out.extend([(7, (7, 0, 0)), (7, (3, 2, 0)), (7, (2, 1, 1)), (7, (0, 2, 1))]);
    }
    out
}

/// Normalized component curves: origin invariants are checked, closeness
/// to `sin 2πs` and root positions are only reported.
pub fn suite_curves(ctx: &Context) -> SuiteResult {
    let mut t = Tally::default();
    for (k, mono) in report_components(ctx.config.max_k) {
        let curve = match normalized_curve_of(&ctx.ebp[k], mono, (0.0, 2.0), 201) {
            Ok(c) => c,
            Err(e) => {
                t.check(false, || e.to_string());
                continue;
            }
        };
        let label = format!("B{} g1^{} g2^{} g3^{}", 2 * k + 1, mono.0, mono.1, mono.2);
        let v0 = curve.value(0.0);
        let d0 = curve.slope(0.0);
        t.check(v0.abs() <= CURVE_TOL, || format!("{label}: value(0) = {v0:e}"));
        t.check((d0 - 2.0 * std::f64::consts::PI).abs() <= CURVE_TOL, || format!("{label}: slope(0) = {d0}"));
        let sin_gap = curve
            .rows()
            .filter(|r| r.0 <= 1.0)
            .map(|(_, v, s)| (v - s).abs())
            .fold(0.0, f64::max);
        let component = &ctx.ebp[k].g_components()[&mono];
        let roots = real_roots(component, (0.0, 2.0), 1e-12).unwrap_or_default();
        let listed: Vec<String> = roots
            .iter()
            .map(|r| {
                let nearest = (r.value * 2.0).round() / 2.0;
                format!("{:.6} (Δ½ {:+.2e}, residual {:.1e})", r.value, r.value - nearest, r.residual)
            })
            .collect();
        t.notes.push(format!("{label}: max |value - sin 2πs| on [0,1] = {sin_gap:.4}; roots in [0,2]: {}", listed.join(", ")));
    }
    t.finish("curves")
}

/// Every suite, in a fixed order.
pub fn run_all(ctx: &Context) -> Vec<SuiteResult> {
    type Suite = fn(&Context) -> SuiteResult;
    let suites: [Suite; 11] = [
        suite_fixtures,
        suite_errata,
        suite_oracle,
        suite_structure,
        suite_trigonometric,
        suite_lame_structure,
        suite_special_values,
        suite_charpoly,
        suite_leading,
        suite_spectra,
        suite_curves,
    ];
    suites.par_iter().map(|f| f(ctx)).collect()
}

/// Plain-text rendering of a report.
pub fn render_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {:<15} {:>5} checks, {} failed\n", r.name, r.checks, r.failures));
        if let Some(f) = &r.first_failure {
            out.push_str(&format!("     first failure: {f}\n"));
        }
        for n in &r.notes {
            out.push_str(&format!("     note: {n}\n"));
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} suites, {} failed\n", results.len(), failed));
    out
}
