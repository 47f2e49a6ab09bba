//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when a
//! gated criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use ellbern::algebra::rational::{from_f64, to_f64};
use ellbern::asymptotics::real_roots;
use ellbern::ebp::elliptic_bernoulli_series;
use ellbern::fixtures::{g_component_term, g_keys, FixtureSet};
use ellbern::lame::lame_coefficients;
use ellbern::top::{char_poly_exact, eigenvalues_polished, Spin, SpinMatrixModel};
use ellbern::verify::{
    scaled_residual, suite_charpoly, suite_curves, suite_leading, suite_oracle, suite_structure,
    suite_trigonometric, Context, RunConfig, SuiteResult, KRAMERS_TOL,
};
use ellbern::{MultiPoly, UniPoly, Var};

/// Bound on `|R(λ)| / (1 + |λ|)^{2s+1}` for numeric eigenvalues.
const SPECTRAL_RESIDUAL_TOL: f64 = 1e-8;
const SEED: u64 = 0x5eed_2024;
const TRIALS: usize = 5;

struct Outcome {
    pass: bool,
    gated: bool,
    summary: String,
    details: Vec<String>,
}

fn from_suite(r: SuiteResult) -> Outcome {
    let mut details: Vec<String> = r.first_failure.iter().map(|f| format!("first failure: {f}")).collect();
    details.extend(r.notes.iter().cloned());
    Outcome {
        pass: r.passed(),
        gated: true,
        summary: format!("{} checks, {} failed", r.checks, r.failures),
        details,
    }
}

fn criterion_1() -> Outcome {
    let fixtures = FixtureSet::embedded().expect("fixtures parse");
    let computed = elliptic_bernoulli_series(7);
    let mut details = Vec::new();
    let mut matched = 0;
    let mut components = 0;
    for (f, b) in fixtures.ebp.iter().zip(&computed) {
        let keys: std::collections::BTreeSet<_> = g_keys(&f.poly).union(&g_keys(&b.poly)).copied().collect();
        for key in keys {
            components += 1;
            let printed = g_component_term(&f.poly, key);
            let ours = g_component_term(&b.poly, key);
            if printed == ours {
                matched += 1;
            } else {
                details.push(format!(
                    "{} component g1^{} g2^{} g3^{} differs from the reference as printed",
                    f.name, key.0, key.1, key.2
                ));
            }
        }
    }
    let amended_ok = fixtures.ebp_amended().iter().zip(&computed).all(|(f, b)| f.poly == b.poly);
    if !details.is_empty() {
        details.push(format!(
            "with the {} documented errata applied (each refuted by the trace oracle, see the errata suite) all of B1..B15 agree: {amended_ok}",
            fixtures.errata.len()
        ));
    }
    Outcome {
        pass: details.is_empty(),
        gated: true,
        summary: format!("{matched}/{components} g-components of B1..B15 equal the reference as printed"),
        details,
    }
}

fn criterion_2() -> Outcome {
    let fixtures = FixtureSet::embedded().expect("fixtures parse");
    let coeffs = lame_coefficients(7, true);
    let mut details = Vec::new();
    for (k, f) in fixtures.lame_reduced.iter().enumerate() {
        if coeffs.b[k + 1] != f.poly {
            details.push(format!("{} differs", f.name));
        }
    }
    Outcome {
        pass: details.is_empty(),
        gated: true,
        summary: format!("{}/7 reduced coefficients match", 7 - details.len()),
        details,
    }
}

/// The smallest scaled residual any double next to the exact root can have.
fn best_possible(r: &UniPoly, cp: &MultiPoly) -> f64 {
    let n = r.degree().unwrap_or(0) as i32;
    let roots = real_roots(&cp.rename(&[(Var::Lambda, Var::S)]), (-1e6, 1e6), 1e-40).unwrap_or_default();
    roots
        .iter()
        .map(|root| {
            let x = root.value;
            [x, x.next_up(), x.next_down()]
                .iter()
                .map(|&c| to_f64(&r.eval(&from_f64(c).expect("finite"))).abs() / (1.0 + c.abs()).powi(n))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

fn criterion_8(ctx: &Context) -> Outcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut kramers_bad = 0;
    let mut worst: f64 = 0.0;
    for spin in Spin::up_to(Spin::integer(4)) {
        for a in &ctx.triples {
            let model = SpinMatrixModel::new(spin, a.clone());
            let cp = char_poly_exact(&model);
            let r = UniPoly::from_multi(&cp, Var::Lambda).expect("univariate");
            let ev = eigenvalues_polished(&model).expect("valid model");
            let res = scaled_residual(&r, &ev);
            worst = worst.max(res);
            checks += 1;
            if res > SPECTRAL_RESIDUAL_TOL {
                failures.push(format!(
                    "s = {spin}, a = ({}, {}, {}): scaled residual {res:.2e}; best possible for any double next to the exact roots {:.2e}",
                    a[0],
                    a[1],
                    a[2],
                    best_possible(&r, &cp)
                ));
            }
            if spin.is_half_integer() {
                checks += 1;
                if ev.chunks(2).any(|p| (p[1] - p[0]).abs() > KRAMERS_TOL) {
                    kramers_bad += 1;
                }
            }
        }
    }
    let mut details = failures.clone();
    details.push(format!("Kramers pairs within {KRAMERS_TOL:.0e}: {} failures", kramers_bad));
    Outcome {
        pass: failures.is_empty() && kramers_bad == 0,
        gated: true,
        summary: format!(
            "{checks} checks, {} residual failures, worst scaled residual {worst:.2e} (bound {SPECTRAL_RESIDUAL_TOL:.0e})",
            failures.len()
        ),
        details,
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let config = RunConfig { max_k: 7, max_spin: Spin::integer(5), trials: TRIALS, rng_seed: SEED, ..RunConfig::default() };
    let ctx = Context::new(config).expect("context");

    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Run)> = vec![
        ("reference B1..B15", Box::new(criterion_1)),
        ("reduced b1..b7", Box::new(criterion_2)),
        ("density recurrence vs trace oracle", Box::new(|| from_suite(suite_oracle(&ctx)))),
        ("characteristic vs spectral polynomial", Box::new(|| from_suite(suite_charpoly(&ctx)))),
        ("structural properties", Box::new(|| from_suite(suite_structure(&ctx)))),
        ("trigonometric reduction", Box::new(|| from_suite(suite_trigonometric(&ctx)))),
        ("leading term, three ways, k <= 8", Box::new(|| from_suite(suite_leading(&ctx)))),
        ("numeric spectra", Box::new(|| criterion_8(&ctx))),
        (
            "normalized curves (report only)",
            Box::new(|| {
                let mut o = from_suite(suite_curves(&ctx));
                o.gated = false;
                o
            }),
        ),
    ];

    let mut gated_failures = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name}: {} [{:.2?}]", i + 1, o.summary, t.elapsed());
        for d in &o.details {
            println!("    {d}");
        }
        if !o.pass && o.gated {
            gated_failures.push(i + 1);
        }
    }
    println!("total {:.2?}", start.elapsed());
    if gated_failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {gated_failures:?}");
        ExitCode::FAILURE
    }
}
