mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context as _};
use clap::{Args, Parser, Subcommand};
use ellbern::algebra::{parse_rational, params_from_a_rational};
use ellbern::asymptotics::{normalized_component_curve, NormalizedCurve};
use ellbern::ebp::elliptic_bernoulli;
use ellbern::lame::lame_coefficients;
use ellbern::top::{char_poly_exact, eigenvalues_numeric, eigenvalues_polished, Spin, SpinMatrixModel};
use ellbern::verify::{render_text, report_components, run_all, Context, OutputFormat, RunConfig};
use ellbern::{Rational, Var};
use serde_json::json;

/// Elliptic Bernoulli polynomials, quantum Euler top spectra and Lamé
/// spectral coefficients in exact arithmetic.
#[derive(Parser)]
#[command(name = "ellbern", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_{2k+1}(s; g1, g2, g3), optionally evaluated at a spin and g.
    Ebp {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the spectral-polynomial coefficients b_1..b_k, or R(E) at a
    /// spin and g when both are given.
    LameCoeffs {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        reduced: bool,
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Exact characteristic polynomial and sorted eigenvalues of H_s.
    Spectrum {
        #[arg(long)]
        spin: Spin,
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        a: [Rational; 3],
        /// Plain bisection to this bracket width instead of exact bracketing.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Run the verification suites; exits nonzero if any fails.
    Verify {
        /// Largest k for B_{2k+1}.
        #[arg(long, default_value_t = 7)]
        k: usize,
        /// Largest spin in the oracle grid.
        #[arg(long, default_value = "5")]
        spin: Spin,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0x5eed_2024)]
        seed: u64,
        /// Bound on scaled residuals of numeric eigenvalues.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Negative control: verify against a deliberately corrupted fixture.
        #[arg(long, hide = true)]
        corrupt_fixture: bool,
    },
    /// Normalized component curves of B_{2k+1} as CSV (s,value,sin_ref).
    FigureData {
        #[arg(long)]
        k: usize,
        /// Component exponents p,q,r of g1^p g2^q g3^r; repeatable. Defaults
        /// to the standard report components, or all components of B_{2k+1}.
        #[arg(long = "component", value_parser = parse_component)]
        components: Vec<(u32, u32, u32)>,
        #[arg(long, value_parser = parse_range, default_value = "0,2", allow_hyphen_values = true)]
        range: (f64, f64),
        #[arg(long, default_value_t = 201)]
        count: usize,
        /// Directory for one CSV file per component; stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Point {
    #[arg(long)]
    spin: Option<Spin>,
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, conflicts_with = "a")]
    g: Option<[Rational; 3]>,
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    a: Option<[Rational; 3]>,
}

impl Point {
    fn resolve(&self) -> anyhow::Result<Option<(Spin, [Rational; 3])>> {
        let g = match (&self.g, &self.a) {
            (Some(g), _) => Some(g.clone()),
            (None, Some(a)) => Some(params_from_a_rational(a)),
            (None, None) => None,
        };
        match (self.spin, g) {
            (Some(s), Some(g)) => Ok(Some((s, g))),
            (None, None) => Ok(None),
            _ => bail!("--spin and one of --g/--a must be given together"),
        }
    }
}

fn parse_triple(text: &str) -> Result<[Rational; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated rationals, got `{text}`"));
    }
    let mut out = parts.iter().map(|p| parse_rational(p).map_err(|e| e.to_string()));
    Ok([out.next().unwrap()?, out.next().unwrap()?, out.next().unwrap()?])
}

fn parse_component(text: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<u32> = text.split(',').map(|p| p.trim().parse().map_err(|_| format!("bad exponent in `{text}`"))).collect::<Result<_, _>>()?;
    match parts[..] {
        [p, q, r] => Ok((p, q, r)),
        _ => Err(format!("expected p,q,r, got `{text}`")),
    }
}

fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = text.split_once(',').ok_or_else(|| format!("expected lo,hi, got `{text}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad bound `{lo}`"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad bound `{hi}`"))?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!("invalid range `{text}`"));
    }
    Ok((lo, hi))
}

fn cmd_ebp(k: usize, point: &Point, format: OutputFormat) -> anyhow::Result<()> {
    let b = elliptic_bernoulli(k);
    match point.resolve()? {
        None => println!("{}", render::poly(&b.poly, format)?),
        Some((spin, g)) => {
            let value = b.evaluate(&spin.value(), &g);
            match format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "k": k,
                        "index": 2 * k + 1,
                        "spin": spin.to_string(),
                        "g": g.iter().map(render::rational).collect::<Vec<_>>(),
                        "value": render::rational(&value),
                    }))?
                ),
                _ => println!("{value}"),
            }
        }
    }
    Ok(())
}

fn cmd_lame(k: Option<usize>, reduced: bool, point: &Point, format: OutputFormat) -> anyhow::Result<()> {
    if let Some((spin, g)) = point.resolve()? {
        let k = k.unwrap_or(spin.dimension()).max(spin.dimension());
        let r = lame_coefficients(k, reduced).spectral_polynomial(spin, &g)?;
        println!("{}", render::poly(&r, format)?);
        return Ok(());
    }
    let k = k.context("--k is required unless --spin and --g are given")?;
    let coeffs = lame_coefficients(k, reduced);
    match format {
        OutputFormat::Json => {
            let list: Vec<_> = (1..=k).map(|i| json!({ "k": i, "b": render::poly_json(&coeffs.b[i]) })).collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "reduced": reduced, "coefficients": list }))?);
        }
        _ => {
            for i in 1..=k {
                println!("b{i} = {}", render::poly(&coeffs.b[i], format)?);
            }
        }
    }
    Ok(())
}

fn cmd_spectrum(spin: Spin, a: [Rational; 3], tol: Option<f64>, format: OutputFormat) -> anyhow::Result<()> {
    let model = SpinMatrixModel::new(spin, a);
    let cp = char_poly_exact(&model).rename(&[(Var::Lambda, Var::E)]);
    let ev = match tol {
        Some(t) => eigenvalues_numeric(&model, Some(t))?,
        None => eigenvalues_polished(&model)?,
    };
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "spin": spin.to_string(),
                "a": model.a().iter().map(render::rational).collect::<Vec<_>>(),
                "g": model.g().iter().map(render::rational).collect::<Vec<_>>(),
                "exact_char_poly": cp.to_string(),
                "char_poly_terms": render::poly_json(&cp)["terms"],
                "eigenvalues": ev,
            }))?
        ),
        OutputFormat::Text => {
            println!("{cp}");
            println!("{}", ev.iter().map(|x| format!("{x:.17e}")).collect::<Vec<_>>().join(" "));
        }
        other => bail!("spectrum supports json and text output, not {other}"),
    }
    Ok(())
}

fn csv(curve: &NormalizedCurve) -> String {
    let mut out = String::from("s,value,sin_ref\n");
    for (s, v, r) in curve.rows() {
        out.push_str(&format!("{s},{v},{r}\n"));
    }
    out
}

fn cmd_figure_data(
    k: usize,
    components: Vec<(u32, u32, u32)>,
    range: (f64, f64),
    count: usize,
    out: Option<PathBuf>,
) -> anyhow::Result<()> {
    let components = if !components.is_empty() {
        components
    } else {
        let standard: Vec<_> = report_components(k).into_iter().filter(|c| c.0 == k).map(|c| c.1).collect();
        if standard.is_empty() {
            elliptic_bernoulli(k).g_components().into_keys().collect()
        } else {
            standard
        }
    };
    let curves = components
        .iter()
        .map(|&c| normalized_component_curve(k, c, range, count))
        .collect::<Result<Vec<_>, _>>()?;
    match out {
        Some(dir) => {
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            for c in &curves {
                let (p, q, r) = c.monomial;
                let path = dir.join(format!("B{}_g1-{p}_g2-{q}_g3-{r}.csv", 2 * k + 1));
                fs::write(&path, csv(c)).with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
        }
        None => {
            if curves.len() != 1 {
                bail!("{} components requested; pass --out DIR or a single --component", curves.len());
            }
            print!("{}", csv(&curves[0]));
        }
    }
    Ok(())
}

fn cmd_verify(config: RunConfig) -> anyhow::Result<bool> {
    let format = config.output_format;
    let seed = config.rng_seed;
    let ctx = Context::new(config)?;
    let results = run_all(&ctx);
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&render::suites_json(seed, &results))?),
        OutputFormat::Text => print!("{}", render_text(&results)),
        other => bail!("verify supports text and json output, not {other}"),
    }
    Ok(results.iter().all(|r| r.passed()))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Ebp { k, point, format } => cmd_ebp(k, &point, format)?,
        Command::LameCoeffs { k, reduced, point, format } => cmd_lame(k, reduced, &point, format)?,
        Command::Spectrum { spin, a, tol, format } => cmd_spectrum(spin, a, tol, format)?,
        Command::FigureData { k, components, range, count, out } => cmd_figure_data(k, components, range, count, out)?,
        Command::Verify { k, spin, trials, seed, tol, format, corrupt_fixture } => {
            if !(tol.is_finite() && tol > 0.0) {
                bail!("--tol must be positive and finite");
            }
            return cmd_verify(RunConfig {
                max_k: k,
                max_spin: spin,
                trials,
                rng_seed: seed,
                output_format: format,
                tolerance: tol,
                corrupt_fixture,
            });
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
