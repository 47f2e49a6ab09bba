//! LaTeX rendering.
//!
//! [`to_latex`] prints the expanded canonical form. [`to_latex_factored`]
//! groups terms by their monomial in the non-`s` variables and presents each
//! `s`-polynomial as content, linear factors with integer or half-integer
//! roots, and an expanded residual, e.g. `\frac{1}{12} g_1 s(s+1)(2s+1)`.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::{One, Signed, Zero};

use super::poly::{split_sign, Monomial, MultiPoly, Var};
use super::rational::{rat, Rational};
use super::univariate::UniPoly;

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_power(base: &str, e: u32) -> String {
    match e {
        1 => base.to_string(),
        e if e < 10 => format!("{base}^{e}"),
        e => format!("{base}^{{{e}}}"),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    m.factors()
        .map(|(v, e)| latex_power(v.latex(), e))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Expanded LaTeX in canonical term order.
pub fn to_latex(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let (neg, abs) = split_sign(c);
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if m.is_one() {
            out.push_str(&latex_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&latex_monomial(m));
        } else {
            let _ = write!(out, "{} {}", latex_rational(&abs), latex_monomial(m));
        }
    }
    out
}

/// Integer-coefficient polynomial in `s`, descending, compact: `3s^2+3s-1`.
fn latex_integer_poly(p: &UniPoly, var: &str) -> String {
    let mut out = String::new();
    let coeffs = p.coeffs();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, abs) = split_sign(c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let show_coef = i == 0 || !abs.is_one();
        if show_coef {
            out.push_str(&latex_rational(&abs));
        }
        if i > 0 {
            out.push_str(&latex_power(var, i as u32));
        }
    }
    out
}

/// Root candidates for factor extraction: integers and half-integers in
/// `[-6, 6]`.
fn candidate_roots() -> Vec<Rational> {
    (-12..=12).rev().map(|t| rat(t, 2)).collect()
}

/// A linear factor `(q s - p)` with `q ∈ {1, 2}` and its multiplicity.
struct LinearFactor {
    root: Rational,
    multiplicity: u32,
}

impl LinearFactor {
    fn poly(root: &Rational) -> UniPoly {
        let q = Rational::from_integer(root.denom().clone());
        UniPoly::linear(q.clone(), -(root * q))
    }

    fn render(&self, var: &str) -> String {
        let body = if self.root.is_zero() {
            var.to_string()
        } else {
            let q = self.root.denom();
            let p = self.root.numer();
            let lead = if q.is_one() { var.to_string() } else { format!("{q}{var}") };
            let sign = if p.is_positive() { '-' } else { '+' };
            format!("({lead}{sign}{})", p.abs())
        };
        if self.multiplicity > 1 {
            format!("{body}^{}", self.multiplicity)
        } else {
            body
        }
    }
}

/// Splits an `s`-polynomial into content, linear factors and residual.
fn factor_univariate(p: &UniPoly) -> (Rational, Vec<LinearFactor>, UniPoly) {
    let (mut residual, content) = p.primitive();
    let mut factors = Vec::new();
    for root in candidate_roots() {
        let lin = LinearFactor::poly(&root);
        let mut multiplicity = 0;
        while residual.degree().unwrap_or(0) >= 1 && residual.eval(&root).is_zero() {
            residual = residual.div_rem(&lin).0;
            multiplicity += 1;
        }
        if multiplicity > 0 {
            factors.push(LinearFactor { root, multiplicity });
        }
    }
    // Integer roots first, then half-integer roots; each group by root descending.
    factors.sort_by(|a, b| {
        let ha = !a.root.is_integer();
        let hb = !b.root.is_integer();
        ha.cmp(&hb).then(b.root.cmp(&a.root))
    });
    let (residual, extra) = residual.primitive();
    (content * extra, factors, residual)
}

/// Factored LaTeX of a polynomial in `var` whose coefficients may involve
/// other variables (grouped by their monomial, highest first).
pub fn to_latex_factored(p: &MultiPoly, var: Var) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut groups: BTreeMap<Monomial, Vec<(u32, Rational)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponent(var);
        groups.entry(m.with_exponent(var, 0)).or_default().push((e, c.clone()));
    }
    let vname = var.latex();
    let mut out = String::new();
    for (i, (rest, coeffs)) in groups.iter().rev().enumerate() {
        let deg = coeffs.iter().map(|(e, _)| *e).max().unwrap_or(0) as usize;
        let mut dense = vec![Rational::zero(); deg + 1];
        for (e, c) in coeffs {
            dense[*e as usize] = c.clone();
        }
        let (content, factors, residual) = factor_univariate(&UniPoly::new(dense));
        let (neg, abs) = split_sign(&content);
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let mut pieces: Vec<String> = Vec::new();
        if !abs.is_one() {
            pieces.push(latex_rational(&abs));
        }
        if !rest.is_one() {
            pieces.push(latex_monomial(rest));
        }
        let residual_is_one = residual.degree() == Some(0) && residual.leading().is_one();
        let mut body: String = factors.iter().map(|f| f.render(vname)).collect();
        if !residual_is_one {
            body.push_str(&format!("({})", latex_integer_poly(&residual, vname)));
        }
        // A lone first-degree factor reads better without parentheses.
        if pieces.is_empty() && residual_is_one && factors.len() == 1 && factors[0].multiplicity == 1 {
            let lin = LinearFactor::poly(&factors[0].root);
            body = latex_integer_poly(&lin, vname);
        }
        if !body.is_empty() {
            pieces.push(body);
        }
        if pieces.is_empty() {
            pieces.push("1".into());
        }
        out.push_str(&pieces.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn factored_b3() {
        assert_eq!(
            to_latex_factored(&p("1/12 g1 s(s+1)(2s+1)"), Var::S),
            "\\frac{1}{12} g_1 s(s+1)(2s+1)"
        );
    }

    #[test]
    fn factored_b1_and_residuals() {
        assert_eq!(to_latex_factored(&p("2s+1"), Var::S), "2s+1");
        assert_eq!(
            to_latex_factored(&p("1/240 g1^2 s(s+1)(2s+1)(3s^2+3s-1)"), Var::S),
            "\\frac{1}{240} g_1^2 s(s+1)(2s+1)(3s^2+3s-1)"
        );
        assert_eq!(
            to_latex_factored(&p("-1/840 g3 s^2(s+1)^2(2s-3)"), Var::S),
            "-\\frac{1}{840} g_3 s^2(s+1)^2(2s-3)"
        );
    }

    #[test]
    fn expanded_form() {
        assert_eq!(to_latex(&p("-1/2 s^10 + g1")), "-\\frac{1}{2} s^{10} + g_1");
    }
}
