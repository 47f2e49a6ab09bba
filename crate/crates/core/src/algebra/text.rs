//! Canonical text form of [`MultiPoly`] and a parser for it.
//!
//! Printing: terms in descending canonical order (exponent vectors compared
//! lexicographically in the order `s, n, a1, a2, a3, g1, g2, g3, lambda, E,
//! x, xi`), each written as `coef*var^exp*var^exp`. A unit coefficient is
//! omitted, exponent 1 is omitted, coefficients are `p` or `p/q`, and terms
//! are joined with ` + ` / ` - `. The zero polynomial prints as `0`.
//!
//! Parsing accepts a superset of the printed form:
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := factor (('*' factor) | ('/' number) | factor)*   -- juxtaposition multiplies
//! factor := atom ('^' integer)?
//! atom   := number | variable | '(' expr ')'
//! number := digits ('/' digits)?
//! ```
//!
//! so factored forms such as `1/12 g1 s(s+1)(2s+1)` are accepted as well.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{split_sign, Monomial, MultiPoly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

fn write_monomial(f: &mut impl fmt::Write, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (v, e) in m.factors() {
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(v.name())?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let (neg, abs) = split_sign(c);
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write_monomial(f, m)?;
            } else {
                write!(f, "{abs}*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser::new(s)?;
        let p = parser.expr()?;
        if let Some(tok) = parser.peek() {
            return Err(parser.error(tok.offset, "unexpected trailing input"));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Integer(BigInt),
    Ident(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    offset: usize,
}

struct Parser<'a> {
    source: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

fn lex(source: &str) -> Result<Vec<Token>> {
    let err = |offset: usize, message: String| Error::Parse { offset, message };
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = source.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' => {
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i).map_or(source.len(), |x| x.0);
                let n: BigInt = source[off..end].parse().map_err(|_| err(off, "bad integer".into()))?;
                if chars.get(i).is_some_and(|x| x.1 == '.') {
                    return Err(err(chars[i].0, "decimal literals are not exact; write p/q".into()));
                }
                out.push(Token {
                    kind: Kind::Integer(n),
                    offset: off,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = off;
                i += 1;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let end = chars.get(i).map_or(source.len(), |x| x.0);
                let raw = &source[start..end];
                let var = Var::from_name(raw)
                    .or_else(|| Var::from_name(&raw.replace('_', "")))
                    .ok_or_else(|| err(start, format!("unknown variable `{raw}`")))?;
                out.push(Token {
                    kind: Kind::Ident(var),
                    offset: start,
                });
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                let kind = match c {
                    '+' => Kind::Plus,
                    '-' => Kind::Minus,
                    '*' => Kind::Star,
                    '/' => Kind::Slash,
                    '^' => Kind::Caret,
                    '(' => Kind::LParen,
                    _ => Kind::RParen,
                };
                out.push(Token { kind, offset: off });
                i += 1;
            }
            other => return Err(err(off, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn new(source: &'a str) -> Result<Self> {
        Ok(Parser {
            source,
            tokens: lex(source)?,
            pos: 0,
        })
    }

    fn error(&self, offset: usize, message: &str) -> Error {
        Error::Parse {
            offset,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn end_offset(&self) -> usize {
        self.source.len()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero();
        let mut negate = false;
        match self.peek().map(|t| &t.kind) {
            Some(Kind::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Kind::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            if negate {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek().map(|t| &t.kind) {
                Some(Kind::Plus) => negate = false,
                Some(Kind::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_atom(kind: &Kind) -> bool {
        matches!(kind, Kind::Integer(_) | Kind::Ident(_) | Kind::LParen)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|t| t.kind.clone()) {
                Some(Kind::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Kind::Slash) => {
                    let off = self.peek().unwrap().offset;
                    self.pos += 1;
                    let d = match self.next().map(|t| t.kind) {
                        Some(Kind::Integer(n)) => Rational::from_integer(n),
                        _ => return Err(self.error(off, "only division by a number is supported")),
                    };
                    if d.is_zero() {
                        return Err(self.error(off, "division by zero"));
                    }
                    acc = acc.scale(&d.recip());
                }
                Some(k) if Self::starts_atom(&k) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek().is_some_and(|t| t.kind == Kind::Caret) {
            let off = self.peek().unwrap().offset;
            self.pos += 1;
            let exp = match self.next().map(|t| t.kind) {
                Some(Kind::Integer(n)) => u32::try_from(n).map_err(|_| self.error(off, "exponent too large"))?,
                _ => return Err(self.error(off, "exponent must be a non-negative integer")),
            };
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let end = self.end_offset();
        let tok = self.next().ok_or_else(|| self.error(end, "unexpected end of input"))?;
        match tok.kind {
            Kind::Integer(n) => Ok(MultiPoly::constant(Rational::from_integer(n))),
            Kind::Ident(v) => Ok(MultiPoly::var(v)),
            Kind::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token { kind: Kind::RParen, .. }) => Ok(inner),
                    _ => Err(self.error(tok.offset, "unbalanced parenthesis")),
                }
            }
            Kind::Minus => {
                // Unary minus inside a product, e.g. `2*-s`.
                let f = self.factor()?;
                Ok(-f)
            }
            _ => Err(self.error(tok.offset, "expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn prints_canonically() {
        assert_eq!(p("1 + 2*s").to_string(), "2*s + 1");
        assert_eq!(p("(E-3)(E-4)(E-5)").to_string(), "E^3 - 12*E^2 + 47*E - 60");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(p("-s").to_string(), "-s");
        assert_eq!(p("1/12 g1 s").to_string(), "1/12*s*g1");
    }

    #[test]
    fn parses_factored_forms() {
        let b3 = p("1/12 g1 s(s+1)(2s+1)");
        let pt = [(Var::S, int(1)), (Var::G1, int(24))];
        assert_eq!(b3.evaluate_rational(&pt), int(12));
        assert_eq!(p("g1/4"), p("1/4*g1"));
        assert_eq!(p("2^3"), MultiPoly::from_int(8));
        assert_eq!(p("-(s+1)^2"), -p("s^2 + 2s + 1"));
        assert_eq!(p("lambda - 1/2"), p("λ - 1/2"));
        assert_eq!(p("g_2"), MultiPoly::var(Var::G2));
        assert_eq!(p("3/2").as_constant(), Some(rat(3, 2)));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        for (src, off) in [("s + q", 4), ("(s+1", 0), ("s^-1", 1), ("1.5*s", 1), ("s/g1", 1)] {
            match src.parse::<MultiPoly>() {
                Err(Error::Parse { offset, .. }) => assert_eq!(offset, off, "{src}"),
                other => panic!("{src}: {other:?}"),
            }
        }
    }

    #[test]
    fn round_trip_of_printed_form() {
        let q = p("1/240 g1^2 s(s+1)(2s+1)(3s^2+3s-1) + 1/60 g2 s(s+1)(2s-1)(2s+1)(2s+3)");
        assert_eq!(p(&q.to_string()), q);
    }
}
