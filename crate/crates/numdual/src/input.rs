//! Text grammar for polynomial systems, points and options.
//!
//! A system file has sections `vars:`, `point:`, `tolerance:`, `order:`,
//! `max_degree:` and `gens:`; everything after `gens:` is one generator per
//! line. Polynomials are written over `+ - * ^` with parentheses,
//! integer/decimal/scientific literals and the imaginary unit `i` (the
//! spelling `ii` is also accepted); implicit multiplication is not allowed.
//! Lines starting with `#` are comments.

use std::fmt;

use num_traits::Zero;

use crate::monomial::Monomial;
use crate::order::Tiebreak;
use crate::poly::Polynomial;
use crate::scalar::{Scalar, C64};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, message: message.into() })
}

/// A parsed polynomial system with its point, tolerance and options.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub variables: Vec<String>,
    pub generators: Vec<Polynomial<C64>>,
    pub point: Vec<C64>,
    pub tolerance: f64,
    pub tiebreak: Tiebreak,
    pub max_degree_override: Option<u32>,
}

#[derive(Clone, PartialEq, Debug)]
enum Token {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
struct Spanned {
    token: Token,
    col: usize,
}

fn lex(text: &str, line: usize) -> Result<Vec<Spanned>, ParseError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Spanned { token: Token::Plus, col });
                i += 1;
            }
            '-' => {
                out.push(Spanned { token: Token::Minus, col });
                i += 1;
            }
            '*' => {
                out.push(Spanned { token: Token::Star, col });
                i += 1;
            }
            '^' => {
                out.push(Spanned { token: Token::Caret, col });
                i += 1;
            }
            '(' => {
                out.push(Spanned { token: Token::LParen, col });
                i += 1;
            }
            ')' => {
                out.push(Spanned { token: Token::RParen, col });
                i += 1;
            }
            ',' => {
                out.push(Spanned { token: Token::Comma, col });
                i += 1;
            }
            _ if c.is_ascii_digit() || (c == '.' && i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit()) => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == '.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == 'e' || bytes[i] == 'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == '+' || bytes[j] == '-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text: String = bytes[start..i].iter().collect();
                out.push(Spanned { token: Token::Number(text), col });
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                out.push(Spanned { token: Token::Ident(text), col });
            }
            _ => return err(line, col, format!("unexpected character '{}'", c)),
        }
    }
    Ok(out)
}

struct Parser<'a, S> {
    tokens: Vec<Spanned>,
    pos: usize,
    line: usize,
    variables: &'a [String],
    _scalar: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn new(tokens: Vec<Spanned>, line: usize, variables: &'a [String]) -> Self {
        Parser { tokens, pos: 0, line, variables, _scalar: std::marker::PhantomData }
    }

    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_col(&self) -> usize {
        self.tokens.last().map(|t| t.col + 1).unwrap_or(1)
    }

    fn expr(&mut self) -> Result<Polynomial<S>, ParseError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t.token {
                Token::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<S>, ParseError> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            match t.token {
                Token::Star => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<S>, ParseError> {
        match self.peek().map(|t| t.token.clone()) {
            Some(Token::Minus) => {
                self.next();
                Ok(self.factor()?.neg())
            }
            Some(Token::Plus) => {
                self.next();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<S>, ParseError> {
        let base = self.primary()?;
        if let Some(t) = self.peek() {
            if t.token == Token::Caret {
                let caret = self.next().unwrap();
                let Some(exp_tok) = self.next() else {
                    return err(self.line, caret.col + 1, "expected exponent after '^'");
                };
                let Token::Number(text) = &exp_tok.token else {
                    return err(self.line, exp_tok.col, "exponent must be a non-negative integer");
                };
                if text.contains('.') || text.contains('e') || text.contains('E') {
                    return err(self.line, exp_tok.col, "exponent must be a non-negative integer");
                }
                let e: u32 = match text.parse() {
                    Ok(e) => e,
                    Err(_) => return err(self.line, exp_tok.col, "exponent out of range"),
                };
                if e > 512 {
                    return err(self.line, exp_tok.col, "exponent exceeds the supported limit of 512");
                }
                return Ok(base.pow(e));
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial<S>, ParseError> {
        let nvars = self.variables.len();
        let Some(t) = self.next() else {
            return err(self.line, self.end_col(), "unexpected end of expression");
        };
        match &t.token {
            Token::Number(text) => match S::from_decimal(text) {
                Some(c) => Ok(Polynomial::constant(nvars, c)),
                None => err(self.line, t.col, format!("invalid numeric literal '{}'", text)),
            },
            Token::Ident(name) => {
                if let Some(idx) = self.variables.iter().position(|v| v == name) {
                    Ok(Polynomial::variable(nvars, idx))
                } else if name == "i" || name == "ii" {
                    match S::imaginary_unit() {
                        Some(im) => Ok(Polynomial::constant(nvars, im)),
                        None => err(
                            self.line,
                            t.col,
                            "the imaginary unit is not available in this scalar field",
                        ),
                    }
                } else {
                    err(self.line, t.col, format!("unknown variable '{}'", name))
                }
            }
            Token::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Spanned { token: Token::RParen, .. }) => Ok(inner),
                    Some(other) => err(self.line, other.col, "expected ')'"),
                    None => err(self.line, self.end_col(), "expected ')'"),
                }
            }
            _ => err(self.line, t.col, "expected a number, variable or '('"),
        }
    }
}

/// Parses a single polynomial expression over the given variables.
pub fn parse_polynomial<S: Scalar>(
    text: &str,
    variables: &[String],
    line: usize,
) -> Result<Polynomial<S>, ParseError> {
    let tokens = lex(text, line)?;
    if tokens.is_empty() {
        return err(line, 1, "empty expression");
    }
    let mut parser = Parser::<S>::new(tokens, line, variables);
    let poly = parser.expr()?;
    if let Some(t) = parser.peek() {
        return err(line, t.col, "unexpected trailing input");
    }
    Ok(poly)
}

/// Splits a comma-separated list of expressions at the top level.
fn split_top_level(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    parts.push(current);
    parts
}

/// Evaluates a constant expression into a scalar.
fn parse_scalar(text: &str, line: usize) -> Result<C64, ParseError> {
    let poly = parse_polynomial::<C64>(text, &[], line)?;
    Ok(poly.coefficient(&Monomial::one(0)))
}

/// Parses a comma-separated list of constant expressions, e.g. a point
/// given on the command line.
pub fn parse_point(text: &str) -> Result<Vec<C64>, ParseError> {
    let mut coords = Vec::new();
    for part in split_top_level(text) {
        if part.trim().is_empty() {
            return err(1, 1, "empty point coordinate");
        }
        coords.push(parse_scalar(&part, 1)?);
    }
    Ok(coords)
}

/// Parses a full system description.
pub fn parse_system(text: &str) -> Result<SystemSpec, ParseError> {
    let mut variables: Option<Vec<String>> = None;
    let mut point: Option<Vec<C64>> = None;
    let mut tolerance = 1e-4;
    let mut tiebreak = Tiebreak::Lex;
    let mut max_degree_override = None;
    let mut generator_lines: Vec<(usize, String)> = Vec::new();
    let mut in_gens = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if in_gens {
            generator_lines.push((line_no, line.to_string()));
            continue;
        }
        let Some(colon) = line.find(':') else {
            return err(line_no, 1, "expected a section header such as 'vars:' or 'gens:'");
        };
        let (key, rest) = line.split_at(colon);
        let rest = &rest[1..];
        match key.trim() {
            "vars" => {
                let names: Vec<String> = rest
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                if names.is_empty() {
                    return err(line_no, colon + 2, "expected at least one variable name");
                }
                for name in &names {
                    let mut chars = name.chars();
                    let head_ok = chars.next().map_or(false, |c| c.is_ascii_alphabetic() || c == '_');
                    if !head_ok || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return err(line_no, colon + 2, format!("invalid variable name '{}'", name));
                    }
                }
                let mut deduped = names.clone();
                deduped.sort();
                deduped.dedup();
                if deduped.len() != names.len() {
                    return err(line_no, colon + 2, "duplicate variable name");
                }
                variables = Some(names);
            }
            "point" => {
                let mut coords = Vec::new();
                for part in split_top_level(rest) {
                    if part.trim().is_empty() {
                        return err(line_no, colon + 2, "empty point coordinate");
                    }
                    coords.push(parse_scalar(&part, line_no)?);
                }
                point = Some(coords);
            }
            "tolerance" => {
                let value = parse_scalar(rest, line_no)?;
                if value.im != 0.0 || value.re <= 0.0 {
                    return err(line_no, colon + 2, "tolerance must be a positive real number");
                }
                tolerance = value.re;
            }
            "order" => match rest.trim() {
                "alex" => tiebreak = Tiebreak::Lex,
                "arevlex" => tiebreak = Tiebreak::RevLex,
                other => {
                    return err(line_no, colon + 2, format!("unknown order '{}' (expected alex or arevlex)", other))
                }
            },
            "max_degree" => {
                let trimmed = rest.trim();
                match trimmed.parse::<u32>() {
                    Ok(v) => max_degree_override = Some(v),
                    Err(_) => return err(line_no, colon + 2, "max_degree must be a non-negative integer"),
                }
            }
            "gens" => {
                if !rest.trim().is_empty() {
                    generator_lines.push((line_no, rest.trim().to_string()));
                }
                in_gens = true;
            }
            other => return err(line_no, 1, format!("unknown section '{}'", other)),
        }
    }

    let Some(variables) = variables else {
        return err(1, 1, "missing 'vars:' section");
    };
    if generator_lines.is_empty() {
        return err(1, 1, "missing generators: add a 'gens:' section");
    }

    let mut generators = Vec::new();
    for (line_no, src) in &generator_lines {
        generators.push(parse_polynomial::<C64>(src, &variables, *line_no)?);
    }

    let point = match point {
        None => vec![C64::zero(); variables.len()],
        Some(p) => {
            if p.len() != variables.len() {
                return err(
                    1,
                    1,
                    format!("point has {} coordinates but there are {} variables", p.len(), variables.len()),
                );
            }
            p
        }
    };

    Ok(SystemSpec {
        variables,
        generators,
        point,
        tolerance,
        tiebreak,
        max_degree_override,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::LocalOrder;
    use crate::scalar::Q;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_simple_polynomial() {
        let v = vars(&["x", "y"]);
        let p = parse_polynomial::<Q>("x^2 - x*y^3", &v, 1).unwrap();
        let order = LocalOrder::antigraded_lex(2);
        assert_eq!(p.lead_monomial(&order), Some(&Monomial::new(vec![2, 0])));
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&Monomial::new(vec![1, 3])), Q::from_int(-1));
    }

    #[test]
    fn parse_session_style_complex_literal() {
        let c = parse_scalar("-1.0-.53734e-17*i", 1).unwrap();
        assert!((c.re + 1.0).abs() < 1e-15);
        assert!((c.im + 0.53734e-17).abs() < 1e-30);
        let c2 = parse_scalar("1.0+2*ii", 1).unwrap();
        assert_eq!(c2.im, 2.0);
    }

    #[test]
    fn positioned_errors() {
        let v = vars(&["x"]);
        let e = parse_polynomial::<Q>("x^2 +", &v, 3).unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.col, 6);

        let e = parse_polynomial::<Q>("x + z", &v, 1).unwrap_err();
        assert!(e.message.contains("unknown variable"));
        assert_eq!(e.col, 5);

        // implicit multiplication is rejected
        let e = parse_polynomial::<Q>("2 x", &v, 1).unwrap_err();
        assert_eq!(e.col, 3);

        // the imaginary unit needs a complex field
        let e = parse_polynomial::<Q>("x + i", &v, 1).unwrap_err();
        assert!(e.message.contains("imaginary"));
    }

    #[test]
    fn parse_full_system() {
        let text = "\
# main example
vars: x, y
tolerance: 1e-6
gens:
x^2 - x*y^3
x^4
";
        let spec = parse_system(text).unwrap();
        assert_eq!(spec.variables, vars(&["x", "y"]));
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(spec.tolerance, 1e-6);
        assert_eq!(spec.point, vec![C64::zero(), C64::zero()]);
        assert_eq!(spec.tiebreak, Tiebreak::Lex);
    }

    #[test]
    fn parse_point_and_arity_mismatch() {
        let text = "\
vars: x, y
point: 1, -1, 0
gens:
x
";
        let e = parse_system(text).unwrap_err();
        assert!(e.message.contains("coordinates"));
    }

    #[test]
    fn round_trip_terms() {
        let v = vars(&["x", "y"]);
        let order = LocalOrder::antigraded_lex(2);
        let p = parse_polynomial::<Q>("x^2 - x*y^3 + 7*y - 1", &v, 1).unwrap();
        let printed = p.format(&v, &order);
        let reparsed = parse_polynomial::<Q>(&printed, &v, 1).unwrap();
        assert_eq!(p, reparsed);
    }
}
