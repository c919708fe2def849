//! Text syntax for polynomials, points and parameter lists.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | base ('^' nat)?
//! base     := rational | var | '(' expr ')'
//! var      := 'z' nat            (1-based)
//! rational := int ('/' nat)?
//! ```
//!
//! There is no implicit multiplication: `z1z2` is rejected. A leading minus
//! binds looser than `^`, so `-z1^2` is `-(z1^2)`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Polynomial, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at byte {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("at byte {position}: unknown variable `{name}`")]
    UnknownVariable { position: usize, name: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownVariable { position, .. } => {
                *position
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            let found = text[i..].chars().next().expect("in bounds");
            return Err(ParseError::Syntax {
                position: i,
                expected: "a number, variable, operator or parenthesis".into(),
                found: format!("`{found}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// How identifiers map to variables.
#[derive(Clone, Copy)]
enum Scheme {
    /// `z1 … zn`.
    Indexed,
    /// The single variable `t`.
    Parameter,
}

impl Scheme {
    /// 0-based index of a variable name.
    fn resolve(self, name: &str) -> Option<usize> {
        match self {
            Scheme::Indexed => {
                let digits = name.strip_prefix('z')?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                let k: usize = digits.parse().ok()?;
                k.checked_sub(1)
            }
            Scheme::Parameter => (name == "t").then_some(0),
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    var_count: usize,
    scheme: Scheme,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            position: self.offset(),
            expected: expected.into(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if *self.peek() == Tok::Sym('^') {
            self.bump();
            let e = self.nat("a non-negative integer exponent")?;
            let e = u32::try_from(&e).map_err(|_| ParseError::Syntax {
                position: self.toks[self.pos - 1].0,
                expected: "an exponent below 2^32".into(),
                found: format!("`{e}`"),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn nat(&mut self, expected: &str) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(expected)),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Sym('/') {
                    self.bump();
                    let at = self.offset();
                    let d = self.nat("a denominator")?;
                    if d.is_zero() {
                        return Err(ParseError::Syntax {
                            position: at,
                            expected: "a nonzero denominator".into(),
                            found: "`0`".into(),
                        });
                    }
                    value /= Rational::from_integer(d);
                }
                Ok(Polynomial::constant(self.var_count, value))
            }
            Tok::Ident(name) => {
                let index = self
                    .scheme
                    .resolve(&name)
                    .expect("validated before parsing");
                self.bump();
                Ok(Polynomial::var(self.var_count, Var::from_index(index)))
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::Sym(')') {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a number, variable or `(`")),
        }
    }
}

fn parse_with(
    text: &str,
    scheme: Scheme,
    var_count: Option<usize>,
) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut max_index = None;
    for (position, tok) in &toks {
        if let Tok::Ident(name) = tok {
            let unknown = || ParseError::UnknownVariable {
                position: *position,
                name: name.clone(),
            };
            let index = scheme.resolve(name).ok_or_else(unknown)?;
            if var_count.is_some_and(|n| index >= n) {
                return Err(unknown());
            }
            max_index = max_index.max(Some(index));
        }
    }
    let var_count = var_count.unwrap_or_else(|| max_index.map_or(1, |i| i + 1));
    let mut parser = Parser {
        toks,
        pos: 0,
        var_count,
        scheme,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(poly)
}

/// Parses a polynomial in `z1, …, zn`. Without `var_count`, `n` is the largest
/// variable index that occurs (1 for constants).
pub fn parse_poly(text: &str, var_count: Option<usize>) -> Result<Polynomial, ParseError> {
    parse_with(text, Scheme::Indexed, var_count)
}

/// Parses a polynomial in the curve parameter `t`.
pub fn parse_curve_coordinate(text: &str) -> Result<Polynomial, ParseError> {
    parse_with(text, Scheme::Parameter, Some(1))
}

/// Canonical text of a polynomial; [`parse_poly`] reads it back unchanged.
pub fn format_poly(f: &Polynomial) -> String {
    f.to_string()
}

/// A signed rational literal such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (negative, body, body_offset) = match t.strip_prefix('-') {
        Some(rest) => (true, rest, offset + 1),
        None => (false, t, offset),
    };
    let bad = |expected: &str| ParseError::Syntax {
        position: body_offset,
        expected: expected.into(),
        found: format!("`{body}`"),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return Err(bad("a rational number like 3, -1/2"));
    }
    let den: BigInt = den.parse().expect("digits");
    if den.is_zero() {
        return Err(bad("a nonzero denominator"));
    }
    let value = Rational::new(num.parse().expect("digits"), den);
    Ok(if negative { -value } else { value })
}

/// Comma-separated rationals, as in `--point 1,0,-1/2`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_rational(piece).map_err(|e| shift_error(e, offset))?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Comma-separated curve coordinates in `t`, as in `--curve "t^2,t^3"`.
pub fn parse_curve(text: &str) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_curve_coordinate(piece).map_err(|e| shift_error(e, offset))?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Parses `zk` into a variable.
pub fn parse_var(text: &str) -> Result<Var, ParseError> {
    Scheme::Indexed
        .resolve(text.trim())
        .map(Var::from_index)
        .ok_or_else(|| ParseError::UnknownVariable {
            position: 0,
            name: text.to_string(),
        })
}

fn shift_error(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Syntax {
            position,
            expected,
            found,
        } => ParseError::Syntax {
            position: position + by,
            expected,
            found,
        },
        ParseError::UnknownVariable { position, name } => ParseError::UnknownVariable {
            position: position + by,
            name,
        },
    }
}
