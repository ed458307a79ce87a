//! Parser for the polynomial input language.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := scalar | var | factor '^' nat | '(' expr ')'
//! var    := 'x' digit+
//! scalar := int | int '/' posint | 'w' | 'i' | 'z5'
//! ```
//!
//! Whitespace is insignificant. A leading sign on an expression is also
//! accepted. Points are written `(a:b:...)`, permutations in 1-indexed cycle
//! notation `(1,2,3)(4,5)`, linear subspaces as comma-separated linear forms.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{FieldElement, Rational};
use crate::poly::{default_names, MultiPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("literal `{literal}` at position {pos} is not in the field Q(z{conductor})")]
    WrongField { literal: String, pos: usize, conductor: u32 },
}

/// Variables and scalar field for parsing.
#[derive(Debug, Clone)]
pub struct ParseContext {
    pub names: Vec<String>,
    pub conductor: u32,
}

impl ParseContext {
    /// Variables x0..x{n-1} over Q(ζₘ), m = conductor.
    pub fn coords(n: usize, conductor: u32) -> Self {
        ParseContext { names: default_names(n), conductor }
    }

    pub fn with_names(names: Vec<String>, conductor: u32) -> Self {
        ParseContext { names, conductor }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(s[st..i].parse().unwrap()), st));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[st..i].to_string()), st));
        } else if "+-*/^():,".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError::Syntax { pos: i, msg: format!("unexpected character `{}`", c) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ctx: &'a ParseContext,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ctx: &'a ParseContext) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(text)?, pos: 0, end: text.len(), ctx })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.here(), msg: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected `{}`", c))
        }
    }

    fn nvars(&self) -> usize {
        self.ctx.names.len()
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let mut base = self.atom()?;
        while self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| ParseError::Syntax {
                        pos: self.toks[self.pos - 1].1,
                        msg: "exponent too large".into(),
                    })?;
                    base = base.pow(e);
                }
                _ => return self.err("expected a natural number exponent"),
            }
        }
        Ok(base)
    }

    fn literal(&self, name: &str, pos: usize) -> Result<Option<FieldElement>, ParseError> {
        let (n, need) = match name {
            "w" => (3, 3),
            "i" => (4, 4),
            "z5" => (5, 5),
            _ => return Ok(None),
        };
        if !self.ctx.conductor.is_multiple_of(need) {
            return Err(ParseError::WrongField { literal: name.into(), pos, conductor: self.ctx.conductor });
        }
        Ok(Some(FieldElement::root_of_unity(n, 1)))
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.nvars();
        let Some((tok, pos)) = self.toks.get(self.pos).cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Int(num) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(den)) if !den.is_zero() => {
                            self.pos += 1;
                            Ok(MultiPoly::constant(n, FieldElement::from_rational(Rational::new(num, den))))
                        }
                        _ => self.err("expected a positive denominator"),
                    }
                } else {
                    Ok(MultiPoly::constant(n, FieldElement::from_rational(Rational::from_integer(num))))
                }
            }
            Tok::Ident(name) => {
                self.pos += 1;
                if let Some(i) = self.ctx.names.iter().position(|v| *v == name) {
                    return Ok(MultiPoly::var(n, i));
                }
                if let Some(c) = self.literal(&name, pos)? {
                    return Ok(MultiPoly::constant(n, c));
                }
                Err(ParseError::UnknownVariable { name, pos })
            }
            _ => self.err("expected a scalar, variable or `(`"),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            self.err("unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

/// Parses a polynomial expression.
pub fn parse_poly(text: &str, ctx: &ParseContext) -> Result<MultiPoly, ParseError> {
    let mut p = Parser::new(text, ctx)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a colon-separated coordinate tuple `(a:b:...)`; entries are constant expressions.
pub fn parse_point(text: &str, conductor: u32) -> Result<Vec<FieldElement>, ParseError> {
    let ctx = ParseContext::coords(0, conductor);
    let mut p = Parser::new(text, &ctx)?;
    p.expect('(')?;
    let mut coords = Vec::new();
    loop {
        let at = p.here();
        let e = p.expr()?;
        let c = e.constant_value().ok_or(ParseError::Syntax { pos: at, msg: "coordinate must be constant".into() })?;
        coords.push(c);
        if p.eat(':') {
            continue;
        }
        p.expect(')')?;
        break;
    }
    p.finish()?;
    Ok(coords)
}

/// Parses comma-separated linear forms in x0..x{n-1}; returns their coefficient rows.
pub fn parse_linear_forms(text: &str, n: usize, conductor: u32) -> Result<Vec<Vec<FieldElement>>, ParseError> {
    let ctx = ParseContext::coords(n, conductor);
    let mut p = Parser::new(text, &ctx)?;
    let mut rows = Vec::new();
    loop {
        let at = p.here();
        let e = p.expr()?;
        let row = e
            .linear_coeffs()
            .ok_or(ParseError::Syntax { pos: at, msg: "expected a linear form".into() })?;
        rows.push(row);
        if !p.eat(',') {
            break;
        }
    }
    p.finish()?;
    Ok(rows)
}

/// Parses 1-indexed cycle notation into 0-indexed images on `degree` points.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<usize>, ParseError> {
    let toks = tokenize(text)?;
    let mut images: Vec<usize> = (0..degree).collect();
    let mut seen = vec![false; degree];
    let mut i = 0;
    let syntax = |pos: usize, msg: &str| ParseError::Syntax { pos, msg: msg.into() };
    if toks.is_empty() || (toks.len() == 2 && toks[0].0 == Tok::Sym('(') && toks[1].0 == Tok::Sym(')')) {
        return Ok(images);
    }
    while i < toks.len() {
        if toks[i].0 != Tok::Sym('(') {
            return Err(syntax(toks[i].1, "expected `(`"));
        }
        i += 1;
        let mut cyc = Vec::new();
        loop {
            match toks.get(i) {
                Some((Tok::Int(v), pos)) => {
                    let v: usize = v.try_into().map_err(|_| syntax(*pos, "point out of range"))?;
                    if v == 0 || v > degree {
                        return Err(syntax(*pos, "point out of range"));
                    }
                    if seen[v - 1] {
                        return Err(syntax(*pos, "point repeated across cycles"));
                    }
                    seen[v - 1] = true;
                    cyc.push(v - 1);
                    i += 1;
                }
                Some((_, pos)) => return Err(syntax(*pos, "expected a point index")),
                None => return Err(syntax(text.len(), "unterminated cycle")),
            }
            match toks.get(i) {
                Some((Tok::Sym(','), _)) => i += 1,
                Some((Tok::Sym(')'), _)) => {
                    i += 1;
                    break;
                }
                Some((_, pos)) => return Err(syntax(*pos, "expected `,` or `)`")),
                None => return Err(syntax(text.len(), "unterminated cycle")),
            }
        }
        for k in 0..cyc.len() {
            images[cyc[k]] = cyc[(k + 1) % cyc.len()];
        }
    }
    Ok(images)
}

/// Smallest conductor containing every scalar literal used in the text.
pub fn infer_conductor(text: &str) -> u32 {
    let mut n = 1u32;
    if let Ok(toks) = tokenize(text) {
        for (t, _) in toks {
            if let Tok::Ident(s) = t {
                let need = match s.as_str() {
                    "w" => 3,
                    "i" => 4,
                    "z5" => 5,
                    _ => 1,
                };
                n = num_integer::lcm(n, need);
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_cubic() {
        let f = parse_poly("x0*x1*x2 - x3*x4*x5", &ParseContext::coords(6, 1)).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.nvars(), 6);
        assert!(f.is_homogeneous());
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let f = parse_poly("w^2 + w + 1", &ParseContext::coords(5, 3)).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn errors() {
        let ctx = ParseContext::coords(5, 1);
        assert!(matches!(parse_poly("x0 + x7", &ctx), Err(ParseError::UnknownVariable { pos: 5, .. })));
        assert!(matches!(parse_poly("w*x0", &ctx), Err(ParseError::WrongField { pos: 0, .. })));
        assert!(matches!(parse_poly("x0 + * x1", &ctx), Err(ParseError::Syntax { pos: 5, .. })));
        assert!(matches!(parse_poly("x0 x1", &ctx), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("1/0*x0", &ctx), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn fractions_and_powers() {
        let ctx = ParseContext::coords(2, 1);
        let f = parse_poly("1/2*x0^2 - (x0 - x1)^2", &ctx).unwrap();
        let g = parse_poly("-1/2*x0^2 + 2*x0*x1 - x1^2", &ctx).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn points_forms_and_cycles() {
        let p = parse_point("(1:-1:0:-1/2:w)", 3).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p[3], FieldElement::frac(-1, 2));
        let rows = parse_linear_forms("x0 + x1, x2 - 2*x3", 4, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(parse_cycles("(1,2,3)(4,5)", 6).unwrap(), vec![1, 2, 0, 4, 3, 5]);
        assert!(parse_cycles("(1,7)", 6).is_err());
        assert_eq!(infer_conductor("x0 + w*x1 + i"), 12);
    }
}
