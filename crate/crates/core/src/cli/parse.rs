//! The input file format.
//!
//! ```text
//! # the quadric cone and one of its rulings
//! field 32003
//! ring x, y, z, t
//! ideal Y = x*y - z^2
//! ideal X = x,
//!           z
//! ```
//!
//! An `ideal` statement runs until the next line starting with a keyword.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::is_prime;
use crate::poly::{Monomial, Polynomial, Ring, MAX_VARS};

/// Polynomial with integer coefficients, exponent vector → coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    terms: BTreeMap<Vec<u16>, BigInt>,
}

impl IntPoly {
    fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = IntPoly::default();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = IntPoly::default();
        p.terms.insert(e, BigInt::one());
        p
    }

    fn add_term(&mut self, e: Vec<u16>, c: BigInt) {
        let slot = self.terms.entry(e.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn add(&self, other: &IntPoly, sign: i32) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if sign < 0 { -c } else { c.clone() });
        }
        out
    }

    fn mul(&self, other: &IntPoly) -> Option<IntPoly> {
        let mut out = IntPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Option<Vec<u16>> = ea.iter().zip(eb).map(|(a, b)| a.checked_add(*b)).collect();
                out.add_term(e?, ca * cb);
            }
        }
        Some(out)
    }

    fn neg(&self) -> IntPoly {
        IntPoly::default().add(self, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.degrees().max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.degrees();
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    /// Reduction modulo the ring's prime.
    pub fn to_polynomial(&self, ring: Ring) -> Polynomial {
        let p = BigInt::from(ring.field().modulus());
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(e, c)| {
                let mut r = c % &p;
                if r.is_negative() {
                    r += &p;
                }
                (Monomial::from_exponents(e), r.to_u64().expect("reduced below p"))
            }),
        )
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> IntPolyDisplay<'a> {
        IntPolyDisplay { poly: self, names }
    }
}

pub struct IntPolyDisplay<'a> {
    poly: &'a IntPoly,
    names: &'a [String],
}

impl fmt::Display for IntPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // highest degree first, then lexicographically largest
        let mut terms: Vec<(&Vec<u16>, &BigInt)> = self.poly.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().map(|&x| x as u32).sum();
            let db: u32 = b.0.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{x}", self.names[i])
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InputDocument {
    pub field: Option<u64>,
    pub variables: Vec<String>,
    pub ideals: Vec<(String, Vec<IntPoly>)>,
}

impl InputDocument {
    pub fn ideal(&self, name: &str) -> Option<&[IntPoly]> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g.as_slice())
    }

    /// Largest generator degree over all ideals.
    pub fn max_degree(&self) -> u32 {
        self.ideals
            .iter()
            .flat_map(|(_, g)| g.iter().filter_map(|p| p.total_degree()))
            .max()
            .unwrap_or(0)
    }

    /// Canonical text form; parsing it gives back the same document.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = self.field {
            out.push_str(&format!("field {p}\n"));
        }
        out.push_str(&format!("ring {}\n", self.variables.join(", ")));
        for (name, gens) in &self.ideals {
            let body: Vec<String> = gens.iter().map(|g| g.display(&self.variables).to_string()).collect();
            out.push_str(&format!("ideal {name} = {}\n", body.join(", ")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize_line(text: &str, line: usize, out: &mut Vec<Token>) -> Result<()> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                line,
                column,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line,
                column,
            });
        } else if "+-*^(),=".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line,
                column,
            });
            i += 1;
        } else {
            return Err(parse_err(line, column, format!("unexpected character '{c}'")));
        }
    }
    Ok(())
}

const KEYWORDS: [&str; 3] = ["field", "ring", "ideal"];

/// Groups token lines into statements: a line starting with a keyword opens one.
fn statements(text: &str) -> Result<Vec<Vec<Token>>> {
    let mut stmts: Vec<Vec<Token>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let mut toks = Vec::new();
        tokenize_line(raw, idx + 1, &mut toks)?;
        let Some(first) = toks.first() else { continue };
        let opens = matches!(&first.tok, Tok::Ident(s) if KEYWORDS.contains(&s.as_str()));
        if opens {
            stmts.push(toks);
        } else if let Some(last) = stmts.last_mut() {
            last.extend(toks);
        } else {
            return Err(parse_err(first.line, first.column, "expected 'field', 'ring' or 'ideal'"));
        }
    }
    Ok(stmts)
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    vars: &'a [String],
    end: (usize, usize),
}

impl Cursor<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.column))
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        parse_err(l, c, message)
    }

    fn eat(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, 1);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let (l, c) = self.here();
            let rhs = self.unary()?;
            acc = acc.mul(&rhs).ok_or_else(|| parse_err(l, c, "exponent overflow"))?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Token { tok: Tok::Int(n), .. }) => n
                .to_u16()
                .ok_or_else(|| self.err("exponent too large"))?,
            _ => return Err(self.err("expected a non-negative integer exponent")),
        };
        let (l, c) = self.here();
        self.pos += 1;
        let mut acc = IntPoly::constant(self.vars.len(), BigInt::one());
        for _ in 0..e {
            acc = acc.mul(&base).ok_or_else(|| parse_err(l, c, "exponent overflow"))?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<IntPoly> {
        let Some(t) = self.peek().cloned() else {
            return Err(self.err("unexpected end of polynomial"));
        };
        match t.tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(IntPoly::constant(self.vars.len(), n))
            }
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(IntPoly::var(self.vars.len(), i))
                }
                None => Err(parse_err(t.line, t.column, format!("unknown variable '{name}'"))),
            },
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Tok::Sym(c) => Err(parse_err(t.line, t.column, format!("unexpected '{c}'"))),
        }
    }
}

fn ident_list(toks: &[Token], what: &str) -> Result<Vec<(String, usize, usize)>> {
    let mut out = Vec::new();
    let mut expect_name = true;
    for t in toks {
        match (&t.tok, expect_name) {
            (Tok::Ident(s), true) => {
                out.push((s.clone(), t.line, t.column));
                expect_name = false;
            }
            (Tok::Sym(','), false) => expect_name = true,
            _ => return Err(parse_err(t.line, t.column, format!("malformed {what} list"))),
        }
    }
    if expect_name {
        let (l, c) = toks.last().map_or((0, 0), |t| (t.line, t.column));
        return Err(parse_err(l, c, format!("missing name in {what} list")));
    }
    Ok(out)
}

/// Parses an input document, checking variables and homogeneity.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let mut doc = InputDocument::default();
    let mut have_ring = false;
    for stmt in statements(text)? {
        let head = &stmt[0];
        let Tok::Ident(kw) = &head.tok else { unreachable!() };
        let rest = &stmt[1..];
        let end = stmt.last().map_or((head.line, head.column), |t| (t.line, t.column + 1));
        match kw.as_str() {
            "field" => {
                let [Token { tok: Tok::Int(p), line, column }] = rest else {
                    return Err(parse_err(head.line, head.column, "expected 'field <prime>'"));
                };
                let p = p
                    .to_u64()
                    .filter(|&p| p < (1 << 32) && is_prime(p))
                    .ok_or_else(|| parse_err(*line, *column, "field size must be a prime below 2^32"))?;
                doc.field = Some(p);
            }
            "ring" => {
                if have_ring {
                    return Err(parse_err(head.line, head.column, "ring declared twice"));
                }
                let names = ident_list(rest, "variable")?;
                if names.len() > MAX_VARS {
                    return Err(parse_err(head.line, head.column, format!("at most {MAX_VARS} variables")));
                }
                for (k, (name, l, c)) in names.iter().enumerate() {
                    if KEYWORDS.contains(&name.as_str()) {
                        return Err(parse_err(*l, *c, format!("'{name}' is a keyword")));
                    }
                    if names[..k].iter().any(|(n, _, _)| n == name) {
                        return Err(parse_err(*l, *c, format!("variable '{name}' declared twice")));
                    }
                }
                doc.variables = names.into_iter().map(|(n, _, _)| n).collect();
                have_ring = true;
            }
            "ideal" => {
                if !have_ring {
                    return Err(parse_err(head.line, head.column, "ideal declared before the ring"));
                }
                let (name, eq) = match rest {
                    [Token { tok: Tok::Ident(n), .. }, Token { tok: Tok::Sym('='), .. }, ..] => (n.clone(), 2),
                    _ => return Err(parse_err(head.line, head.column, "expected 'ideal NAME = ...'")),
                };
                if doc.ideal(&name).is_some() {
                    return Err(parse_err(head.line, head.column, format!("ideal '{name}' declared twice")));
                }
                let body = &rest[eq..];
                let mut cur = Cursor {
                    toks: body,
                    pos: 0,
                    vars: &doc.variables,
                    end,
                };
                let mut gens = Vec::new();
                loop {
                    let (l, c) = cur.here();
                    let g = cur.expr()?;
                    if !g.is_homogeneous() {
                        return Err(parse_err(l, c, "inhomogeneous polynomial"));
                    }
                    gens.push(g);
                    if cur.peek().is_none() {
                        break;
                    }
                    if !cur.eat(',') {
                        return Err(cur.err("expected ',' or end of ideal"));
                    }
                }
                doc.ideals.push((name, gens));
            }
            _ => unreachable!(),
        }
    }
    if !have_ring {
        return Err(parse_err(1, 1, "missing ring declaration"));
    }
    Ok(doc)
}
