//! Text grammars for elements, polynomials, points and domains.
//!
//! Elements and polynomials share one expression grammar:
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (('*'|'/') factor)*
//! factor  := primary ['^' power]
//! power   := int | '(' ['-'] rational ')'
//! primary := int | 't' | 'T' | '(' expr ')'
//! ```
//!
//! `t` is the Puiseux uniformizer (rational powers allowed), `T` the
//! coordinate of the line. Division is only by nonzero constants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::domain::{Domain, Inequality, Relation, StandardDomain};
use crate::error::{Error, ParseError, Result};
use crate::exponent::{parse_rational, Exponent, Magnitude};
use crate::field::{FieldConfig, FieldElement};
use crate::line::Point;
use crate::poly::Poly;

struct Parser<'a> {
    field: FieldConfig,
    src: &'a str,
    pos: usize,
    allow_var: bool,
    rule: &'static str,
}

impl<'a> Parser<'a> {
    fn err(&self) -> Error {
        ParseError::new(self.rule, self.src).into()
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err());
        }
        self.pos += len;
        rest[..len].parse().map_err(|_| self.err())
    }

    fn expr(&mut self) -> Result<Poly> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                if d.degree() != Some(0) {
                    return Err(if d.is_zero() { Error::DivisionByZero } else { self.err() });
                }
                acc = acc.scale(&d.coeff(0).inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let (base, is_t) = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let power = if self.eat('(') {
            let neg = self.eat('-');
            self.skip_ws();
            let start = self.pos;
            let rest = &self.src[start..];
            let end = rest.find(')').ok_or_else(|| self.err())?;
            self.pos += end + 1;
            let q = parse_rational(&rest[..end], self.rule)?;
            if neg {
                -q
            } else {
                q
            }
        } else {
            BigRational::from_integer(self.integer()?)
        };
        if is_t {
            let one = BigRational::from_integer(1.into());
            return Ok(Poly::constant(self.field.monomial(&one, &power)?));
        }
        if !power.is_integer() {
            return Err(self.err());
        }
        let k = power.to_integer();
        let n = k.abs().to_u32().ok_or_else(|| self.err())?;
        if k.is_negative() {
            if base.degree() != Some(0) {
                return Err(self.err());
            }
            return Ok(Poly::constant(base.coeff(0).inv()?.pow(n)));
        }
        Ok(base.pow(n))
    }

    fn primary(&mut self) -> Result<(Poly, bool)> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err());
                }
                Ok((e, false))
            }
            Some('t') => {
                self.pos += 1;
                Ok((Poly::constant(self.field.t().map_err(|_| self.err())?), true))
            }
            Some('T') if self.allow_var => {
                self.pos += 1;
                Ok((Poly::x(self.field), false))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok((Poly::constant(self.field.big_int(&n)), false))
            }
            _ => Err(self.err()),
        }
    }

    fn finish(&mut self, p: Poly) -> Result<Poly> {
        if self.peek().is_some() {
            return Err(self.err());
        }
        Ok(p)
    }
}

fn run(field: FieldConfig, s: &str, allow_var: bool, rule: &'static str) -> Result<Poly> {
    let mut p = Parser {
        field,
        src: s,
        pos: 0,
        allow_var,
        rule,
    };
    let e = p.expr()?;
    p.finish(e)
}

pub fn parse_element(field: FieldConfig, s: &str) -> Result<FieldElement> {
    let p = run(field, s, false, "element")?;
    Ok(p.coeff(0))
}

pub fn parse_poly(field: FieldConfig, s: &str) -> Result<Poly> {
    run(field, s, true, "polynomial")
}

fn strip_call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.trim()
        .strip_prefix(name)
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
}

/// Split at `sep` outside parentheses and brackets.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn exponent(s: &str) -> Result<Exponent> {
    Ok(s.trim().parse::<Exponent>()?)
}

/// `pt1(<elem>)`, `disc(<elem>; <exponent>)` or
/// `chain[(e1;x1),(e2;x2),...; limit=<exponent>]`.
pub fn parse_point(field: FieldConfig, s: &str) -> Result<Point> {
    let bad = || Error::from(ParseError::new("point", s));
    let t = s.trim();
    if let Some(inner) = strip_call(t, "pt1") {
        return Ok(Point::type1(parse_element(field, inner)?));
    }
    if let Some(inner) = strip_call(t, "disc") {
        let parts = split_top(inner, ';');
        let [center, radius] = parts.as_slice() else {
            return Err(bad());
        };
        return Ok(Point::disc(parse_element(field, center)?, exponent(radius)?));
    }
    if let Some(inner) = t.strip_prefix("chain[").and_then(|r| r.strip_suffix(']')) {
        let parts = split_top(inner, ';');
        let (discs_src, limit) = match parts.as_slice() {
            [d] => (*d, None),
            [d, l] => {
                let l = l.trim().strip_prefix("limit=").ok_or_else(bad)?;
                (*d, Some(exponent(l)?))
            }
            _ => return Err(bad()),
        };
        let mut discs = Vec::new();
        for item in split_top(discs_src, ',') {
            let body = item
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let pieces = split_top(body, ';');
            let [e, x] = pieces.as_slice() else {
                return Err(bad());
            };
            discs.push((parse_element(field, x)?, exponent(e)?));
        }
        return Point::chain(discs, limit);
    }
    Err(bad())
}

fn parse_abs(field: FieldConfig, s: &str) -> Result<Poly> {
    let t = s.trim();
    let inner = t
        .strip_prefix('|')
        .and_then(|r| r.strip_suffix('|'))
        .ok_or_else(|| ParseError::new("inequality", s))?;
    parse_poly(field, inner)
}

/// One term `|f| <= <mag> * |g|`; `<`, `>=` and `>` likewise, and the
/// right-hand side may omit `* |g|` or the magnitude.
fn parse_inequality(field: FieldConfig, s: &str) -> Result<Inequality> {
    let bad = || Error::from(ParseError::new("inequality", s));
    let ops = [
        ("<=", Relation::Leq, false),
        (">=", Relation::Geq, false),
        ("<", Relation::Leq, true),
        (">", Relation::Geq, true),
    ];
    let (lhs, rhs, rel, strict) = ops
        .iter()
        .find_map(|(op, rel, strict)| s.split_once(op).map(|(l, r)| (l, r, *rel, *strict)))
        .ok_or_else(bad)?;
    let f = parse_abs(field, lhs)?;
    let rhs = rhs.trim();
    let (mag, g) = if rhs.starts_with('|') {
        (Magnitude::one(), parse_abs(field, rhs)?)
    } else {
        match rhs.split_once('*') {
            Some((m, g)) if g.trim_start().starts_with('|') => (m.trim().parse()?, parse_abs(field, g)?),
            _ => (rhs.parse()?, Poly::constant(field.one())),
        }
    };
    let Magnitude::Finite(r) = mag else {
        return Err(bad());
    };
    Ok(Inequality { f, g, r, rel, strict })
}

/// Conjunction of inequalities joined by `and`, or `everything`.
pub fn parse_domain(field: FieldConfig, s: &str) -> Result<Domain> {
    if s.trim() == "everything" {
        return Ok(Domain::Everything);
    }
    let ineqs = s
        .split(" and ")
        .map(|part| parse_inequality(field, part))
        .collect::<Result<Vec<_>>>()?;
    Ok(Domain::Inequalities(ineqs))
}

/// `closed_disc(a; e)`, `annulus(a; e_s; e_r)` with inner radius `ρ^e_s`,
/// or `disc_minus_holes(a; e; (a1; e1), (a2; e2), ...)`.
pub fn parse_standard_domain(field: FieldConfig, s: &str) -> Result<StandardDomain> {
    let bad = || Error::from(ParseError::new("standard-domain", s));
    let t = s.trim();
    if let Some(inner) = strip_call(t, "closed_disc") {
        let parts = split_top(inner, ';');
        let [a, e] = parts.as_slice() else {
            return Err(bad());
        };
        return Ok(StandardDomain::ClosedDisc {
            center: parse_element(field, a)?,
            radius: exponent(e)?,
        });
    }
    if let Some(inner) = strip_call(t, "annulus") {
        let parts = split_top(inner, ';');
        let [a, s_in, r_out] = parts.as_slice() else {
            return Err(bad());
        };
        return StandardDomain::annulus(parse_element(field, a)?, exponent(s_in)?, exponent(r_out)?);
    }
    if let Some(inner) = strip_call(t, "disc_minus_holes") {
        let parts = split_top(inner, ';');
        let [a, e, holes @ ..] = parts.as_slice() else {
            return Err(bad());
        };
        let holes_src = holes.join(";");
        let mut hs = Vec::new();
        if !holes_src.trim().is_empty() {
            for item in split_top(&holes_src, ',') {
                let body = item
                    .trim()
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let pieces = split_top(body, ';');
                let [ha, he] = pieces.as_slice() else {
                    return Err(bad());
                };
                hs.push((parse_element(field, ha)?, exponent(he)?));
            }
        }
        return StandardDomain::disc_minus_holes(parse_element(field, a)?, exponent(e)?, hs);
    }
    Err(bad())
}

/// Comma-separated list of elements.
pub fn parse_element_list(field: FieldConfig, s: &str) -> Result<Vec<FieldElement>> {
    split_top(s, ',').into_iter().map(|x| parse_element(field, x)).collect()
}
