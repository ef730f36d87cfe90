//! Text form of polynomials: `X^3 + 2*X + 1`, with extension-field
//! coefficients written as powers `g^k` of the primitive element.

use std::sync::Arc;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    /// Decimal integer; digits beyond u64 are rejected.
    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| {
                self.pos = start;
                self.err("integer out of range")
            })
    }

    fn exponent(&mut self) -> Result<u64> {
        if self.eat(b'^') {
            self.int()
        } else {
            Ok(1)
        }
    }
}

/// Variable names: either fixed up front or bound to the first letter seen.
struct Vars {
    names: Vec<u8>,
    open: bool,
}

impl Vars {
    fn slot(&mut self, lx: &Lexer, c: u8) -> Result<usize> {
        if let Some(i) = self.names.iter().position(|&v| v == c) {
            return Ok(i);
        }
        if self.open && self.names.is_empty() {
            self.names.push(c);
            return Ok(0);
        }
        lx.err(format!("unexpected variable '{}'", c as char))
    }
}

/// A term is a `*`-separated product of integers, powers of `g` and powers
/// of the variables.
fn term(lx: &mut Lexer, f: &Field, vars: &mut Vars, degs: &mut [usize]) -> Result<FieldElem> {
    let mut coeff = f.one();
    degs.fill(0);
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = lx.int()?;
                coeff = f.mul(coeff, f.from_int(v % f.characteristic()));
            }
            Some(b'g') => {
                lx.pos += 1;
                let e = lx.exponent()?;
                let g = f.primitive_element();
                coeff = f.mul(coeff, f.pow(g, e));
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let slot = vars.slot(lx, c)?;
                lx.pos += 1;
                let e = lx.exponent()?;
                degs[slot] = usize::try_from(e)
                    .ok()
                    .and_then(|e| degs[slot].checked_add(e))
                    .filter(|&d| d <= 1 << 24)
                    .map_or_else(|| lx.err("exponent too large"), Ok)?;
            }
            Some(_) => return lx.err("unexpected character"),
            None => return lx.err("unexpected end of input"),
        }
        if !lx.eat(b'*') {
            return Ok(coeff);
        }
    }
}

/// Parses a sum of terms; returns `(coefficient, degrees)` per term in
/// input order, with one degree per variable slot.
fn parse_terms(
    f: &Field,
    src: &str,
    vars: &mut Vars,
    slots: usize,
) -> Result<Vec<(FieldElem, Vec<usize>)>> {
    let mut lx = Lexer {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    let mut negate = lx.eat(b'-');
    if lx.peek().is_none() {
        return lx.err("empty polynomial");
    }
    let mut degs = vec![0; slots];
    loop {
        let c = term(&mut lx, f, vars, &mut degs)?;
        out.push((if negate { f.neg(c) } else { c }, degs.clone()));
        match lx.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return lx.err("expected '+' or '-'"),
        }
        lx.pos += 1;
    }
    Ok(out)
}

/// Single-variable parse; the variable is any letter other than `g`.
pub(crate) fn parse(field: &Arc<Field>, src: &str) -> Result<Poly> {
    let f = &**field;
    let mut vars = Vars {
        names: Vec::new(),
        open: true,
    };
    let mut coeffs: Vec<FieldElem> = Vec::new();
    for (c, degs) in parse_terms(f, src, &mut vars, 1)? {
        let e = degs[0];
        if coeffs.len() <= e {
            coeffs.resize(e + 1, f.zero());
        }
        coeffs[e] = f.add(coeffs[e], c);
    }
    Ok(Poly::from_raw(field, coeffs))
}

/// Parses a polynomial in the named variables; returns a sparse list of
/// `(coefficient, exponents)` terms, like terms not yet combined.
pub(crate) fn parse_multi(
    field: &Arc<Field>,
    src: &str,
    names: &[char],
) -> Result<Vec<(FieldElem, Vec<usize>)>> {
    let mut vars = Vars {
        names: names.iter().map(|&c| c as u8).collect(),
        open: false,
    };
    parse_terms(field, src, &mut vars, names.len())
}

fn render_coeff(f: &Field, c: FieldElem) -> String {
    if f.degree() == 1 {
        return c.code().to_string();
    }
    match f.log(c).expect("nonzero coefficient") {
        0 => "1".to_string(),
        1 => "g".to_string(),
        e => format!("g^{e}"),
    }
}

pub(crate) fn render(poly: &Poly, var: &str) -> String {
    let f = &**poly.field();
    let mut terms = Vec::new();
    for (e, &c) in poly.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        terms.push(if mono.is_empty() {
            render_coeff(f, c)
        } else if c == f.one() {
            mono
        } else {
            format!("{}*{mono}", render_coeff(f, c))
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
