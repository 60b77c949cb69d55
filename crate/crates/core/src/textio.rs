//! Textual polynomial grammar shared with the CLI.
//!
//! Elements: terms `c`, `c*x^k`, `x^k`, `(x+1)^k`, `c*(x+1)^k` joined by
//! `+`/`-`; coefficients are integers reduced mod p^a. Moduli use the same
//! grammar without the `(x+1)` groups. Printing is descending in x with
//! coefficients in [0, p^a), so output re-parses to the same element.

use crate::ambient::{Ambient, AmbientElement};
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    X,
    Pow,
    Star,
    Plus,
    Minus,
    LPar,
    RPar,
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(digits));
            }
            'x' => {
                chars.next();
                toks.push(Tok::X);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Pow);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '(' => {
                chars.next();
                toks.push(Tok::LPar);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RPar);
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

fn fold_mod<I: Scalar>(digits: &str, q: &I) -> I {
    let ten = int::<I>(10);
    let mut acc = I::zero();
    for d in digits.bytes() {
        acc = (acc * ten.clone() + int::<I>((d - b'0') as u64)) % q.clone();
    }
    acc
}

fn parse_exponent(digits: &str) -> Result<u64> {
    digits
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("exponent '{digits}' out of range")))
}

struct Cursor<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        match self.next() {
            Some(t) if *t == tok => Ok(()),
            _ => Err(Error::Parse(format!("expected {what}"))),
        }
    }

    /// Optional `^ INT`, defaulting to 1.
    fn exponent(&mut self) -> Result<u64> {
        if self.peek() == Some(&Tok::Pow) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(d)) => parse_exponent(d),
                _ => Err(Error::Parse("expected an integer exponent after '^'".into())),
            }
        } else {
            Ok(1)
        }
    }
}

/// Parse one element of `ambient` from the term grammar.
pub fn parse_element<I: Scalar>(ambient: &Ambient<I>, text: &str) -> Result<AmbientElement<I>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut cur = Cursor { toks: &toks, pos: 0 };
    let ring = ambient.ring();
    let mut acc = ambient.zero();
    let mut negative = false;
    // optional leading sign
    match cur.peek() {
        Some(Tok::Minus) => {
            negative = true;
            cur.pos += 1;
        }
        Some(Tok::Plus) => {
            cur.pos += 1;
        }
        _ => {}
    }
    loop {
        // term := INT ['*' factor] | factor
        let term = match cur.peek() {
            Some(Tok::Num(d)) => {
                let digits = d.clone();
                cur.pos += 1;
                let c = ring.element(
                    std::iter::once(fold_mod(&digits, ring.q()))
                        .chain(std::iter::repeat(I::zero()))
                        .take(ring.m())
                        .collect(),
                )?;
                if cur.peek() == Some(&Tok::Star) {
                    cur.pos += 1;
                    parse_factor(ambient, &mut cur)?.scale(&c)?
                } else {
                    ambient.monomial(0, &c)
                }
            }
            _ => parse_factor(ambient, &mut cur)?,
        };
        acc = if negative { acc.sub(&term)? } else { acc.add(&term)? };
        match cur.next() {
            None => return Ok(acc),
            Some(Tok::Plus) => negative = false,
            Some(Tok::Minus) => negative = true,
            Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// factor := 'x' ['^' INT] | '(x+1)' ['^' INT]
fn parse_factor<I: Scalar>(
    ambient: &Ambient<I>,
    cur: &mut Cursor<'_>,
) -> Result<AmbientElement<I>> {
    match cur.next() {
        Some(Tok::X) => {
            let k = cur.exponent()?;
            Ok(ambient.x().pow_u64(k))
        }
        Some(Tok::LPar) => {
            cur.expect(Tok::X, "'x' inside '(x+1)'")?;
            cur.expect(Tok::Plus, "'+' inside '(x+1)'")?;
            match cur.next() {
                Some(Tok::Num(d)) if d == "1" => {}
                _ => return Err(Error::Parse("only the group '(x+1)' is supported".into())),
            }
            cur.expect(Tok::RPar, "')'")?;
            let k = cur.exponent()?;
            Ok(ambient.x_plus_one().pow_u64(k))
        }
        other => Err(Error::Parse(format!("expected a term, found {other:?}"))),
    }
}

/// Parse a plain integer polynomial in x (for moduli): dense little-endian
/// coefficients reduced mod q. Exponent bound keeps the vector small.
pub fn parse_poly_coeffs<I: Scalar>(text: &str, q: &I) -> Result<Vec<I>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut cur = Cursor { toks: &toks, pos: 0 };
    let mut coeffs: Vec<I> = Vec::new();
    let mut negative = false;
    match cur.peek() {
        Some(Tok::Minus) => {
            negative = true;
            cur.pos += 1;
        }
        Some(Tok::Plus) => {
            cur.pos += 1;
        }
        _ => {}
    }
    loop {
        let (c, k) = match cur.next() {
            Some(Tok::Num(d)) => {
                let c = fold_mod(d, q);
                if cur.peek() == Some(&Tok::Star) {
                    cur.pos += 1;
                    cur.expect(Tok::X, "'x' after '*'")?;
                    (c, cur.exponent()?)
                } else {
                    (c, 0)
                }
            }
            Some(Tok::X) => (I::one() % q.clone(), cur.exponent()?),
            other => return Err(Error::Parse(format!("expected a term, found {other:?}"))),
        };
        if k > 4096 {
            return Err(Error::Parse(format!("modulus exponent {k} is unreasonably large")));
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, I::zero());
        }
        let signed = if negative {
            crate::scalar::neg_mod(&c, q)
        } else {
            c
        };
        coeffs[k] = crate::scalar::add_mod(&coeffs[k], &signed, q);
        match cur.next() {
            None => return Ok(coeffs),
            Some(Tok::Plus) => negative = false,
            Some(Tok::Minus) => negative = true,
            Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}
