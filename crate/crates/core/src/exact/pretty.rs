//! Text form of a [`SymbolicValue`].
//!
//! ```text
//! value  := "0" | ["-"] numer ["/" denom]
//! numer  := factor ("*" factor)*
//! denom  := factor | "(" factor ("*" factor)* ")"
//! factor := INTEGER | "pi" | "pi^" INTEGER | "zeta(" INTEGER ")" | "beta(" INTEGER ")"
//! ```
//!
//! Rendering puts the integer first, then `pi`, `zeta`, `beta`; negative
//! π-powers move into the denominator, e.g. `7*zeta(3)/(7680*pi^3)`.
//! ζ and β factors may only appear in the numerator.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Rational, SymbolicValue};
use crate::error::ParseError;

fn pi_factor(k: i64) -> String {
    if k == 1 {
        "pi".to_string()
    } else {
        format!("pi^{k}")
    }
}

pub fn render(v: &SymbolicValue) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let coeff = v.coeff();
    let mut numer: Vec<String> = Vec::new();
    let abs_num = coeff.numer().abs();
    if !abs_num.is_one() {
        numer.push(abs_num.to_string());
    }
    if v.pi_exponent() > 0 {
        numer.push(pi_factor(v.pi_exponent()));
    }
    numer.extend(v.zeta_args().iter().map(|s| format!("zeta({s})")));
    numer.extend(v.beta_args().iter().map(|s| format!("beta({s})")));
    if numer.is_empty() {
        numer.push("1".to_string());
    }

    let mut denom: Vec<String> = Vec::new();
    if !coeff.denom().is_one() {
        denom.push(coeff.denom().to_string());
    }
    if v.pi_exponent() < 0 {
        denom.push(pi_factor(-v.pi_exponent()));
    }

    let mut out = String::new();
    if coeff.is_negative() {
        out.push('-');
    }
    out.push_str(&numer.join("*"));
    match denom.len() {
        0 => {}
        1 => {
            out.push('/');
            out.push_str(&denom[0]);
        }
        _ => {
            out.push_str("/(");
            out.push_str(&denom.join("*"));
            out.push(')');
        }
    }
    out
}

enum Factor {
    Int(BigInt),
    Pi(i64),
    Zeta(u32),
    Beta(u32),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::Symbolic { input: self.src.to_string(), pos: self.pos, msg: msg.to_string() }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{tok}`")))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.err("expected digits"));
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Ok(s)
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.err("argument out of range"))
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        if self.eat("pi") {
            if self.eat("^") {
                let neg = self.eat("-");
                let k = i64::from(self.small()?);
                return Ok(Factor::Pi(if neg { -k } else { k }));
            }
            return Ok(Factor::Pi(1));
        }
        if self.eat("zeta(") {
            let s = self.small()?;
            self.expect(")")?;
            if s < 2 {
                return Err(self.err("zeta argument must be at least 2"));
            }
            return Ok(Factor::Zeta(s));
        }
        if self.eat("beta(") {
            let s = self.small()?;
            self.expect(")")?;
            if s < 1 {
                return Err(self.err("beta argument must be at least 1"));
            }
            return Ok(Factor::Beta(s));
        }
        let d = self.digits()?;
        Ok(Factor::Int(d.parse().expect("ascii digits")))
    }

    fn product(&mut self) -> Result<Vec<Factor>, ParseError> {
        let mut out = vec![self.factor()?];
        while self.eat("*") {
            out.push(self.factor()?);
        }
        Ok(out)
    }
}

/// Parses the grammar emitted by [`render`].
pub fn parse(src: &str) -> Result<SymbolicValue, ParseError> {
    let mut cur = Cursor { src: src.trim(), pos: 0 };
    let negative = cur.eat("-");
    let numer = cur.product()?;
    let denom = if cur.eat("/") {
        if cur.eat("(") {
            let d = cur.product()?;
            cur.expect(")")?;
            d
        } else {
            vec![cur.factor()?]
        }
    } else {
        Vec::new()
    };
    if !cur.rest().is_empty() {
        return Err(cur.err("trailing input"));
    }

    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut pi = 0i64;
    let mut zetas = Vec::new();
    let mut betas = Vec::new();
    for f in numer {
        match f {
            Factor::Int(n) => num *= n,
            Factor::Pi(k) => pi += k,
            Factor::Zeta(s) => zetas.push(s),
            Factor::Beta(s) => betas.push(s),
        }
    }
    for f in denom {
        match f {
            Factor::Int(n) => den *= n,
            Factor::Pi(k) => pi -= k,
            Factor::Zeta(_) | Factor::Beta(_) => {
                return Err(cur.err("zeta/beta factors cannot appear in a denominator"))
            }
        }
    }
    if den == BigInt::from(0) {
        return Err(cur.err("zero denominator"));
    }
    if negative {
        num = -num;
    }
    Ok(SymbolicValue::new(Rational::new(num, den), pi, zetas, betas))
}
