//! High-precision decimal evaluation of [`SymbolicValue`]s.
//!
//! Every transcendental factor (π, ζ at odd arguments, β at even
//! arguments) is computed twice by independent algorithms in binary fixed
//! point; the two results must agree to `10^{-(digits + guard/2)}` or the
//! evaluation fails with [`Error::MethodDisagreement`].

mod fixed;
mod series;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::SymbolicValue;

/// Requested significant digits and internal guard digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    pub const DEFAULT_GUARD: u32 = 10;

    pub fn new(digits: u32, guard: u32) -> Result<Self> {
        if !(10..=200).contains(&digits) || guard < 10 {
            return Err(Error::Precision { digits, guard });
        }
        Ok(PrecisionContext { digits, guard })
    }

    pub fn with_digits(digits: u32) -> Result<Self> {
        Self::new(digits, Self::DEFAULT_GUARD)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Working precision in bits: `digits + guard` decimal digits plus slack
    /// for the multiplications in [`eval`].
    fn bits(&self) -> u32 {
        ((f64::from(self.digits + self.guard)) * std::f64::consts::LOG2_10).ceil() as u32 + 32
    }

    /// `10^{-(digits + guard/2)}` in fixed point.
    fn tolerance(&self, bits: u32) -> BigInt {
        let p = BigInt::from(10u32).pow(self.digits + self.guard / 2);
        fixed::from_ratio(&BigInt::one(), &p, bits).max(BigInt::one())
    }
}

/// A transcendental constant handled by [`eval`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Constant {
    Pi,
    Zeta(u32),
    Beta(u32),
}

impl Constant {
    fn name(self) -> String {
        match self {
            Constant::Pi => "pi".into(),
            Constant::Zeta(s) => format!("zeta({s})"),
            Constant::Beta(s) => format!("beta({s})"),
        }
    }

    fn primary(self, bits: u32) -> Result<BigInt> {
        Ok(match self {
            Constant::Pi => fixed::pi_machin(bits),
            Constant::Zeta(s) => series::zeta_euler_maclaurin(s, bits)?,
            Constant::Beta(s) => series::beta_alternating(s, bits),
        })
    }

    fn secondary(self, bits: u32) -> Result<BigInt> {
        Ok(match self {
            Constant::Pi => fixed::pi_takano(bits),
            Constant::Zeta(s) => series::zeta_alternating(s, bits),
            Constant::Beta(1) => fixed::pi_takano(bits + 2) >> 4u32,
            Constant::Beta(s) => series::beta_hurwitz(s, bits)?,
        })
    }

    /// Primary value after the dual-method agreement check.
    fn checked(self, ctx: &PrecisionContext, bits: u32) -> Result<BigInt> {
        let a = self.primary(bits)?;
        let b = self.secondary(bits)?;
        if (&a - &b).abs() > ctx.tolerance(bits) {
            return Err(Error::MethodDisagreement { what: self.name(), digits: ctx.digits });
        }
        Ok(a)
    }
}

/// Decimal expansion of `v` rounded to `ctx.digits()` significant digits.
///
/// Positional notation is used for `10^{-40} <= |v| < 10^{40}`, scientific
/// (`d.ddd…e±k`) otherwise. Pure rationals are rounded exactly.
pub fn eval(v: &SymbolicValue, ctx: &PrecisionContext) -> Result<String> {
    if v.is_zero() {
        return Ok("0".to_string());
    }
    let coeff = v.coeff();
    if v.is_rational() {
        return Ok(format_ratio(coeff.numer(), coeff.denom(), ctx.digits));
    }
    let bits = ctx.bits();
    let mut numer = fixed::one(bits);
    let mut denom = fixed::one(bits);
    let p = v.pi_exponent();
    if p != 0 {
        let pi = Constant::Pi.checked(ctx, bits)?;
        let pp = fixed::pow(&pi, p.unsigned_abs() as u32, bits);
        if p > 0 {
            numer = pp;
        } else {
            denom = pp;
        }
    }
    for &s in v.zeta_args() {
        numer = fixed::mul(&numer, &Constant::Zeta(s).checked(ctx, bits)?, bits);
    }
    for &s in v.beta_args() {
        numer = fixed::mul(&numer, &Constant::Beta(s).checked(ctx, bits)?, bits);
    }
    Ok(format_ratio(&(coeff.numer() * numer), &(coeff.denom() * denom), ctx.digits))
}

fn single(c: Constant, ctx: &PrecisionContext) -> Result<String> {
    let bits = ctx.bits();
    let v = c.checked(ctx, bits)?;
    Ok(format_ratio(&v, &fixed::one(bits), ctx.digits))
}

/// ζ(s) for `s >= 2` in decimal, by dual-method evaluation.
pub fn zeta_numeric(s: u32, ctx: &PrecisionContext) -> Result<String> {
    assert!(s >= 2, "zeta_numeric needs s >= 2");
    single(Constant::Zeta(s), ctx)
}

/// β(s) = L(s, χ₋₄) for `s >= 1` in decimal, by dual-method evaluation.
pub fn beta_numeric(s: u32, ctx: &PrecisionContext) -> Result<String> {
    assert!(s >= 1, "beta_numeric needs s >= 1");
    single(Constant::Beta(s), ctx)
}

pub fn pi_numeric(ctx: &PrecisionContext) -> Result<String> {
    single(Constant::Pi, ctx)
}

fn decimal_len(n: &BigInt) -> u32 {
    n.to_string().len() as u32
}

/// Rounds `num / den` (den > 0) to `digits` significant digits.
pub(crate) fn format_ratio(num: &BigInt, den: &BigInt, digits: u32) -> String {
    debug_assert!(den.is_positive());
    if num.is_zero() {
        return "0".to_string();
    }
    let a = num.abs();
    let ten = BigInt::from(10u32);
    // exponent estimate: floor(log10 |num/den|) is len(a) − len(den) or one less
    let mut e = i64::from(decimal_len(&a)) - i64::from(decimal_len(den));
    let mantissa = loop {
        let k = i64::from(digits) - 1 - e;
        let m = if k >= 0 {
            fixed::div_round(&(&a * ten.pow(k as u32)), den)
        } else {
            fixed::div_round(&a, &(den * ten.pow((-k) as u32)))
        };
        let len = decimal_len(&m);
        if len > digits {
            e += 1;
        } else if len < digits {
            e -= 1;
        } else {
            break m;
        }
    };
    let digits_str = mantissa.to_string();
    let mut out = String::new();
    if num.is_negative() {
        out.push('-');
    }
    if !(-40..40).contains(&e) {
        let (head, tail) = digits_str.split_at(1);
        out.push_str(head);
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
        out.push_str(&format!("e{e}"));
    } else if e < 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-e - 1) as usize));
        out.push_str(&digits_str);
    } else {
        let int_len = (e + 1) as usize;
        if int_len >= digits_str.len() {
            out.push_str(&digits_str);
            out.push_str(&"0".repeat(int_len - digits_str.len()));
        } else {
            out.push_str(&digits_str[..int_len]);
            out.push('.');
            out.push_str(&digits_str[int_len..]);
        }
    }
    out
}

/// Approximate `f64` value of a decimal string produced by [`eval`].
pub fn to_f64(decimal: &str) -> f64 {
    decimal.parse().expect("eval emits parseable decimals")
}
