//! Binary fixed-point helpers: a value `x` is stored as `round(x · 2^bits)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn one(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// `round(num / den · 2^bits)` for `den > 0`.
pub(crate) fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> BigInt {
    div_round(&(num << bits), den)
}

/// Nearest integer to `a / b`, ties away from zero; `b > 0`.
pub(crate) fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.abs().div_rem(b);
    let q = if r.clone() * 2u32 >= *b { q + 1u32 } else { q };
    if a.is_negative() {
        -q
    } else {
        q
    }
}

pub(crate) fn mul(a: &BigInt, b: &BigInt, bits: u32) -> BigInt {
    let p = a * b;
    let half = BigInt::one() << (bits - 1);
    if p.is_negative() {
        -((-p + half) >> bits)
    } else {
        (p + half) >> bits
    }
}

pub(crate) fn div(a: &BigInt, b: &BigInt, bits: u32) -> BigInt {
    div_round(&(a << bits), b)
}

/// `atan(1/k)` by its Taylor series.
pub(crate) fn atan_inv(k: u64, bits: u32) -> BigInt {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = div_round(&one(bits), &k);
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    sum
}

const PI_GUARD: u32 = 32;

/// π from Machin's formula `16 atan(1/5) − 4 atan(1/239)`.
pub(crate) fn pi_machin(bits: u32) -> BigInt {
    let w = bits + PI_GUARD;
    let v = atan_inv(5, w) * 16u32 - atan_inv(239, w) * 4u32;
    div_round(&v, &one(PI_GUARD))
}

/// π from Takano's formula
/// `π/4 = 12 atan(1/49) + 32 atan(1/57) − 5 atan(1/239) + 12 atan(1/110443)`.
pub(crate) fn pi_takano(bits: u32) -> BigInt {
    let w = bits + PI_GUARD;
    let v = atan_inv(49, w) * 12u32 + atan_inv(57, w) * 32u32 - atan_inv(239, w) * 5u32
        + atan_inv(110443, w) * 12u32;
    div_round(&(v * 4u32), &one(PI_GUARD))
}

pub(crate) fn pow(x: &BigInt, k: u32, bits: u32) -> BigInt {
    (0..k).fold(one(bits), |acc, _| mul(&acc, x, bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_formulas_agree() {
        let bits = 700;
        let a = pi_machin(bits);
        let b = pi_takano(bits);
        assert!((a - b).abs() <= BigInt::from(2));
    }

    #[test]
    fn rounding() {
        assert_eq!(div_round(&BigInt::from(7), &BigInt::from(2)), BigInt::from(4));
        assert_eq!(div_round(&BigInt::from(-7), &BigInt::from(2)), BigInt::from(-4));
        assert_eq!(div_round(&BigInt::from(5), &BigInt::from(3)), BigInt::from(2));
    }
}
