//! ζ and β at integer arguments.
//!
//! - ζ: Euler–Maclaurin (primary) and the accelerated alternating series of
//!   `η(s) = (1 − 2^{1−s}) ζ(s)` (secondary).
//! - β: the accelerated alternating series `Σ (−1)^k (2k+1)^{−s}` (primary)
//!   and Euler–Maclaurin on `4^{−s}(ζ(s, 1/4) − ζ(s, 3/4))` (secondary).
//!
//! The alternating sums use the Chebyshev acceleration of Cohen, Rodriguez
//! Villegas and Zagier: `n` terms give an error below `2 · 5.8^{−n} · a_0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fixed::{div, from_ratio, one};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial};

/// Rising factorial `s (s+1) … (s+m−1)`.
fn rising(s: u32, m: u32) -> BigInt {
    (0..m).fold(BigInt::one(), |acc, j| acc * BigInt::from(s + j))
}

/// `Σ_{k≥0} (−1)^k a_k` for a positive decreasing sequence given by
/// `term(k, bits)`.
fn alternating_sum(term: impl Fn(u64, u32) -> BigInt, bits: u32) -> BigInt {
    // 5.828^n > 2^(bits + 8)
    let n = ((f64::from(bits) + 8.0) * std::f64::consts::LN_2 / (3.0 + 8f64.sqrt()).ln()).ceil() as i64 + 2;
    // d = T_n(3) = ((3+√8)^n + (3−√8)^n)/2
    let (mut t0, mut t1) = (BigInt::one(), BigInt::from(3));
    for _ in 0..n {
        let t2 = &t1 * 6u32 - &t0;
        t0 = t1;
        t1 = t2;
    }
    let d = t0;
    let mut b = BigInt::from(-1);
    let mut c = -d.clone();
    let mut s = BigInt::zero();
    for k in 0..n {
        c = &b - &c;
        s += &c * term(k as u64, bits);
        let num = &b * BigInt::from(2 * (k + n) * (k - n));
        let den = BigInt::from((2 * k + 1) * (k + 1));
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        b = q;
    }
    super::fixed::div_round(&s, &d)
}

/// `2^bits / m^s`.
fn inv_pow(m: u64, s: u32, bits: u32) -> BigInt {
    from_ratio(&BigInt::one(), &BigInt::from(m).pow(s), bits)
}

/// The Euler–Maclaurin correction `Σ_{k≥1} B_{2k}/(2k)! · s^{(2k−1)} · scale_k`
/// where `scale_k(k)` returns the exact rational `(num, den)` of the
/// remaining factor. Stops when a term drops below `2^{-bits-8}`.
fn em_correction(s: u32, bits: u32, max_k: u32, scale_k: impl Fn(u32) -> (BigInt, BigInt)) -> Result<BigInt> {
    let eps = BigInt::one();
    let mut sum = BigInt::zero();
    for k in 1..=max_k {
        let b = bernoulli(2 * k as usize);
        let (sn, sd) = scale_k(k);
        let num = b.numer() * rising(s, 2 * k - 1) * sn;
        let den = b.denom() * factorial(u64::from(2 * k)) * sd;
        let term = from_ratio(&num, &den, bits + 8);
        if term.abs() <= eps {
            return Ok(super::fixed::div_round(&sum, &one(8)));
        }
        sum += term;
    }
    Err(Error::MethodDisagreement { what: format!("Euler-Maclaurin tail for s={s}"), digits: bits })
}

fn em_cutoff(bits: u32) -> u64 {
    u64::from(bits / 3) + 10
}

/// ζ(s), `s >= 2`, by Euler–Maclaurin summation with cutoff `N`.
pub(crate) fn zeta_euler_maclaurin(s: u32, bits: u32) -> Result<BigInt> {
    let n = em_cutoff(bits);
    let w = bits + 16;
    let mut sum: BigInt = (1..n).map(|j| inv_pow(j, s, w)).sum();
    let nb = BigInt::from(n);
    sum += from_ratio(&BigInt::one(), &(BigInt::from(s - 1) * nb.pow(s - 1)), w);
    sum += from_ratio(&BigInt::one(), &(BigInt::from(2) * nb.pow(s)), w);
    let max_k = (3 * n) as u32;
    sum += em_correction(s, w, max_k, |k| (BigInt::one(), nb.pow(s + 2 * k - 1)))?;
    Ok(super::fixed::div_round(&sum, &one(16)))
}

/// ζ(s), `s >= 2`, from the alternating η series.
pub(crate) fn zeta_alternating(s: u32, bits: u32) -> BigInt {
    let w = bits + 16 + s;
    let eta = alternating_sum(|k, b| inv_pow(k + 1, s, b), w);
    let factor = one(w) - (one(w) >> (s - 1));
    super::fixed::div_round(&div(&eta, &factor, w), &one(16 + s))
}

/// β(s), `s >= 1`, from the alternating series.
pub(crate) fn beta_alternating(s: u32, bits: u32) -> BigInt {
    let w = bits + 16;
    let v = alternating_sum(|k, b| inv_pow(2 * k + 1, s, b), w);
    super::fixed::div_round(&v, &one(16))
}

/// β(s), `s >= 2`, by Euler–Maclaurin on the two Hurwitz zeta values.
pub(crate) fn beta_hurwitz(s: u32, bits: u32) -> Result<BigInt> {
    let n = em_cutoff(bits) / 2 + 5;
    let w = bits + 16;
    let mut sum = BigInt::zero();
    for j in 0..n {
        sum += inv_pow(4 * j + 1, s, w);
        sum -= inv_pow(4 * j + 3, s, w);
    }
    let max_k = (6 * n) as u32;
    for (c, sign) in [(1u64, 1i32), (3, -1)] {
        let x = BigInt::from(4 * n + c);
        // 4^{−s} R(N + c/4) with every power of 4 cancelled against x = (4N+c)/4.
        let mut tail = from_ratio(&BigInt::one(), &(BigInt::from(4 * (s - 1)) * x.pow(s - 1)), w);
        tail += from_ratio(&BigInt::one(), &(BigInt::from(2) * x.pow(s)), w);
        tail += em_correction(s, w, max_k, |k| (BigInt::one() << (4 * k - 2), x.pow(s + 2 * k - 1)))?;
        if sign > 0 {
            sum += tail;
        } else {
            sum -= tail;
        }
    }
    Ok(super::fixed::div_round(&sum, &one(16)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::fixed::pi_machin;
    use crate::exact::zeta_even_ratio;

    fn close(a: &BigInt, b: &BigInt, ulps: u32) -> bool {
        (a - b).abs() <= BigInt::from(ulps)
    }

    #[test]
    fn zeta_two_matches_pi() {
        let bits = 400;
        let pi = pi_machin(bits);
        let pi2 = super::super::fixed::mul(&pi, &pi, bits);
        let expected = super::super::fixed::div_round(&(pi2 * zeta_even_ratio(1).numer()), zeta_even_ratio(1).denom());
        assert!(close(&zeta_euler_maclaurin(2, bits).unwrap(), &expected, 4));
        assert!(close(&zeta_alternating(2, bits), &expected, 4));
    }

    #[test]
    fn catalan_methods_agree() {
        let bits = 300;
        assert!(close(&beta_alternating(2, bits), &beta_hurwitz(2, bits).unwrap(), 4));
    }

    #[test]
    fn alternating_leibniz() {
        let bits = 200;
        let pi = pi_machin(bits);
        assert!(close(&(beta_alternating(1, bits) * 4u32), &pi, 8));
    }
}
