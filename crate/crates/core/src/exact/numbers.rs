//! Bernoulli and Euler numbers, and the exact rational parts of ζ(2k) and
//! β(2k+1).

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static EULER: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// Row `n` of Pascal's triangle.
fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The Bernoulli number `B_m` with the convention `B_1 = -1/2`.
///
/// Values are computed from `sum_{j=0}^{m} C(m+1, j) B_j = 0` and cached;
/// the cache grows under a write lock and is otherwise read concurrently.
pub fn bernoulli(m: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().unwrap().get(m) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().unwrap();
    while table.len() <= m {
        let next = table.len();
        let value = if next == 0 {
            Rational::one()
        } else if next > 1 && next % 2 == 1 {
            Rational::zero()
        } else {
            let row = binomial_row(next + 1);
            let sum = table
                .iter()
                .zip(row.iter())
                .fold(Rational::zero(), |acc, (b, c)| acc + b * c);
            -sum / Rational::from_integer(row[next].clone())
        };
        table.push(value);
    }
    table[m].clone()
}

/// The Euler number `E_{2k}` (`E_0 = 1`, `E_2 = -1`, `E_4 = 5`, ...).
pub fn euler_even(k: usize) -> BigInt {
    if let Some(e) = EULER.read().unwrap().get(k) {
        return e.clone();
    }
    let mut table = EULER.write().unwrap();
    while table.len() <= k {
        let next = table.len();
        let value = if next == 0 {
            BigInt::one()
        } else {
            // sum_{j=0}^{k} C(2k, 2j) E_{2j} = 0
            let row = binomial_row(2 * next);
            -table
                .iter()
                .enumerate()
                .fold(BigInt::zero(), |acc, (j, e)| acc + &row[2 * j] * e)
        };
        table.push(value);
    }
    table[k].clone()
}

/// `ζ(2k) / π^{2k}` as an exact rational.
pub fn zeta_even_ratio(k: u32) -> Rational {
    assert!(k >= 1, "zeta_even_ratio needs k >= 1");
    let k = k as usize;
    let b = bernoulli(2 * k);
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let num = b * Rational::from_integer(BigInt::from(sign) << (2 * k - 1));
    num / Rational::from_integer(factorial(2 * k as u64))
}

/// `β(2k+1) / π^{2k+1}` as an exact rational, where `β(s) = L(s, χ₋₄)`.
pub fn beta_odd_ratio(k: u32) -> Rational {
    let k = k as usize;
    let e = euler_even(k);
    let signed = if k % 2 == 0 { e } else { -e };
    let den = (BigInt::one() << (2 * k + 2)) * factorial(2 * k as u64);
    Rational::new(signed, den)
}

/// Denominator of `B_{2k}` predicted by von Staudt–Clausen: the product of
/// primes `p` with `(p - 1) | 2k`.
pub fn staudt_clausen_denominator(k: u32) -> BigInt {
    let two_k = 2 * k as u64;
    (2..=two_k + 1)
        .filter(|&p| is_prime_u64(p) && two_k % (p - 1) == 0)
        .fold(BigInt::one(), |acc, p| acc * BigInt::from(p))
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_bernoulli() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for m in (3..60).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{m}");
        }
    }

    #[test]
    fn staudt_clausen() {
        for k in 1..=30 {
            assert_eq!(bernoulli(2 * k as usize).denom(), &staudt_clausen_denominator(k), "k={k}");
        }
    }

    #[test]
    fn euler_numbers() {
        let expected = [1i64, -1, 5, -61, 1385, -50521];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(euler_even(k), BigInt::from(*e));
        }
    }

    #[test]
    fn zeta_ratios() {
        assert_eq!(zeta_even_ratio(1), q(1, 6));
        assert_eq!(zeta_even_ratio(2), q(1, 90));
        assert_eq!(zeta_even_ratio(3), q(1, 945));
        assert_eq!(zeta_even_ratio(6), q(691, 638512875));
    }

    #[test]
    fn beta_ratios() {
        assert_eq!(beta_odd_ratio(0), q(1, 4));
        assert_eq!(beta_odd_ratio(1), q(1, 32));
        assert_eq!(beta_odd_ratio(2), q(5, 1536));
        // L(7, χ₋₄) = 61π⁷/184320
        assert_eq!(beta_odd_ratio(3), q(61, 184320));
    }

    #[test]
    fn concurrent_cache_growth() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || bernoulli(40 + 2 * t)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, b) in got.iter().enumerate() {
            assert_eq!(*b, bernoulli(40 + 2 * t));
        }
    }
}
