use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::numbers::{beta_odd_ratio, zeta_even_ratio};
use super::Rational;

/// An exact value `coeff · π^pi_power · ∏ ζ(zeta_args) · ∏ β(beta_args)`,
/// with `β(s) = L(s, χ₋₄)`.
///
/// Values are kept canonical: even ζ-arguments and odd β-arguments are
/// folded into the coefficient and the π-power, the argument lists are
/// sorted, and zero has no transcendental part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicValue {
    coeff: Rational,
    pi_power: i64,
    zeta_args: Vec<u32>,
    beta_args: Vec<u32>,
}

impl SymbolicValue {
    /// Builds a value from raw parts and canonicalizes it.
    ///
    /// Panics on `ζ(s)` with `s < 2` or `β(s)` with `s < 1`.
    pub fn new(coeff: Rational, pi_power: i64, zeta_args: Vec<u32>, beta_args: Vec<u32>) -> Self {
        let mut v = SymbolicValue { coeff, pi_power, zeta_args, beta_args };
        v.canonicalize();
        v
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::new(coeff, 0, Vec::new(), Vec::new())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    /// `c · π^k`.
    pub fn pi_power(coeff: Rational, k: i64) -> Self {
        Self::new(coeff, k, Vec::new(), Vec::new())
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_exponent(&self) -> i64 {
        self.pi_power
    }

    pub fn zeta_args(&self) -> &[u32] {
        &self.zeta_args
    }

    pub fn beta_args(&self) -> &[u32] {
        &self.beta_args
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// No π, ζ or β factors.
    pub fn is_rational(&self) -> bool {
        self.pi_power == 0 && self.zeta_args.is_empty() && self.beta_args.is_empty()
    }

    /// Number of symbolic ζ/β factors left after canonicalization.
    pub fn symbolic_factor_count(&self) -> usize {
        self.zeta_args.len() + self.beta_args.len()
    }

    pub fn canonical(&self) -> Self {
        let mut v = self.clone();
        v.canonicalize();
        v
    }

    fn canonicalize(&mut self) {
        if self.coeff.is_zero() {
            self.pi_power = 0;
            self.zeta_args.clear();
            self.beta_args.clear();
            return;
        }
        let mut zetas = Vec::with_capacity(self.zeta_args.len());
        for &s in &self.zeta_args {
            assert!(s >= 2, "zeta({s}) is not a finite special value");
            if s % 2 == 0 {
                self.coeff *= zeta_even_ratio(s / 2);
                self.pi_power += i64::from(s);
            } else {
                zetas.push(s);
            }
        }
        let mut betas = Vec::with_capacity(self.beta_args.len());
        for &s in &self.beta_args {
            assert!(s >= 1, "beta({s}) is outside the supported range");
            if s % 2 == 1 {
                self.coeff *= beta_odd_ratio((s - 1) / 2);
                self.pi_power += i64::from(s);
            } else {
                betas.push(s);
            }
        }
        zetas.sort_unstable();
        betas.sort_unstable();
        self.zeta_args = zetas;
        self.beta_args = betas;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut v = self.clone();
        v.coeff *= c;
        v.canonicalize();
        v
    }

    pub fn times(&self, other: &SymbolicValue) -> Self {
        let mut zeta_args = self.zeta_args.clone();
        zeta_args.extend_from_slice(&other.zeta_args);
        let mut beta_args = self.beta_args.clone();
        beta_args.extend_from_slice(&other.beta_args);
        Self::new(
            &self.coeff * &other.coeff,
            self.pi_power + other.pi_power,
            zeta_args,
            beta_args,
        )
    }

    /// Multiplicative inverse of the rational and π parts. Values carrying
    /// ζ or β factors have no inverse in this representation.
    pub fn recip_rational_pi(&self) -> Option<Self> {
        if self.is_zero() || self.symbolic_factor_count() > 0 {
            return None;
        }
        Some(Self::pi_power(self.coeff.recip(), -self.pi_power))
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.times(self))
    }
}

impl Mul for &SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, rhs: &SymbolicValue) -> SymbolicValue {
        self.times(rhs)
    }
}

impl Mul for SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, rhs: SymbolicValue) -> SymbolicValue {
        self.times(&rhs)
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::pretty::render(self))
    }
}

/// `ζ(s)` for `s >= 2`; even arguments come back as rational multiples of
/// `π^s`.
pub fn symbolic_zeta(s: u32) -> SymbolicValue {
    assert!(s >= 2, "symbolic_zeta needs s >= 2");
    SymbolicValue::new(Rational::one(), 0, vec![s], Vec::new())
}

/// `β(s) = L(s, χ₋₄)` for `s >= 1`; odd arguments come back as rational
/// multiples of `π^s`.
pub fn symbolic_beta(s: u32) -> SymbolicValue {
    assert!(s >= 1, "symbolic_beta needs s >= 1");
    SymbolicValue::new(Rational::one(), 0, Vec::new(), vec![s])
}
