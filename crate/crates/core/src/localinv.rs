//! Local invariants of rational quadratic forms: Hilbert symbols,
//! discriminants and Hasse–Witt invariants at the places of Q.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime_u64, Rational};

/// A multiplicative sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn pow(self, k: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(k % 2 == 1),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A place of Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Real,
    Prime(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime_u64(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// A diagonal form `a_1 x_1² + … + a_d x_d²` with nonzero rational `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm(Vec<Rational>);

impl DiagonalForm {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.is_empty() || coefficients.iter().any(Zero::is_zero) {
            return Err(Error::ZeroEntry);
        }
        Ok(DiagonalForm(coefficients))
    }

    pub fn from_integers(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// `(dim, disc mod squares, ε_HW)` of a quadratic space at one place.
///
/// `disc_class` is the square-free integer representative of the global
/// discriminant; its local square class depends on the place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalInvariants {
    pub dim: u32,
    pub disc_class: Rational,
    pub hasse_witt: Sign,
}

/// The signature `(r, s)` of `q_{r,s} = x_1² + … + x_r² − … − x_{r+s}²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub r: u32,
    pub s: u32,
}

impl Signature {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r + s < 3 {
            return Err(Error::SignatureTooSmall { r, s });
        }
        Ok(Signature { r, s })
    }

    pub fn dim(&self) -> u32 {
        self.r + self.s
    }

    /// `n` with `d = 2n` or `d = 2n + 1`.
    pub fn half_dim(&self) -> u32 {
        self.dim() / 2
    }

    pub fn is_odd_dim(&self) -> bool {
        self.dim() % 2 == 1
    }

    /// `r − s mod 8` in `0..8`.
    pub fn residue(&self) -> u32 {
        (i64::from(self.r) - i64::from(self.s)).rem_euclid(8) as u32
    }

    /// Swaps to `r >= s`.
    pub fn normalized(&self) -> Signature {
        if self.r >= self.s {
            *self
        } else {
            Signature { r: self.s, s: self.r }
        }
    }

    /// The diagonal form `q_{r,s}`.
    pub fn diagonal_form(&self) -> DiagonalForm {
        let coeffs: Vec<i64> = std::iter::repeat_n(1, self.r as usize)
            .chain(std::iter::repeat_n(-1, self.s as usize))
            .collect();
        DiagonalForm::from_integers(&coeffs).expect("nonzero entries")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// An integer in the same square class as `q`.
fn integral_rep(q: &Rational) -> BigInt {
    q.numer() * q.denom()
}

/// Splits `n = p^k · u` with `p ∤ u`.
pub(crate) fn split_valuation(n: &BigInt, p: u64) -> (u64, BigInt) {
    let p = BigInt::from(p);
    let mut u = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = u.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        u = q;
        k += 1;
    }
    (k, u)
}

/// Legendre symbol `(u / p)` for an odd prime `p` not dividing `u`.
fn legendre(u: &BigInt, p: u64) -> Sign {
    let pb = BigInt::from(p);
    let r = u.mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
    if r.is_one() {
        Sign::Plus
    } else {
        debug_assert_eq!(r, &pb - 1u32);
        Sign::Minus
    }
}

fn mod8(u: &BigInt) -> u32 {
    u.mod_floor(&BigInt::from(8)).to_u32().expect("residue fits")
}

/// `ε(u) = (u − 1)/2 mod 2` for odd `u`.
fn eps2(u: &BigInt) -> u32 {
    ((mod8(u) - 1) / 2) % 2
}

/// `ω(u) = (u² − 1)/8 mod 2` for odd `u`.
fn omega2(u: &BigInt) -> u32 {
    let m = mod8(u);
    ((m * m - 1) / 8) % 2
}

/// The Hilbert symbol `(a, b)_v`: `+1` iff `z² = a x² + b y²` has a nonzero
/// solution over `Q_v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<Sign> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroEntry);
    }
    let (a, b) = (integral_rep(a), integral_rep(b));
    Ok(match v {
        Place::Real => Sign::from_parity(a.is_negative() && b.is_negative()),
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(&a, 2);
            let (beta, w) = split_valuation(&b, 2);
            let e = eps2(&u) * eps2(&w) + (alpha % 2) as u32 * omega2(&w) + (beta % 2) as u32 * omega2(&u);
            Sign::from_parity(e % 2 == 1)
        }
        Place::Prime(p) => {
            let (alpha, u) = split_valuation(&a, p);
            let (beta, w) = split_valuation(&b, p);
            let eps_p = (p - 1) / 2;
            let base = Sign::from_parity((alpha * beta * eps_p) % 2 == 1);
            base * legendre(&u, p).pow(beta) * legendre(&w, p).pow(alpha)
        }
    })
}

/// Primes dividing `n`, by trial division.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        if (&n % p).is_zero() {
            out.push(p);
            while (&n % p).is_zero() {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("trial division leaves a small cofactor for small inputs"));
    }
    out
}

/// The places where `(a, b)_v` can be `−1`: `∞`, `2` and the odd primes
/// dividing the numerators or denominators.
pub fn relevant_places(values: &[Rational]) -> Vec<Place> {
    let mut primes = vec![2u64];
    for q in values {
        primes.extend(prime_divisors(q.numer()));
        primes.extend(prime_divisors(q.denom()));
    }
    primes.sort_unstable();
    primes.dedup();
    std::iter::once(Place::Real).chain(primes.into_iter().map(Place::Prime)).collect()
}

/// Square-free integer in the square class of `q` (sign preserved).
pub fn square_free_class(q: &Rational) -> Rational {
    let n = integral_rep(q);
    let sign = n.sign();
    let mut rest = n.abs();
    let mut out = BigInt::one();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= rest {
        let mut k = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            k += 1;
        }
        if k % 2 == 1 {
            out *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    out *= rest;
    if sign == BigSign::Minus {
        out = -out;
    }
    Rational::from_integer(out)
}

/// `disc(q) = (−1)^{d(d−1)/2} ∏ a_i`, reduced to a square-free integer.
pub fn discriminant(f: &DiagonalForm) -> Rational {
    let d = f.dim() as u64;
    let sign = Sign::from_parity((d * (d - 1) / 2) % 2 == 1);
    let prod: Rational = f.coefficients().iter().fold(Rational::one(), |acc, a| acc * a);
    square_free_class(&(prod * Rational::from_integer(sign.to_i64().into())))
}

/// `ε_HW = ∏_{i<j} (a_i, a_j)_v`.
pub fn hasse_witt(f: &DiagonalForm, v: Place) -> Sign {
    let a = f.coefficients();
    let mut acc = Sign::Plus;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            acc = acc * hilbert_symbol(&a[i], &a[j], v).expect("entries are nonzero");
        }
    }
    acc
}

/// `(−1, −1)_v`: `−1` exactly at `2` and `∞`.
pub fn minus_one_symbol(v: Place) -> Sign {
    match v {
        Place::Real | Place::Prime(2) => Sign::Minus,
        Place::Prime(_) => Sign::Plus,
    }
}

/// Invariants of `q_{r,s}` at `v` from `disc = (−1)^{[d/2]+s}` and
/// `ε_HW = (−1,−1)_v^{[s/2]}`.
pub fn signature_invariants(sig: Signature, v: Place) -> LocalInvariants {
    let d = sig.dim();
    let disc = Sign::from_parity((d / 2 + sig.s) % 2 == 1);
    let hw = minus_one_symbol(v).pow(u64::from(sig.s / 2));
    let inv = LocalInvariants {
        dim: d,
        disc_class: Rational::from_integer(disc.to_i64().into()),
        hasse_witt: hw,
    };
    debug_assert_eq!(inv, invariants_of_form(&sig.diagonal_form(), v));
    inv
}

/// Invariants computed directly from a diagonal form.
pub fn invariants_of_form(f: &DiagonalForm, v: Place) -> LocalInvariants {
    LocalInvariants {
        dim: f.dim() as u32,
        disc_class: discriminant(f),
        hasse_witt: hasse_witt(f, v),
    }
}

/// Whether the 2-adic space of odd dimension is split, by `r − s ≡ ±1 (mod 8)`.
pub fn is_split_odd(sig: Signature) -> Result<bool> {
    if !sig.is_odd_dim() {
        return Err(Error::WrongParity { expected: "odd", d: sig.dim() });
    }
    Ok(matches!(sig.residue(), 1 | 7))
}

/// Splitness decided from invariants: `q_{r,s}` over `Q_2` is split iff its
/// Hasse–Witt invariant equals that of `H^n ⊕ ⟨a⟩` with the same
/// discriminant.
pub fn is_split_odd_by_invariants(sig: Signature) -> Result<bool> {
    if !sig.is_odd_dim() {
        return Err(Error::WrongParity { expected: "odd", d: sig.dim() });
    }
    let n = sig.half_dim() as usize;
    let d = sig.dim() as u64;
    let ours = invariants_of_form(&sig.diagonal_form(), Place::Prime(2));
    // disc(H^n ⊕ ⟨a⟩) = (−1)^{d(d−1)/2} (−1)^n a, so solve for a.
    let twist = Sign::from_parity((d * (d - 1) / 2 + n as u64) % 2 == 1).to_i64();
    let a = &ours.disc_class * Rational::from_integer(twist.into());
    let mut coeffs = Vec::with_capacity(2 * n + 1);
    for _ in 0..n {
        coeffs.push(Rational::one());
        coeffs.push(-Rational::one());
    }
    coeffs.push(a);
    let split = invariants_of_form(&DiagonalForm::new(coeffs)?, Place::Prime(2));
    debug_assert_eq!(split.disc_class, ours.disc_class);
    Ok(split.hasse_witt == ours.hasse_witt)
}
