//! Exact masses of `L_{r,s}`.
//!
//! Masses use the special orthogonal group and the compact-form measure, so
//! a one-class definite genus has mass `1/#SO(L)`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factorial, ratio, symbolic_beta, symbolic_zeta, Rational, SymbolicValue};
use crate::lambda::lambda_for_signature;
use crate::localinv::Signature;

/// Tamagawa number of `SO(V, q)`.
pub const TAMAGAWA: i64 = 2;

/// Quadratic character attached to `disc(q_{r,s})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscCharacter {
    Trivial,
    ChiMinus4,
}

impl DiscCharacter {
    /// Absolute discriminant of the attached quadratic algebra.
    pub fn d_e(self) -> u32 {
        match self {
            DiscCharacter::Trivial => 1,
            DiscCharacter::ChiMinus4 => 4,
        }
    }

    /// `L(s, χ)`.
    pub fn l_value(self, s: u32) -> SymbolicValue {
        match self {
            DiscCharacter::Trivial => symbolic_zeta(s),
            DiscCharacter::ChiMinus4 => symbolic_beta(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassResult {
    pub signature: Signature,
    pub lambda2: Rational,
    /// Everything except λ₂, including `τ(G)`.
    pub main_term: SymbolicValue,
    pub mass: SymbolicValue,
    /// Only meaningful in even dimension; odd `d` reports `Trivial`.
    pub disc_character: DiscCharacter,
    pub d_e: u32,
}

fn rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(2π)^{-m}`.
fn two_pi_inv(m: u32) -> SymbolicValue {
    SymbolicValue::pi_power(Rational::new(BigInt::one(), BigInt::one() << m), -i64::from(m))
}

/// `∏_{k=1}^{m} (2k−1)! ζ(2k) / (2π)^{2k}`.
fn even_zeta_product(m: u32) -> SymbolicValue {
    (1..=m).fold(SymbolicValue::one(), |acc, k| {
        let term = symbolic_zeta(2 * k)
            .times(&two_pi_inv(2 * k))
            .scale(&rat(factorial(u64::from(2 * k - 1))));
        acc.times(&term)
    })
}

/// Character of `disc(q_{r,s})` for even `d`.
pub fn disc_character(sig: Signature) -> DiscCharacter {
    match sig.residue() {
        2 | 6 => DiscCharacter::ChiMinus4,
        _ => DiscCharacter::Trivial,
    }
}

/// `γ_G`, the ratio of the split and compact Haar measures on `SO(r, s)`.
pub fn gamma_g(d: u32) -> SymbolicValue {
    assert!(d >= 3, "gamma_g needs d >= 3");
    let n = d / 2;
    let odd_factorials = |m: u32| (1..=m).fold(BigInt::one(), |acc, r| acc * factorial(u64::from(2 * r - 1)));
    let (exp, den) = if d % 2 == 1 {
        (n * (n + 1), odd_factorials(n))
    } else {
        (n * n, factorial(u64::from(n - 1)) * odd_factorials(n - 1))
    };
    SymbolicValue::pi_power(Rational::new(BigInt::one() << exp, den), i64::from(exp))
}

/// `τ(G) · [main term]` of `L_{r,s}`, without λ₂.
fn main_term(sig: Signature, chi: DiscCharacter) -> SymbolicValue {
    let n = sig.half_dim();
    let tau = ratio(TAMAGAWA, 1);
    if sig.is_odd_dim() {
        return even_zeta_product(n).scale(&tau);
    }
    // d_E^{n − 1/2} = 4^{n − 1/2} = 2^{2n − 1} when d_E = 4.
    let d_e_power = match chi {
        DiscCharacter::Trivial => Rational::one(),
        DiscCharacter::ChiMinus4 => rat(BigInt::one() << (2 * n - 1)),
    };
    chi.l_value(n)
        .times(&two_pi_inv(n))
        .times(&even_zeta_product(n - 1))
        .scale(&(rat(factorial(u64::from(n - 1))) * d_e_power * tau))
}

/// Mass of the genus of the odd unimodular lattice `L_{r,s}`.
pub fn mass_odd_unimodular(sig: Signature) -> MassResult {
    let chi = if sig.is_odd_dim() { DiscCharacter::Trivial } else { disc_character(sig) };
    let lambda2 = lambda_for_signature(sig);
    let main_term = main_term(sig, chi);
    let mass = main_term.scale(&lambda2);
    MassResult { signature: sig, lambda2, main_term, mass, disc_character: chi, d_e: chi.d_e() }
}

/// The same mass assembled as `τ · γ_G^{-1} · L(G) · λ₂` over `Q`.
pub fn mass_via_parahoric(sig: Signature) -> SymbolicValue {
    let d = sig.dim();
    let n = sig.half_dim();
    let l_g = if sig.is_odd_dim() {
        (1..=n).fold(SymbolicValue::one(), |acc, r| acc.times(&symbolic_zeta(2 * r)))
    } else {
        let chi = disc_character(sig);
        let zetas = (1..n).fold(SymbolicValue::one(), |acc, r| acc.times(&symbolic_zeta(2 * r)));
        let d_e_power = match chi {
            DiscCharacter::Trivial => Rational::one(),
            DiscCharacter::ChiMinus4 => rat(BigInt::one() << (2 * n - 1)),
        };
        zetas.times(&chi.l_value(n)).scale(&d_e_power)
    };
    let gamma_inv = gamma_g(d).recip_rational_pi().expect("γ_G is a rational multiple of a π-power");
    gamma_inv
        .times(&l_g)
        .scale(&(ratio(TAMAGAWA, 1) * lambda_for_signature(sig)))
}

/// Mass of the even unimodular genus of signature `(r, s)`, with λ = 1 at
/// every place and the trivial-character main term.
pub fn mass_even_unimodular(sig: Signature) -> Result<MassResult> {
    if sig.is_odd_dim() || sig.residue() != 0 {
        return Err(Error::NoEvenUnimodular { r: sig.r, s: sig.s });
    }
    let main_term = main_term(sig, DiscCharacter::Trivial);
    Ok(MassResult {
        signature: sig,
        lambda2: Rational::one(),
        mass: main_term.clone(),
        main_term,
        disc_character: DiscCharacter::Trivial,
        d_e: 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// The residue classes of `r − s mod 8` that head the table columns.
pub fn columns(parity: Parity) -> &'static [&'static [u32]] {
    match parity {
        Parity::Odd => &[&[1, 7], &[3, 5]],
        Parity::Even => &[&[0], &[2, 6], &[4]],
    }
}

pub fn column_labels(parity: Parity) -> &'static [&'static str] {
    match parity {
        Parity::Odd => &["+-1", "+-3"],
        Parity::Even => &["0", "+-2", "4"],
    }
}

/// Smallest `s` with `r >= s`, `r + s = d`, and `r − s mod 8` in `class`.
pub fn canonical_signature(d: u32, class: &[u32]) -> Option<Signature> {
    (0..=d / 2)
        .map(|s| Signature { r: d - s, s })
        .find(|sig| class.contains(&sig.residue()))
        .filter(|sig| sig.dim() >= 3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub cells: Vec<MassResult>,
}

/// Rows `n = 1..=n_max` (odd) or `n = 2..=n_max` (even) of the mass tables.
pub fn generate_table(parity: Parity, n_max: u32) -> Result<Vec<TableRow>> {
    if !(1..=30).contains(&n_max) {
        return Err(Error::TableRange(n_max));
    }
    let (first, dim): (u32, fn(u32) -> u32) = match parity {
        Parity::Odd => (1, |n| 2 * n + 1),
        Parity::Even => (2, |n| 2 * n),
    };
    Ok((first..=n_max)
        .map(|n| TableRow {
            n,
            cells: columns(parity)
                .iter()
                .map(|class| {
                    let sig = canonical_signature(dim(n), class).expect("every residue occurs for d >= 3");
                    mass_odd_unimodular(sig)
                })
                .collect(),
        })
        .collect())
}
