//! The 2-adic λ-factor of the odd unimodular lattice `L_{r,s}`.
//!
//! [`lambda_for_signature`] dispatches on `d` and `r − s mod 8`. The
//! κ-route ([`lambda_via_kappa`]) reaches the same values from the local
//! invariants at 2 and the Case A/B/C split of `Λ*/Λ`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{ratio, Rational};
use crate::localinv::{is_split_odd, is_split_odd_by_invariants, signature_invariants, Place, Sign, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaCase {
    /// `ord₂ κ = 1`: the discriminant algebra is ramified.
    CaseA,
    /// `ord₂ κ = 2`.
    CaseB,
    /// `ord₂ κ ≥ 3`: the space also contains even unimodular lattices.
    CaseC,
    OddDim,
}

impl std::fmt::Display for LambdaCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LambdaCase::CaseA => "A",
            LambdaCase::CaseB => "B",
            LambdaCase::CaseC => "C",
            LambdaCase::OddDim => "odd",
        })
    }
}

/// Row selector of the even-dimensional λ table: the square class of the
/// discriminant at 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiscRow {
    /// `disc` is a 2-adic square.
    Trivial,
    /// `Q_2(√disc)` is the unramified quadratic extension.
    UnramifiedNontrivial,
    Ramified,
}

impl DiscRow {
    /// Classifies an odd 2-adic unit by its residue mod 8.
    pub fn of_unit(delta: i64) -> Result<DiscRow> {
        if delta % 2 == 0 {
            return Err(Error::EvenUnit(delta));
        }
        Ok(match delta.rem_euclid(8) {
            1 => DiscRow::Trivial,
            5 => DiscRow::UnramifiedNontrivial,
            _ => DiscRow::Ramified,
        })
    }
}

fn pow2(k: u32) -> BigInt {
    BigInt::from(1) << k
}

fn halve(n: BigInt) -> Rational {
    Rational::new(n, BigInt::from(2))
}

/// `(2^n + 1)/2` on the split space, `(2^n − 1)/2` otherwise (`d = 2n + 1`).
pub fn lambda_odd_dim(n: u32, split: bool) -> Rational {
    let p = pow2(n);
    halve(if split { p + 1 } else { p - 1 })
}

/// Entry of the even-dimensional λ table (`d = 2n`).
///
/// `eps_matches` selects the table column `(−1)^{n(n−1)/2}`; the ramified
/// row ignores it.
pub fn lambda_even_dim(n: u32, row: DiscRow, eps_matches: bool) -> Result<Rational> {
    if n < 2 {
        return Err(Error::LambdaRange(n));
    }
    let a = pow2(n - 1);
    let b = pow2(n);
    Ok(match (row, eps_matches) {
        (DiscRow::Trivial, true) => halve((a + 1) * (b - 1)),
        (DiscRow::Trivial, false) => halve((a - 1) * (b - 1)),
        (DiscRow::UnramifiedNontrivial, true) => halve((a - 1) * (b + 1)),
        (DiscRow::UnramifiedNontrivial, false) => halve((a + 1) * (b + 1)),
        (DiscRow::Ramified, _) => ratio(1, 2),
    })
}

/// Index of the stabilizer of an isotropic line in `SO(L_even / 2 L_even)`.
pub fn isotropic_line_index(n: u32, split: bool) -> BigInt {
    let a = pow2(n - 1);
    let b = pow2(n);
    if split {
        (a + 1) * (b - 1)
    } else {
        (a - 1) * (b + 1)
    }
}

/// `ord₂ κ(q)` for `κ(q) = (−1)^{[d/2]} δ + 2ε + d − 3`, capped at 3.
///
/// `κ` is even for odd `δ` and even `d`, so the result lies in `1..=3`;
/// `κ = 0` reports 3.
pub fn kappa(delta: i64, eps: Sign, d: u32) -> Result<u32> {
    if d % 2 == 1 {
        return Err(Error::WrongParity { expected: "even", d });
    }
    if delta % 2 == 0 {
        return Err(Error::EvenUnit(delta));
    }
    let sign = if (d / 2) % 2 == 0 { 1 } else { -1 };
    let k = sign * delta + 2 * eps.to_i64() + i64::from(d) - 3;
    Ok(if k == 0 { 3 } else { k.trailing_zeros().min(3) })
}

pub fn case_from_kappa_order(ord: u32) -> LambdaCase {
    match ord {
        0 | 1 => LambdaCase::CaseA,
        2 => LambdaCase::CaseB,
        _ => LambdaCase::CaseC,
    }
}

/// `(−1)^{n(n−1)/2}`.
pub fn hyperbolic_sign(n: u32) -> Sign {
    Sign::from_parity((u64::from(n) * u64::from(n.saturating_sub(1)) / 2) % 2 == 1)
}

/// Case A/B/C read off `(disc, ε_HW)`.
///
/// With `ε = ε_HW`, Case C on the trivial row means `ε_HW = (−1)^{n(n−1)/2}`
/// but on the unramified row it means `ε_HW = −(−1)^{n(n−1)/2}`. The
/// unramified row never occurs for `q_{r,s}`.
pub fn case_from_invariants(delta: i64, eps_hw: Sign, n: u32) -> Result<LambdaCase> {
    let h = hyperbolic_sign(n);
    Ok(match DiscRow::of_unit(delta)? {
        DiscRow::Ramified => LambdaCase::CaseA,
        DiscRow::Trivial if eps_hw == h => LambdaCase::CaseC,
        DiscRow::UnramifiedNontrivial if eps_hw == -h => LambdaCase::CaseC,
        _ => LambdaCase::CaseB,
    })
}

/// λ from an even-dimensional case and discriminant row.
pub fn lambda_for_case(n: u32, case: LambdaCase, row: DiscRow) -> Result<Rational> {
    match case {
        LambdaCase::CaseA => lambda_even_dim(n, DiscRow::Ramified, true),
        LambdaCase::CaseB => lambda_even_dim(n, row, false),
        LambdaCase::CaseC => lambda_even_dim(n, row, true),
        LambdaCase::OddDim => Err(Error::WrongParity { expected: "even", d: 2 * n }),
    }
}

/// λ₂ of `L_{r,s}` from `d` and `r − s mod 8`.
pub fn lambda_for_signature(sig: Signature) -> Rational {
    let n = sig.half_dim();
    if sig.is_odd_dim() {
        return lambda_odd_dim(n, is_split_odd(sig).expect("odd d"));
    }
    match sig.residue() {
        2 | 6 => ratio(1, 2),
        0 => lambda_even_dim(n, DiscRow::Trivial, true).expect("n >= 2"),
        4 => lambda_even_dim(n, DiscRow::Trivial, false).expect("n >= 2"),
        _ => unreachable!("r - s is even"),
    }
}

fn disc_unit(sig: Signature) -> i64 {
    let inv = signature_invariants(sig, Place::Prime(2));
    // The global discriminant of q_{r,s} is ±1, a 2-adic unit.
    inv.disc_class.numer().to_i64().expect("disc is ±1")
}

/// `Case` of `L_{r,s}` at 2 via κ.
pub fn case_for_signature(sig: Signature) -> LambdaCase {
    if sig.is_odd_dim() {
        return LambdaCase::OddDim;
    }
    let inv = signature_invariants(sig, Place::Prime(2));
    let ord = kappa(disc_unit(sig), inv.hasse_witt, sig.dim()).expect("even d, odd disc");
    case_from_kappa_order(ord)
}

/// λ₂ of `L_{r,s}` recomputed from local invariants: Hilbert-symbol
/// splitness in odd dimension, κ-cases in even dimension.
pub fn lambda_via_kappa(sig: Signature) -> Rational {
    let n = sig.half_dim();
    if sig.is_odd_dim() {
        return lambda_odd_dim(n, is_split_odd_by_invariants(sig).expect("odd d"));
    }
    let row = DiscRow::of_unit(disc_unit(sig)).expect("odd disc");
    lambda_for_case(n, case_for_signature(sig), row).expect("n >= 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: u32, s: u32) -> Signature {
        Signature::new(r, s).unwrap()
    }

    #[test]
    fn odd_table() {
        assert_eq!(lambda_odd_dim(1, true), ratio(3, 2));
        assert_eq!(lambda_odd_dim(1, false), ratio(1, 2));
        assert_eq!(lambda_odd_dim(4, false), ratio(15, 2));
    }

    #[test]
    fn even_table() {
        assert_eq!(lambda_even_dim(4, DiscRow::Trivial, true).unwrap(), ratio(135, 2));
        assert_eq!(lambda_even_dim(2, DiscRow::Ramified, false).unwrap(), ratio(1, 2));
        assert_eq!(lambda_even_dim(2, DiscRow::Trivial, false).unwrap(), ratio(3, 2));
        assert_eq!(lambda_even_dim(1, DiscRow::Trivial, true), Err(Error::LambdaRange(1)));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(1, Sign::Plus, 8).unwrap(), 3);
        assert_eq!(kappa(-1, Sign::Plus, 6).unwrap(), 1);
        assert_eq!(kappa(1, Sign::Minus, 8).unwrap(), 2);
        assert!(kappa(1, Sign::Plus, 7).is_err());
        assert!(kappa(2, Sign::Plus, 8).is_err());
    }

    #[test]
    fn signature_lambdas() {
        assert_eq!(lambda_for_signature(sig(9, 0)), ratio(17, 2));
        assert_eq!(lambda_for_signature(sig(2, 2)), ratio(9, 2));
        assert_eq!(lambda_for_signature(sig(4, 4)), ratio(135, 2));
        assert_eq!(lambda_for_signature(sig(3, 1)), ratio(1, 2));
        assert_eq!(lambda_for_signature(sig(8, 0)), ratio(135, 2));
    }

    #[test]
    fn index_identity() {
        for n in 2..=15 {
            assert_eq!(
                lambda_even_dim(n, DiscRow::Trivial, true).unwrap(),
                halve(isotropic_line_index(n, true))
            );
            assert_eq!(
                lambda_even_dim(n, DiscRow::UnramifiedNontrivial, true).unwrap(),
                halve(isotropic_line_index(n, false))
            );
        }
    }

    #[test]
    fn half_integers() {
        for d in 3..=21u32 {
            for s in 0..=d {
                let l = lambda_for_signature(sig(d - s, s));
                assert!(l > ratio(0, 1));
                assert_eq!(l.denom(), &BigInt::from(2));
            }
        }
    }

    #[test]
    fn unit_rows() {
        assert_eq!(DiscRow::of_unit(1).unwrap(), DiscRow::Trivial);
        assert_eq!(DiscRow::of_unit(-3).unwrap(), DiscRow::UnramifiedNontrivial);
        assert_eq!(DiscRow::of_unit(-1).unwrap(), DiscRow::Ramified);
        assert_eq!(DiscRow::of_unit(3).unwrap(), DiscRow::Ramified);
    }
}
