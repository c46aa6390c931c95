//! Discriminant and Hasse-Witt invariant of q_{r,s} = x_1^2 + ... + x_r^2 - ... - x_{r+s}^2,
//! from the closed forms and from an explicit diagonal computation.

use unimass::localinv::{hilbert_symbol, invariants_of_form, signature_invariants, Place};
use unimass::{exact::ratio, Signature};

fn main() -> unimass::Result<()> {
    println!("(2,3)_v for v = inf, 2, 3, 5:");
    for v in [Place::Real, Place::prime(2)?, Place::prime(3)?, Place::prime(5)?] {
        println!("  {v:>3}: {}", hilbert_symbol(&ratio(2, 1), &ratio(3, 1), v)?.to_i64());
    }
    println!();
    for (r, s) in [(5, 3), (8, 0), (3, 1), (7, 2), (6, 6)] {
        let sig = Signature::new(r, s)?;
        let v = Place::prime(2)?;
        let closed = signature_invariants(sig, v);
        let direct = invariants_of_form(&sig.diagonal_form(), v);
        assert_eq!(closed, direct);
        println!(
            "{sig}: disc {}, eps_HW at 2 {}, eps_HW at inf {}",
            closed.disc_class,
            closed.hasse_witt.to_i64(),
            signature_invariants(sig, Place::Real).hasse_witt.to_i64()
        );
    }
    Ok(())
}
