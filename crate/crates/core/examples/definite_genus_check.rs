//! The mass formula against class-by-class counting in the definite range.
//! Z^d is alone in its genus for d <= 8; in rank 9 the genus is {Z^9, E8 + Z}.

use unimass::massformula::mass_odd_unimodular;
use unimass::oracle::{genus_mass_definite, GramMatrix};
use unimass::Signature;

fn main() -> unimass::Result<()> {
    for d in 3..=9usize {
        let mut genus = vec![GramMatrix::identity(d)];
        if d == 9 {
            genus.push(GramMatrix::e8().direct_sum(&GramMatrix::identity(1)));
        }
        let counted = genus_mass_definite(&genus)?;
        let formula = mass_odd_unimodular(Signature::new(d as u32, 0)?).mass;
        let ok = formula.is_rational() && *formula.coeff() == counted;
        println!("d = {d}: classes {}, counted {counted}, formula {formula}  {}", genus.len(), if ok { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
