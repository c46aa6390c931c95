//! Even unimodular lattices exist only for r - s = 0 (mod 8).

use unimass::massformula::mass_even_unimodular;
use unimass::oracle::{genus_mass_definite, GramMatrix};
use unimass::Signature;

fn main() -> unimass::Result<()> {
    for (r, s) in [(8, 0), (16, 0), (24, 0), (9, 1), (12, 4)] {
        let m = mass_even_unimodular(Signature::new(r, s)?)?;
        println!("II_({r},{s}): mass {}", m.mass);
    }
    println!("E8 by counting: {}", genus_mass_definite(&[GramMatrix::e8()])?);
    match mass_even_unimodular(Signature::new(7, 2)?) {
        Err(e) => println!("(7,2): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
