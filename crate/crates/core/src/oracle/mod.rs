//! Brute-force verification: automorphism counts of small definite
//! lattices and definite genus masses `Σ 1/#SO(L_i)`.

mod aut;
mod gram;
mod shortvec;

pub use aut::{
    count_automorphisms, count_by_backtracking, enumerate_automorphisms, is_automorphism,
    is_unimodular_matrix, mat_mul, AutCount, IntMatrix, MAX_DIM, MAX_SHORT_VECTORS,
};
pub use gram::GramMatrix;
pub use shortvec::short_vectors;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// `Σ 1/#SO(L_i)` over a list of pairwise non-isometric lattices of one
/// genus. Which lattices make up the genus is the caller's input.
pub fn genus_mass_definite(lattices: &[GramMatrix]) -> Result<Rational> {
    let Some(first) = lattices.first() else {
        return Ok(Rational::zero());
    };
    if let Some(bad) = lattices.iter().find(|g| g.dim() != first.dim()) {
        return Err(Error::SearchBound(format!("mixed dimensions {} and {}", first.dim(), bad.dim())));
    }
    lattices.iter().try_fold(Rational::zero(), |acc, g| {
        let count = count_automorphisms(g)?;
        Ok(acc + Rational::new(1.into(), count.so_part))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn e8_weyl_group() {
        let c = count_automorphisms(&GramMatrix::e8()).unwrap();
        assert_eq!(c.total, 696729600u64.into());
        assert_eq!(c.so_part, 348364800u64.into());
    }

    #[test]
    fn nine_dimensional_genus() {
        let z9 = GramMatrix::identity(9);
        let e8z = GramMatrix::e8().direct_sum(&GramMatrix::identity(1));
        let c = count_automorphisms(&e8z).unwrap();
        assert_eq!(c.so_part, 696729600u64.into());
        assert_eq!(genus_mass_definite(&[z9, e8z]).unwrap(), ratio(17, 1393459200));
    }

    #[test]
    fn single_class_masses() {
        assert_eq!(genus_mass_definite(&[GramMatrix::identity(3)]).unwrap(), ratio(1, 24));
        assert_eq!(genus_mass_definite(&[GramMatrix::identity(8)]).unwrap(), ratio(1, 5160960));
        assert!(genus_mass_definite(&[GramMatrix::identity(3), GramMatrix::identity(4)]).is_err());
    }
}
