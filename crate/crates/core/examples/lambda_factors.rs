//! The 2-adic lambda factor, by residue and by the kappa classification.

use unimass::lambda::{case_for_signature, lambda_for_signature, lambda_via_kappa};
use unimass::Signature;

fn main() -> unimass::Result<()> {
    println!("{:<8} {:>7} {:>5} {:>12}", "sig", "r-s(8)", "case", "lambda2");
    for d in [4u32, 5, 8, 9, 12] {
        for s in 0..=d / 2 {
            let sig = Signature::new(d - s, s)?;
            let l = lambda_for_signature(sig);
            assert_eq!(l, lambda_via_kappa(sig));
            println!("{:<8} {:>7} {:>5} {:>12}", sig.to_string(), sig.residue(), case_for_signature(sig).to_string(), l.to_string());
        }
    }
    Ok(())
}
