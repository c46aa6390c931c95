//! Exact masses of unimodular lattices `L_{r,s} = Z^{r+s}` with the form
//! `x_1² + … + x_r² − x_{r+1}² − … − x_{r+s}²`.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: rationals, Bernoulli/Euler numbers, [`SymbolicValue`];
//! - [`localinv`]: Hilbert symbols, discriminants, Hasse–Witt invariants;
//! - [`lambda`]: the 2-adic λ-factor, by residue tables and by κ-cases;
//! - [`massformula`]: the assembled masses and the mass tables;
//! - [`numeric`]: fixed-point evaluation of π, ζ and β with dual methods;
//! - [`oracle`]: automorphism counts of definite Gram matrices;
//! - [`cli`]: the `unimass` command line.

pub mod cli;
pub mod error;
pub mod exact;
pub mod lambda;
pub mod localinv;
pub mod massformula;
pub mod numeric;
pub mod oracle;

pub use error::{Error, ParseError, Result};
pub use exact::{Rational, SymbolicValue};
pub use localinv::{Place, Signature};
pub use massformula::MassResult;
