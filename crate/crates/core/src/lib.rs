//! Exact machinery for deciding when every group is `(k,l,m,r)`-quasi-Burnside
//! or `(k,m,r)`-quasi-Honda, with the supporting computations used to
//! cross-check the answer:
//!
//! - [`residue`]: unit groups, the `r*` twist, coprime lifts.
//! - [`lattice`]: the lattice `H`, regions `S`, `-S`, `T`, multiplier sets.
//! - [`classify`]: closed-form verdicts.
//! - [`words`]: reduced words in `G ∗ ⟨b⟩` and twisted automorphisms.
//! - [`groups`]: finite groups, class products, von Dyck realizations.
//! - [`psl2`]: the exact elliptic triple test and a numeric cross-check.

pub mod classify;
pub mod error;
pub mod groups;
pub mod lattice;
pub mod psl2;
pub mod residue;
pub mod words;

pub use error::{Error, Result};
