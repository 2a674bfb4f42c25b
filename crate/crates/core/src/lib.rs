//! Nonabelian tensor squares of finitely presented groups.
//!
//! The crate is organised bottom-up: [`presentation`] holds words and the
//! text format, [`lattice`] does exact integer linear algebra, [`coset`] and
//! [`perm`] turn finite presentations into permutation groups, [`tensor`]
//! computes `G ⊗ G` with its exterior square, Schur multiplier and the
//! subgroups `∇(G)` and `J₂(G)`, [`families`] builds the crystallographic,
//! coclass and Bieberbach families, and [`claims`] checks closed-form
//! statements about them against computation.

pub mod claims;
pub mod coset;
pub mod error;
pub mod families;
pub mod lattice;
pub mod perm;
pub mod presentation;
pub mod tensor;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/abelian.md")]
    mod abelian {}
    #[doc = include_str!("../../../book/src/cosets.md")]
    mod cosets {}
    #[doc = include_str!("../../../book/src/tensor.md")]
    mod tensor {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/claims.md")]
    mod claims {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
