//! Repeated-root constacyclic codes of length `m p^s` over the chain ring
//! `R = F_{p^r}[u]/(u^e)`.
//!
//! The crate is `no_std` (it needs `alloc`). Modules, bottom-up:
//!
//! * [`gf`]: the residue field `F_{p^r}` with a canonical modulus, discrete
//!   logarithms, `n`-th and `p^s`-th roots.
//! * [`chainring`]: arithmetic in `R`, units, the homogeneous weight.
//! * [`poly`]: polynomials over `F_{p^r}` and `R`, reciprocals, the canonical
//!   factorization of `x^m - λ₀` and its self-reciprocal split.
//! * [`codes`]: code parameters, principal codes and their duals, counting,
//!   self-dual existence, generator towers, and the isometry to cyclic codes.
//! * [`oracle`]: exhaustive ground truth on tiny instances.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod chainring;
pub mod codes;
mod error;
pub mod gf;
pub mod oracle;
pub mod poly;

pub use chainring::{RingContext, RingElement};
pub use codes::{
    CardinalityReport, CodeParams, DualDescription, EquivalenceDecision, EquivalenceMap,
    LambdaKind, PrincipalCode, SelfDualCode, SelfDualMethod, SelfDualReport, TowerCode,
};
pub use error::{Error, Result};
pub use gf::{FieldContext, FieldElement};
pub use oracle::{Ambient, CodewordSet};
pub use poly::{Factorization, FieldPoly, ReciprocalSplit, RepeatedFactorization, RingPoly};
