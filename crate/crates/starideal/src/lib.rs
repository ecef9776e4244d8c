//! Exact arithmetic for fractional ideals and star operations.
//!
//! Three computable ideal systems are provided:
//!
//! - [`numsg`] — fractional ideals of a numerical semigroup (subsets of ℤ),
//!   with finite enumeration of normalized ideals and of all star operations;
//! - [`quadorder`] — fractional ideals of a quadratic order ℤ + fωℤ,
//!   represented as a rational scale times a canonical triangular lattice basis;
//! - [`monomial`] — finitely generated fractional monomial ideals of ℕ^k,
//!   represented by their minimal generator antichain.
//!
//! On top of the backends, [`star`] implements the closure operations d, v, t, w,
//! star operations of finite character, meets, table- and family-defined stars,
//! and star invertibility. [`checker`] turns the classical equivalence theorems
//! for ⋆-Prüfer, (⋆,v)-Prüfer, ⋆-CICD, (⋆,v)-CICD and ⋆-Dedekind structures,
//! and the lattice-order structure of the group of ⋆-invertible ⋆-ideals, into
//! executable, witness-producing property suites.

pub mod bits;
pub mod checker;
pub mod error;
pub mod monomial;
pub mod numsg;
pub mod parallel;
pub mod quadorder;
pub mod rng;
pub mod star;
pub mod system;

pub use error::{Error, Result};
pub use star::{StarKind, StarOperation};
pub use system::IdealSystem;
