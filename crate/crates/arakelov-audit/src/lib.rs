//! Exact computational algebra for finite Galois groups: permutation groups,
//! Dixon-Schneider character tables over cyclotomic integers, abelian
//! number-field invariants and relative class numbers, virtual-character
//! arithmetic in the rational Grothendieck group, and weighted module
//! statistics over p-adic group-ring components.
//!
//! The top-level entry points are:
//!
//! * [`group`]: build groups from permutation generators, named families or
//!   group files; conjugacy classes, derived subgroup, abelianization.
//! * [`chartab`]: the exact complex character table, Frobenius-Schur
//!   indicators, Galois orbits and character fields.
//! * [`fields`]: abelian field descriptors `(f, H)`, discriminants, prime
//!   splitting, analytic relative class numbers, ingested class data and the
//!   class-group obstruction quotient.
//! * [`ledger`]: virtual classes in `G_0(Q[G])`: permutation classes, the
//!   duality involution, archimedean classes and identity verification.
//! * [`clm`]: enumeration of finite modules over group-ring components,
//!   automorphism counts, weighted expectations and cokernel sampling.
//! * [`pipeline`]: the audit/scan orchestration and JSON reports.

pub mod chartab;
pub mod clm;
pub mod cyclo;
pub mod fields;
pub mod group;
pub mod ledger;
pub mod modp;
pub mod perm;
pub mod pipeline;
pub mod snf;

mod cli;
mod error;

pub use cli::cli_main;
pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
