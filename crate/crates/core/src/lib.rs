//! Finite groups, their unitary irreducible representations, non-Abelian
//! quantum Fourier transforms and the Deutsch–Jozsa–Høyer promise problem.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: multiplication-table groups and the standard constructors.
//! - [`representation`]: unitary irreps, the indexing bijection `β`, the
//!   Weyl unitary trick and Schur orthogonality checks.
//! - [`qft`]: the dense Fourier matrix over a group and its adjoint.
//! - [`poly`] and [`cyclotomic`]: exact integer polynomials, cyclotomic
//!   polynomials and the non-negative decomposition of multiples of `Φ_n`.
//! - [`promise`]: ρ-constant / ρ-balanced classification by definition,
//!   through the group ring, and through `Φ_n | P_f` for cyclic codomains.
//! - [`circuit`]: exact state-vector simulation of the one-query circuit.
//! - [`formats`]: the JSON documents consumed and produced by the CLI.

pub mod circuit;
pub mod cyclotomic;
mod error;
pub mod formats;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod promise;
pub mod qft;
pub mod representation;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupKind, Subgroup};
pub use poly::IntPolynomial;
pub use representation::{EntryIndex, IrrepSet, Representation};

/// Default tolerance for validating representations and unitarity.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Default tolerance for circuit verdicts (probability close to 0 or 1).
pub const DEFAULT_VERDICT_TOL: f64 = 1e-6;
