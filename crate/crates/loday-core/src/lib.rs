//! Exact-arithmetic toolkit for finite-dimensional nonassociative structures
//! presented by structure constants.
//!
//! The crate represents algebras with one or more bilinear products (Leibniz
//! algebras, perm algebras, Novikov dialgebras, Gel'fand–Dorfman dialgebras,
//! anti-pre-Leibniz and pre-Leibniz splittings, …) as dense rank-3 arrays of
//! exact rationals over a fixed basis, and decides multilinear identities by
//! exhausting basis tuples. Because every supported identity is linear in each
//! variable separately, vanishing on all basis tuples is equivalent to
//! vanishing identically, so every check is a decision, not an approximation.
//!
//! Main ingredients:
//!
//! - [`rational`]: the [`Rational`] scalar — arbitrary-precision fractions in
//!   canonical form; the only scalar type. Floats are deliberately absent.
//! - [`linalg`]: dense [`Vector`]/[`Matrix`] over `Rational` with exact
//!   Gaussian elimination (solve, invert, rank).
//! - [`algebra`]: [`MultTable`] structure constants, [`BilinearForm`]s,
//!   [`LinearEndo`]s, [`RepBundle`] representation data and the [`AlgebraBundle`]
//!   container, plus the table calculus (flip, sum, scale, multiplication
//!   operators, dualization).
//! - [`identity`]: the [`Term`]/[`Equation`]/[`IdentitySystem`] expression
//!   trees and the exhaustive basis-tuple checker producing [`CheckReport`]s
//!   with deterministic counterexamples.
//! - [`registry`]: the named identity systems (leibniz, novikov-dialgebra,
//!   anti-pre-leibniz, gd-dialgebra, …) bundled for lookup by name.
//! - [`rep`]: representation checks routed through semidirect products, and
//!   representation equivalence.
//! - [`construct`]: every structure-to-structure construction — semidirect
//!   products, dual representations, Levi-Civita splittings from invariant
//!   forms and 2-cocycles, anti-O-operator machinery, the ±2 transforms
//!   between split pairs and Novikov dialgebras, double structures on A ⊕ A*,
//!   perm-derived Leibniz products, GD-dialgebra builders.
//! - [`affine`]: the graded product on A ⊗ K[t, t⁻¹] and an exact, finite
//!   decision procedure for "Leibniz in all degrees".
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the CLI live in
//! the companion crate.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod affine;
pub mod algebra;
pub mod construct;
pub mod error;
pub mod identity;
pub mod linalg;
pub mod rational;
pub mod registry;
pub mod rep;

pub use affine::{DegreeTriple, LaurentElement};
pub use algebra::{
    dualize_endo, AlgebraBundle, BilinearForm, LinearEndo, MultTable, RepBundle, Side,
};
pub use construct::{OperatorMode, SplitFlavor, SplitPair};
pub use error::Error;
pub use identity::{
    Assignment, CheckReport, Counterexample, Defect, Equation, EquationKind, IdentitySystem, Term,
    Var,
};
pub use linalg::{Matrix, Vector};
pub use rational::Rational;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
