//! Crate-wide error type.
//!
//! One enum covers all failure modes of the computational layer: shape
//! mismatches, singular linear systems, unresolved names, and the precondition
//! failures raised by the checked constructions (each construction that
//! requires an axiom system on its input has a dedicated variant so callers
//! can tell *which* hypothesis failed).

use alloc::string::String;
use thiserror::Error;

/// Every error produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// The dimension required by the operation.
        expected: usize,
        /// The dimension actually supplied.
        found: usize,
    },

    /// A basis index lies outside `0..dim`.
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        /// The offending index.
        index: usize,
        /// The dimension it was checked against.
        dim: usize,
    },

    /// The same `(i, j, k)` slot of a multiplication table was supplied
    /// twice.
    #[error("duplicate structure constant at ({i}, {j}, {k})")]
    DuplicateConstant {
        /// First factor's basis index.
        i: usize,
        /// Second factor's basis index.
        j: usize,
        /// Output basis index.
        k: usize,
    },

    /// A linear system has no unique solution (coefficient matrix not
    /// invertible).
    #[error("singular matrix")]
    SingularMatrix,

    /// A named product, form, or map is absent from the bundle it was
    /// requested from.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// An equation references a variable the assignment does not bind.
    #[error("unassigned variable: {0}")]
    UnassignedVariable(char),

    /// No identity system is registered under the given name.
    #[error("unknown identity system: {0}")]
    UnknownSystem(String),

    /// A bilinear form required to be nondegenerate has a singular Gram
    /// matrix.
    #[error("bilinear form is degenerate")]
    DegenerateForm,

    /// A bilinear form required to be skew-symmetric is not.
    #[error("bilinear form is not skew-symmetric")]
    NotSkew,

    /// A bilinear form fails the 2-cocycle identity for the given product.
    #[error("bilinear form is not a 2-cocycle")]
    NotCocycle,

    /// A linear map fails the anti-O-operator equation for the given
    /// representation.
    #[error("map is not an anti-O-operator")]
    NotAntiO,

    /// A product fails the perm-algebra identities.
    #[error("product is not a perm product")]
    NotPerm,

    /// An operator (averaging, derivation, …) fails its defining axiom.
    #[error("operator axiom fails: {0}")]
    OperatorAxiomFails(String),

    /// A split pair fails the anti-pre-Leibniz identities.
    #[error("pair is not anti-pre-Leibniz")]
    NotAntiPreLeibniz,

    /// A split pair fails the pre-Leibniz identities.
    #[error("pair is not pre-Leibniz")]
    NotPreLeibniz,

    /// A split pair fails the Novikov-dialgebra identities.
    #[error("pair is not a Novikov dialgebra")]
    NotNovikovDialgebra,

    /// A (bracket, product) pair fails the Gel'fand–Dorfman algebra
    /// identities.
    #[error("bundle is not a GD algebra")]
    NotGDAlgebra,

    /// A (product, pair) triple fails the Gel'fand–Dorfman dialgebra
    /// identities.
    #[error("bundle is not a GD dialgebra")]
    NotGDDialgebra,
}

impl Error {
    /// Shorthand for [`Error::DimensionMismatch`].
    #[must_use]
    pub fn dim_mismatch(expected: usize, found: usize) -> Self {
        Error::DimensionMismatch { expected, found }
    }
}
