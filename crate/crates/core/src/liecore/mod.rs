//! Concrete finite-dimensional graded Lie algebras over truncated polynomial
//! rings `ℚ[t]/(t^N)`, evaluation of free-Lie expressions in them, and
//! exponential conjugation.
//!
//! Nilpotency is never a property of the bare algebra here: it comes from
//! coefficients in the maximal ideal `(t)`, whose `N`-th power vanishes.

mod artin;
mod element;
mod matrix;
mod structlie;

pub use artin::{ArtinElem, ArtinLine};
pub use element::{evaluate, ArtinLie, LieElement};
pub use matrix::{exp_ad, exp_conjugate, ArtinMatrix, MatrixLie};
#[allow(unused_imports)]
pub(crate) use structlie::{koszul, to_dense, to_sparse};
pub use structlie::{
    AxiomReport, BasisVector, BracketJson, DifferentialJson, RepJson, StructLie, StructLieJson,
    Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("unknown basis name {0:?}")]
    UnknownName(String),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("elements from different algebras or artin rings")]
    MixedAlgebras,
    #[error("no elements to evaluate on")]
    EmptyAssignment,
    #[error("no value assigned to generator {0}")]
    MissingGenerator(usize),
    #[error("element is not nilpotent (coefficients outside the maximal ideal)")]
    NotNilpotent,
    #[error("{0}")]
    Parse(String),
}
