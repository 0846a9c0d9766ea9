//! The complex `J(𝔤)` of a semi-cosimplicial Lie algebra.
//!
//! A SELA assigns a finite-dimensional graded Lie algebra `𝔤_S` (degrees 0..2)
//! to every simplex `S` of dimension ≤ 2 on an ordered index set, together
//! with signed coface maps `r_{S,T} = ε(S,T)·h_{S,T}` for `S ⊂ T`. Its
//! standard complex is `K = ⊕ 𝔤_S[−s]` with `D = δ + (−1)^{s+q+1}∂`.
//!
//! `J` is the graded-symmetric algebra on `V = K[1]`; its differential is the
//! coderivation extension of an `L∞` structure whose Maurer–Cartan locus is
//! the descent data `(φ_α, ψ_αβ)` modulo gauge. It is filtered by word length,
//! and `J_S = ⊕_{p ≥ 1} F_pJ ⊗ t^p` computes the deformations over `ℚ[t]/tᴺ`.

mod assemble;
mod cocycle;
pub mod examples;
mod linf;
mod sela;
mod standard;
mod sym;

pub use assemble::{t_layer, DSquaredReport, GradedPiece, JbCohomology, JbComplex, JbConfig};
pub use cocycle::{
    gauge_cocycle, linear_chain, maurer_cartan, obstruction, special_cocycle, verify_chain,
    verify_cocycle, CocycleCheck, CocycleData, CocycleJson, ObstructionReport,
};
pub use linf::{Kind, LInfinity, VBasis};
pub use sela::{epsilon, Sela, SelaJson, SelaMorphism, Simplex};
pub use standard::{KBasis, StandardComplex};
pub use sym::{Chain, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JbError {
    #[error("not an increasing simplex of the index set: {0}")]
    BadSimplex(String),
    #[error("simplex {0} has dimension above 2")]
    DimensionTooHigh(String),
    #[error("invalid SELA:\n{}", .0.join("\n"))]
    InvalidSela(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree {degree} on simplex {simplex} is outside the supported range")]
    UnsupportedDegree { simplex: String, degree: i32 },
    #[error("symmetric power cap {cap} is below N − 1 = {needed}")]
    SymCapTooSmall { cap: usize, needed: usize },
    #[error("degree {degree} needs the window to contain {lo}..={hi}")]
    WindowTooSmall { degree: i32, lo: i32, hi: i32 },
    #[error("obstruction requires to_order = from_order + 1 (got {from} → {to})")]
    NotInSocle { from: usize, to: usize },
    #[error("invalid cocycle data:\n{}", .0.join("\n"))]
    InvalidCocycle(Vec<String>),
    #[error("Artin order must be at least 1")]
    ZeroOrder,
}
