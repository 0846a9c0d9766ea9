//! Polynomial algebra for affine schemes: parsing, Gröbner bases, free
//! resolutions, the normal dgla `𝒩 = Hom(F, F₊)`, hypersurface tangent
//! complexes with their Milnor algebras, and Kodaira–Spencer deformations.
//!
//! Degrees follow the cohomological convention: a resolution `F` of the ideal
//! `I` lives in degrees `≤ 0` with `F⁰ → I` given by the generators, and the
//! augmented complex `F₊` adds `F¹ = A`.
//!
//! For a hypersurface the tangent complex is
//! `nA → nA ⊕ A → A`, `v ↦ (f·v, −v(f))`, `(v, a) ↦ v(f) + a·f`, whose `H¹`
//! is `A/(f, ∂f)`. For quasi-homogeneous `f` this equals `A/(∂f)`.

mod complex;
mod deform;
mod groebner;
mod parse;
mod poly;
mod tangent;

pub use complex::{
    hypersurface_resolution, kappa, koszul_resolution, normal_dgla, GradedMap, HomDgla,
    PolyComplex, PolyComplexJson, PolyMatrix,
};
pub use deform::{
    glue_check, ks_cochain, lift_deformation, one_chart_sela, GlueReport, KsCochain, LiftReport,
    Operator, OperatorAlgebra, TPoly,
};
pub use groebner::{buchberger, quotient_dimension, reduce, GroebnerBasis};
pub use parse::{infer_vars, parse_poly, parse_vars};
pub use poly::{divides, monomials_up_to, Exp, MonomialOrder, Poly};
pub use tangent::{
    hypersurface_tangent_dgla, milnor_dim, module_quotient_dimension, normal_h1_dim,
    TangentComplex, TruncatedRank,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error(
        "quotient is not zero-dimensional: no pure power of {variable} among the leading terms"
    )]
    NotZeroDimensional { variable: String },
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("malformed complex: {0}")]
    Shape(String),
    #[error("κ is not a chain map: {0}")]
    KappaFailure(String),
    #[error("deformed differential does not square to zero: {0}")]
    SquareNonzero(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Jb(#[from] crate::jbcomplex::JbError),
    #[error(transparent)]
    Bch(#[from] crate::bch::BchError),
    #[error(transparent)]
    Lie(#[from] crate::liecore::LieError),
}
