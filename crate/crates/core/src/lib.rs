pub mod bch;
pub mod exactnum;
pub mod freelie;
pub mod jbcomplex;
pub mod liecore;
pub mod scalar;
pub mod schemes;

pub use scalar::Scalar;

/// Arbitrary-precision exact fraction, the default scalar.
pub type Rational = num_rational::BigRational;
pub type RatMatrix = exactnum::SparseMatrix<Rational>;
pub type RatPoly = schemes::Poly<Rational>;
