//! Exact scalars, Bernoulli numbers and sparse exact linear algebra.

mod bernoulli;
pub mod elim;
mod homology;
mod matrix;

pub use bernoulli::{bernoulli, bernoulli_normalized, binomial, factorial};
pub use elim::{kernel, rank, rank_kernel, rank_rational, ColumnSpace, Echelon};
pub use homology::{homology, homology_dim, Homology};
pub use matrix::SparseMatrix;
