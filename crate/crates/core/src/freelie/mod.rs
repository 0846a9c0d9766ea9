//! Free Lie algebras on finitely many letters with the Lyndon basis.
//!
//! Elements are stored as combinations of Lyndon words `w`, each standing for
//! the bracketing `b(w)` given by the standard factorization. All rewriting
//! goes through the free associative algebra: expand, project with the Dynkin
//! map, and read off Lyndon coefficients by triangularity.

pub mod admon;
mod assoc;
mod element;
mod lyndon;

pub use admon::{ad_monomial, ad_monomial_in, ad_monomial_sym, ad_monomial_sym_in, permutations};
pub use assoc::{dynkin_projection, letter_counts, AssocPoly};
pub use element::{
    evaluate, lie_normal_form, word_from_string, word_to_string, BracketExpr, FreeLie,
    FreeLieElement, LieAlgebra, TermRecord, DEFAULT_LABELS,
};
pub use lyndon::{is_lyndon, lyndon_words, standard_factorization, witt_dimension, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeLieError {
    #[error("word {0:?} is not a Lyndon word")]
    NotLyndon(Word),
    #[error("associative polynomial is not a Lie element (offending word {0:?})")]
    NotLie(Word),
    #[error("subset has {subset} elements but {expected} X letters were requested")]
    CardinalityMismatch { subset: usize, expected: usize },
    #[error("subset {subset:?} is not a set of positions in 1..={n}")]
    BadSubset { subset: Vec<usize>, n: usize },
    #[error("ad-monomial needs at least one letter")]
    EmptyMonomial,
    #[error("unknown letter {0:?}")]
    UnknownLetter(char),
    #[error("{0}")]
    Parse(String),
}

/// All Lyndon basis elements of the given length over an alphabet of `letters` letters.
pub fn lyndon_basis(letters: u8, total_degree: usize) -> Vec<Word> {
    lyndon_words(letters, total_degree)
}
