use num_traits::Zero;

use super::elim::{rank_kernel, ColumnSpace};
use super::SparseMatrix;
use crate::Rational;

/// Cohomology of `A --d_in--> B --d_out--> C` at `B`.
#[derive(Debug, Clone, PartialEq)]
pub struct Homology {
    pub dim: usize,
    /// Cocycles whose classes form a basis.
    pub representatives: Vec<Vec<Rational>>,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

/// `ker d_out / im d_in`; `d_in` has `dim B` rows and `d_out` has `dim B` columns.
pub fn homology(d_in: &SparseMatrix<Rational>, d_out: &SparseMatrix<Rational>) -> Homology {
    assert_eq!(d_in.rows(), d_out.cols(), "composable maps expected");
    let (_, kernel) = rank_kernel(d_out);
    let mut span = d_in.clone();
    let image_dim = ColumnSpace::new(d_in).dim();
    let mut representatives = Vec::new();
    for k in &kernel {
        let cs = ColumnSpace::new(&span);
        if cs.contains(k) {
            continue;
        }
        let mut col = SparseMatrix::zeros(span.rows(), 1);
        for (i, x) in k.iter().enumerate() {
            if !x.is_zero() {
                col.set(i, 0, x.clone());
            }
        }
        span = span.hconcat(&col);
        representatives.push(k.clone());
    }
    Homology {
        dim: kernel.len() - image_dim,
        representatives,
        kernel_dim: kernel.len(),
        image_dim,
    }
}

/// Dimension only, via ranks.
pub fn homology_dim(d_in: &SparseMatrix<Rational>, d_out: &SparseMatrix<Rational>) -> usize {
    let (r_out, _) = rank_kernel(d_out);
    let (r_in, _) = rank_kernel(d_in);
    d_out.cols() - r_out - r_in
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    #[test]
    fn circle() {
        // two vertices, two edges: H^0 = H^1 = 1
        let q = |n: i64| Rational::from_i64(n);
        let d0 = SparseMatrix::from_dense(&[vec![q(-1), q(1)], vec![q(-1), q(1)]]);
        let h0 = homology(&SparseMatrix::zeros(2, 0), &d0);
        assert_eq!(h0.dim, 1);
        let h1 = homology(&d0, &SparseMatrix::zeros(0, 2));
        assert_eq!(h1.dim, 1);
        assert_eq!(h1.representatives.len(), 1);
        assert_eq!(homology_dim(&d0, &SparseMatrix::zeros(0, 2)), 1);
    }
}
