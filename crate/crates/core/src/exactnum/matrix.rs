use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse matrix stored row-wise; zero entries are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, S>>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i].get(&j).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    /// Adds `v` to entry `(i, j)`, dropping the entry if it cancels.
    pub fn add_to(&mut self, i: usize, j: usize, v: S) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        if v.is_zero() {
            return;
        }
        let row = &mut self.data[i];
        match row.get_mut(&j) {
            Some(x) => {
                let nv = x.clone() + v;
                if nv.is_zero() {
                    row.remove(&j);
                } else {
                    *x = nv;
                }
            }
            None => {
                row.insert(j, v);
            }
        }
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, S> {
        &self.data[i]
    }

    /// Iterates `(row, col, value)` over stored entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.data[j].insert(i, v.clone());
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let term = a.clone() * b.clone();
                    let e = acc.entry(*j).or_insert_with(S::zero);
                    *e = e.clone() + term;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[i] = acc;
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(S::zero(), |acc, (j, a)| acc + a.clone() * v[*j].clone())
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Stacks `other` to the right of `self`.
    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for (i, j, v) in self.entries() {
            out.data[i].insert(j, v.clone());
        }
        for (i, j, v) in other.entries() {
            out.data[i].insert(self.cols + j, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            out.set(i, j, v.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add_to(i, j, v.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn product_drops_cancellations() {
        let a = SparseMatrix::from_dense(&[vec![q(1), q(1)], vec![q(0), q(2)]]);
        let b = SparseMatrix::from_dense(&[vec![q(1), q(0)], vec![q(-1), q(0)]]);
        let c = a.mul(&b);
        assert!(c.get(0, 0).is_zero());
        assert_eq!(c.get(1, 0), q(-2));
        assert_eq!(c.nnz(), 1);
    }

    #[test]
    fn set_zero_removes_entry() {
        let mut m = SparseMatrix::<Rational>::zeros(2, 2);
        m.set(0, 1, q(3));
        m.add_to(0, 1, q(-3));
        assert!(m.is_zero());
        assert_eq!(m.transpose().rows(), 2);
    }
}
