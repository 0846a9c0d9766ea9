//! Sparse row echelon forms, rank, kernels and column-space reduction.
//!
//! Rational matrices go through a fraction-free path: every row is scaled to a
//! primitive integer vector and elimination uses cross multiplication followed
//! by division by the row content, so entries stay integral and small. Pivots
//! are chosen per column as the candidate of smallest magnitude, ties broken
//! by row sparsity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;
use crate::scalar::Scalar;
use crate::Rational;

type Row<S> = BTreeMap<usize, S>;

/// Upper echelon form: each pivot row has its leading entry at `lead` and no
/// entries to the left of it. Pivot leads are distinct.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pub ncols: usize,
    pub pivots: Vec<(usize, Row<S>)>,
}

impl<S: Scalar> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pivots.iter().map(|(c, _)| *c).collect();
        v.sort_unstable();
        v
    }

    /// Basis of the null space of the original rows, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let mut by_lead: Vec<&(usize, Row<S>)> = self.pivots.iter().collect();
        by_lead.sort_by(|a, b| b.0.cmp(&a.0));
        let pivot_set: std::collections::BTreeSet<usize> =
            self.pivots.iter().map(|(c, _)| *c).collect();
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivot_set.contains(c)) {
            let mut x = vec![S::zero(); self.ncols];
            x[free] = S::one();
            for (lead, row) in &by_lead {
                let mut acc = S::zero();
                for (j, a) in row.range(lead + 1..) {
                    if !x[*j].is_zero() {
                        acc = acc + a.clone() * x[*j].clone();
                    }
                }
                if !acc.is_zero() {
                    x[*lead] = -acc / row[lead].clone();
                }
            }
            out.push(x);
        }
        out
    }

    /// Reduces `v` against the row space; the result vanishes on every pivot
    /// column, which makes it a canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut x = v.to_vec();
        let mut order: Vec<&(usize, Row<S>)> = self.pivots.iter().collect();
        order.sort_by_key(|p| p.0);
        for (lead, row) in order {
            if x[*lead].is_zero() {
                continue;
            }
            let f = x[*lead].clone() / row[lead].clone();
            for (j, a) in row {
                x[*j] = x[*j].clone() - f.clone() * a.clone();
            }
        }
        x
    }
}

fn leading(row: &BTreeMap<usize, impl Sized>) -> Option<usize> {
    row.keys().next().copied()
}

/// Field elimination for an arbitrary scalar type.
pub fn echelon<S: Scalar>(rows: Vec<Row<S>>, ncols: usize) -> Echelon<S> {
    let mut store: Vec<Option<Row<S>>> = Vec::new();
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for mut r in rows {
        r.retain(|_, v| !v.is_negligible());
        if let Some(l) = leading(&r) {
            buckets.entry(l).or_default().push(store.len());
            store.push(Some(r));
        }
    }
    let mut pivots = Vec::new();
    while let Some((col, ids)) = buckets.pop_first() {
        let best = *ids
            .iter()
            .min_by_key(|&&i| {
                let r = store[i].as_ref().unwrap();
                (r[&col].pivot_cost(), r.len())
            })
            .unwrap();
        let piv = store[best].take().unwrap();
        for &i in ids.iter().filter(|&&i| i != best) {
            let mut r = store[i].take().unwrap();
            let f = r[&col].clone() / piv[&col].clone();
            for (j, a) in &piv {
                let nv = r.get(j).cloned().unwrap_or_else(S::zero) - f.clone() * a.clone();
                if nv.is_negligible() {
                    r.remove(j);
                } else {
                    r.insert(*j, nv);
                }
            }
            if let Some(l) = leading(&r) {
                buckets.entry(l).or_default().push(i);
                store[i] = Some(r);
            }
        }
        pivots.push((col, piv));
    }
    Echelon { ncols, pivots }
}

fn primitive(row: &Row<Rational>) -> BTreeMap<usize, BigInt> {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: BTreeMap<usize, BigInt> = row
        .iter()
        .map(|(j, q)| (*j, q.numer() * (&lcm / q.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut BTreeMap<usize, BigInt>) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
}

/// Fraction-free elimination over the rationals.
pub fn echelon_rational(rows: Vec<Row<Rational>>, ncols: usize) -> Echelon<Rational> {
    let mut store: Vec<Option<BTreeMap<usize, BigInt>>> = Vec::new();
    let mut buckets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for r in rows {
        let mut r = r;
        r.retain(|_, v| !v.is_zero());
        let p = primitive(&r);
        if let Some(l) = leading(&p) {
            buckets.entry(l).or_default().push(store.len());
            store.push(Some(p));
        }
    }
    let mut pivots = Vec::new();
    while let Some((col, ids)) = buckets.pop_first() {
        let best = *ids
            .iter()
            .min_by_key(|&&i| {
                let r = store[i].as_ref().unwrap();
                (r[&col].abs(), r.len())
            })
            .unwrap();
        let piv = store[best].take().unwrap();
        let p = piv[&col].clone();
        for &i in ids.iter().filter(|&&i| i != best) {
            let r = store[i].take().unwrap();
            let a = r[&col].clone();
            let g = p.gcd(&a);
            let (pm, am) = (&p / &g, &a / &g);
            // r <- pm * r - am * piv
            let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (j, v) in &r {
                out.insert(*j, v * &pm);
            }
            for (j, v) in &piv {
                let e = out.entry(*j).or_insert_with(BigInt::zero);
                *e -= v * &am;
            }
            out.retain(|_, v| !v.is_zero());
            make_primitive(&mut out);
            if let Some(l) = leading(&out) {
                buckets.entry(l).or_default().push(i);
                store[i] = Some(out);
            }
        }
        let row: Row<Rational> = piv
            .into_iter()
            .map(|(j, v)| (j, Rational::from_integer(v)))
            .collect();
        pivots.push((col, row));
    }
    Echelon { ncols, pivots }
}

fn matrix_rows<S: Scalar>(m: &SparseMatrix<S>) -> Vec<Row<S>> {
    (0..m.rows()).map(|i| m.row(i).clone()).collect()
}

/// Exact rank and kernel basis of a rational matrix.
pub fn rank_kernel(m: &SparseMatrix<Rational>) -> (usize, Vec<Vec<Rational>>) {
    let e = echelon_rational(matrix_rows(m), m.cols());
    (e.rank(), e.kernel())
}

pub fn rank_rational(m: &SparseMatrix<Rational>) -> usize {
    echelon_rational(matrix_rows(m), m.cols()).rank()
}

/// Rank by plain field elimination; works for any scalar.
pub fn rank<S: Scalar>(m: &SparseMatrix<S>) -> usize {
    echelon(matrix_rows(m), m.cols()).rank()
}

pub fn kernel<S: Scalar>(m: &SparseMatrix<S>) -> Vec<Vec<S>> {
    echelon(matrix_rows(m), m.cols()).kernel()
}

/// The column space of a rational matrix, for canonical reduction and solving.
#[derive(Debug, Clone)]
pub struct ColumnSpace {
    echelon: Echelon<Rational>,
    matrix: SparseMatrix<Rational>,
}

impl ColumnSpace {
    pub fn new(m: &SparseMatrix<Rational>) -> Self {
        let t = m.transpose();
        ColumnSpace {
            echelon: echelon_rational(matrix_rows(&t), m.rows()),
            matrix: m.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Canonical representative of `v` modulo the column space.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        self.echelon.reduce(v)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Some `u` with `M u = v`, if one exists.
    pub fn solve(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        let n = self.matrix.cols();
        let mut col = SparseMatrix::zeros(self.matrix.rows(), 1);
        for (i, x) in v.iter().enumerate() {
            col.set(i, 0, -x.clone());
        }
        let aug = self.matrix.hconcat(&col);
        let (_, ker) = rank_kernel(&aug);
        let k = ker.into_iter().find(|k| !k[n].is_zero())?;
        let s = k[n].clone();
        Some(k[..n].iter().map(|x| x.clone() / s.clone()).collect())
    }
}
