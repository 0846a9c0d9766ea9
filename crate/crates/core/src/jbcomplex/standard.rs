use std::collections::{BTreeMap, HashMap};

use super::sela::{Sela, Simplex};
use crate::exactnum::{homology, Homology, SparseMatrix};
use num_traits::Zero;

use crate::scalar::Scalar;
use crate::Rational;

/// Basis vector `e_a ∈ 𝔤_S^q` of the total complex, in total degree `s + q`
/// with `s = |S| − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KBasis {
    pub simplex: Simplex,
    pub a: usize,
    pub q: i32,
}

impl KBasis {
    pub fn s(&self) -> i32 {
        self.simplex.len() as i32 - 1
    }

    pub fn total_degree(&self) -> i32 {
        self.s() + self.q
    }
}

/// Total complex `K(𝔤)` with differential `D = δ + (−1)^{s+q+1}∂`, where
/// `δ = Σ r_{S,T}` runs over codimension-one cofaces.
#[derive(Debug, Clone)]
pub struct StandardComplex {
    basis: Vec<KBasis>,
    index: HashMap<KBasis, usize>,
    labels: Vec<String>,
    full: SparseMatrix<Rational>,
}

impl StandardComplex {
    pub fn new(sela: &Sela) -> Self {
        let mut basis = Vec::new();
        for s in sela.simplices() {
            let lie = sela.algebra(&s).unwrap();
            for a in 0..lie.dim() {
                basis.push(KBasis {
                    simplex: s.clone(),
                    a,
                    q: lie.degree(a),
                });
            }
        }
        basis.sort_by(|x, y| {
            (x.total_degree(), x.simplex.len(), &x.simplex, x.a).cmp(&(
                y.total_degree(),
                y.simplex.len(),
                &y.simplex,
                y.a,
            ))
        });
        let index: HashMap<KBasis, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();
        let labels = basis
            .iter()
            .map(|b| {
                format!(
                    "{}@{}",
                    sela.algebra(&b.simplex).unwrap().name(b.a),
                    sela.label(&b.simplex)
                )
            })
            .collect();
        let n = basis.len();
        let mut full = SparseMatrix::zeros(n, n);
        let mut cofaces: BTreeMap<Simplex, Vec<(Simplex, SparseMatrix<Rational>)>> =
            BTreeMap::new();
        for s in sela.simplices() {
            let list = sela
                .cofaces_of(&s)
                .into_iter()
                .map(|t| {
                    let r = sela.coface(&s, &t);
                    (t, r)
                })
                .collect();
            cofaces.insert(s, list);
        }
        for (j, b) in basis.iter().enumerate() {
            for (t, r) in &cofaces[&b.simplex] {
                let tlie = sela.algebra(t).unwrap();
                for c in 0..tlie.dim() {
                    let x = r.get(c, b.a);
                    if !x.is_zero() {
                        let key = KBasis {
                            simplex: t.clone(),
                            a: c,
                            q: tlie.degree(c),
                        };
                        full.add_to(index[&key], j, x);
                    }
                }
            }
            let lie = sela.algebra(&b.simplex).unwrap();
            let sign = Rational::from_i64(if (b.s() + b.q + 1) % 2 == 0 { 1 } else { -1 });
            for (c, x) in lie.differential().transpose().row(b.a) {
                let key = KBasis {
                    simplex: b.simplex.clone(),
                    a: *c,
                    q: lie.degree(*c),
                };
                full.add_to(index[&key], j, x.clone() * sign.clone());
            }
        }
        StandardComplex {
            basis,
            index,
            labels,
            full,
        }
    }

    pub fn basis(&self) -> &[KBasis] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, b: &KBasis) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// The differential on all of `K` at once.
    pub fn full_differential(&self) -> &SparseMatrix<Rational> {
        &self.full
    }

    /// Positions of the basis vectors of total degree `n`.
    pub fn degree_positions(&self, n: i32) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].total_degree() == n)
            .collect()
    }

    pub fn dim(&self, n: i32) -> usize {
        self.degree_positions(n).len()
    }

    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let lo = self.basis.iter().map(KBasis::total_degree).min()?;
        let hi = self.basis.iter().map(KBasis::total_degree).max()?;
        Some((lo, hi))
    }

    /// `D: K^n → K^{n+1}` in the bases given by [`Self::degree_positions`].
    pub fn differential(&self, n: i32) -> SparseMatrix<Rational> {
        let src = self.degree_positions(n);
        let dst = self.degree_positions(n + 1);
        let mut m = SparseMatrix::zeros(dst.len(), src.len());
        for (jj, &j) in src.iter().enumerate() {
            for (ii, &i) in dst.iter().enumerate() {
                let x = self.full.get(i, j);
                if !x.is_zero() {
                    m.set(ii, jj, x);
                }
            }
        }
        m
    }

    pub fn cohomology(&self, n: i32) -> Homology {
        homology(&self.differential(n - 1), &self.differential(n))
    }

    /// True when `D∘D = 0`.
    pub fn is_complex(&self) -> bool {
        self.full.mul(&self.full).is_zero()
    }
}
