//! Graded Baker–Campbell–Hausdorff components.
//!
//! `β(X,Y) = log(exp X · exp Y)` is built degree by degree from the two
//! differential equations
//!
//! ```text
//! E_X β = C(ad β)(X),    E_Y β = C(−ad β)(Y),    C(x) = x / (e^x − 1),
//! ```
//!
//! where `E_X`, `E_Y` are the Euler operators counting `X` and `Y`. Adding them,
//! the degree-`n` part satisfies `n·β_n = [C(ad β)X + C(−ad β)Y]_n`, and the
//! right-hand side only involves `β_{<n}`. Letters: `X = 0`, `Y = 1`, `Z = 2`.

mod eval;
mod oracle;
mod tri;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::exactnum::bernoulli_normalized;
use crate::freelie::{FreeLieElement, TermRecord};
use crate::Rational;

pub use eval::{eval_bch, eval_bch3};
pub use oracle::{bch_oracle, log_of_three};
pub use tri::{trivariate_series, Grouping, TruncatedFreeLie};

type E = FreeLieElement<Rational>;

pub const X: u8 = 0;
pub const Y: u8 = 1;
pub const Z: u8 = 2;

/// Default degree cap of a table.
pub const DEFAULT_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BchError {
    #[error("degree cap must be at least 1")]
    ZeroCap,
    #[error("degree {requested} exceeds the table cap {cap}")]
    DegreeBeyondCap { requested: usize, cap: usize },
    #[error("nilpotency bound {bound} exceeds the table cap {cap}")]
    NilpotencyBeyondCap { bound: usize, cap: usize },
}

/// The BCH components up to a degree cap; the trivariate part is built on
/// first use and then frozen.
#[derive(Debug)]
pub struct BchTable {
    cap: usize,
    bi: BTreeMap<(usize, usize), E>,
    tri: OnceLock<BTreeMap<(usize, usize, usize), E>>,
}

impl BchTable {
    pub fn new(cap: usize) -> Result<Self, BchError> {
        if cap == 0 {
            return Err(BchError::ZeroCap);
        }
        Ok(BchTable {
            cap,
            bi: recursion(cap),
            tri: OnceLock::new(),
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<(), BchError> {
        if n > self.cap {
            Err(BchError::DegreeBeyondCap {
                requested: n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// `β_{i,j}(X, Y)`.
    pub fn bigraded(&self, i: usize, j: usize) -> Result<E, BchError> {
        self.check(i + j)?;
        Ok(self.bi.get(&(i, j)).cloned().unwrap_or_default())
    }

    /// `β_{i,j,k}(X, Y, Z)`, from `β(X,Y,Z) = β(β(X,Y),Z)`.
    pub fn trigraded(&self, i: usize, j: usize, k: usize) -> Result<E, BchError> {
        self.check(i + j + k)?;
        Ok(self.tri().get(&(i, j, k)).cloned().unwrap_or_default())
    }

    pub fn bigraded_components(&self) -> &BTreeMap<(usize, usize), E> {
        &self.bi
    }

    pub fn trigraded_components(&self) -> &BTreeMap<(usize, usize, usize), E> {
        self.tri()
    }

    fn tri(&self) -> &BTreeMap<(usize, usize, usize), E> {
        self.tri
            .get_or_init(|| trivariate_series(self, Grouping::Left, self.cap))
    }

    /// Sum of all components of total degree `≤ n`.
    pub fn series(&self, n: usize) -> E {
        self.bi
            .iter()
            .filter(|((i, j), _)| i + j <= n)
            .fold(E::zero(), |acc, (_, e)| acc.add(e))
    }

    pub fn series3(&self, n: usize) -> E {
        self.tri()
            .iter()
            .filter(|((i, j, k), _)| i + j + k <= n)
            .fold(E::zero(), |acc, (_, e)| acc.add(e))
    }

    /// Every bidegree `(i,j)` with `1 ≤ i+j ≤ cap`, zero components included.
    pub fn bigraded_records(&self) -> Vec<GradedRecord> {
        let mut out = Vec::new();
        for n in 1..=self.cap {
            for i in (0..=n).rev() {
                let e = self.bi.get(&(i, n - i)).cloned().unwrap_or_default();
                out.push(GradedRecord {
                    bidegree: vec![i, n - i],
                    terms: e.to_records(),
                });
            }
        }
        out
    }

    pub fn trigraded_records(&self) -> Vec<GradedRecord> {
        let mut out = Vec::new();
        for n in 1..=self.cap {
            for i in (0..=n).rev() {
                for j in (0..=n - i).rev() {
                    let k = n - i - j;
                    let e = self.tri().get(&(i, j, k)).cloned().unwrap_or_default();
                    out.push(GradedRecord {
                        bidegree: vec![i, j, k],
                        terms: e.to_records(),
                    });
                }
            }
        }
        out
    }
}

/// One graded piece in serialized form. `bidegree` has three entries for the
/// trivariate table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRecord {
    pub bidegree: Vec<usize>,
    pub terms: Vec<TermRecord>,
}

/// The graded recursion. `px[t][m]` is the sum over compositions
/// `d_1+…+d_t = m` of `ad(β_{d_1})⋯ad(β_{d_t})(X)`; likewise `py` for `Y`.
fn recursion(cap: usize) -> BTreeMap<(usize, usize), E> {
    let x = E::generator(X);
    let y = E::generator(Y);
    let mut beta: Vec<E> = vec![E::zero()];
    let mut px: Vec<Vec<E>> = vec![vec![x.clone()]];
    let mut py: Vec<Vec<E>> = vec![vec![y.clone()]];
    for n in 1..=cap {
        let m = n - 1;
        // fill chains of β-degree m
        for t in 1..=m {
            if px.len() <= t {
                px.push(Vec::new());
                py.push(Vec::new());
            }
            let chain = |p: &Vec<Vec<E>>| {
                let mut acc = E::zero();
                for d in 1..=m {
                    let inner = p[t - 1].get(m - d).cloned().unwrap_or_default();
                    if !inner.is_zero() {
                        acc = acc.add(&beta[d].bracket(&inner));
                    }
                }
                acc
            };
            let (cx, cy) = (chain(&px), chain(&py));
            while px[t].len() < m {
                px[t].push(E::zero());
                py[t].push(E::zero());
            }
            px[t].push(cx);
            py[t].push(cy);
        }
        let mut rhs = E::zero();
        for t in 0..=m {
            let get =
                |p: &Vec<Vec<E>>| p.get(t).and_then(|r| r.get(m)).cloned().unwrap_or_default();
            let c = bernoulli_normalized(t);
            if c == Rational::from_integer(0.into()) {
                continue;
            }
            let sign = if t % 2 == 0 { c.clone() } else { -c.clone() };
            rhs = rhs.add(&get(&px).scale(&c)).add(&get(&py).scale(&sign));
        }
        let bn = rhs.scale(&Rational::new(1.into(), (n as i64).into()));
        beta.push(bn);
    }
    let mut out = BTreeMap::new();
    for (n, bn) in beta.iter().enumerate().skip(1) {
        for i in 0..=n {
            let piece = bn.multihomogeneous(&[i, n - i]);
            if !piece.is_zero() {
                out.insert((i, n - i), piece);
            }
        }
    }
    out
}
