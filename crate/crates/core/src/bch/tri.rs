use std::collections::BTreeMap;

use super::{BchTable, E, X, Y, Z};
use crate::freelie::{evaluate, letter_counts, FreeLieElement, LieAlgebra};
use crate::Rational;

/// The free Lie algebra modulo everything of degree above `cap`.
#[derive(Debug, Clone, Copy)]
pub struct TruncatedFreeLie {
    pub cap: usize,
}

impl LieAlgebra<Rational> for TruncatedFreeLie {
    type Elem = E;

    fn zero(&self) -> E {
        E::zero()
    }

    fn add(&self, a: &E, b: &E) -> E {
        a.add(b)
    }

    fn scale(&self, a: &E, c: &Rational) -> E {
        a.scale(c)
    }

    fn bracket(&self, a: &E, b: &E) -> E {
        let mut out = E::zero();
        for da in 1..=a.max_degree() {
            let pa = a.homogeneous(da);
            if pa.is_zero() {
                continue;
            }
            for db in 1..=self.cap.saturating_sub(da).min(b.max_degree()) {
                let pb = b.homogeneous(db);
                if !pb.is_zero() {
                    out = out.add(&pa.bracket(&pb));
                }
            }
        }
        out
    }

    fn is_zero(&self, a: &E) -> bool {
        a.is_zero()
    }
}

/// Which way the three-fold product is bracketed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    /// `β(β(X,Y),Z)`
    Left,
    /// `β(X,β(Y,Z))`
    Right,
}

/// Tridegree components of `β(X,Y,Z)` up to total degree `cap`, obtained by
/// substituting the bivariate series into itself.
pub fn trivariate_series(
    table: &BchTable,
    grouping: Grouping,
    cap: usize,
) -> BTreeMap<(usize, usize, usize), E> {
    let cap = cap.min(table.cap());
    let alg = TruncatedFreeLie { cap };
    let series = table.series(cap);
    let assignment = match grouping {
        Grouping::Left => [series.clone(), E::generator(Z)],
        Grouping::Right => [E::generator(X), series.relabel(&[Y, Z])],
    };
    let total = evaluate(&series, &alg, &assignment);
    let mut out: BTreeMap<(usize, usize, usize), E> = BTreeMap::new();
    for (w, c) in total.terms() {
        let n = letter_counts(w, 3);
        let piece = out.entry((n[0], n[1], n[2])).or_default();
        *piece = piece.add(&FreeLieElement::from_terms([(w.clone(), c.clone())]).unwrap());
    }
    out
}
