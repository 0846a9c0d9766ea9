use std::collections::BTreeMap;

use super::lyndon::Word;
use crate::scalar::Scalar;

/// Element of the free associative algebra: rational combination of words.
#[derive(Debug, Clone, PartialEq)]
pub struct AssocPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for AssocPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AssocPoly<S> {
    pub fn zero() -> Self {
        AssocPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), S::one())
    }

    pub fn letter(a: u8) -> Self {
        Self::monomial(vec![a], S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, S> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let nv = x.clone() + c;
                if nv.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = nv;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AssocPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Concatenation product, dropping words longer than `max_len` if given.
    pub fn mul_truncated(&self, other: &Self, max_len: Option<usize>) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if max_len.is_some_and(|m| a.len() + b.len() > m) {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Part made of words of exactly `len` letters.
    pub fn homogeneous(&self, len: usize) -> Self {
        AssocPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Part whose words have the given letter counts.
    pub fn multihomogeneous(&self, counts: &[usize]) -> Self {
        AssocPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| letter_counts(w, counts.len()) == counts)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

pub fn letter_counts(w: &[u8], letters: usize) -> Vec<usize> {
    let mut c = vec![0; letters];
    for &a in w {
        if (a as usize) < letters {
            c[a as usize] += 1;
        }
    }
    c
}

/// Left-normed bracketing `[w1,[w2,[...,w_d]]]` of a word, expanded.
fn dynkin_word<S: Scalar>(w: &[u8]) -> AssocPoly<S> {
    match w.split_first() {
        None => AssocPoly::zero(),
        Some((&a, [])) => AssocPoly::letter(a),
        Some((&a, rest)) => {
            let inner = dynkin_word::<S>(rest);
            AssocPoly::letter(a).commutator(&inner)
        }
    }
}

/// Dynkin map: sends each word of length `d` to its left-normed bracketing
/// divided by `d`. On Lie elements it is the identity.
pub fn dynkin_projection<S: Scalar>(p: &AssocPoly<S>) -> AssocPoly<S> {
    let mut out = AssocPoly::zero();
    for (w, c) in p.terms() {
        if w.is_empty() {
            continue;
        }
        let f = c.clone() / S::from_i64(w.len() as i64);
        out = out.add(&dynkin_word::<S>(w).scale(&f));
    }
    out
}
