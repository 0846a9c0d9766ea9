use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::assoc::{dynkin_projection, letter_counts, AssocPoly};
use super::lyndon::{is_lyndon, lyndon_expansion, standard_factorization, Word};
use super::FreeLieError;
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::Rational;

/// Rational combination of Lyndon basis elements `b(w)` of the free Lie algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeLieElement<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for FreeLieElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> FreeLieElement<S> {
    pub fn zero() -> Self {
        FreeLieElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(a: u8) -> Self {
        Self::basis(vec![a])
    }

    /// The basis element `b(w)` for a Lyndon word `w`.
    pub fn basis(w: Word) -> Self {
        assert!(is_lyndon(&w), "{w:?} is not a Lyndon word");
        let mut terms = BTreeMap::new();
        terms.insert(w, S::one());
        FreeLieElement { terms }
    }

    /// Builds an element from `(word, coefficient)` pairs; every word must be Lyndon.
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Result<Self, FreeLieError> {
        let mut out = Self::zero();
        for (w, c) in terms {
            if !is_lyndon(&w) {
                return Err(FreeLieError::NotLyndon(w));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn terms(&self) -> &BTreeMap<Word, S> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Word, c: S) {
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
        FreeLieElement {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    /// Expansion into the free associative algebra, brackets as commutators.
    pub fn expand_associative(&self) -> AssocPoly<S> {
        let mut out = AssocPoly::zero();
        for (w, c) in &self.terms {
            for (u, k) in lyndon_expansion(w).iter() {
                out.add_term(u.clone(), c.clone() * S::from_i64(*k));
            }
        }
        out
    }

    /// Reads Lyndon coefficients off an associative polynomial that is known
    /// to be a Lie element, using triangularity of the basis expansion: the
    /// least word in the support of a Lie element is Lyndon, with coefficient
    /// equal to the coefficient of its basis element.
    pub fn from_lie_assoc(p: &AssocPoly<S>) -> Result<Self, FreeLieError> {
        let mut rem: BTreeMap<Word, S> = p.terms().clone();
        let mut out = Self::zero();
        while let Some((w, c)) = rem.pop_first() {
            if w.is_empty() || !is_lyndon(&w) {
                return Err(FreeLieError::NotLie(w));
            }
            for (u, k) in lyndon_expansion(&w).iter() {
                if *u == w {
                    continue;
                }
                let delta = c.clone() * S::from_i64(*k);
                let nv = rem.get(u).cloned().unwrap_or_else(S::zero) - delta;
                if nv.is_zero() {
                    rem.remove(u);
                } else {
                    rem.insert(u.clone(), nv);
                }
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Applies the Dynkin projection to `p` and extracts Lyndon coefficients.
    pub fn from_assoc_projected(p: &AssocPoly<S>) -> Self {
        Self::from_lie_assoc(&dynkin_projection(p))
            .expect("Dynkin projection always yields a Lie element")
    }

    pub fn bracket(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let c = self
            .expand_associative()
            .commutator(&other.expand_associative());
        Self::from_lie_assoc(&c).expect("commutator of Lie elements is Lie")
    }

    /// Part of total degree `len`.
    pub fn homogeneous(&self, len: usize) -> Self {
        self.filter_words(|w| w.len() == len)
    }

    /// Drops every term of total degree above `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        self.filter_words(|w| w.len() <= cap)
    }

    fn filter_words(&self, keep: impl Fn(&[u8]) -> bool) -> Self {
        FreeLieElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Changes the coefficient field.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FreeLieElement<T> {
        let mut out = FreeLieElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Part whose words have exactly the given letter counts.
    pub fn multihomogeneous(&self, counts: &[usize]) -> Self {
        FreeLieElement {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| letter_counts(w, counts.len()) == counts)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Letter counts of the element when it is multihomogeneous.
    pub fn multidegree(&self, letters: usize) -> Option<Vec<usize>> {
        let mut it = self.terms.keys().map(|w| letter_counts(w, letters));
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    /// Weighted degree with per-letter weights, when homogeneous.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self
            .terms
            .keys()
            .map(|w| w.iter().map(|&a| weights[a as usize]).sum::<u32>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Substitutes letters: `map[a]` is the letter replacing `a`.
    pub fn relabel(&self, map: &[u8]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let tree = BracketExpr::<S>::basis_tree(w).relabel(map);
            out = out.add(&lie_normal_form(&tree).scale(c));
        }
        out
    }
}

/// Formal bracket expression over generators.
#[derive(Debug, Clone, PartialEq)]
pub enum BracketExpr<S> {
    Gen(u8),
    Bracket(Box<BracketExpr<S>>, Box<BracketExpr<S>>),
    Sum(Vec<(S, BracketExpr<S>)>),
}

impl<S: Scalar> BracketExpr<S> {
    pub fn gen(a: u8) -> Self {
        BracketExpr::Gen(a)
    }

    pub fn br(a: Self, b: Self) -> Self {
        BracketExpr::Bracket(Box::new(a), Box::new(b))
    }

    /// Standard bracketing of a Lyndon word.
    pub fn basis_tree(w: &[u8]) -> Self {
        match standard_factorization(w) {
            None => BracketExpr::Gen(w[0]),
            Some((u, v)) => Self::br(Self::basis_tree(u), Self::basis_tree(v)),
        }
    }

    pub fn relabel(&self, map: &[u8]) -> Self {
        match self {
            BracketExpr::Gen(a) => BracketExpr::Gen(map[*a as usize]),
            BracketExpr::Bracket(a, b) => Self::br(a.relabel(map), b.relabel(map)),
            BracketExpr::Sum(v) => {
                BracketExpr::Sum(v.iter().map(|(c, e)| (c.clone(), e.relabel(map))).collect())
            }
        }
    }

    pub fn expand(&self) -> AssocPoly<S> {
        match self {
            BracketExpr::Gen(a) => AssocPoly::letter(*a),
            BracketExpr::Bracket(a, b) => a.expand().commutator(&b.expand()),
            BracketExpr::Sum(v) => v.iter().fold(AssocPoly::zero(), |acc, (c, e)| {
                acc.add(&e.expand().scale(c))
            }),
        }
    }
}

/// Rewrites a bracket expression into the Lyndon basis.
pub fn lie_normal_form<S: Scalar>(expr: &BracketExpr<S>) -> FreeLieElement<S> {
    FreeLieElement::from_assoc_projected(&expr.expand())
}

/// A Lie algebra in which free Lie elements can be evaluated.
pub trait LieAlgebra<S: Scalar> {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &S) -> Self::Elem;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// Evaluates `e` with letter `a` sent to `assignment[a]`.
pub fn evaluate<S: Scalar, A: LieAlgebra<S>>(
    e: &FreeLieElement<S>,
    alg: &A,
    assignment: &[A::Elem],
) -> A::Elem {
    let mut memo: HashMap<Word, A::Elem> = HashMap::new();
    let mut acc = alg.zero();
    for (w, c) in e.terms() {
        let v = eval_word(w, alg, assignment, &mut memo);
        acc = alg.add(&acc, &alg.scale(&v, c));
    }
    acc
}

fn eval_word<S: Scalar, A: LieAlgebra<S>>(
    w: &[u8],
    alg: &A,
    assignment: &[A::Elem],
    memo: &mut HashMap<Word, A::Elem>,
) -> A::Elem {
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let v = match standard_factorization(w) {
        None => assignment[w[0] as usize].clone(),
        Some((u, v)) => {
            let a = eval_word(u, alg, assignment, memo);
            if alg.is_zero(&a) {
                alg.zero()
            } else {
                let b = eval_word(v, alg, assignment, memo);
                alg.bracket(&a, &b)
            }
        }
    };
    memo.insert(w.to_vec(), v.clone());
    v
}

/// The free Lie algebra itself, used for substitution of Lie elements.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeLie;

impl<S: Scalar> LieAlgebra<S> for FreeLie {
    type Elem = FreeLieElement<S>;

    fn zero(&self) -> Self::Elem {
        FreeLieElement::zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn scale(&self, a: &Self::Elem, c: &S) -> Self::Elem {
        a.scale(c)
    }
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.bracket(b)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

/// Letter labels used when printing words.
pub const DEFAULT_LABELS: &str = "xyzuvwabcdefghijklmnopqrst";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: String,
    pub coeff: String,
}

pub fn word_to_string(w: &[u8]) -> String {
    w.iter()
        .map(|&a| DEFAULT_LABELS.as_bytes()[a as usize] as char)
        .collect()
}

pub fn word_from_string(s: &str) -> Result<Word, FreeLieError> {
    s.chars()
        .map(|ch| {
            DEFAULT_LABELS
                .find(ch)
                .map(|i| i as u8)
                .ok_or(FreeLieError::UnknownLetter(ch))
        })
        .collect()
}

impl FreeLieElement<Rational> {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(w, c)| TermRecord {
                word: word_to_string(w),
                coeff: format_rational(c),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self, FreeLieError> {
        let mut terms = Vec::new();
        for r in records {
            let c = parse_rational(&r.coeff).map_err(|e| FreeLieError::Parse(e.to_string()))?;
            terms.push((word_from_string(&r.word)?, c));
        }
        Self::from_terms(terms)
    }
}
