use super::artin::{ArtinElem, ArtinLine};
use super::LieError;
use crate::freelie::LieAlgebra;
use crate::scalar::Scalar;

/// Square matrix with entries in `ℚ[t]/(t^N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArtinMatrix<S> {
    ring: ArtinLine,
    rows: Vec<Vec<ArtinElem<S>>>,
}

impl<S: Scalar> ArtinMatrix<S> {
    pub fn zero(size: usize, ring: ArtinLine) -> Self {
        ArtinMatrix {
            ring,
            rows: vec![vec![ring.zero(); size]; size],
        }
    }

    pub fn identity(size: usize, ring: ArtinLine) -> Self {
        let mut m = Self::zero(size, ring);
        for i in 0..size {
            m.rows[i][i] = ring.one();
        }
        m
    }

    /// `c · E_ij`
    pub fn unit(size: usize, i: usize, j: usize, c: ArtinElem<S>) -> Self {
        let mut m = Self::zero(size, c.ring());
        m.rows[i][j] = c;
        m
    }

    /// From `t`-adic layers: `layers[k]` is the constant matrix of `t^k`.
    pub fn from_layers(layers: &[Vec<Vec<S>>], ring: ArtinLine) -> Self {
        let size = layers.first().map_or(0, Vec::len);
        let mut m = Self::zero(size, ring);
        for (k, layer) in layers.iter().enumerate() {
            for (i, row) in layer.iter().enumerate() {
                for (j, a) in row.iter().enumerate() {
                    m.rows[i][j] = m.rows[i][j].add(&ring.monomial(k, a.clone()));
                }
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn ring(&self) -> ArtinLine {
        self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &ArtinElem<S> {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ArtinElem<S>) {
        self.rows[i][j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(ArtinElem::is_zero)
    }

    pub fn in_maximal_ideal(&self) -> bool {
        self.rows.iter().flatten().all(ArtinElem::in_maximal_ideal)
    }

    fn zip(&self, other: &Self, f: impl Fn(&ArtinElem<S>, &ArtinElem<S>) -> ArtinElem<S>) -> Self {
        ArtinMatrix {
            ring: self.ring,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| f(a, b)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, ArtinElem::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, ArtinElem::sub)
    }

    pub fn scale(&self, c: &S) -> Self {
        ArtinMatrix {
            ring: self.ring,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|a| a.scale(c)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let mut out = Self::zero(n, self.ring);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = out.rows[i][j].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// `Σ M^k / k!` for a matrix with entries in the maximal ideal.
    pub fn exp(&self) -> Result<Self, LieError> {
        if !self.in_maximal_ideal() {
            return Err(LieError::NotNilpotent);
        }
        let mut out = Self::identity(self.size(), self.ring);
        let mut term = out.clone();
        for k in 1..=self.ring.order() {
            term = term.mul(self).scale(&S::from_ratio(1, k as i64));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// `gl_n(ℚ[t]/(t^N))` under the commutator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixLie {
    pub size: usize,
    pub ring: ArtinLine,
}

impl<S: Scalar> LieAlgebra<S> for MatrixLie {
    type Elem = ArtinMatrix<S>;

    fn zero(&self) -> Self::Elem {
        ArtinMatrix::zero(self.size, self.ring)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn scale(&self, a: &Self::Elem, c: &S) -> Self::Elem {
        a.scale(c)
    }

    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.commutator(b)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

/// `exp(ad ψ)(D) = Σ_k ad(ψ)^k(D)/k!`, stopping as soon as a term vanishes.
/// Fails if `max_terms` iterations do not reach zero.
pub fn exp_ad<S: Scalar, A: LieAlgebra<S>>(
    alg: &A,
    psi: &A::Elem,
    d: &A::Elem,
    max_terms: usize,
) -> Result<A::Elem, LieError> {
    let mut sum = d.clone();
    let mut term = d.clone();
    for k in 1..=max_terms + 1 {
        term = alg.scale(&alg.bracket(psi, &term), &S::from_ratio(1, k as i64));
        if alg.is_zero(&term) {
            return Ok(sum);
        }
        sum = alg.add(&sum, &term);
    }
    Err(LieError::NotNilpotent)
}

/// `exp(ψ)·D·exp(−ψ)` for matrices, with `ψ` in the maximal ideal.
pub fn exp_conjugate<S: Scalar>(
    psi: &ArtinMatrix<S>,
    d: &ArtinMatrix<S>,
) -> Result<ArtinMatrix<S>, LieError> {
    if !psi.in_maximal_ideal() {
        return Err(LieError::NotNilpotent);
    }
    let alg = MatrixLie {
        size: psi.size(),
        ring: psi.ring(),
    };
    exp_ad(&alg, psi, d, psi.ring().order())
}
