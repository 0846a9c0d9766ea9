use std::fmt;

use crate::scalar::Scalar;

/// The truncated polynomial ring `ℚ[t]/(t^N)`, a local artin ring with
/// maximal ideal `(t)` and `(t)^N = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLine {
    order: usize,
}

impl ArtinLine {
    /// Panics for `order == 0`: the zero ring has no maximal ideal.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        ArtinLine { order }
    }

    /// `N`, so that `t^N = 0`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `dim_ℚ ℚ[t]/(t^N)`.
    pub fn dimension(&self) -> usize {
        self.order
    }

    pub fn zero<S: Scalar>(&self) -> ArtinElem<S> {
        ArtinElem {
            c: vec![S::zero(); self.order],
        }
    }

    pub fn one<S: Scalar>(&self) -> ArtinElem<S> {
        self.constant(S::one())
    }

    pub fn constant<S: Scalar>(&self, a: S) -> ArtinElem<S> {
        self.monomial(0, a)
    }

    /// `a·t^k`; zero when `k ≥ N`.
    pub fn monomial<S: Scalar>(&self, k: usize, a: S) -> ArtinElem<S> {
        let mut e = self.zero();
        if k < self.order {
            e.c[k] = a;
        }
        e
    }

    pub fn t<S: Scalar>(&self) -> ArtinElem<S> {
        self.monomial(1, S::one())
    }

    /// Coefficients are padded with zeros or truncated to length `N`.
    pub fn from_coeffs<S: Scalar>(&self, coeffs: &[S]) -> ArtinElem<S> {
        let mut e = self.zero();
        for (k, a) in coeffs.iter().enumerate().take(self.order) {
            e.c[k] = a.clone();
        }
        e
    }
}

/// Element `Σ c_k t^k` of an [`ArtinLine`]; the ring is recorded by the length.
#[derive(Debug, Clone, PartialEq)]
pub struct ArtinElem<S> {
    c: Vec<S>,
}

impl<S: Scalar> ArtinElem<S> {
    pub fn ring(&self) -> ArtinLine {
        ArtinLine::new(self.c.len())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> S {
        self.c.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_negligible)
    }

    /// Least `k` with nonzero `t^k` coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_negligible())
    }

    /// True when the element lies in the maximal ideal `(t)`.
    pub fn in_maximal_ideal(&self) -> bool {
        self.c[0].is_negligible()
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.c.len(),
            other.c.len(),
            "elements of different artin rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        ArtinElem {
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        ArtinElem {
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ArtinElem {
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        ArtinElem {
            c: self.c.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.c.len();
        let mut c = vec![S::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    c[i + j] = c[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        ArtinElem { c }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.c.len();
        let mut c = vec![S::zero(); n];
        for i in 0..n.saturating_sub(k) {
            c[i + k] = self.c[i].clone();
        }
        ArtinElem { c }
    }

    /// Reinterprets the element in `ℚ[t]/(t^M)` (truncating or padding).
    pub fn change_order(&self, m: usize) -> Self {
        ArtinLine::new(m).from_coeffs(&self.c)
    }
}

impl<S: Scalar> fmt::Display for ArtinElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})t")?,
                _ => write!(f, "({a})t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
