use std::sync::Arc;

use super::artin::{ArtinElem, ArtinLine};
use super::structlie::StructLie;
use super::LieError;
use crate::freelie::{self, FreeLieElement, LieAlgebra};
use crate::scalar::Scalar;

/// Element of `L ⊗ ℚ[t]/(t^N)`: one artin coefficient per basis vector.
#[derive(Debug, Clone)]
pub struct LieElement<S> {
    lie: Arc<StructLie<S>>,
    coeffs: Vec<ArtinElem<S>>,
}

impl<S: Scalar> PartialEq for LieElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.coeffs == other.coeffs
    }
}

impl<S: Scalar> LieElement<S> {
    pub fn zero(lie: &Arc<StructLie<S>>, ring: ArtinLine) -> Self {
        LieElement {
            lie: lie.clone(),
            coeffs: vec![ring.zero(); lie.dim()],
        }
    }

    /// `c · e_a`
    pub fn basis(lie: &Arc<StructLie<S>>, a: usize, c: ArtinElem<S>) -> Self {
        let mut e = Self::zero(lie, c.ring());
        e.coeffs[a] = c;
        e
    }

    pub fn from_coeffs(
        lie: &Arc<StructLie<S>>,
        coeffs: Vec<ArtinElem<S>>,
    ) -> Result<Self, LieError> {
        if coeffs.len() != lie.dim() {
            return Err(LieError::Shape(format!(
                "{} coefficients for a {}-dimensional algebra",
                coeffs.len(),
                lie.dim()
            )));
        }
        if let Some(first) = coeffs.first() {
            if coeffs.iter().any(|c| c.ring() != first.ring()) {
                return Err(LieError::MixedAlgebras);
            }
        }
        Ok(LieElement {
            lie: lie.clone(),
            coeffs,
        })
    }

    pub fn algebra(&self) -> &Arc<StructLie<S>> {
        &self.lie
    }

    pub fn ring(&self) -> ArtinLine {
        self.coeffs
            .first()
            .map_or(ArtinLine::new(1), ArtinElem::ring)
    }

    pub fn coeffs(&self) -> &[ArtinElem<S>] {
        &self.coeffs
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.lie, &other.lie) || *self.lie == *other.lie)
            && self.ring() == other.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ArtinElem::is_zero)
    }

    /// Every coefficient lies in the maximal ideal.
    pub fn in_maximal_ideal(&self) -> bool {
        self.coeffs.iter().all(ArtinElem::in_maximal_ideal)
    }

    /// Coordinates of the `t^k` coefficient.
    pub fn t_coefficient(&self, k: usize) -> Vec<S> {
        self.coeffs.iter().map(|c| c.coeff(k)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement {
            lie: self.lie.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        LieElement {
            lie: self.lie.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplication by a ring element.
    pub fn scale_ring(&self, r: &ArtinElem<S>) -> Self {
        LieElement {
            lie: self.lie.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(r)).collect(),
        }
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.lie, self.ring());
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if let Some(w) = self.lie.bracket_basis(a, b) {
                    let xy = x.mul(y);
                    if xy.is_zero() {
                        continue;
                    }
                    for (c, z) in w {
                        out.coeffs[*c] = out.coeffs[*c].add(&xy.scale(z));
                    }
                }
            }
        }
        out
    }

    /// Applies the internal differential coefficientwise.
    pub fn differential(&self) -> Self {
        let mut out = Self::zero(&self.lie, self.ring());
        for (i, j, d) in self.lie.differential().entries() {
            out.coeffs[i] = out.coeffs[i].add(&self.coeffs[j].scale(d));
        }
        out
    }
}

/// `L ⊗ ℚ[t]/(t^N)` as a Lie algebra for evaluating free-Lie expressions.
#[derive(Debug, Clone)]
pub struct ArtinLie<S> {
    pub lie: Arc<StructLie<S>>,
    pub ring: ArtinLine,
}

impl<S: Scalar> ArtinLie<S> {
    pub fn new(lie: Arc<StructLie<S>>, ring: ArtinLine) -> Self {
        ArtinLie { lie, ring }
    }

    /// Brackets of more than this many elements of `L ⊗ (t)` vanish.
    pub fn nilpotency_bound(&self) -> usize {
        self.ring.order() - 1
    }
}

impl<S: Scalar> LieAlgebra<S> for ArtinLie<S> {
    type Elem = LieElement<S>;

    fn zero(&self) -> Self::Elem {
        LieElement::zero(&self.lie, self.ring)
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

/// Evaluates `e` with letter `a` sent to `assignment[a]`; all elements must
/// belong to the same algebra and artin ring.
pub fn evaluate<S: Scalar>(
    e: &FreeLieElement<S>,
    assignment: &[LieElement<S>],
) -> Result<LieElement<S>, LieError> {
    let first = assignment.first().ok_or(LieError::EmptyAssignment)?;
    if assignment.iter().any(|u| !u.same_algebra(first)) {
        return Err(LieError::MixedAlgebras);
    }
    let needed = e
        .terms()
        .keys()
        .flat_map(|w| w.iter())
        .max()
        .map_or(0, |&a| a as usize + 1);
    if needed > assignment.len() {
        return Err(LieError::MissingGenerator(needed - 1));
    }
    let alg = ArtinLie::new(first.lie.clone(), first.ring());
    Ok(freelie::evaluate(e, &alg, assignment))
}
