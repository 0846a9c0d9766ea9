//! Deformations of hypersurfaces over `ℚ[t]/tᴺ`: Kodaira–Spencer cochains,
//! the gluing equations for operators `θ + M` (a vector field plus an
//! endomorphism of `F₊`), and order-by-order lifting through the
//! obstruction machinery of the Jacobi–Bernoulli complex.

use std::fmt;
use std::sync::Arc;

use super::complex::{hypersurface_resolution, PolyComplex};
use super::poly::{monomials_up_to, total_degree, Exp, Poly};
use super::SchemeError;
use crate::bch::{eval_bch3, BchTable};
use crate::exactnum::SparseMatrix;
use crate::freelie::LieAlgebra;
use crate::jbcomplex::{obstruction, CocycleData, ObstructionReport, Sela, StandardComplex};
use crate::liecore::{exp_ad, ArtinLine, BasisVector, LieError, StructLie};
use crate::scalar::Scalar;
use crate::Rational;
use num_traits::Zero;

/// Polynomial with coefficients in `ℚ[t]/tᴺ`, stored by `t`-layers.
#[derive(Debug, Clone, PartialEq)]
pub struct TPoly<S: Scalar> {
    vars: Arc<Vec<String>>,
    layers: Vec<Poly<S>>,
}

impl<S: Scalar> TPoly<S> {
    pub fn zero(vars: &Arc<Vec<String>>, order: usize) -> Self {
        TPoly {
            vars: Arc::clone(vars),
            layers: vec![Poly::zero(vars); order],
        }
    }

    /// `t^k·p`.
    pub fn with_t(p: &Poly<S>, k: usize, order: usize) -> Self {
        let mut out = Self::zero(p.vars(), order);
        if k < order {
            out.layers[k] = p.clone();
        }
        out
    }

    pub fn from_poly(p: &Poly<S>, order: usize) -> Self {
        Self::with_t(p, 0, order)
    }

    pub fn order(&self) -> usize {
        self.layers.len()
    }

    pub fn layer(&self, k: usize) -> &Poly<S> {
        &self.layers[k]
    }

    pub fn layers(&self) -> &[Poly<S>] {
        &self.layers
    }

    pub fn is_zero(&self) -> bool {
        self.layers.iter().all(Poly::is_zero)
    }

    pub fn in_maximal_ideal(&self) -> bool {
        self.layers.first().is_none_or(Poly::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Poly<S>, &Poly<S>) -> Poly<S>) -> Self {
        assert_eq!(self.order(), other.order(), "mixed truncation orders");
        TPoly {
            vars: Arc::clone(&self.vars),
            layers: self
                .layers
                .iter()
                .zip(&other.layers)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, Poly::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, Poly::sub)
    }

    pub fn scale(&self, c: &S) -> Self {
        TPoly {
            vars: Arc::clone(&self.vars),
            layers: self.layers.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = Self::zero(&self.vars, n);
        for (i, a) in self.layers.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.layers.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out.layers[i + j] = out.layers[i + j].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        TPoly {
            vars: Arc::clone(&self.vars),
            layers: self.layers.iter().map(|p| p.derivative(i)).collect(),
        }
    }

    /// `Σ θ_i ∂_i(self)`.
    pub fn apply_field(&self, theta: &[TPoly<S>]) -> Self {
        theta
            .iter()
            .enumerate()
            .fold(Self::zero(&self.vars, self.order()), |acc, (i, c)| {
                acc.add(&c.mul(&self.derivative(i)))
            })
    }
}

/// `p₀ + t*(p₁) + t^2*(p₂) + …`, zero layers omitted.
impl<S: Scalar> fmt::Display for TPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .layers
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| match k {
                0 => p.to_string(),
                1 => format!("t*({p})"),
                _ => format!("t^{k}*({p})"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `θ + M` acting on `F₊ ⊗ ℚ[t]/tᴺ`: `θ` differentiates coefficients, `M` is
/// a matrix on the total module `⊕ F^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator<S: Scalar> {
    pub theta: Vec<TPoly<S>>,
    pub m: Vec<Vec<TPoly<S>>>,
}

impl<S: Scalar> Operator<S> {
    pub fn in_maximal_ideal(&self) -> bool {
        self.theta
            .iter()
            .chain(self.m.iter().flatten())
            .all(TPoly::in_maximal_ideal)
    }
}

/// Operators `θ + M` under the commutator
/// `[θ₁+M₁, θ₂+M₂] = [θ₁,θ₂] + θ₁(M₂) − θ₂(M₁) + [M₁,M₂]`.
#[derive(Debug, Clone)]
pub struct OperatorAlgebra {
    vars: Arc<Vec<String>>,
    order: usize,
    size: usize,
}

impl OperatorAlgebra {
    pub fn new(vars: &Arc<Vec<String>>, order: usize, size: usize) -> Self {
        OperatorAlgebra {
            vars: Arc::clone(vars),
            order,
            size,
        }
    }

    /// The algebra acting on the total module of `F₊`.
    pub fn for_complex<S: Scalar>(f: &PolyComplex<S>, order: usize) -> Self {
        Self::new(f.vars(), order, f.ranks().iter().sum())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn tzero<S: Scalar>(&self) -> TPoly<S> {
        TPoly::zero(&self.vars, self.order)
    }

    pub fn vector_field<S: Scalar>(&self, theta: Vec<TPoly<S>>) -> Operator<S> {
        assert_eq!(theta.len(), self.vars.len(), "vector field length");
        let mut op = LieAlgebra::<S>::zero(self);
        op.theta = theta;
        op
    }

    pub fn matrix<S: Scalar>(&self, m: Vec<Vec<TPoly<S>>>) -> Operator<S> {
        assert_eq!(m.len(), self.size, "matrix size");
        let mut op = LieAlgebra::<S>::zero(self);
        op.m = m;
        op
    }

    /// The differential of `F₊` as a matrix operator, plus `φ` if given.
    pub fn differential<S: Scalar>(
        &self,
        f: &PolyComplex<S>,
        phi: Option<&Operator<S>>,
    ) -> Operator<S> {
        let mut m = vec![vec![self.tzero::<S>(); self.size]; self.size];
        let mut offsets = vec![0];
        for r in f.ranks() {
            offsets.push(offsets.last().unwrap() + r);
        }
        for (k, d) in f.maps().iter().enumerate() {
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    m[offsets[k + 1] + i][offsets[k] + j] =
                        TPoly::from_poly(d.get(i, j), self.order);
                }
            }
        }
        let op = self.matrix(m);
        match phi {
            Some(p) => self.add(&op, p),
            None => op,
        }
    }

    fn matmul<S: Scalar>(&self, a: &[Vec<TPoly<S>>], b: &[Vec<TPoly<S>>]) -> Vec<Vec<TPoly<S>>> {
        let n = self.size;
        let mut out = vec![vec![self.tzero::<S>(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !b[k][j].is_zero() {
                        out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                    }
                }
            }
        }
        out
    }

    /// Matrix square of a pure matrix operator.
    pub fn square<S: Scalar>(&self, d: &Operator<S>) -> Vec<Vec<TPoly<S>>> {
        self.matmul(&d.m, &d.m)
    }

    /// `exp(ad ψ)(D)`, the conjugate `exp(ψ)·D·exp(−ψ)`.
    pub fn conjugate<S: Scalar>(
        &self,
        psi: &Operator<S>,
        d: &Operator<S>,
    ) -> Result<Operator<S>, LieError> {
        if !psi.in_maximal_ideal() {
            return Err(LieError::NotNilpotent);
        }
        exp_ad(self, psi, d, self.order)
    }
}

impl<S: Scalar> LieAlgebra<S> for OperatorAlgebra {
    type Elem = Operator<S>;

    fn zero(&self) -> Operator<S> {
        Operator {
            theta: vec![self.tzero(); self.vars.len()],
            m: vec![vec![self.tzero(); self.size]; self.size],
        }
    }

    fn add(&self, a: &Operator<S>, b: &Operator<S>) -> Operator<S> {
        Operator {
            theta: a
                .theta
                .iter()
                .zip(&b.theta)
                .map(|(x, y)| x.add(y))
                .collect(),
            m: a.m
                .iter()
                .zip(&b.m)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect())
                .collect(),
        }
    }

    fn scale(&self, a: &Operator<S>, c: &S) -> Operator<S> {
        Operator {
            theta: a.theta.iter().map(|x| x.scale(c)).collect(),
            m: a.m
                .iter()
                .map(|r| r.iter().map(|x| x.scale(c)).collect())
                .collect(),
        }
    }

    fn bracket(&self, a: &Operator<S>, b: &Operator<S>) -> Operator<S> {
        let theta = (0..self.vars.len())
            .map(|i| {
                b.theta[i]
                    .apply_field(&a.theta)
                    .sub(&a.theta[i].apply_field(&b.theta))
            })
            .collect();
        let ab = self.matmul(&a.m, &b.m);
        let ba = self.matmul(&b.m, &a.m);
        let m = (0..self.size)
            .map(|i| {
                (0..self.size)
                    .map(|j| {
                        b.m[i][j]
                            .apply_field(&a.theta)
                            .sub(&a.m[i][j].apply_field(&b.theta))
                            .add(&ab[i][j])
                            .sub(&ba[i][j])
                    })
                    .collect()
            })
            .collect();
        Operator { theta, m }
    }

    fn is_zero(&self, a: &Operator<S>) -> bool {
        a.theta
            .iter()
            .chain(a.m.iter().flatten())
            .all(TPoly::is_zero)
    }
}

/// A deformed differential `∂ + φ` of `F₊` over `ℚ[t]/tᴺ`.
#[derive(Debug, Clone)]
pub struct KsCochain<S: Scalar> {
    pub base: PolyComplex<S>,
    pub algebra: OperatorAlgebra,
    pub phi: Operator<S>,
    pub deformed: Operator<S>,
}

impl<S: Scalar> KsCochain<S> {
    pub fn order(&self) -> usize {
        self.algebra.order()
    }

    /// `t`-orders at which `(∂+φ)²` has a nonzero entry.
    pub fn square_defects(&self) -> Vec<usize> {
        let sq = self.algebra.square(&self.deformed);
        (0..self.order())
            .filter(|&k| sq.iter().flatten().any(|x| !x.layer(k).is_zero()))
            .collect()
    }

    /// The equation `f + t·g` of a deformed hypersurface: the entry of
    /// `∂ + φ` from `F⁰` to `F¹`.
    pub fn deformed_equation(&self) -> Option<&TPoly<S>> {
        if self.base.ranks() == [1, 1] {
            Some(&self.deformed.m[1][0])
        } else {
            None
        }
    }
}

/// `∂ + φ` on `F₊ ⊗ ℚ[t]/tᴺ`, checked to square to zero.
pub fn deform_complex<S: Scalar>(
    base: &PolyComplex<S>,
    phi: Operator<S>,
    order: usize,
) -> Result<KsCochain<S>, SchemeError> {
    let algebra = OperatorAlgebra::for_complex(base, order);
    if phi.theta.iter().any(|x| !x.is_zero()) {
        return Err(SchemeError::Invalid(
            "a Kodaira–Spencer cochain has no vector-field part".into(),
        ));
    }
    let deformed = algebra.differential(base, Some(&phi));
    let ks = KsCochain {
        base: base.clone(),
        algebra,
        phi,
        deformed,
    };
    match ks.square_defects().first() {
        None => Ok(ks),
        Some(k) => Err(SchemeError::SquareNonzero(format!("at order t^{k}"))),
    }
}

/// The cochain `e ↦ t·g` deforming `f` to `f + t·g` over `ℚ[t]/tᴺ`.
pub fn ks_cochain<S: Scalar>(
    f: &Poly<S>,
    g: &Poly<S>,
    order: usize,
) -> Result<KsCochain<S>, SchemeError> {
    if order < 2 {
        return Err(SchemeError::Invalid(format!(
            "truncation order must be at least 2, got {order}"
        )));
    }
    let base = hypersurface_resolution(f);
    let algebra = OperatorAlgebra::for_complex(&base, order);
    let mut m = vec![vec![algebra.tzero::<S>(); 2]; 2];
    m[1][0] = TPoly::with_t(g, 1, order);
    deform_complex(&base, algebra.matrix(m), order)
}

/// Outcome of checking the gluing equations.
#[derive(Debug, Clone)]
pub struct GlueReport<S: Scalar> {
    /// `exp(ψ)(∂+φ_σ)exp(−ψ) = ∂+φ_ρ`
    pub phipsi_holds: bool,
    /// `exp(ψ)(∂+φ_σ)exp(−ψ) − (∂+φ_ρ)`
    pub phipsi_defect: Operator<S>,
    /// `β(ψ_ρσ, ψ_στ, ψ_τρ) = 0`, when a triple was supplied.
    pub psi_cocycle_holds: Option<bool>,
}

/// Checks the gluing of `φ_σ` to `φ_ρ` along `ψ = ψ_ρσ` and, if given, the
/// cocycle condition on a triple of gluings.
pub fn glue_check<S: Scalar>(
    alg: &OperatorAlgebra,
    base: &PolyComplex<S>,
    phi_rho: &Operator<S>,
    phi_sigma: &Operator<S>,
    psi: &Operator<S>,
    triple: Option<[&Operator<S>; 3]>,
) -> Result<GlueReport<S>, SchemeError> {
    let d_sigma = alg.differential(base, Some(phi_sigma));
    let d_rho = alg.differential(base, Some(phi_rho));
    let conj = alg.conjugate(psi, &d_sigma)?;
    let defect = alg.add(&conj, &alg.scale(&d_rho, &-S::one()));
    let psi_cocycle_holds = match triple {
        None => None,
        Some([a, b, c]) => {
            if ![a, b, c].iter().all(|x| x.in_maximal_ideal()) {
                return Err(LieError::NotNilpotent.into());
            }
            let bound = alg.order().saturating_sub(1).max(1);
            let table = BchTable::new(bound)?;
            let beta = eval_bch3(&table, alg, a, b, c, bound)?;
            Some(LieAlgebra::<S>::is_zero(alg, &beta))
        }
    };
    Ok(GlueReport {
        phipsi_holds: LieAlgebra::<S>::is_zero(alg, &defect),
        phipsi_defect: defect,
        psi_cocycle_holds,
    })
}

/// The normal dgla of `f` truncated by `𝔪^{D+1}` as a one-vertex SELA:
/// `𝔤⁰ = 𝔤¹ = A/𝔪^{D+1}` with `d(a) = a·f` and `[a, b] = −ab`. The second
/// value lists the monomials indexing each half of the basis.
pub fn one_chart_sela(
    f: &Poly<Rational>,
    degree: u32,
    order: usize,
) -> Result<(Sela, Vec<Exp>), SchemeError> {
    let monos = monomials_up_to(f.nvars(), degree);
    let n = monos.len();
    let index = |e: &Exp| monos.iter().position(|m| m == e);
    let name = |e: &Exp| {
        e.iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join("_")
    };
    let mut basis = Vec::with_capacity(2 * n);
    for e in &monos {
        basis.push(BasisVector {
            name: format!("a_{}", name(e)),
            degree: 0,
        });
    }
    for e in &monos {
        basis.push(BasisVector {
            name: format!("b_{}", name(e)),
            degree: 1,
        });
    }
    let mut entries = Vec::new();
    for (i, e) in monos.iter().enumerate() {
        for (j, g) in monos.iter().enumerate() {
            let prod: Exp = e.iter().zip(g).map(|(x, y)| x + y).collect();
            if let Some(k) = index(&prod) {
                entries.push((i, n + j, n + k, -Rational::from_i64(1)));
            }
        }
    }
    let mut d = SparseMatrix::zeros(2 * n, 2 * n);
    for (j, e) in monos.iter().enumerate() {
        for (c, coeff) in f.terms() {
            let prod: Exp = e.iter().zip(c).map(|(x, y)| x + y).collect();
            if total_degree(&prod) <= degree {
                d.add_to(n + index(&prod).unwrap(), j, coeff.clone());
            }
        }
    }
    let lie = StructLie::new(basis, &entries, Some(d))?;
    let mut sela = Sela::with_size(1, order);
    sela.set_algebra(vec![0], lie)?;
    sela.validate()?;
    Ok((sela, monos))
}

/// Result of lifting `f + t·g` from `ℚ[t]/t^{from}` to `ℚ[t]/t^{to}`.
#[derive(Debug, Clone)]
pub struct LiftReport {
    pub from_order: usize,
    pub to_order: usize,
    /// One obstruction computation per step `k → k+1`.
    pub steps: Vec<ObstructionReport>,
    /// The lifted cochain `φ` over `ℚ[t]/t^{to}`.
    pub lift: TPoly<Rational>,
    pub deformed_equation: TPoly<Rational>,
    pub square_zero: bool,
    /// Dimension of the packaged one-chart SELA.
    pub sela_dim: usize,
}

impl LiftReport {
    pub fn all_unobstructed(&self) -> bool {
        self.steps.iter().all(|s| s.class_is_zero)
    }
}

/// Lifts the first-order deformation `f + t·g` step by step. Each step runs
/// the obstruction computation of the one-chart SELA of [`one_chart_sela`].
pub fn lift_deformation(
    f: &Poly<Rational>,
    g: &Poly<Rational>,
    from: usize,
    to: usize,
) -> Result<LiftReport, SchemeError> {
    if from < 2 || from >= to {
        return Err(SchemeError::Invalid(format!(
            "need 2 ≤ from_order < to_order, got {from} → {to}"
        )));
    }
    let degree = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
    let (sela, monos) = one_chart_sela(f, degree, from)?;
    let k = StandardComplex::new(&sela);
    let n = monos.len();
    let ring = ArtinLine::new(from);
    let mut coeffs = vec![ring.zero(); 2 * n];
    for (e, c) in g.terms() {
        let i = monos
            .iter()
            .position(|m| m == e)
            .expect("degree bound covers g");
        coeffs[n + i] = ring.monomial(1, c.clone());
    }
    let mut data = CocycleData::zero(ring);
    data.set(&k, &sela, &[0], &coeffs)?;
    let mut steps = Vec::new();
    for step in from..to {
        let report = obstruction(&sela, &data, step, step + 1, None)?;
        let next = report.lift.clone();
        steps.push(report);
        match next {
            Some(l) => data = l,
            None => break,
        }
    }
    let reached = data.ring.order();
    let phi = data.component(&k, &sela, &[0]);
    let mut lift = TPoly::zero(f.vars(), reached);
    for (i, e) in monos.iter().enumerate() {
        let c = &phi.coeffs()[n + i];
        for t in 0..reached {
            let x = c.coeff(t);
            if !x.is_zero() {
                let m = Poly::monomial(f.vars(), e.clone(), x);
                lift.layers[t] = lift.layers[t].add(&m);
            }
        }
    }
    let ks = ks_cochain(f, g, reached)?;
    let deformed_equation = ks.deformed_equation().cloned().expect("hypersurface");
    let square_zero = ks.square_defects().is_empty();
    Ok(LiftReport {
        from_order: from,
        to_order: to,
        steps,
        lift,
        deformed_equation,
        square_zero,
        sela_dim: 2 * n,
    })
}
