//! Tangent complexes of hypersurfaces, Milnor algebras, and the first
//! cohomology of complete intersections through module quotients.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use super::complex::{PolyComplex, PolyMatrix};
use super::groebner::{buchberger, GroebnerBasis};
use super::poly::{divides, exp_add, monomials_up_to, Exp, MonomialOrder, Poly};
use super::SchemeError;
use crate::exactnum::{rank, SparseMatrix};
use crate::scalar::Scalar;

/// `nA → nA ⊕ A → A` in degrees −1, 0, 1 for a hypersurface `f`.
#[derive(Debug, Clone)]
pub struct TangentComplex<S: Scalar> {
    f: Poly<S>,
    complex: PolyComplex<S>,
}

/// Rank of one differential restricted to entries of degree `≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedRank {
    pub degree: i32,
    pub source_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

/// The tangent complex of `f`, with `v ↦ (f·v, −v(f))` and
/// `(v, a) ↦ v(f) + a·f`.
pub fn hypersurface_tangent_dgla<S: Scalar>(f: &Poly<S>) -> Result<TangentComplex<S>, SchemeError> {
    if f.is_constant() {
        return Err(SchemeError::Invalid(
            "hypersurface equation must be nonconstant".into(),
        ));
    }
    let vars = f.vars();
    let n = vars.len();
    let grads: Vec<Poly<S>> = (0..n).map(|i| f.derivative(i)).collect();
    let mut d0 = PolyMatrix::zero(vars, n + 1, n);
    for i in 0..n {
        d0.set(i, i, f.clone());
        d0.set(n, i, grads[i].neg());
    }
    let mut row = grads.clone();
    row.push(f.clone());
    let d1 = PolyMatrix::from_rows(vars, vec![row], n + 1)?;
    let complex = PolyComplex::new(vars, -1, vec![n, n + 1, 1], vec![d0, d1])?;
    complex.verify()?;
    Ok(TangentComplex {
        f: f.clone(),
        complex,
    })
}

impl<S: Scalar> TangentComplex<S> {
    pub fn equation(&self) -> &Poly<S> {
        &self.f
    }

    pub fn complex(&self) -> &PolyComplex<S> {
        &self.complex
    }

    pub fn is_complex(&self) -> bool {
        self.complex.composition_defects().is_empty()
    }

    /// Generators of the image of `d⁰` in `A`, read off the complex.
    pub fn h1_presentation(&self) -> Vec<Poly<S>> {
        self.complex.map(0).unwrap().entries()[0].clone()
    }

    /// Reduced basis of the `H¹` presentation ideal.
    pub fn h1_ideal(&self, order: MonomialOrder) -> GroebnerBasis<S> {
        buchberger(&self.h1_presentation(), order)
    }

    /// `dim H¹ = dim A/(f, ∂f)` when the singularities are isolated.
    pub fn h1_dim(&self) -> Result<usize, SchemeError> {
        self.h1_ideal(MonomialOrder::default()).quotient_dimension()
    }

    /// Ranks of every differential on the elements whose entries have
    /// degree `≤ bound`. Cohomology of the full complex is infinite-dimensional
    /// outside degree 1, so only these truncated ranks are reported.
    pub fn truncated_ranks(&self, bound: u32) -> Vec<TruncatedRank> {
        let n = self.complex.vars().len();
        let monos = monomials_up_to(n, bound);
        let mut out = Vec::new();
        for (k, m) in self.complex.maps().iter().enumerate() {
            let mut targets: BTreeMap<(usize, Exp), usize> = BTreeMap::new();
            let mut cols: Vec<Vec<(usize, S)>> = Vec::new();
            for j in 0..m.cols() {
                for e in &monos {
                    let mut col = Vec::new();
                    for i in 0..m.rows() {
                        for (f, c) in m.get(i, j).terms() {
                            let key = (i, exp_add(e, f));
                            let next = targets.len();
                            let idx = *targets.entry(key).or_insert(next);
                            col.push((idx, c.clone()));
                        }
                    }
                    cols.push(col);
                }
            }
            let mut mat = SparseMatrix::zeros(targets.len(), cols.len());
            for (j, col) in cols.into_iter().enumerate() {
                for (i, c) in col {
                    mat.add_to(i, j, c);
                }
            }
            let r = rank(&mat);
            let source_dim = m.cols() * monos.len();
            out.push(TruncatedRank {
                degree: self.complex.lowest() + k as i32,
                source_dim,
                rank: r,
                kernel_dim: source_dim - r,
            });
        }
        out
    }
}

/// `dim A/(f, ∂₁f, …, ∂ₙf)`.
pub fn milnor_dim<S: Scalar>(f: &Poly<S>) -> Result<usize, SchemeError> {
    let mut gens = vec![f.clone()];
    gens.extend((0..f.nvars()).map(|i| f.derivative(i)));
    buchberger(&gens, MonomialOrder::default()).quotient_dimension()
}

/// `dim_k A^c / (I·A^c + ⟨relations⟩)` for an ideal `I = (ideal)` and module
/// elements `relations` (each of length `c`).
///
/// Computed in `A[e₁, …, e_c]` modulo `(I, e_i e_j, Σ r_j e_j)`: the quotient
/// is graded by `e`-degree and its degree-one part is the module.
pub fn module_quotient_dimension<S: Scalar>(
    ideal: &[Poly<S>],
    relations: &[Vec<Poly<S>>],
    c: usize,
) -> Result<usize, SchemeError> {
    let base = ideal
        .first()
        .or_else(|| relations.first().and_then(|r| r.first()))
        .ok_or_else(|| SchemeError::Invalid("empty presentation".into()))?
        .vars()
        .clone();
    let names: Vec<String> = (0..c)
        .map(|j| {
            let mut name = format!("e{j}");
            while base.contains(&name) {
                name.push('_');
            }
            name
        })
        .chain(base.iter().cloned())
        .collect();
    let ext = Arc::new(names);
    let lift = |p: &Poly<S>| p.embed(&ext).expect("base variables embed");
    let e = |j: usize| Poly::<S>::var(&ext, j);
    let mut gens: Vec<Poly<S>> = ideal.iter().map(lift).collect();
    for i in 0..c {
        for j in i..c {
            gens.push(e(i).mul(&e(j)));
        }
    }
    for r in relations {
        if r.len() != c {
            return Err(SchemeError::Shape(format!(
                "relation of length {}, expected {c}",
                r.len()
            )));
        }
        let mut s = Poly::zero(&ext);
        for (j, x) in r.iter().enumerate() {
            s = s.add(&lift(x).mul(&e(j)));
        }
        gens.push(s);
    }
    let gb = buchberger(&gens, MonomialOrder::GRevLex);
    if gb.is_unit_ideal() {
        return Ok(0);
    }
    let leads: Vec<Exp> = gb.leading_exps().into_iter().cloned().collect();
    let nv = ext.len();
    // finiteness: for each e_j and base variable x_i some leading term
    // divides e_j·x_i^k
    for j in 0..c {
        for i in c..nv {
            let ok = leads.iter().any(|l| {
                l[j] <= 1
                    && l.iter()
                        .enumerate()
                        .all(|(k, &x)| x == 0 || k == j || k == i)
            });
            if !ok {
                return Err(SchemeError::NotZeroDimensional {
                    variable: ext[i].clone(),
                });
            }
        }
    }
    let standard = |m: &Exp| !leads.iter().any(|l| divides(l, m));
    let mut seen: BTreeSet<Exp> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for j in 0..c {
        let mut m = vec![0; nv];
        m[j] = 1;
        if standard(&m) && seen.insert(m.clone()) {
            queue.push_back(m);
        }
    }
    while let Some(m) = queue.pop_front() {
        for i in c..nv {
            let mut next = m.clone();
            next[i] += 1;
            if standard(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// `dim T¹` of the complete intersection `f₁ = ⋯ = f_c = 0`:
/// `(A/I)^c` modulo the Jacobian columns `(∂_i f₁, …, ∂_i f_c)`.
pub fn normal_h1_dim<S: Scalar>(fs: &[Poly<S>]) -> Result<usize, SchemeError> {
    let first = fs
        .first()
        .ok_or_else(|| SchemeError::Invalid("no equations".into()))?;
    let relations: Vec<Vec<Poly<S>>> = (0..first.nvars())
        .map(|i| fs.iter().map(|f| f.derivative(i)).collect())
        .collect();
    module_quotient_dimension(fs, &relations, fs.len())
}
