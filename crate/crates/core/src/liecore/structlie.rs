use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::LieError;
use crate::exactnum::{rank, SparseMatrix};
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVector {
    pub name: String,
    pub degree: i32,
}

/// `(−1)^{pq}`
pub(crate) fn koszul(p: i32, q: i32) -> i64 {
    if (p * q).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

type Vector<S> = BTreeMap<usize, S>;

/// Finite-dimensional graded Lie algebra given by structure constants,
/// optionally with a differential and a matrix representation.
///
/// The differential acts on coordinate columns: `∂ e_j = Σ_i D[i][j] e_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructLie<S> {
    basis: Vec<BasisVector>,
    brackets: BTreeMap<(usize, usize), Vector<S>>,
    differential: SparseMatrix<S>,
    rep: Option<Vec<SparseMatrix<S>>>,
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry { a: String, b: String },
    Jacobi { a: String, b: String, c: String },
    DifferentialSquare { a: String },
    Leibniz { a: String, b: String },
    Representation { a: String, b: String },
    NotFaithful { rank: usize, dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { a, b } => write!(f, "antisymmetry fails for ({a}, {b})"),
            Violation::Jacobi { a, b, c } => write!(f, "Jacobi fails for ({a}, {b}, {c})"),
            Violation::DifferentialSquare { a } => write!(f, "∂∂{a} ≠ 0"),
            Violation::Leibniz { a, b } => write!(f, "Leibniz rule fails for ({a}, {b})"),
            Violation::Representation { a, b } => {
                write!(f, "representation does not preserve [{a}, {b}]")
            }
            Violation::NotFaithful { rank, dim } => {
                write!(
                    f,
                    "representation has rank {rank} on a {dim}-dimensional algebra"
                )
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn add_into<S: Scalar>(acc: &mut Vector<S>, k: usize, v: S) {
    if v.is_zero() {
        return;
    }
    let nv = acc.get(&k).cloned().unwrap_or_else(S::zero) + v;
    if nv.is_negligible() {
        acc.remove(&k);
    } else {
        acc.insert(k, nv);
    }
}

impl<S: Scalar> StructLie<S> {
    /// Builds the algebra from bracket entries `[e_a, e_b] ∋ coeff·e_c`.
    /// A pair given in only one order is completed by graded antisymmetry.
    pub fn new(
        basis: Vec<BasisVector>,
        entries: &[(usize, usize, usize, S)],
        differential: Option<SparseMatrix<S>>,
    ) -> Result<Self, LieError> {
        let n = basis.len();
        let mut seen = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if seen.insert(b.name.clone(), i).is_some() {
                return Err(LieError::DuplicateName(b.name.clone()));
            }
        }
        let mut given: BTreeMap<(usize, usize), Vector<S>> = BTreeMap::new();
        for (a, b, c, coeff) in entries {
            for &i in [a, b, c] {
                if i >= n {
                    return Err(LieError::IndexOutOfRange(i));
                }
            }
            if basis[*c].degree != basis[*a].degree + basis[*b].degree && !coeff.is_zero() {
                return Err(LieError::DegreeMismatch(format!(
                    "[{}, {}] -> {}",
                    basis[*a].name, basis[*b].name, basis[*c].name
                )));
            }
            add_into(given.entry((*a, *b)).or_default(), *c, coeff.clone());
        }
        let mut brackets = given.clone();
        for ((a, b), v) in &given {
            if !given.contains_key(&(*b, *a)) {
                let s = -S::from_i64(koszul(basis[*a].degree, basis[*b].degree));
                let w: Vector<S> = v.iter().map(|(k, x)| (*k, x.clone() * s.clone())).collect();
                brackets.insert((*b, *a), w);
            }
        }
        brackets.retain(|_, v| !v.is_empty());
        let differential = differential.unwrap_or_else(|| SparseMatrix::zeros(n, n));
        if differential.rows() != n || differential.cols() != n {
            return Err(LieError::Shape(format!(
                "differential is {}x{}, expected {n}x{n}",
                differential.rows(),
                differential.cols()
            )));
        }
        for (i, j, _) in differential.entries() {
            if basis[i].degree != basis[j].degree + 1 {
                return Err(LieError::DegreeMismatch(format!(
                    "∂{} -> {}",
                    basis[j].name, basis[i].name
                )));
            }
        }
        Ok(StructLie {
            basis,
            brackets,
            differential,
            rep: None,
        })
    }

    /// Abelian algebra with zero differential.
    pub fn abelian(basis: Vec<BasisVector>) -> Self {
        Self::new(basis, &[], None).expect("abelian algebra is well formed")
    }

    /// Attaches matrices `ρ(e_a)`, one per basis vector.
    pub fn with_representation(mut self, rep: Vec<SparseMatrix<S>>) -> Result<Self, LieError> {
        if rep.len() != self.dim() {
            return Err(LieError::Shape(format!(
                "{} representation matrices for {} basis vectors",
                rep.len(),
                self.dim()
            )));
        }
        let m = rep.first().map_or(0, SparseMatrix::rows);
        if rep.iter().any(|r| r.rows() != m || r.cols() != m) {
            return Err(LieError::Shape(
                "representation matrices must be square of one size".into(),
            ));
        }
        self.rep = Some(rep);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn degree(&self, a: usize) -> i32 {
        self.basis[a].degree
    }

    pub fn name(&self, a: usize) -> &str {
        &self.basis[a].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Basis indices of internal degree `q`.
    pub fn degree_indices(&self, q: i32) -> Vec<usize> {
        (0..self.dim())
            .filter(|&a| self.basis[a].degree == q)
            .collect()
    }

    pub fn differential(&self) -> &SparseMatrix<S> {
        &self.differential
    }

    pub fn has_differential(&self) -> bool {
        !self.differential.is_zero()
    }

    pub fn representation(&self) -> Option<&[SparseMatrix<S>]> {
        self.rep.as_deref()
    }

    /// Structure constants of `[e_a, e_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Option<&Vector<S>> {
        self.brackets.get(&(a, b))
    }

    pub fn bracket_entries(&self) -> impl Iterator<Item = (usize, usize, &Vector<S>)> {
        self.brackets.iter().map(|((a, b), v)| (*a, *b, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Bracket of sparse coordinate vectors.
    pub fn bracket_sparse(&self, u: &Vector<S>, v: &Vector<S>) -> Vector<S> {
        let mut out = Vector::new();
        for (a, x) in u {
            for (b, y) in v {
                if let Some(w) = self.brackets.get(&(*a, *b)) {
                    let xy = x.clone() * y.clone();
                    for (c, z) in w {
                        add_into(&mut out, *c, xy.clone() * z.clone());
                    }
                }
            }
        }
        out
    }

    /// Bracket of dense coordinate vectors.
    pub fn bracket_vec(&self, u: &[S], v: &[S]) -> Vec<S> {
        let su = to_sparse(u);
        let sv = to_sparse(v);
        to_dense(&self.bracket_sparse(&su, &sv), self.dim())
    }

    pub fn diff_sparse(&self, u: &Vector<S>) -> Vector<S> {
        let mut out = Vector::new();
        let t = self.differential.transpose();
        for (j, x) in u {
            for (i, d) in t.row(*j) {
                add_into(&mut out, *i, x.clone() * d.clone());
            }
        }
        out
    }

    pub fn diff_vec(&self, u: &[S]) -> Vec<S> {
        self.differential.apply(u)
    }

    fn unit(&self, a: usize) -> Vector<S> {
        let mut v = Vector::new();
        v.insert(a, S::one());
        v
    }

    fn sparse_is_zero(v: &Vector<S>) -> bool {
        v.values().all(Scalar::is_negligible)
    }

    /// Checks antisymmetry, Jacobi, `∂² = 0`, the Leibniz rule and, when a
    /// representation is attached, that it is a faithful homomorphism.
    pub fn check_lie_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let nm = |a: usize| self.basis[a].name.clone();
        let deg = |a: usize| self.basis[a].degree;
        let mut report = AxiomReport::default();
        for a in 0..n {
            for b in a..n {
                let ab = self.bracket_sparse(&self.unit(a), &self.unit(b));
                let mut ba = self.bracket_sparse(&self.unit(b), &self.unit(a));
                let s = S::from_i64(koszul(deg(a), deg(b)));
                for x in ba.values_mut() {
                    *x = x.clone() * s.clone();
                }
                let mut sum = ab;
                for (k, x) in ba {
                    add_into(&mut sum, k, x);
                }
                if !Self::sparse_is_zero(&sum) {
                    report
                        .violations
                        .push(Violation::Antisymmetry { a: nm(a), b: nm(b) });
                }
            }
        }
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let mut sum = Vector::new();
                    let cyc = [(a, b, c), (b, c, a), (c, a, b)];
                    for (x, y, z) in cyc {
                        let inner = self.bracket_sparse(&self.unit(y), &self.unit(z));
                        let outer = self.bracket_sparse(&self.unit(x), &inner);
                        let s = S::from_i64(koszul(deg(x), deg(z)));
                        for (k, v) in outer {
                            add_into(&mut sum, k, v * s.clone());
                        }
                    }
                    if !Self::sparse_is_zero(&sum) {
                        report.violations.push(Violation::Jacobi {
                            a: nm(a),
                            b: nm(b),
                            c: nm(c),
                        });
                    }
                }
            }
        }
        for a in 0..n {
            let dd = self.diff_sparse(&self.diff_sparse(&self.unit(a)));
            if !Self::sparse_is_zero(&dd) {
                report
                    .violations
                    .push(Violation::DifferentialSquare { a: nm(a) });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = self.diff_sparse(&self.bracket_sparse(&self.unit(a), &self.unit(b)));
                let r1 = self.bracket_sparse(&self.diff_sparse(&self.unit(a)), &self.unit(b));
                let r2 = self.bracket_sparse(&self.unit(a), &self.diff_sparse(&self.unit(b)));
                let s = S::from_i64(koszul(deg(a), 1));
                let mut sum = lhs;
                for (k, v) in r1 {
                    add_into(&mut sum, k, -v);
                }
                for (k, v) in r2 {
                    add_into(&mut sum, k, -(v * s.clone()));
                }
                if !Self::sparse_is_zero(&sum) {
                    report
                        .violations
                        .push(Violation::Leibniz { a: nm(a), b: nm(b) });
                }
            }
        }
        if let Some(rep) = &self.rep {
            for a in 0..n {
                for b in 0..n {
                    let s = S::from_i64(koszul(deg(a), deg(b)));
                    let comm = rep[a].mul(&rep[b]).add(&rep[b].mul(&rep[a]).scale(&-s));
                    let mut img = SparseMatrix::zeros(comm.rows(), comm.cols());
                    if let Some(w) = self.bracket_basis(a, b) {
                        for (c, x) in w {
                            img = img.add(&rep[*c].scale(x));
                        }
                    }
                    let diff = comm.add(&img.scale(&-S::one()));
                    if diff.entries().any(|(_, _, v)| !v.is_negligible()) {
                        report
                            .violations
                            .push(Violation::Representation { a: nm(a), b: nm(b) });
                    }
                }
            }
            let m = rep.first().map_or(0, SparseMatrix::rows);
            let mut flat = SparseMatrix::zeros(n, m * m);
            for (a, r) in rep.iter().enumerate() {
                for (i, j, v) in r.entries() {
                    flat.set(a, i * m + j, v.clone());
                }
            }
            let r = rank(&flat);
            if r < n {
                report
                    .violations
                    .push(Violation::NotFaithful { rank: r, dim: n });
            }
        }
        report
    }

    /// Problems with `f` (acting on coordinate columns) as a morphism of dglas
    /// `self → target`: degree, bracket and differential compatibility.
    pub fn morphism_defects(&self, target: &StructLie<S>, f: &SparseMatrix<S>) -> Vec<String> {
        let mut out = Vec::new();
        if f.rows() != target.dim() || f.cols() != self.dim() {
            out.push(format!(
                "map is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                target.dim(),
                self.dim()
            ));
            return out;
        }
        for (i, j, _) in f.entries() {
            if target.degree(i) != self.degree(j) {
                out.push(format!(
                    "{} -> {} changes degree",
                    self.name(j),
                    target.name(i)
                ));
            }
        }
        let ft = f.transpose();
        let image = |v: &Vector<S>| -> Vector<S> {
            let mut w = Vector::new();
            for (j, x) in v {
                for (i, y) in ft.row(*j) {
                    add_into(&mut w, *i, x.clone() * y.clone());
                }
            }
            w
        };
        let sub = |a: Vector<S>, b: Vector<S>| -> Vector<S> {
            let mut s = a;
            for (k, v) in b {
                add_into(&mut s, k, -v);
            }
            s
        };
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let lhs = image(&self.bracket_sparse(&self.unit(a), &self.unit(b)));
                let rhs = target.bracket_sparse(&image(&self.unit(a)), &image(&self.unit(b)));
                if !Self::sparse_is_zero(&sub(lhs, rhs)) {
                    out.push(format!(
                        "bracket [{}, {}] not preserved",
                        self.name(a),
                        self.name(b)
                    ));
                }
            }
            let lhs = image(&self.diff_sparse(&self.unit(a)));
            let rhs = target.diff_sparse(&image(&self.unit(a)));
            if !Self::sparse_is_zero(&sub(lhs, rhs)) {
                out.push(format!("differential not preserved on {}", self.name(a)));
            }
        }
        out
    }
}

pub(crate) fn to_sparse<S: Scalar>(u: &[S]) -> Vector<S> {
    u.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub(crate) fn to_dense<S: Scalar>(u: &Vector<S>, n: usize) -> Vec<S> {
    let mut out = vec![S::zero(); n];
    for (i, x) in u {
        out[*i] = x.clone();
    }
    out
}

/// Serialized form of a [`StructLie`] over the rationals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructLieJson {
    pub basis: Vec<BasisVector>,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
    #[serde(default)]
    pub differential: Vec<DifferentialJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<Vec<RepJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub coeff: String,
}

/// `∂(from) ∋ coeff·to`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialJson {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub element: String,
    pub matrix: Vec<Vec<String>>,
}

fn parse_q(s: &str) -> Result<Rational, LieError> {
    parse_rational(s).map_err(|e| LieError::Parse(e.to_string()))
}

impl StructLie<Rational> {
    pub fn from_json(j: &StructLieJson) -> Result<Self, LieError> {
        let idx: HashMap<&str, usize> = j
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.name.as_str(), i))
            .collect();
        let look = |s: &str| {
            idx.get(s)
                .copied()
                .ok_or_else(|| LieError::UnknownName(s.to_string()))
        };
        let mut entries = Vec::new();
        for b in &j.brackets {
            entries.push((look(&b.a)?, look(&b.b)?, look(&b.c)?, parse_q(&b.coeff)?));
        }
        let n = j.basis.len();
        let mut d = SparseMatrix::zeros(n, n);
        for e in &j.differential {
            d.add_to(look(&e.to)?, look(&e.from)?, parse_q(&e.coeff)?);
        }
        let mut lie = StructLie::new(j.basis.clone(), &entries, Some(d))?;
        if let Some(rep) = &j.rep {
            let mut mats: Vec<Option<SparseMatrix<Rational>>> = vec![None; n];
            for r in rep {
                let rows: Result<Vec<Vec<Rational>>, LieError> = r
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|s| parse_q(s)).collect())
                    .collect();
                mats[look(&r.element)?] = Some(SparseMatrix::from_dense(&rows?));
            }
            let size = mats
                .iter()
                .flatten()
                .map(SparseMatrix::rows)
                .next()
                .unwrap_or(0);
            let mats = mats
                .into_iter()
                .map(|m| m.unwrap_or_else(|| SparseMatrix::zeros(size, size)))
                .collect();
            lie = lie.with_representation(mats)?;
        }
        Ok(lie)
    }

    pub fn to_json(&self) -> StructLieJson {
        let brackets = self
            .brackets
            .iter()
            .flat_map(|((a, b), v)| {
                v.iter().map(move |(c, x)| BracketJson {
                    a: self.name(*a).to_string(),
                    b: self.name(*b).to_string(),
                    c: self.name(*c).to_string(),
                    coeff: format_rational(x),
                })
            })
            .collect();
        let differential = self
            .differential
            .entries()
            .map(|(i, j, x)| DifferentialJson {
                from: self.name(j).to_string(),
                to: self.name(i).to_string(),
                coeff: format_rational(x),
            })
            .collect();
        let rep = self.rep.as_ref().map(|mats| {
            mats.iter()
                .enumerate()
                .map(|(a, m)| RepJson {
                    element: self.name(a).to_string(),
                    matrix: m
                        .to_dense()
                        .iter()
                        .map(|r| r.iter().map(format_rational).collect())
                        .collect(),
                })
                .collect()
        });
        StructLieJson {
            basis: self.basis.clone(),
            brackets,
            differential,
            rep,
        }
    }
}
