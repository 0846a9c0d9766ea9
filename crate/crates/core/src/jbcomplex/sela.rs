use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::JbError;
use crate::exactnum::SparseMatrix;
use crate::liecore::{StructLie, StructLieJson};
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::Rational;

/// A simplex: strictly increasing positions in the index set.
pub type Simplex = Vec<usize>;

/// `ε(S₁, S₂) = (−1)^{n−p}` when `S₁` is `S₂ = (v₀…v_n)` with `v_p` removed.
pub fn epsilon(face: &[usize], simplex: &[usize]) -> Option<i64> {
    if face.len() + 1 != simplex.len() {
        return None;
    }
    let n = simplex.len() - 1;
    let p = (0..=n).find(|&p| {
        let mut s = simplex.to_vec();
        s.remove(p);
        s == face
    })?;
    Some(if (n - p).is_multiple_of(2) { 1 } else { -1 })
}

/// Semi-simplicial Lie algebra: a dgla per simplex of dimension ≤ 2 and
/// coface maps `r_{S₁,S₂}` such that `ε(S₁,S₂)·r_{S₁,S₂}` are dgla maps and
/// consecutive cofaces compose to zero. Missing algebras are zero, missing
/// cofaces are zero maps.
#[derive(Debug, Clone)]
pub struct Sela {
    indices: Vec<String>,
    artin_order: usize,
    algebras: BTreeMap<Simplex, Arc<StructLie<Rational>>>,
    cofaces: BTreeMap<(Simplex, Simplex), SparseMatrix<Rational>>,
}

impl Sela {
    pub fn new(indices: Vec<String>, artin_order: usize) -> Self {
        Sela {
            indices,
            artin_order: artin_order.max(1),
            algebras: BTreeMap::new(),
            cofaces: BTreeMap::new(),
        }
    }

    /// Index set `0, 1, …, n−1`.
    pub fn with_size(n: usize, artin_order: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect(), artin_order)
    }

    pub fn indices(&self) -> &[String] {
        &self.indices
    }

    pub fn artin_order(&self) -> usize {
        self.artin_order
    }

    pub fn set_artin_order(&mut self, n: usize) {
        self.artin_order = n.max(1);
    }

    fn check_simplex(&self, s: &[usize]) -> Result<(), JbError> {
        if s.is_empty()
            || !s.windows(2).all(|w| w[0] < w[1])
            || s.iter().any(|&i| i >= self.indices.len())
        {
            return Err(JbError::BadSimplex(format!("{s:?}")));
        }
        if s.len() > 3 {
            return Err(JbError::DimensionTooHigh(self.label(s)));
        }
        Ok(())
    }

    pub fn set_algebra(&mut self, s: Simplex, lie: StructLie<Rational>) -> Result<(), JbError> {
        self.check_simplex(&s)?;
        self.algebras.insert(s, Arc::new(lie));
        Ok(())
    }

    /// Sets the coface `r_{face,simplex}` directly (columns index the face algebra).
    pub fn set_coface(
        &mut self,
        face: Simplex,
        simplex: Simplex,
        r: SparseMatrix<Rational>,
    ) -> Result<(), JbError> {
        self.check_simplex(&face)?;
        self.check_simplex(&simplex)?;
        if epsilon(&face, &simplex).is_none() {
            return Err(JbError::BadSimplex(format!(
                "{} is not a codimension-one face of {}",
                self.label(&face),
                self.label(&simplex)
            )));
        }
        self.cofaces.insert((face, simplex), r);
        Ok(())
    }

    /// Sets `r = ε·h` from the underlying homomorphism `h`.
    pub fn set_homomorphism(
        &mut self,
        face: Simplex,
        simplex: Simplex,
        h: SparseMatrix<Rational>,
    ) -> Result<(), JbError> {
        let e =
            epsilon(&face, &simplex).ok_or_else(|| JbError::BadSimplex(self.label(&simplex)))?;
        self.set_coface(face, simplex, h.scale(&Rational::from_i64(e)))
    }

    pub fn label(&self, s: &[usize]) -> String {
        let single = self.indices.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = s.iter().map(|&i| self.indices[i].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    pub fn parse_label(&self, label: &str) -> Result<Simplex, JbError> {
        let parts: Vec<String> = if label.contains(',') {
            label.split(',').map(|p| p.trim().to_string()).collect()
        } else {
            label.chars().map(|c| c.to_string()).collect()
        };
        let mut s = Vec::new();
        for p in parts {
            let i = self
                .indices
                .iter()
                .position(|l| *l == p)
                .ok_or_else(|| JbError::BadSimplex(label.to_string()))?;
            s.push(i);
        }
        let mut sorted = s.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != s {
            return Err(JbError::BadSimplex(label.to_string()));
        }
        self.check_simplex(&s)?;
        Ok(s)
    }

    /// Simplices carrying a nonzero algebra, ordered by dimension then lexicographically.
    pub fn simplices(&self) -> Vec<Simplex> {
        let mut v: Vec<Simplex> = self
            .algebras
            .iter()
            .filter(|(_, l)| l.dim() > 0)
            .map(|(s, _)| s.clone())
            .collect();
        v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        v
    }

    pub fn algebra(&self, s: &[usize]) -> Option<&Arc<StructLie<Rational>>> {
        self.algebras.get(s).filter(|l| l.dim() > 0)
    }

    pub fn dim(&self, s: &[usize]) -> usize {
        self.algebra(s).map_or(0, |l| l.dim())
    }

    /// `r_{face,simplex}` as a `dim(simplex) × dim(face)` matrix.
    pub fn coface(&self, face: &[usize], simplex: &[usize]) -> SparseMatrix<Rational> {
        match self.cofaces.get(&(face.to_vec(), simplex.to_vec())) {
            Some(m) => m.clone(),
            None => SparseMatrix::zeros(self.dim(simplex), self.dim(face)),
        }
    }

    /// `h = ε·r`.
    pub fn homomorphism(&self, face: &[usize], simplex: &[usize]) -> SparseMatrix<Rational> {
        let e = epsilon(face, simplex).expect("codimension-one face");
        self.coface(face, simplex).scale(&Rational::from_i64(e))
    }

    /// Codimension-one cofaces `T ⊃ S` with `T` carrying an algebra.
    pub fn cofaces_of(&self, s: &[usize]) -> Vec<Simplex> {
        self.simplices()
            .into_iter()
            .filter(|t| epsilon(s, t).is_some())
            .collect()
    }

    /// Every violated SELA axiom, described in words.
    pub fn defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (s, l) in &self.algebras {
            for v in l.check_lie_axioms().violations {
                out.push(format!("algebra {}: {v}", self.label(s)));
            }
        }
        for ((f, t), r) in &self.cofaces {
            if r.rows() != self.dim(t) || r.cols() != self.dim(f) {
                out.push(format!(
                    "coface {} -> {} is {}x{}, expected {}x{}",
                    self.label(f),
                    self.label(t),
                    r.rows(),
                    r.cols(),
                    self.dim(t),
                    self.dim(f)
                ));
                continue;
            }
            if let (Some(a), Some(b)) = (self.algebra(f), self.algebra(t)) {
                for d in a.morphism_defects(b, &self.homomorphism(f, t)) {
                    out.push(format!(
                        "coface {} -> {}: {d}",
                        self.label(f),
                        self.label(t)
                    ));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        // r∘r = 0 across codimension two
        let all: BTreeSet<Simplex> = self.simplices().into_iter().collect();
        for s1 in &all {
            for s3 in all.iter().filter(|s3| s3.len() == s1.len() + 2) {
                if !s1.iter().all(|i| s3.contains(i)) {
                    continue;
                }
                let mut sum = SparseMatrix::zeros(self.dim(s3), self.dim(s1));
                for &mid in s3.iter().filter(|i| !s1.contains(i)) {
                    let mut s2 = s1.clone();
                    s2.push(mid);
                    s2.sort_unstable();
                    sum = sum.add(&self.coface(&s2, s3).mul(&self.coface(s1, &s2)));
                }
                if !sum.is_zero() {
                    out.push(format!(
                        "cofaces from {} to {} do not compose to zero",
                        self.label(s1),
                        self.label(s3)
                    ));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), JbError> {
        let d = self.defects();
        if d.is_empty() {
            Ok(())
        } else {
            Err(JbError::InvalidSela(d))
        }
    }

    pub fn from_json(j: &SelaJson) -> Result<Self, JbError> {
        let mut sela = Sela::new(j.indices.clone(), j.artin_order);
        for (label, lj) in &j.algebras {
            let s = sela.parse_label(label)?;
            let lie = StructLie::from_json(lj)
                .map_err(|e| JbError::Parse(format!("algebra {label}: {e}")))?;
            sela.set_algebra(s, lie)?;
        }
        for c in &j.cofaces {
            let f = sela.parse_label(&c.from)?;
            let t = sela.parse_label(&c.to)?;
            let mut rows = Vec::new();
            for row in &c.matrix {
                let r: Result<Vec<Rational>, _> = row.iter().map(|s| parse_rational(s)).collect();
                rows.push(r.map_err(|e| JbError::Parse(e.to_string()))?);
            }
            let m = if rows.is_empty() {
                SparseMatrix::zeros(sela.dim(&t), sela.dim(&f))
            } else {
                SparseMatrix::from_dense(&rows)
            };
            sela.set_coface(f, t, m)?;
        }
        Ok(sela)
    }

    pub fn to_json(&self) -> SelaJson {
        SelaJson {
            indices: self.indices.clone(),
            artin_order: self.artin_order,
            algebras: self
                .algebras
                .iter()
                .map(|(s, l)| (self.label(s), l.to_json()))
                .collect(),
            cofaces: self
                .cofaces
                .iter()
                .map(|((f, t), m)| CofaceJson {
                    from: self.label(f),
                    to: self.label(t),
                    matrix: m
                        .to_dense()
                        .iter()
                        .map(|r| r.iter().map(format_rational).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelaJson {
    pub indices: Vec<String>,
    pub artin_order: usize,
    pub algebras: BTreeMap<String, StructLieJson>,
    #[serde(default)]
    pub cofaces: Vec<CofaceJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofaceJson {
    pub from: String,
    pub to: String,
    pub matrix: Vec<Vec<String>>,
}

/// Simplexwise dgla maps `f_S: 𝔤_S → 𝔤'_S` commuting with the cofaces.
#[derive(Debug, Clone, Default)]
pub struct SelaMorphism {
    pub maps: BTreeMap<Simplex, SparseMatrix<Rational>>,
}

impl SelaMorphism {
    pub fn map(&self, s: &[usize], source: &Sela, target: &Sela) -> SparseMatrix<Rational> {
        self.maps
            .get(s)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(target.dim(s), source.dim(s)))
    }

    pub fn defects(&self, source: &Sela, target: &Sela) -> Vec<String> {
        let mut out = Vec::new();
        let mut all: BTreeSet<Simplex> = source.simplices().into_iter().collect();
        all.extend(target.simplices());
        for s in &all {
            let f = self.map(s, source, target);
            if let (Some(a), Some(b)) = (source.algebra(s), target.algebra(s)) {
                for d in a.morphism_defects(b, &f) {
                    out.push(format!("simplex {}: {d}", source.label(s)));
                }
            }
            for t in all.iter().filter(|t| epsilon(s, t).is_some()) {
                let lhs = self.map(t, source, target).mul(&source.coface(s, t));
                let rhs = target.coface(s, t).mul(&f);
                if lhs != rhs {
                    out.push(format!(
                        "does not commute with coface {} -> {}",
                        source.label(s),
                        source.label(t)
                    ));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jbcomplex::examples;

    #[test]
    fn signs() {
        assert_eq!(epsilon(&[0], &[0, 1]), Some(1));
        assert_eq!(epsilon(&[1], &[0, 1]), Some(-1));
        assert_eq!(epsilon(&[1, 2], &[0, 1, 2]), Some(1));
        assert_eq!(epsilon(&[0, 2], &[0, 1, 2]), Some(-1));
        assert_eq!(epsilon(&[0, 1], &[0, 1, 2]), Some(1));
        assert_eq!(epsilon(&[0], &[0, 1, 2]), None);
    }

    #[test]
    fn sample_selas_are_valid() {
        for s in [
            examples::triangle_n3(4),
            examples::lie_pair(2),
            examples::abelian_triangle(2),
            examples::cech_dg(3),
        ] {
            assert_eq!(s.defects(), Vec::<String>::new());
        }
    }

    #[test]
    fn wrong_sign_is_detected() {
        let mut s = examples::triangle_n3(2);
        let id = SparseMatrix::identity(3);
        // a coface without its ε sign breaks r∘r = 0
        s.set_coface(vec![1], vec![0, 1], id).unwrap();
        assert!(!s.defects().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let s = examples::triangle_n3(3);
        let j = s.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back = Sela::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.to_json(), j);
        assert!(back.defects().is_empty());
    }

    #[test]
    fn labels() {
        let s = Sela::with_size(3, 2);
        assert_eq!(s.parse_label("02").unwrap(), vec![0, 2]);
        assert!(s.parse_label("20").is_err());
        assert!(s.parse_label("0123").is_err());
    }
}
