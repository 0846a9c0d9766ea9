//! Bounded complexes of free modules over a polynomial ring, the Hom dgla
//! `𝒩 = Hom(F, F₊)` and the map `κ` from vector fields.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::parse::{infer_vars, parse_poly};
use super::poly::Poly;
use super::SchemeError;
use crate::scalar::Scalar;
use crate::Rational;

/// Dense matrix of polynomials; column `j` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix<S: Scalar> {
    vars: Arc<Vec<String>>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Poly<S>>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zero(vars: &Arc<Vec<String>>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: Arc::clone(vars),
            rows,
            cols,
            entries: vec![vec![Poly::zero(vars); cols]; rows],
        }
    }

    pub fn identity(vars: &Arc<Vec<String>>, n: usize) -> Self {
        let mut m = Self::zero(vars, n, n);
        for i in 0..n {
            m.entries[i][i] = Poly::one(vars);
        }
        m
    }

    pub fn from_rows(
        vars: &Arc<Vec<String>>,
        rows: Vec<Vec<Poly<S>>>,
        cols: usize,
    ) -> Result<Self, SchemeError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(SchemeError::Shape("ragged matrix rows".into()));
        }
        Ok(PolyMatrix {
            vars: Arc::clone(vars),
            rows: rows.len(),
            cols,
            entries: rows,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<S> {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly<S>) {
        self.entries[i][j] = p;
    }

    pub fn entries(&self) -> &[Vec<Poly<S>>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    pub fn map_entries(&self, f: impl Fn(&Poly<S>) -> Poly<S>) -> Self {
        PolyMatrix {
            vars: Arc::clone(&self.vars),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shapes"
        );
        let mut m = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.entries[i][j] = m.entries[i][j].add(&other.entries[i][j]);
            }
        }
        m
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_entries(|p| p.scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut m = Self::zero(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.entries[k][j].is_zero() {
                        m.entries[i][j] =
                            m.entries[i][j].add(&self.entries[i][k].mul(&other.entries[k][j]));
                    }
                }
            }
        }
        m
    }

    /// Entries as parseable strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect()
    }
}

/// Bounded complex of free modules; `maps[k]` goes from degree `lowest + k`
/// to `lowest + k + 1` and has shape `ranks[k+1] × ranks[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyComplex<S: Scalar> {
    vars: Arc<Vec<String>>,
    lowest: i32,
    ranks: Vec<usize>,
    maps: Vec<PolyMatrix<S>>,
}

/// File form. Polynomials are parseable strings; `lowest_degree` defaults so
/// that the top module sits in degree 1 (an augmented resolution `F₊`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lowest_degree: Option<i32>,
    pub ranks: Vec<usize>,
    pub maps: Vec<Vec<Vec<String>>>,
}

impl<S: Scalar> PolyComplex<S> {
    pub fn new(
        vars: &Arc<Vec<String>>,
        lowest: i32,
        ranks: Vec<usize>,
        maps: Vec<PolyMatrix<S>>,
    ) -> Result<Self, SchemeError> {
        if ranks.is_empty() || maps.len() + 1 != ranks.len() {
            return Err(SchemeError::Shape(format!(
                "{} ranks need {} maps, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != ranks[k + 1] || m.cols() != ranks[k] {
                return Err(SchemeError::Shape(format!(
                    "map from degree {} is {}×{}, expected {}×{}",
                    lowest + k as i32,
                    m.rows(),
                    m.cols(),
                    ranks[k + 1],
                    ranks[k]
                )));
            }
        }
        Ok(PolyComplex {
            vars: Arc::clone(vars),
            lowest,
            ranks,
            maps,
        })
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn lowest(&self) -> i32 {
        self.lowest
    }

    pub fn highest(&self) -> i32 {
        self.lowest + self.ranks.len() as i32 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn maps(&self) -> &[PolyMatrix<S>] {
        &self.maps
    }

    /// Rank in degree `i` (zero outside the range).
    pub fn rank(&self, i: i32) -> usize {
        if i < self.lowest || i > self.highest() {
            0
        } else {
            self.ranks[(i - self.lowest) as usize]
        }
    }

    /// The differential leaving degree `i`, if both ends are nonzero.
    pub fn map(&self, i: i32) -> Option<&PolyMatrix<S>> {
        if i < self.lowest || i >= self.highest() {
            None
        } else {
            Some(&self.maps[(i - self.lowest) as usize])
        }
    }

    /// The differential leaving degree `i` as a matrix of the right shape.
    pub fn map_or_zero(&self, i: i32) -> PolyMatrix<S> {
        self.map(i)
            .cloned()
            .unwrap_or_else(|| PolyMatrix::zero(&self.vars, self.rank(i + 1), self.rank(i)))
    }

    /// Degrees `i` with `d^{i+1} ∘ d^i ≠ 0`.
    pub fn composition_defects(&self) -> Vec<i32> {
        (0..self.maps.len().saturating_sub(1))
            .filter(|&k| !self.maps[k + 1].mul(&self.maps[k]).is_zero())
            .map(|k| self.lowest + k as i32)
            .collect()
    }

    pub fn verify(&self) -> Result<(), SchemeError> {
        match self.composition_defects().first() {
            None => Ok(()),
            Some(i) => Err(SchemeError::NotAComplex(format!("d∘d ≠ 0 from degree {i}"))),
        }
    }

    /// The resolution `F` of the ideal: everything below the top degree.
    pub fn without_top(&self) -> Self {
        let n = self.ranks.len() - 1;
        PolyComplex {
            vars: Arc::clone(&self.vars),
            lowest: self.lowest,
            ranks: self.ranks[..n].to_vec(),
            maps: self.maps[..n.saturating_sub(1)].to_vec(),
        }
    }
}

impl PolyComplex<Rational> {
    pub fn from_json(j: &PolyComplexJson) -> Result<Self, SchemeError> {
        let vars = match &j.vars {
            Some(v) => Arc::new(v.clone()),
            None => infer_vars(j.maps.iter().flatten().flatten().map(String::as_str)),
        };
        let lowest = j.lowest_degree.unwrap_or(2 - j.ranks.len() as i32);
        let mut maps = Vec::new();
        for m in &j.maps {
            let rows: Result<Vec<Vec<Poly<Rational>>>, SchemeError> = m
                .iter()
                .map(|r| r.iter().map(|s| parse_poly(s, &vars)).collect())
                .collect();
            let rows = rows?;
            let cols = rows.first().map_or(0, Vec::len);
            let mut pm = PolyMatrix::from_rows(&vars, rows, cols)?;
            // an empty row list still needs the column count of its source
            if pm.rows() == 0 {
                let k = maps.len();
                pm = PolyMatrix::zero(&vars, 0, j.ranks.get(k).copied().unwrap_or(0));
            }
            maps.push(pm);
        }
        let c = PolyComplex::new(&vars, lowest, j.ranks.clone(), maps)?;
        c.verify()?;
        Ok(c)
    }

    pub fn to_json(&self) -> PolyComplexJson {
        PolyComplexJson {
            vars: Some(self.vars.to_vec()),
            lowest_degree: Some(self.lowest),
            ranks: self.ranks.clone(),
            maps: self.maps.iter().map(PolyMatrix::to_strings).collect(),
        }
    }
}

/// `F₊` for a hypersurface: `A·e → A`, `e ↦ f`, in degrees 0, 1.
pub fn hypersurface_resolution<S: Scalar>(f: &Poly<S>) -> PolyComplex<S> {
    let vars = f.vars();
    let m = PolyMatrix::from_rows(vars, vec![vec![f.clone()]], 1).unwrap();
    PolyComplex::new(vars, 0, vec![1, 1], vec![m]).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Augmented Koszul complex of `f₁, …, f_c`: `∧^k A^c` in degree `1 − k`,
/// `e_S ↦ Σ_p (−1)^p f_{s_p} e_{S∖s_p}`.
pub fn koszul_resolution<S: Scalar>(fs: &[Poly<S>]) -> Result<PolyComplex<S>, SchemeError> {
    let c = fs.len();
    if c == 0 {
        return Err(SchemeError::Invalid("no generators".into()));
    }
    let vars = fs[0].vars();
    let bases: Vec<Vec<Vec<usize>>> = (0..=c).rev().map(|k| subsets(c, k)).collect();
    let ranks: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut maps = Vec::new();
    for w in bases.windows(2) {
        let (src, tgt) = (&w[0], &w[1]);
        let mut m = PolyMatrix::zero(vars, tgt.len(), src.len());
        for (j, s) in src.iter().enumerate() {
            for p in 0..s.len() {
                let mut rest = s.clone();
                let dropped = rest.remove(p);
                let i = tgt.iter().position(|t| *t == rest).unwrap();
                let term = if p % 2 == 0 {
                    fs[dropped].clone()
                } else {
                    fs[dropped].neg()
                };
                m.entries[i][j] = m.entries[i][j].add(&term);
            }
        }
        maps.push(m);
    }
    let complex = PolyComplex::new(vars, 1 - c as i32, ranks, maps)?;
    complex.verify()?;
    Ok(complex)
}

/// A homogeneous element of `Hom(F, F₊)`: `blocks[i]` maps `F^i` to
/// `F₊^{i+degree}`; absent blocks are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedMap<S: Scalar> {
    pub degree: i32,
    pub blocks: BTreeMap<i32, PolyMatrix<S>>,
}

impl<S: Scalar> GradedMap<S> {
    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(PolyMatrix::is_zero)
    }

    pub fn block(&self, i: i32) -> Option<&PolyMatrix<S>> {
        self.blocks.get(&i)
    }
}

/// The normal dgla `Hom(F, F₊)`, maps vanishing on `F¹₊`, with the graded
/// commutator and `d(h) = d_{F₊}∘h − (−1)^{|h|} h∘d_F`.
#[derive(Debug, Clone)]
pub struct HomDgla<S: Scalar> {
    f_plus: PolyComplex<S>,
}

/// Normal dgla of the augmented resolution `F₊` (top degree is `F¹ = A`).
pub fn normal_dgla<S: Scalar>(f_plus: &PolyComplex<S>) -> Result<HomDgla<S>, SchemeError> {
    if f_plus.highest() != 1 {
        return Err(SchemeError::Shape(format!(
            "augmented resolution must end in degree 1, ends in {}",
            f_plus.highest()
        )));
    }
    f_plus.verify()?;
    Ok(HomDgla {
        f_plus: f_plus.clone(),
    })
}

impl<S: Scalar> HomDgla<S> {
    pub fn complex(&self) -> &PolyComplex<S> {
        &self.f_plus
    }

    fn vars(&self) -> &Arc<Vec<String>> {
        self.f_plus.vars()
    }

    /// Source degrees of `F` (everything below degree 1).
    fn source_degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.f_plus.lowest()..=0
    }

    /// Degrees in which `𝒩` is nonzero.
    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        let lo = self.f_plus.lowest();
        lo..=1 - lo
    }

    /// `(source degree, rows, cols)` of the blocks of `𝒩^d`.
    pub fn blocks(&self, d: i32) -> Vec<(i32, usize, usize)> {
        self.source_degrees()
            .map(|i| (i, self.f_plus.rank(i + d), self.f_plus.rank(i)))
            .filter(|&(_, r, c)| r > 0 && c > 0)
            .collect()
    }

    /// Rank of `𝒩^d` as a free module.
    pub fn rank(&self, d: i32) -> usize {
        self.blocks(d).iter().map(|(_, r, c)| r * c).sum()
    }

    pub fn zero(&self, d: i32) -> GradedMap<S> {
        GradedMap {
            degree: d,
            blocks: self
                .blocks(d)
                .into_iter()
                .map(|(i, r, c)| (i, PolyMatrix::zero(self.vars(), r, c)))
                .collect(),
        }
    }

    fn block_or_zero(&self, h: &GradedMap<S>, i: i32) -> PolyMatrix<S> {
        match h.blocks.get(&i) {
            Some(m) if i <= 0 => m.clone(),
            _ => PolyMatrix::zero(
                self.vars(),
                self.f_plus.rank(i + h.degree),
                self.f_plus.rank(i),
            ),
        }
    }

    /// `h ∘ k`, with `h` zero on `F¹₊`.
    pub fn compose(&self, h: &GradedMap<S>, k: &GradedMap<S>) -> GradedMap<S> {
        let d = h.degree + k.degree;
        let mut out = self.zero(d);
        for (i, m) in out.blocks.iter_mut() {
            let mid = i + k.degree;
            if mid > 0 {
                continue;
            }
            *m = self.block_or_zero(h, mid).mul(&self.block_or_zero(k, *i));
        }
        out
    }

    pub fn add(&self, h: &GradedMap<S>, k: &GradedMap<S>) -> GradedMap<S> {
        assert_eq!(h.degree, k.degree, "adding maps of different degree");
        let mut out = self.zero(h.degree);
        for (i, m) in out.blocks.iter_mut() {
            *m = self.block_or_zero(h, *i).add(&self.block_or_zero(k, *i));
        }
        out
    }

    pub fn scale(&self, h: &GradedMap<S>, c: &S) -> GradedMap<S> {
        GradedMap {
            degree: h.degree,
            blocks: h.blocks.iter().map(|(i, m)| (*i, m.scale(c))).collect(),
        }
    }

    /// `[h, k] = h∘k − (−1)^{|h||k|} k∘h`.
    pub fn bracket(&self, h: &GradedMap<S>, k: &GradedMap<S>) -> GradedMap<S> {
        let sign = if (h.degree * k.degree).rem_euclid(2) == 0 {
            -S::one()
        } else {
            S::one()
        };
        self.add(&self.compose(h, k), &self.scale(&self.compose(k, h), &sign))
    }

    /// `d_{F₊}∘h − (−1)^{|h|} h∘d_F`.
    pub fn differential(&self, h: &GradedMap<S>) -> GradedMap<S> {
        let d = h.degree + 1;
        let mut out = self.zero(d);
        let sign = if h.degree.rem_euclid(2) == 0 {
            -S::one()
        } else {
            S::one()
        };
        for (i, m) in out.blocks.iter_mut() {
            let i = *i;
            let post = self
                .f_plus
                .map_or_zero(i + h.degree)
                .mul(&self.block_or_zero(h, i));
            // d_F leaves F^i only while staying inside F (degrees ≤ 0)
            let pre = if i < 0 {
                self.block_or_zero(h, i + 1)
                    .mul(&self.f_plus.map_or_zero(i))
                    .scale(&sign)
            } else {
                PolyMatrix::zero(self.vars(), m.rows(), m.cols())
            };
            *m = post.add(&pre);
        }
        out
    }
}

/// `κ(v)`: each differential of `F₊` with `v` applied entrywise, as a degree-1
/// element of `𝒩`. Fails unless `d_𝒩 κ(v) = 0`.
pub fn kappa<S: Scalar>(n: &HomDgla<S>, v: &[Poly<S>]) -> Result<GradedMap<S>, SchemeError> {
    let f = n.complex();
    if v.len() != f.vars().len() {
        return Err(SchemeError::Shape(format!(
            "vector field has {} components, ring has {} variables",
            v.len(),
            f.vars().len()
        )));
    }
    let mut h = n.zero(1);
    for (i, m) in h.blocks.iter_mut() {
        *m = f.map_or_zero(*i).map_entries(|p| p.apply_field(v));
    }
    let dh = n.differential(&h);
    if let Some((i, _)) = dh.blocks.iter().find(|(_, m)| !m.is_zero()) {
        return Err(SchemeError::KappaFailure(format!("d_𝒩 κ(v) ≠ 0 on F^{i}")));
    }
    Ok(h)
}
