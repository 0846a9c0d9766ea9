use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use super::linf::LInfinity;
use super::sela::{Sela, SelaMorphism};
use super::sym::{self, Chain, Monomial};
use super::JbError;
use crate::exactnum::{homology, homology_dim, SparseMatrix};
use crate::liecore::ArtinLine;
use crate::scalar::Scalar;
use crate::Rational;

/// Assembly parameters: the range of degrees `j` of `J^j` to enumerate and
/// the longest monomial kept (defaults to `N − 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JbConfig {
    pub window: (i32, i32),
    pub sym_cap: Option<usize>,
}

impl Default for JbConfig {
    fn default() -> Self {
        JbConfig {
            window: (-1, 1),
            sym_cap: None,
        }
    }
}

impl JbConfig {
    pub fn window(lo: i32, hi: i32) -> Self {
        JbConfig {
            window: (lo, hi),
            sym_cap: None,
        }
    }
}

/// Outcome of checking `d^{j+1} ∘ d^j = 0` across the window.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DSquaredReport {
    /// Degrees `j` for which the composition was formed.
    pub checked: Vec<i32>,
    /// First nonzero entry: source monomial, target monomial, coefficient.
    pub offending: Option<(String, String, String)>,
}

impl DSquaredReport {
    pub fn is_zero(&self) -> bool {
        self.offending.is_none()
    }
}

/// `dim F_iJ^j / F_{i−1}J^j`, alone and tensored with `𝔪^{i}/𝔪^{N}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub degree: i32,
    pub length: usize,
    pub sym_dim: usize,
    pub artin_dim: usize,
}

/// `H^j(J_S)` computed from the whole complex and as the sum over the
/// filtration layers `F_pJ ⊗ t^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct JbCohomology {
    pub degree: i32,
    pub dim: usize,
    pub dim_by_layers: usize,
    /// `(p, dim H^j(F_pJ))` for `1 ≤ p ≤ N − 1`.
    pub layers: Vec<(usize, usize)>,
    pub representatives: Vec<Chain>,
}

/// The assembled complex: monomial bases per degree and the differentials
/// between consecutive degrees of the window.
#[derive(Debug)]
pub struct JbComplex {
    sela: Sela,
    order: usize,
    sym_cap: usize,
    window: (i32, i32),
    linf: LInfinity,
    vdeg: Vec<i32>,
    bases: BTreeMap<i32, Vec<Monomial>>,
    index: BTreeMap<i32, HashMap<Monomial, usize>>,
    d: BTreeMap<i32, SparseMatrix<Rational>>,
}

impl JbComplex {
    pub fn assemble(sela: &Sela, config: &JbConfig) -> Result<Self, JbError> {
        sela.validate()?;
        let order = sela.artin_order();
        if order == 0 {
            return Err(JbError::ZeroOrder);
        }
        let needed = order.saturating_sub(1);
        let sym_cap = config.sym_cap.unwrap_or(needed.max(1));
        if sym_cap < needed {
            return Err(JbError::SymCapTooSmall {
                cap: sym_cap,
                needed,
            });
        }
        let (lo, hi) = config.window;
        let linf = LInfinity::new(sela, sym_cap)?;
        let vdeg: Vec<i32> = (0..linf.dim()).map(|v| linf.degree(v)).collect();
        let bases = sym::enumerate(&vdeg, sym_cap, lo, hi);
        let index = bases
            .iter()
            .map(|(j, b)| {
                (
                    *j,
                    b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect(),
                )
            })
            .collect();
        let mut jb = JbComplex {
            sela: sela.clone(),
            order,
            sym_cap,
            window: (lo, hi),
            linf,
            vdeg,
            bases,
            index,
            d: BTreeMap::new(),
        };
        for j in lo..hi {
            let m = jb.build_differential(j);
            jb.d.insert(j, m);
        }
        Ok(jb)
    }

    fn build_differential(&self, j: i32) -> SparseMatrix<Rational> {
        let src = &self.bases[&j];
        let tgt = &self.index[&(j + 1)];
        let mut m = SparseMatrix::zeros(tgt.len(), src.len());
        for (col, mono) in src.iter().enumerate() {
            for (w, c) in self.d_monomial(mono) {
                let row = *tgt.get(&w).unwrap_or_else(|| {
                    panic!(
                        "d({}) ∋ {} outside degree {}",
                        self.monomial_label(mono),
                        self.monomial_label(&w),
                        j + 1
                    )
                });
                m.set(row, col, c);
            }
        }
        m
    }

    /// `d` of a single monomial: every nonempty choice of factors is fed to
    /// the bracket of that arity and the output put back with Koszul signs.
    pub fn d_monomial(&self, m: &[usize]) -> BTreeMap<Monomial, Rational> {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for subset in sym::position_subsets(m.len()) {
            let inputs: Vec<usize> = subset.iter().map(|&p| m[p]).collect();
            let br = self.linf.bracket(&inputs);
            if br.is_empty() {
                continue;
            }
            let eps = sym::extraction_sign(&self.vdeg, m, &subset);
            let rest: Vec<usize> = (0..m.len())
                .filter(|p| !subset.contains(p))
                .map(|p| m[p])
                .collect();
            for (w, c) in br {
                if let Some((mono, s)) = sym::multiply(&self.vdeg, &[w], &rest) {
                    let e = out.entry(mono).or_insert_with(Rational::zero);
                    *e += c * Rational::from_i64(eps * s);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn sela(&self) -> &Sela {
        &self.sela
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> ArtinLine {
        ArtinLine::new(self.order)
    }

    pub fn sym_cap(&self) -> usize {
        self.sym_cap
    }

    pub fn window(&self) -> (i32, i32) {
        self.window
    }

    pub fn linf(&self) -> &LInfinity {
        &self.linf
    }

    pub fn vdegrees(&self) -> &[i32] {
        &self.vdeg
    }

    pub fn basis(&self, j: i32) -> &[Monomial] {
        self.bases.get(&j).map(|b| b.as_slice()).unwrap_or(&[])
    }

    pub fn dim(&self, j: i32) -> usize {
        self.basis(j).len()
    }

    /// `d^j: J^j → J^{j+1}`, for `lo ≤ j < hi`.
    pub fn differential(&self, j: i32) -> Option<&SparseMatrix<Rational>> {
        self.d.get(&j)
    }

    pub fn monomial_label(&self, m: &[usize]) -> String {
        if m.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < m.len() {
            let mut k = i;
            while k < m.len() && m[k] == m[i] {
                k += 1;
            }
            let name = self.linf.label(m[i]).to_string();
            parts.push(if k - i > 1 {
                format!("({name})^{}", k - i)
            } else {
                name
            });
            i = k;
        }
        parts.join("·")
    }

    /// Parses a label produced by [`monomial_label`](Self::monomial_label).
    pub fn parse_monomial(&self, label: &str) -> Result<Monomial, JbError> {
        if label == "1" {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for part in label.split('·') {
            let (name, power) = match part.strip_prefix('(').and_then(|p| p.rsplit_once(")^")) {
                Some((n, p)) => (
                    n,
                    p.parse::<usize>()
                        .map_err(|e| JbError::Parse(e.to_string()))?,
                ),
                None => (part, 1),
            };
            let v = (0..self.linf.dim())
                .find(|&v| self.linf.label(v) == name)
                .ok_or_else(|| JbError::Parse(format!("unknown generator {name}")))?;
            out.extend(std::iter::repeat_n(v, power));
        }
        out.sort();
        Ok(out)
    }

    /// Number of monomials of length `≤ p` in degree `j` (a prefix of the basis).
    fn filtration_prefix(&self, j: i32, p: usize) -> usize {
        self.basis(j).iter().take_while(|m| m.len() <= p).count()
    }

    fn restrict(&self, j: i32, p: usize) -> SparseMatrix<Rational> {
        let (rows, cols) = (
            self.filtration_prefix(j + 1, p),
            self.filtration_prefix(j, p),
        );
        let full = &self.d[&j];
        let mut m = SparseMatrix::zeros(rows, cols);
        for (i, k, x) in full.entries() {
            if i < rows && k < cols {
                m.set(i, k, x.clone());
            }
        }
        m
    }

    pub fn verify_d_squared(&self) -> DSquaredReport {
        let (lo, hi) = self.window;
        let mut checked = Vec::new();
        let mut offending = None;
        for j in lo..hi - 1 {
            checked.push(j);
            let dd = self.d[&(j + 1)].mul(&self.d[&j]);
            if offending.is_none() {
                if let Some((i, k, x)) = dd.entries().find(|(_, _, x)| !x.is_zero()) {
                    offending = Some((
                        self.monomial_label(&self.bases[&j][k]),
                        self.monomial_label(&self.bases[&(j + 2)][i]),
                        x.to_string(),
                    ));
                }
            }
        }
        DSquaredReport { checked, offending }
    }

    /// Entries of `d` that increase word length (none if `d(F_m) ⊆ F_m`).
    pub fn filtration_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (j, m) in &self.d {
            for (i, k, _) in m.entries() {
                let (src, tgt) = (&self.bases[j][k], &self.bases[&(j + 1)][i]);
                if tgt.len() > src.len() {
                    out.push(format!(
                        "d({}) ∋ {}",
                        self.monomial_label(src),
                        self.monomial_label(tgt)
                    ));
                }
            }
        }
        out
    }

    /// Entries where `d` on `F₁` differs from the standard differential.
    pub fn f1_defects(&self) -> Vec<String> {
        let k = self.linf.standard_complex();
        let dk = k.full_differential();
        let mut out = Vec::new();
        for (j, b) in &self.bases {
            if *j >= self.window.1 {
                continue;
            }
            for m in b.iter().filter(|m| m.len() == 1) {
                let got = self.d_monomial(m);
                let mut want: BTreeMap<Monomial, Rational> = BTreeMap::new();
                for (i, x) in dk.transpose().row(m[0]) {
                    want.insert(vec![*i], x.clone());
                }
                if got != want {
                    out.push(format!(
                        "d({}) is not the standard differential",
                        self.monomial_label(m)
                    ));
                }
            }
        }
        out
    }

    /// Dimensions of the associated graded pieces in every degree of the window.
    pub fn graded_pieces(&self) -> Vec<GradedPiece> {
        let mut out = Vec::new();
        for (j, b) in &self.bases {
            for len in 1..=self.sym_cap {
                let sym_dim = b.iter().filter(|m| m.len() == len).count();
                out.push(GradedPiece {
                    degree: *j,
                    length: len,
                    sym_dim,
                    artin_dim: if len < self.order {
                        sym_dim * (self.order - len)
                    } else {
                        0
                    },
                });
            }
        }
        out
    }

    fn check_window(&self, j: i32) -> Result<(), JbError> {
        let (lo, hi) = self.window;
        if j - 1 < lo || j + 1 > hi {
            return Err(JbError::WindowTooSmall {
                degree: j,
                lo: j - 1,
                hi: j + 1,
            });
        }
        Ok(())
    }

    /// `H^j(F_pJ)`.
    pub fn filtered_cohomology_dim(&self, j: i32, p: usize) -> Result<usize, JbError> {
        self.check_window(j)?;
        Ok(homology_dim(&self.restrict(j - 1, p), &self.restrict(j, p)))
    }

    /// `H^j(J_S)` with `J_S = ⊕_{1 ≤ p < N} F_pJ ⊗ t^p`.
    pub fn cohomology(&self, j: i32) -> Result<JbCohomology, JbError> {
        self.check_window(j)?;
        let ps: Vec<usize> = (1..self.order).collect();
        let layers: Vec<(usize, usize)> = ps
            .iter()
            .map(|&p| Ok((p, self.filtered_cohomology_dim(j, p)?)))
            .collect::<Result<_, JbError>>()?;
        let dim_by_layers = layers.iter().map(|(_, d)| d).sum();
        // the whole complex: block diagonal in p
        let block = |k: i32| {
            let blocks: Vec<SparseMatrix<Rational>> =
                ps.iter().map(|&p| self.restrict(k, p)).collect();
            block_diagonal(&blocks)
        };
        let h = homology(&block(j - 1), &block(j));
        let ring = self.ring();
        let offsets: Vec<(usize, usize)> = {
            let mut acc = 0;
            ps.iter()
                .map(|&p| {
                    let start = acc;
                    acc += self.filtration_prefix(j, p);
                    (p, start)
                })
                .collect()
        };
        let representatives = h
            .representatives
            .iter()
            .map(|v| {
                let mut chain = Chain::new();
                for (&(p, start), len) in offsets
                    .iter()
                    .zip(ps.iter().map(|&p| self.filtration_prefix(j, p)))
                {
                    for (i, m) in self.basis(j).iter().take(len).enumerate() {
                        let x = &v[start + i];
                        if !x.is_zero() {
                            let e = chain.entry(m.clone()).or_insert_with(|| ring.zero());
                            *e = e.add(&ring.monomial(p, x.clone()));
                        }
                    }
                }
                chain
            })
            .collect();
        Ok(JbCohomology {
            degree: j,
            dim: h.dim,
            dim_by_layers,
            layers,
            representatives,
        })
    }

    /// `1 + dim H⁰(F_{N−1}J)`: the dimension of the deformation ring over
    /// `ℚ[t]/tᴺ`.
    pub fn deformation_ring_dim(&self) -> Result<usize, JbError> {
        if self.order <= 1 {
            self.check_window(0)?;
            return Ok(1);
        }
        Ok(1 + self.filtered_cohomology_dim(0, self.order - 1)?)
    }

    /// `d` applied to a chain with Artin coefficients.
    pub fn apply_d(&self, chain: &Chain) -> Chain {
        let mut out = Chain::new();
        for (m, c) in chain {
            for (w, x) in self.d_monomial(m) {
                let e = out.entry(w).or_insert_with(|| c.ring().zero());
                *e = e.add(&c.scale(&x));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Product of chains in `J ⊗ S`.
    pub fn multiply_chains(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                if let Some((m, s)) = sym::multiply(&self.vdeg, ma, mb) {
                    let e = out.entry(m).or_insert_with(|| c.ring().zero());
                    *e = e.add(&c.scale(&Rational::from_i64(s)));
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Image under a SELA morphism, as a map `J(source) → J(target)` on
    /// monomials.
    fn push_monomial(
        &self,
        target: &JbComplex,
        f: &SelaMorphism,
        m: &[usize],
    ) -> BTreeMap<Monomial, Rational> {
        let lin: Vec<Vec<(usize, Rational)>> = m
            .iter()
            .map(|&v| {
                let kb = &self.linf.basis()[v].k;
                let map = f.map(&kb.simplex, &self.sela, &target.sela);
                map.transpose()
                    .row(kb.a)
                    .iter()
                    .map(|(c, x)| {
                        (
                            target
                                .linf
                                .position(&kb.simplex, *c)
                                .expect("degree-preserving map"),
                            x.clone(),
                        )
                    })
                    .collect()
            })
            .collect();
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        acc.insert(Vec::new(), Rational::from_i64(1));
        for factor in lin {
            let mut next = BTreeMap::new();
            for (m, c) in &acc {
                for (w, x) in &factor {
                    if let Some((mono, s)) = sym::multiply(&target.vdeg, m, &[*w]) {
                        let e = next.entry(mono).or_insert_with(Rational::zero);
                        *e += c.clone() * x.clone() * Rational::from_i64(s);
                    }
                }
            }
            next.retain(|_, c: &mut Rational| !c.is_zero());
            acc = next;
        }
        acc
    }

    /// Monomials where `Sym(f) ∘ d ≠ d ∘ Sym(f)`.
    pub fn naturality_defects(&self, target: &JbComplex, f: &SelaMorphism) -> Vec<String> {
        let mut out = Vec::new();
        let apply_target_d = |x: &BTreeMap<Monomial, Rational>| {
            let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
            for (m, c) in x {
                for (w, y) in target.d_monomial(m) {
                    *acc.entry(w).or_insert_with(Rational::zero) += c.clone() * y;
                }
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        };
        for (j, b) in &self.bases {
            if *j >= self.window.1 {
                continue;
            }
            for m in b {
                let lhs = apply_target_d(&self.push_monomial(target, f, m));
                let mut rhs: BTreeMap<Monomial, Rational> = BTreeMap::new();
                for (w, c) in self.d_monomial(m) {
                    for (u, x) in self.push_monomial(target, f, &w) {
                        *rhs.entry(u).or_insert_with(Rational::zero) += c.clone() * x;
                    }
                }
                rhs.retain(|_, c| !c.is_zero());
                if lhs != rhs {
                    out.push(format!("naturality fails on {}", self.monomial_label(m)));
                }
            }
        }
        out
    }

    /// Truncated exponential `Σ xⁿ/n!` of an even chain with coefficients in `𝔪`.
    pub fn exp_chain(&self, x: &Chain) -> Chain {
        let ring = self.ring();
        let mut unit = Chain::new();
        unit.insert(Vec::new(), ring.one());
        let mut out = unit.clone();
        let mut power = unit;
        for n in 1..self.order.max(1) {
            power = self.multiply_chains(&power, x);
            if power.is_empty() {
                break;
            }
            let inv = Rational::new(1.into(), crate::exactnum::factorial(n as u64));
            for (m, c) in &power {
                let e = out.entry(m.clone()).or_insert_with(|| ring.zero());
                *e = e.add(&c.scale(&inv));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn block_diagonal(blocks: &[SparseMatrix<Rational>]) -> SparseMatrix<Rational> {
    let rows = blocks.iter().map(|b| b.rows()).sum();
    let cols = blocks.iter().map(|b| b.cols()).sum();
    let mut m = SparseMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for (i, k, x) in b.entries() {
            m.set(r0 + i, c0 + k, x.clone());
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    m
}

/// Coefficient of `t^k` in every component of a chain.
pub fn t_layer(chain: &Chain, k: usize) -> BTreeMap<Monomial, Rational> {
    chain
        .iter()
        .map(|(m, c)| (m.clone(), c.coeff(k)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jbcomplex::examples;

    fn assemble(sela: &Sela, lo: i32, hi: i32) -> JbComplex {
        JbComplex::assemble(sela, &JbConfig::window(lo, hi)).unwrap()
    }

    #[test]
    fn d_squared_on_examples() {
        for (name, sela) in [
            ("abelian", examples::abelian_triangle(3)),
            ("edge", examples::edge_n3(3)),
            ("pair", examples::lie_pair(3)),
            ("chart", examples::obstructed_chart(3)),
            ("triangle", examples::triangle_n3(3)),
            ("dg", examples::cech_dg(3)),
        ] {
            let r = assemble(&sela, -2, 2).verify_d_squared();
            assert_eq!(r.checked, vec![-2, -1, 0]);
            assert!(r.is_zero(), "{name}: {:?}", r.offending);
        }
        assert!(assemble(&examples::triangle_n3(4), -1, 1)
            .verify_d_squared()
            .is_zero());
    }

    /// Counts monomials by (degree, length) from the generating function
    /// `Π_even 1/(1 − x^d y) · Π_odd (1 + x^d y)`.
    fn oracle_counts(vdeg: &[i32], max_len: usize) -> BTreeMap<(i32, usize), usize> {
        let mut poly: BTreeMap<(i32, usize), usize> = BTreeMap::new();
        poly.insert((0, 0), 1);
        for &d in vdeg {
            let mut next: BTreeMap<(i32, usize), usize> = BTreeMap::new();
            let top = if d.rem_euclid(2) == 1 { 1 } else { max_len };
            for ((j, l), c) in &poly {
                for k in 0..=top {
                    if l + k <= max_len {
                        *next.entry((j + d * k as i32, l + k)).or_default() += c;
                    }
                }
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn graded_pieces_match_the_generating_function() {
        for sela in [
            examples::triangle_n3(4),
            examples::lie_pair(3),
            examples::cech_dg(3),
        ] {
            let jb = assemble(&sela, -2, 2);
            let oracle = oracle_counts(jb.vdegrees(), jb.sym_cap());
            for g in jb.graded_pieces() {
                let want = oracle.get(&(g.degree, g.length)).copied().unwrap_or(0);
                assert_eq!(g.sym_dim, want, "degree {} length {}", g.degree, g.length);
                assert_eq!(g.artin_dim, want * (jb.order() - g.length));
            }
            // F₁ is the standard complex shifted by one
            let k = jb.linf().standard_complex();
            for j in -2..=2 {
                let f1 = jb
                    .graded_pieces()
                    .iter()
                    .find(|g| g.degree == j && g.length == 1)
                    .unwrap()
                    .sym_dim;
                assert_eq!(f1, k.dim(j + 1));
            }
        }
        // i > N − 1 contributes nothing over ℚ[t]/t^N
        let jb = JbComplex::assemble(
            &examples::triangle_n3(2),
            &JbConfig {
                window: (-1, 1),
                sym_cap: Some(3),
            },
        )
        .unwrap();
        assert!(jb
            .graded_pieces()
            .iter()
            .filter(|g| g.length > 1)
            .all(|g| g.artin_dim == 0));
    }

    #[test]
    fn filtration_and_f1() {
        for sela in [
            examples::triangle_n3(3),
            examples::cech_dg(3),
            examples::lie_pair(3),
        ] {
            let jb = assemble(&sela, -2, 2);
            assert!(jb.filtration_defects().is_empty());
            assert!(jb.f1_defects().is_empty());
        }
    }

    #[test]
    fn cohomology_two_ways() {
        for sela in [
            examples::triangle_n3(3),
            examples::abelian_triangle(3),
            examples::cech_dg(3),
        ] {
            let jb = assemble(&sela, -2, 2);
            for j in -1..=1 {
                let h = jb.cohomology(j).unwrap();
                assert_eq!(h.dim, h.dim_by_layers, "degree {j}");
                assert_eq!(h.representatives.len(), h.dim);
                for r in &h.representatives {
                    assert!(jb.apply_d(r).is_empty());
                }
            }
        }
    }

    #[test]
    fn abelian_triangle_h0_matches_cech() {
        // over ℚ[t]/t²: H⁰(J_S) = H¹(K) (one copy of 𝔪)
        let sela = examples::abelian_triangle(2);
        let jb = assemble(&sela, -1, 1);
        let k = jb.linf().standard_complex();
        let h = jb.cohomology(0).unwrap();
        assert_eq!(h.dim, k.cohomology(1).dim);
        assert_eq!(jb.deformation_ring_dim().unwrap(), 1 + h.dim);
        // the hollow triangle has a one-parameter deformation
        let hollow = assemble(&examples::abelian_hollow_triangle(2), -1, 1);
        assert_eq!(hollow.cohomology(0).unwrap().dim, 1);
        assert_eq!(hollow.deformation_ring_dim().unwrap(), 2);
    }

    #[test]
    fn zero_sela_has_trivial_ring() {
        let sela = Sela::with_size(2, 3);
        let jb = assemble(&sela, -1, 1);
        assert_eq!(jb.cohomology(0).unwrap().dim, 0);
        assert_eq!(jb.deformation_ring_dim().unwrap(), 1);
    }

    #[test]
    fn obstructed_chart_ring() {
        // R = ℚ[a,b]/(ab) truncated: over ℚ[t]/t³ the t-linear maps to R are
        // determined by the tangent plane and the one relation
        let jb = assemble(&examples::obstructed_chart(3), -1, 1);
        let h = jb.cohomology(0).unwrap();
        assert_eq!(h.dim, h.dim_by_layers);
        assert_eq!(h.layers[0], (1, 2));
        // ℚ[a,b]/(ab) modulo the cube of its maximal ideal: 1, a, b, a², b²
        assert_eq!(jb.deformation_ring_dim().unwrap(), 5);
    }

    #[test]
    fn naturality() {
        let src = assemble(&examples::triangle_n3(3), -1, 1);
        let tgt = assemble(&examples::abelian_triangle(3), -1, 1);
        let f = examples::n3_to_abelian();
        assert!(f.defects(src.sela(), tgt.sela()).is_empty());
        assert!(src.naturality_defects(&tgt, &f).is_empty());
    }

    #[test]
    fn errors() {
        let sela = examples::triangle_n3(4);
        let e = JbComplex::assemble(
            &sela,
            &JbConfig {
                window: (-1, 1),
                sym_cap: Some(2),
            },
        )
        .unwrap_err();
        assert_eq!(e, JbError::SymCapTooSmall { cap: 2, needed: 3 });
        let jb = assemble(&examples::triangle_n3(2), 0, 1);
        assert!(matches!(
            jb.cohomology(0),
            Err(JbError::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn monomial_labels_round_trip() {
        let jb = assemble(&examples::triangle_n3(4), -1, 1);
        for m in jb.basis(0).iter().chain(jb.basis(-1)) {
            assert_eq!(&jb.parse_monomial(&jb.monomial_label(m)).unwrap(), m);
        }
    }
}
