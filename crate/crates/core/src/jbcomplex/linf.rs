//! The `L∞` brackets on `V = K(𝔤)[1]` whose coderivation extension is the
//! differential of `J`.
//!
//! `V` lives in shifted degrees −1, 0, 1:
//! - gauge directions `X ∈ 𝔤_α⁰` (odd),
//! - coordinates `φ_α ∈ 𝔤_α¹` and `ψ_αβ ∈ 𝔤_αβ⁰` (even),
//! - curvature directions `𝔤_α² ⊕ 𝔤_αβ¹ ⊕ 𝔤_αβγ⁰` (odd).
//!
//! A bracket is specified by a polynomial `P_n` in the inputs; on distinct
//! inputs `ℓ_n` sums `P_n` over all ways of matching input slots with leaf
//! occurrences of the same type. Then `ℓ_n(x,…,x)/n! = P_n(x)`, so the
//! Maurer–Cartan expression `Σ ℓ_n(xⁿ)/n!` of an even `x = (φ, ψ)` is:
//! - `∂φ_α + ½[φ_α, φ_α]` on vertices,
//! - `r φ_α + e^{ad ψ}(r φ_β) + ((e^{ad ψ} − 1)/ad ψ)(∂ψ)` on edges `αβ`,
//! - `β(r ψ_αγ, r ψ_αβ, r ψ_βγ)` on triangles `αβγ`,
//!
//! with `r` the (signed) cofaces. The gauge directions act by the linearized
//! gauge action: `[X, φ] − ∂X` on `φ`, `C(±ad ψ)(r X)` on `ψ` (sign `+` when
//! `α` is the first vertex of the edge, `−` when it is the second), and by
//! conjugation on the curvature.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use super::sela::{Sela, Simplex};
use super::standard::{KBasis, StandardComplex};
use super::JbError;
use crate::bch::BchTable;
use crate::exactnum::{bernoulli_normalized, factorial, SparseMatrix};
use crate::freelie::{permutations, standard_factorization};
use crate::liecore::StructLie;
use crate::scalar::Scalar;
use crate::Rational;

type Vector = BTreeMap<usize, Rational>;

/// Role of a basis vector of `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Gauge,
    Phi,
    Psi,
    Curvature,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VBasis {
    pub k: KBasis,
    pub kind: Kind,
    /// Shifted degree `s + q − 1`.
    pub degree: i32,
}

/// The brackets `ℓ_n` on the basis of `V`.
#[derive(Debug)]
pub struct LInfinity {
    sela: Sela,
    complex: StandardComplex,
    basis: Vec<VBasis>,
    bch: BchTable,
    max_arity: usize,
    cache: Mutex<HashMap<Vec<usize>, Vec<(usize, Rational)>>>,
}

fn add_into(acc: &mut Vector, k: usize, v: Rational) {
    if v.is_zero() {
        return;
    }
    let e = acc.entry(k).or_insert_with(Rational::zero);
    *e += v;
    if e.is_zero() {
        acc.remove(&k);
    }
}

fn add_vec(acc: &mut Vector, v: &Vector, c: &Rational) {
    for (k, x) in v {
        add_into(acc, *k, x.clone() * c.clone());
    }
}

fn apply(m: &SparseMatrix<Rational>, v: &Vector) -> Vector {
    let t = m.transpose();
    let mut out = Vector::new();
    for (j, x) in v {
        for (i, y) in t.row(*j) {
            add_into(&mut out, *i, x.clone() * y.clone());
        }
    }
    out
}

fn unit(a: usize) -> Vector {
    let mut v = Vector::new();
    v.insert(a, Rational::from_i64(1));
    v
}

/// `ad(p_1)⋯ad(p_k)(target)`.
fn ad_chain(lie: &StructLie<Rational>, ps: &[&Vector], target: Vector) -> Vector {
    ps.iter()
        .rev()
        .fold(target, |acc, p| lie.bracket_sparse(p, &acc))
}

/// `Σ_π ad(p_π1)⋯ad(p_πk)(target)` over all orderings of `ps`.
fn ad_chain_sym(lie: &StructLie<Rational>, ps: &[Vector], target: &Vector) -> Vector {
    let mut out = Vector::new();
    for p in permutations(ps.len()) {
        let ordered: Vec<&Vector> = p.iter().map(|&i| &ps[i]).collect();
        let v = ad_chain(lie, &ordered, target.clone());
        add_vec(&mut out, &v, &Rational::from_i64(1));
    }
    out
}

impl LInfinity {
    /// `max_arity` bounds the arity of the brackets that will be requested
    /// (the longest monomial of the complex).
    pub fn new(sela: &Sela, max_arity: usize) -> Result<Self, JbError> {
        let complex = StandardComplex::new(sela);
        let mut basis = Vec::new();
        for k in complex.basis() {
            let degree = k.total_degree() - 1;
            let kind = match (k.s(), k.q) {
                (0, 0) => Kind::Gauge,
                (0, 1) => Kind::Phi,
                (1, 0) => Kind::Psi,
                _ if degree == 1 => Kind::Curvature,
                _ => {
                    return Err(JbError::UnsupportedDegree {
                        simplex: sela.label(&k.simplex),
                        degree: k.q,
                    })
                }
            };
            basis.push(VBasis {
                k: k.clone(),
                kind,
                degree,
            });
        }
        let bch = BchTable::new(max_arity.max(1)).expect("positive cap");
        Ok(LInfinity {
            sela: sela.clone(),
            complex,
            basis,
            bch,
            max_arity,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn basis(&self) -> &[VBasis] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, v: usize) -> i32 {
        self.basis[v].degree
    }

    pub fn label(&self, v: usize) -> &str {
        &self.complex.labels()[v]
    }

    pub fn standard_complex(&self) -> &StandardComplex {
        &self.complex
    }

    pub fn sela(&self) -> &Sela {
        &self.sela
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// Position in `V` of coordinate `a` of `𝔤_S`.
    pub fn position(&self, s: &[usize], a: usize) -> Option<usize> {
        let lie = self.sela.algebra(s)?;
        self.complex.index_of(&KBasis {
            simplex: s.to_vec(),
            a,
            q: lie.degree(a),
        })
    }

    fn embed(&self, s: &[usize], v: &Vector) -> Vector {
        v.iter()
            .map(|(a, x)| (self.position(s, *a).expect("coordinate of V"), x.clone()))
            .collect()
    }

    fn lie(&self, s: &[usize]) -> &StructLie<Rational> {
        self.sela.algebra(s).expect("nonzero algebra")
    }

    /// `ℓ_n` on basis vectors given in increasing order of position.
    pub fn bracket(&self, inputs: &[usize]) -> Vec<(usize, Rational)> {
        if let Some(v) = self.cache.lock().unwrap().get(inputs) {
            return v.clone();
        }
        let out: Vec<(usize, Rational)> = self.compute(inputs).into_iter().collect();
        self.cache
            .lock()
            .unwrap()
            .insert(inputs.to_vec(), out.clone());
        out
    }

    fn compute(&self, inputs: &[usize]) -> Vector {
        if inputs.len() == 1 {
            let v = inputs[0];
            let mut out = Vector::new();
            for (i, x) in self.complex.full_differential().transpose().row(v) {
                add_into(&mut out, *i, x.clone());
            }
            return out;
        }
        let mut gauge = Vec::new();
        let mut even = Vec::new();
        let mut curv = Vec::new();
        for &i in inputs {
            match self.basis[i].kind {
                Kind::Gauge => gauge.push(i),
                Kind::Phi | Kind::Psi => even.push(i),
                Kind::Curvature => curv.push(i),
            }
        }
        match (gauge.len(), curv.len()) {
            (2, 0) if even.is_empty() => self.gauge_bracket(gauge[0], gauge[1]),
            (1, 1) if even.is_empty() => self.fiber_action(gauge[0], curv[0]),
            (1, 0) => self.vector_field(gauge[0], &even),
            (0, 0) => self.section(&even),
            _ => Vector::new(),
        }
    }

    fn kb(&self, v: usize) -> &KBasis {
        &self.basis[v].k
    }

    /// `[X, X']` for gauge directions at the same vertex.
    fn gauge_bracket(&self, x: usize, y: usize) -> Vector {
        let (kx, ky) = (self.kb(x), self.kb(y));
        if kx.simplex != ky.simplex {
            return Vector::new();
        }
        let s = &kx.simplex;
        let v = self.lie(s).bracket_sparse(&unit(kx.a), &unit(ky.a));
        self.embed(s, &v)
    }

    /// Underlying homomorphism from the vertex `α` to a simplex containing it.
    fn vertex_map(&self, alpha: usize, s: &[usize]) -> SparseMatrix<Rational> {
        match s.len() {
            1 => SparseMatrix::identity(self.sela.dim(s)),
            2 => self.sela.homomorphism(&[alpha], s),
            _ => {
                let drop = if alpha == s[0] { s[2] } else { s[0] };
                let edge: Simplex = s.iter().copied().filter(|&v| v != drop).collect();
                self.sela
                    .homomorphism(&edge, s)
                    .mul(&self.sela.homomorphism(&[alpha], &edge))
            }
        }
    }

    /// `[h X, f]` where the curvature component transforms by conjugation:
    /// at the vertex itself, on edges starting at the vertex and on triangles
    /// ending at it.
    fn fiber_action(&self, x: usize, f: usize) -> Vector {
        let (kx, kf) = (self.kb(x), self.kb(f));
        let alpha = kx.simplex[0];
        let s = &kf.simplex;
        let acts = match s.len() {
            1 => s[0] == alpha,
            2 => s[0] == alpha,
            _ => s[2] == alpha,
        };
        if !acts {
            return Vector::new();
        }
        let hx = apply(&self.vertex_map(alpha, s), &unit(kx.a));
        let v = self.lie(s).bracket_sparse(&hx, &unit(kf.a));
        self.embed(s, &v)
    }

    /// Gauge direction `X` at `α` with even inputs.
    fn vector_field(&self, x: usize, even: &[usize]) -> Vector {
        let kx = self.kb(x);
        let alpha = kx.simplex[0];
        if even.len() == 1 && self.basis[even[0]].kind == Kind::Phi {
            let kp = self.kb(even[0]);
            if kp.simplex != kx.simplex {
                return Vector::new();
            }
            let v = self
                .lie(&kx.simplex)
                .bracket_sparse(&unit(kx.a), &unit(kp.a));
            return self.embed(&kx.simplex, &v);
        }
        if even.iter().any(|&i| self.basis[i].kind != Kind::Psi) {
            return Vector::new();
        }
        let e = &self.kb(even[0]).simplex;
        if even.iter().any(|&i| &self.kb(i).simplex != e) || !e.contains(&alpha) {
            return Vector::new();
        }
        let t = even.len();
        let c = bernoulli_normalized(t);
        if c.is_zero() {
            return Vector::new();
        }
        let sign = if alpha == e[0] || t.is_multiple_of(2) { 1 } else { -1 };
        let rx = apply(&self.sela.coface(&[alpha], e), &unit(kx.a));
        let psis: Vec<Vector> = even.iter().map(|&i| unit(self.kb(i).a)).collect();
        let v = ad_chain_sym(self.lie(e), &psis, &rx);
        let mut out = Vector::new();
        add_vec(
            &mut out,
            &self.embed(e, &v),
            &(c * Rational::from_i64(sign)),
        );
        out
    }

    /// Maurer–Cartan components (even inputs only, arity ≥ 2).
    fn section(&self, even: &[usize]) -> Vector {
        let n = even.len();
        let kinds: Vec<Kind> = even.iter().map(|&i| self.basis[i].kind).collect();
        let mut out = Vector::new();
        // vertex: ½[φ,φ]
        if n == 2 && kinds == [Kind::Phi, Kind::Phi] {
            let (a, b) = (self.kb(even[0]), self.kb(even[1]));
            if a.simplex == b.simplex {
                let v = self.lie(&a.simplex).bracket_sparse(&unit(a.a), &unit(b.a));
                return self.embed(&a.simplex, &v);
            }
            return out;
        }
        let n_phi = kinds.iter().filter(|k| **k == Kind::Phi).count();
        if n_phi == 1 {
            // e^{ad ψ}(r φ_β), φ at the second vertex of the edge
            let kp = self.kb(even[0]);
            let psis = &even[1..];
            let e = &self.kb(psis[0]).simplex;
            if psis.iter().any(|&i| &self.kb(i).simplex != e) || kp.simplex[0] != e[1] {
                return out;
            }
            let rphi = apply(&self.sela.coface(&kp.simplex, e), &unit(kp.a));
            let vs: Vec<Vector> = psis.iter().map(|&i| unit(self.kb(i).a)).collect();
            let v = ad_chain_sym(self.lie(e), &vs, &rphi);
            let c = Rational::new(1.into(), factorial(psis.len() as u64));
            add_vec(&mut out, &self.embed(e, &v), &c);
            return out;
        }
        if n_phi > 1 {
            return out;
        }
        // only ψ's from here on
        let edges: Vec<&Simplex> = even.iter().map(|&i| &self.kb(i).simplex).collect();
        if edges.iter().all(|e| *e == edges[0]) {
            // ((e^{ad ψ} − 1)/ad ψ)(∂ψ), degree-n part
            let e = edges[0];
            let lie = self.lie(e);
            let vs: Vec<Vector> = even.iter().map(|&i| unit(self.kb(i).a)).collect();
            let mut acc = Vector::new();
            for last in 0..n {
                let mut rest = vs.clone();
                let target = rest.remove(last);
                let dpsi = lie.diff_sparse(&target);
                if dpsi.is_empty() {
                    continue;
                }
                add_vec(
                    &mut acc,
                    &ad_chain_sym(lie, &rest, &dpsi),
                    &Rational::from_i64(1),
                );
            }
            let c = Rational::new(1.into(), factorial(n as u64));
            add_vec(&mut out, &self.embed(e, &acc), &c);
        }
        for t in self.sela.simplices().into_iter().filter(|t| t.len() == 3) {
            if edges.iter().all(|e| e.iter().all(|v| t.contains(v))) {
                add_vec(&mut out, &self.triangle(&t, even), &Rational::from_i64(1));
            }
        }
        out
    }

    /// Polarized `β_{i,j,k}(r ψ_αγ, r ψ_αβ, r ψ_βγ)` on the triangle `t = αβγ`.
    fn triangle(&self, t: &[usize], psis: &[usize]) -> Vector {
        let edges = [vec![t[0], t[2]], vec![t[0], t[1]], vec![t[1], t[2]]];
        let mut groups: [Vec<Vector>; 3] = Default::default();
        for &i in psis {
            let kb = self.kb(i);
            let g = edges
                .iter()
                .position(|e| *e == kb.simplex)
                .expect("edge of the triangle");
            groups[g].push(apply(&self.sela.coface(&kb.simplex, t), &unit(kb.a)));
        }
        let (i, j, k) = (groups[0].len(), groups[1].len(), groups[2].len());
        if i + j + k > self.bch.cap() {
            return Vector::new();
        }
        let beta = self.bch.trigraded(i, j, k).expect("within cap");
        let lie = self.lie(t);
        let mut acc = Vector::new();
        let perms: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g.len())).collect();
        for (w, c) in beta.terms() {
            for p0 in &perms[0] {
                for p1 in &perms[1] {
                    for p2 in &perms[2] {
                        let mut next = [0usize; 3];
                        let leaves: Vec<&Vector> = w
                            .iter()
                            .map(|&letter| {
                                let l = letter as usize;
                                let p = [p0, p1, p2][l];
                                let v = &groups[l][p[next[l]]];
                                next[l] += 1;
                                v
                            })
                            .collect();
                        let v = eval_tree(lie, w, &leaves);
                        add_vec(&mut acc, &v, c);
                    }
                }
            }
        }
        self.embed(t, &acc)
    }
}

/// Evaluates the standard bracketing of the Lyndon word `w` with the given
/// leaf values (one per letter, in order).
fn eval_tree(lie: &StructLie<Rational>, w: &[u8], leaves: &[&Vector]) -> Vector {
    match standard_factorization(w) {
        None => leaves[0].clone(),
        Some((u, _)) => {
            let a = eval_tree(lie, u, &leaves[..u.len()]);
            if a.is_empty() {
                return a;
            }
            let b = eval_tree(lie, &w[u.len()..], &leaves[u.len()..]);
            lie.bracket_sparse(&a, &b)
        }
    }
}

use num_traits::Zero;
