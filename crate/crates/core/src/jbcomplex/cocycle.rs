//! Special multiplicative cocycles `ε(φ, ψ) = exp(x)` for descent data
//! `x = (φ_ρ, ψ_ρσ)` with coefficients in `𝔪`, and the obstruction to lifting
//! them along a small extension `ℚ[t]/t^{k+1} → ℚ[t]/t^k`.
//!
//! `d exp(x) = exp(x)·MC(x)`, so `exp(x)` is a cocycle exactly when the three
//! conditions hold:
//! - `∂φ_ρ + ½[φ_ρ, φ_ρ] = 0`,
//! - `r φ_ρ + e^{ad ψ_ρσ}(r φ_σ) + ((e^{ad ψ} − 1)/ad ψ)(∂ψ_ρσ) = 0`,
//! - `β(r ψ_ρτ, r ψ_ρσ, r ψ_στ) = 0`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::assemble::{JbComplex, JbConfig};
use super::linf::Kind;
use super::sela::{Sela, Simplex};
use super::standard::{KBasis, StandardComplex};
use super::sym::Chain;
use super::JbError;
use crate::bch::{eval_bch, eval_bch3, BchTable};
use crate::exactnum::{factorial, ColumnSpace, SparseMatrix};
use crate::liecore::{ArtinElem, ArtinLie, ArtinLine, LieElement, StructLie};
use crate::Rational;

/// Descent data: coordinates of `x ∈ K¹ ⊗ 𝔪`, keyed by position in the
/// standard complex.
#[derive(Debug, Clone, PartialEq)]
pub struct CocycleData {
    pub ring: ArtinLine,
    pub coords: BTreeMap<usize, ArtinElem<Rational>>,
}

/// File format: `{"phi": {"0": {"a": ["0","1"]}}, "psi": {"01": {"e12": ["0","0","1"]}}}`
/// with coefficient lists `[c_0, c_1, …]` of `Σ c_k t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CocycleJson {
    #[serde(default)]
    pub phi: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub psi: BTreeMap<String, BTreeMap<String, Vec<String>>>,
}

/// Result of checking a cocycle both through `J` and through the direct
/// formulas.
#[derive(Debug, Clone, PartialEq)]
pub struct CocycleCheck {
    /// Nonzero Maurer–Cartan components, by simplex.
    pub defects: Vec<String>,
    /// `MC(x)` from the formulas equals the length-one part of `d exp(x)`.
    pub routes_agree: bool,
    /// `d exp(x) = exp(x)·MC(x)` holds in `J ⊗ S`.
    pub multiplicative: bool,
    pub is_cocycle: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionReport {
    pub from_order: usize,
    pub to_order: usize,
    /// `c` with `MC(lift) = c·t^k`, in `K²`.
    pub cocycle: Vec<Rational>,
    /// `D c = 0` in `K³`.
    pub closed: bool,
    /// `MC(lift)` computed in `J` agrees with `c·t^k` and lies in `F₁J ⊗ (t^k)`.
    pub certified: bool,
    /// Normal form of `c` modulo `D(K¹)`; zero iff the class vanishes.
    pub class: Vec<Rational>,
    pub class_is_zero: bool,
    /// A lift with `MC = 0` when the class vanishes.
    pub lift: Option<CocycleData>,
    pub labels: Vec<String>,
}

fn parse_q(s: &str) -> Result<Rational, JbError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| JbError::Parse(format!("bad rational {s:?}: {e}")))
}

/// `m · v` for a coefficient vector with Artin entries.
fn apply(
    m: &SparseMatrix<Rational>,
    v: &[ArtinElem<Rational>],
    ring: ArtinLine,
) -> Vec<ArtinElem<Rational>> {
    let mut out = vec![ring.zero(); m.rows()];
    for (i, j, x) in m.entries() {
        out[i] = out[i].add(&v[j].scale(x));
    }
    out
}

impl CocycleData {
    pub fn zero(ring: ArtinLine) -> Self {
        CocycleData {
            ring,
            coords: BTreeMap::new(),
        }
    }

    /// Sets the component of `x` on simplex `s` (a vertex gets `φ`, an edge `ψ`)
    /// from a full coefficient vector of `𝔤_S`.
    pub fn set(
        &mut self,
        k: &StandardComplex,
        sela: &Sela,
        s: &[usize],
        coeffs: &[ArtinElem<Rational>],
    ) -> Result<(), JbError> {
        let lie = sela.algebra(s).ok_or_else(|| {
            JbError::InvalidCocycle(vec![format!("no algebra on {}", sela.label(s))])
        })?;
        for (a, c) in coeffs.iter().enumerate() {
            let pos = k.index_of(&KBasis {
                simplex: s.to_vec(),
                a,
                q: lie.degree(a),
            });
            match pos {
                Some(p) if k.basis()[p].total_degree() == 1 => {
                    if c.is_zero() {
                        self.coords.remove(&p);
                    } else {
                        self.coords.insert(p, c.change_order(self.ring.order()));
                    }
                }
                _ if c.is_zero() => {}
                _ => {
                    return Err(JbError::InvalidCocycle(vec![format!(
                        "{}@{} is not a coordinate of φ or ψ",
                        lie.name(a),
                        sela.label(s)
                    )]))
                }
            }
        }
        Ok(())
    }

    pub fn from_json(sela: &Sela, j: &CocycleJson, order: usize) -> Result<Self, JbError> {
        let k = StandardComplex::new(sela);
        let ring = ArtinLine::new(order);
        let mut data = CocycleData::zero(ring);
        for (part, len) in [(&j.phi, 1usize), (&j.psi, 2)] {
            for (label, comps) in part {
                let s = sela.parse_label(label)?;
                if s.len() != len {
                    return Err(JbError::Parse(format!("{label} has the wrong dimension")));
                }
                let lie = sela
                    .algebra(&s)
                    .ok_or_else(|| JbError::Parse(format!("no algebra on {label}")))?;
                let mut coeffs = vec![ring.zero(); lie.dim()];
                for (name, cs) in comps {
                    let a = lie.index_of(name).ok_or_else(|| {
                        JbError::Parse(format!("unknown basis vector {name} on {label}"))
                    })?;
                    let qs = cs
                        .iter()
                        .map(|c| parse_q(c))
                        .collect::<Result<Vec<_>, _>>()?;
                    if qs.len() > order {
                        return Err(JbError::Parse(format!(
                            "{name}@{label}: more than {order} coefficients"
                        )));
                    }
                    coeffs[a] = ring.from_coeffs(&qs);
                }
                data.set(&k, sela, &s, &coeffs)?;
            }
        }
        Ok(data)
    }

    pub fn to_json(&self, sela: &Sela) -> CocycleJson {
        let k = StandardComplex::new(sela);
        let mut out = CocycleJson::default();
        for (p, c) in &self.coords {
            let b = &k.basis()[*p];
            let lie = sela.algebra(&b.simplex).unwrap();
            let part = if b.simplex.len() == 1 {
                &mut out.phi
            } else {
                &mut out.psi
            };
            part.entry(sela.label(&b.simplex)).or_default().insert(
                lie.name(b.a).to_string(),
                c.coeffs().iter().map(|x| x.to_string()).collect(),
            );
        }
        out
    }

    /// Same coordinates read in `ℚ[t]/t^m` (truncating or padding).
    pub fn change_order(&self, m: usize) -> Self {
        CocycleData {
            ring: ArtinLine::new(m),
            coords: self
                .coords
                .iter()
                .map(|(p, c)| (*p, c.change_order(m)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Component on `s` as an element of `𝔤_S ⊗ S`.
    pub fn component(&self, k: &StandardComplex, sela: &Sela, s: &[usize]) -> LieElement<Rational> {
        let lie = sela.algebra(s).expect("algebra on simplex");
        let mut coeffs = vec![self.ring.zero(); lie.dim()];
        for (p, c) in &self.coords {
            let b = &k.basis()[*p];
            if b.simplex == s {
                coeffs[b.a] = c.clone();
            }
        }
        LieElement::from_coeffs(lie, coeffs).expect("matching dimension")
    }

    fn structural_defects(&self, k: &StandardComplex) -> Vec<String> {
        let mut out = Vec::new();
        for (p, c) in &self.coords {
            if !c.in_maximal_ideal() {
                out.push(format!("{} has a constant term", k.labels()[*p]));
            }
            if c.ring() != self.ring {
                out.push(format!(
                    "{} has coefficients in the wrong ring",
                    k.labels()[*p]
                ));
            }
        }
        out
    }
}

fn lie_of(sela: &Sela, s: &[usize]) -> Arc<StructLie<Rational>> {
    Arc::clone(sela.algebra(s).expect("algebra on simplex"))
}

fn mapped(
    sela: &Sela,
    from: &[usize],
    to: &[usize],
    x: &LieElement<Rational>,
) -> LieElement<Rational> {
    let r = sela.coface(from, to);
    LieElement::from_coeffs(&lie_of(sela, to), apply(&r, x.coeffs(), x.ring()))
        .expect("coface shape")
}

/// `Σ_k c_k ad(ψ)^k (y)`, stopping once the powers vanish.
fn ad_series(
    psi: &LieElement<Rational>,
    y: &LieElement<Rational>,
    c: impl Fn(usize) -> Rational,
) -> LieElement<Rational> {
    let mut acc = y.scale(&c(0));
    let mut term = y.clone();
    let mut k = 1;
    loop {
        term = psi.bracket(&term);
        if term.is_zero() {
            return acc;
        }
        acc = acc.add(&term.scale(&c(k)));
        k += 1;
    }
}

/// The Maurer–Cartan components of `x`, from the closed formulas. Keys are
/// simplices; values are elements of `𝔤_S ⊗ S` of total degree 2.
pub fn maurer_cartan(sela: &Sela, data: &CocycleData) -> BTreeMap<Simplex, LieElement<Rational>> {
    let k = StandardComplex::new(sela);
    let ring = data.ring;
    let half = Rational::new(1.into(), 2.into());
    let mut out = BTreeMap::new();
    let simplices = sela.simplices();
    for s in &simplices {
        let lie = lie_of(sela, s);
        let value = match s.len() {
            1 => {
                let phi = data.component(&k, sela, s);
                phi.differential().add(&phi.bracket(&phi).scale(&half))
            }
            2 => {
                let (a, b) = (vec![s[0]], vec![s[1]]);
                let psi = data.component(&k, sela, s);
                let part = |v: &Simplex| {
                    if sela.algebra(v).is_some() {
                        mapped(sela, v, s, &data.component(&k, sela, v))
                    } else {
                        LieElement::zero(&lie, ring)
                    }
                };
                let exp = |n: usize| Rational::new(1.into(), factorial(n as u64));
                let dexp = |n: usize| Rational::new(1.into(), factorial(n as u64 + 1));
                part(&a)
                    .add(&ad_series(&psi, &part(&b), exp))
                    .add(&ad_series(&psi, &psi.differential(), dexp))
            }
            _ => {
                let edge = |i: usize, j: usize| {
                    let e = vec![s[i], s[j]];
                    if sela.algebra(&e).is_some() {
                        mapped(sela, &e, s, &data.component(&k, sela, &e))
                    } else {
                        LieElement::zero(&lie, ring)
                    }
                };
                let bound = ring.order().saturating_sub(1).max(1);
                let table = BchTable::new(bound).expect("positive cap");
                let alg = ArtinLie::new(Arc::clone(&lie), ring);
                eval_bch3(&table, &alg, &edge(0, 2), &edge(0, 1), &edge(1, 2), bound)
                    .expect("cap matches")
            }
        };
        // keep only the total-degree-2 part
        let coeffs = value
            .coeffs()
            .iter()
            .enumerate()
            .map(|(a, c)| {
                if lie.degree(a) + s.len() as i32 - 1 == 2 {
                    c.clone()
                } else {
                    ring.zero()
                }
            })
            .collect();
        out.insert(s.clone(), LieElement::from_coeffs(&lie, coeffs).unwrap());
    }
    out
}

/// `MC(x)` as a vector of `K² ⊗ S`, indexed like `k.degree_positions(2)`.
fn mc_vector(k: &StandardComplex, sela: &Sela, data: &CocycleData) -> Vec<ArtinElem<Rational>> {
    let mc = maurer_cartan(sela, data);
    k.degree_positions(2)
        .iter()
        .map(|&p| {
            let b = &k.basis()[p];
            mc[&b.simplex].coeffs()[b.a].clone()
        })
        .collect()
}

/// `x` as a chain of length-one monomials.
pub fn linear_chain(jb: &JbComplex, data: &CocycleData) -> Chain {
    data.coords
        .iter()
        .map(|(p, c)| (vec![*p], c.clone()))
        .collect::<Chain>()
        .into_iter()
        .filter(|(m, _)| matches!(jb.linf().basis()[m[0]].kind, Kind::Phi | Kind::Psi))
        .collect()
}

/// Validates the three conditions and returns `ε(φ, ψ) = exp(x)`.
pub fn special_cocycle(jb: &JbComplex, data: &CocycleData) -> Result<Chain, JbError> {
    let k = jb.linf().standard_complex();
    let mut defects = data.structural_defects(k);
    if data.ring != jb.ring() {
        defects.push(format!(
            "data over ℚ[t]/t^{} but the complex is over ℚ[t]/t^{}",
            data.ring.order(),
            jb.order()
        ));
    }
    if !defects.is_empty() {
        return Err(JbError::InvalidCocycle(defects));
    }
    let defects = mc_defects(jb.sela(), data);
    if !defects.is_empty() {
        return Err(JbError::InvalidCocycle(defects));
    }
    Ok(jb.exp_chain(&linear_chain(jb, data)))
}

fn mc_defects(sela: &Sela, data: &CocycleData) -> Vec<String> {
    let mut out = Vec::new();
    for (s, v) in maurer_cartan(sela, data) {
        if v.is_zero() {
            continue;
        }
        let lie = v.algebra();
        let terms: Vec<String> = v
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| format!("({c})·{}", lie.name(a)))
            .collect();
        let what = match s.len() {
            1 => "∂φ + ½[φ,φ]",
            2 => "gluing condition",
            _ => "β(ψ,ψ,ψ)",
        };
        out.push(format!(
            "{} on {}: {}",
            what,
            sela.label(&s),
            terms.join(" + ")
        ));
    }
    out
}

/// `d` of an arbitrary chain; zero iff it is a cocycle.
pub fn verify_chain(jb: &JbComplex, chain: &Chain) -> Chain {
    jb.apply_d(chain)
}

/// Checks `exp(x)` both ways.
pub fn verify_cocycle(jb: &JbComplex, data: &CocycleData) -> CocycleCheck {
    let k = jb.linf().standard_complex();
    let x = linear_chain(jb, data);
    let e = jb.exp_chain(&x);
    let de = jb.apply_d(&e);
    let direct: Chain = k
        .degree_positions(2)
        .iter()
        .zip(mc_vector(k, jb.sela(), data))
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (vec![*p], c))
        .collect();
    let from_j: Chain = de
        .iter()
        .filter(|(m, _)| m.len() == 1)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    let routes_agree = direct == from_j;
    let multiplicative = jb.multiply_chains(&e, &direct) == de;
    let defects = mc_defects(jb.sela(), data);
    CocycleCheck {
        is_cocycle: de.is_empty() && defects.is_empty(),
        defects,
        routes_agree,
        multiplicative,
    }
}

/// Obstruction to lifting `data` (a cocycle over `ℚ[t]/t^from`) to
/// `ℚ[t]/t^to`. `extra` adds `t^{from}·u` to the naive lift, for `u ∈ K¹`
/// given in the coordinates of `k.degree_positions(1)`.
pub fn obstruction(
    sela: &Sela,
    data: &CocycleData,
    from: usize,
    to: usize,
    extra: Option<&[Rational]>,
) -> Result<ObstructionReport, JbError> {
    if to != from + 1 || from == 0 {
        return Err(JbError::NotInSocle { from, to });
    }
    let k = StandardComplex::new(sela);
    if data.ring.order() != from {
        return Err(JbError::InvalidCocycle(vec![format!(
            "data is over ℚ[t]/t^{}, expected t^{from}",
            data.ring.order()
        )]));
    }
    let mut problems = data.structural_defects(&k);
    problems.extend(mc_defects(sela, data));
    if !problems.is_empty() {
        return Err(JbError::InvalidCocycle(problems));
    }
    let k1 = k.degree_positions(1);
    let mut lift = data.change_order(to);
    let ring = lift.ring;
    if let Some(u) = extra {
        add_layer(&mut lift, &k1, u, from, ring);
    }
    let mc = mc_vector(&k, sela, &lift);
    let mut certified = mc.iter().all(|c| c.valuation().is_none_or(|v| v >= from));
    let c: Vec<Rational> = mc.iter().map(|x| x.coeff(from)).collect();

    // the same computation inside J: d exp(lift) = MC(lift) ∈ F₁J ⊗ (t^k)
    let mut s = sela.clone();
    s.set_artin_order(to);
    let jb = JbComplex::assemble(&s, &JbConfig::window(0, 1))?;
    let de = jb.apply_d(&jb.exp_chain(&linear_chain(&jb, &lift)));
    let k2 = k.degree_positions(2);
    for (m, x) in &de {
        let expected = if m.len() == 1 {
            k2.iter()
                .position(|&p| p == m[0])
                .map(|i| ring.monomial(from, c[i].clone()))
        } else {
            None
        };
        if expected.as_ref() != Some(x) {
            certified = false;
        }
    }
    certified &= de.len() == c.iter().filter(|x| !x.is_zero()).count();

    let d1 = k.differential(1);
    let d2 = k.differential(2);
    let closed = d2.apply(&c).iter().all(|x| x.is_zero());
    let cs = ColumnSpace::new(&d1);
    let class = cs.reduce(&c);
    let class_is_zero = class.iter().all(|x| x.is_zero());
    let fixed = if class_is_zero {
        let minus: Vec<Rational> = c.iter().map(|x| -x.clone()).collect();
        let u = cs.solve(&minus).expect("c lies in the image");
        let mut l = lift.clone();
        add_layer(&mut l, &k1, &u, from, ring);
        Some(l)
    } else {
        None
    };
    Ok(ObstructionReport {
        from_order: from,
        to_order: to,
        cocycle: c,
        closed,
        certified,
        class,
        class_is_zero,
        lift: fixed,
        labels: k2.iter().map(|&p| k.labels()[p].clone()).collect(),
    })
}

fn add_layer(data: &mut CocycleData, k1: &[usize], u: &[Rational], from: usize, ring: ArtinLine) {
    for (&p, x) in k1.iter().zip(u) {
        if x.is_zero() {
            continue;
        }
        let e = data.coords.entry(p).or_insert_with(|| ring.zero());
        *e = e.add(&ring.monomial(from, x.clone()));
    }
    data.coords.retain(|_, c| !c.is_zero());
}

/// Gauge orbit of 0: `φ_ρ = e^{a_ρ}∗0`, `ψ_ρσ = β(a_ρ, −a_σ)`, with the
/// degree-0 coordinates of each `a_ρ` drawn from `coeff` (which should return
/// elements of `𝔪`). Always a cocycle; used as a source of test data.
pub fn gauge_cocycle(
    sela: &Sela,
    mut coeff: impl FnMut(ArtinLine) -> ArtinElem<Rational>,
) -> CocycleData {
    let ring = ArtinLine::new(sela.artin_order());
    let k = StandardComplex::new(sela);
    let bound = ring.order().saturating_sub(1).max(1);
    let table = BchTable::new(bound).expect("small BCH table");
    let mut a: BTreeMap<Simplex, LieElement<Rational>> = BTreeMap::new();
    let mut data = CocycleData::zero(ring);
    for v in sela.simplices().into_iter().filter(|s| s.len() == 1) {
        let lie = lie_of(sela, &v);
        let coeffs = (0..lie.dim())
            .map(|i| {
                if lie.degree(i) == 0 {
                    coeff(ring)
                } else {
                    ring.zero()
                }
            })
            .collect();
        let av = LieElement::from_coeffs(&lie, coeffs).expect("sized to the algebra");
        let dexp = |n: usize| -Rational::new(1.into(), factorial(n as u64 + 1));
        let phi = ad_series(&av, &av.differential(), dexp);
        data.set(&k, sela, &v, phi.coeffs())
            .expect("vertex coordinates");
        a.insert(v, av);
    }
    for e in sela.simplices().into_iter().filter(|s| s.len() == 2) {
        let lie = lie_of(sela, &e);
        let alg = ArtinLie::new(Arc::clone(&lie), ring);
        // a vertex carrying the zero algebra contributes nothing
        let pull = |v: usize| match a.get(&vec![v]) {
            Some(av) => mapped(sela, &[v], &e, av),
            None => LieElement::zero(&lie, ring),
        };
        let (x, y) = (pull(e[0]), pull(e[1]));
        let psi = eval_bch(&table, &alg, &x, &y, bound).expect("nilpotent");
        data.set(&k, sela, &e, psi.coeffs())
            .expect("edge coordinates");
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jbcomplex::examples;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn random_m(rng: &mut ChaCha8Rng, ring: ArtinLine) -> ArtinElem<Rational> {
        let mut c = vec![q(0)];
        for _ in 1..ring.order() {
            c.push(q(rng.gen_range(-2..=2)));
        }
        ring.from_coeffs(&c)
    }

    fn gauge_data(sela: &Sela, rng: &mut ChaCha8Rng) -> CocycleData {
        gauge_cocycle(sela, |ring| random_m(rng, ring))
    }

    fn jb(sela: &Sela) -> JbComplex {
        JbComplex::assemble(sela, &JbConfig::window(0, 1)).unwrap()
    }

    #[test]
    fn zero_data_gives_the_unit() {
        let s = examples::triangle_n3(3);
        let j = jb(&s);
        let chain = special_cocycle(&j, &CocycleData::zero(j.ring())).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(chain[&Vec::new()], j.ring().one());
        assert!(verify_chain(&j, &chain).is_empty());
    }

    #[test]
    fn gauge_orbits_are_cocycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for sela in [
            examples::triangle_n3(3),
            examples::triangle_n3(4),
            examples::cech_dg(3),
            examples::lie_pair(3),
        ] {
            let j = jb(&sela);
            for _ in 0..3 {
                let data = gauge_data(&sela, &mut rng);
                let check = verify_cocycle(&j, &data);
                assert!(check.defects.is_empty(), "{:?}", check.defects);
                assert!(check.routes_agree && check.multiplicative && check.is_cocycle);
                let chain = special_cocycle(&j, &data).unwrap();
                assert!(verify_chain(&j, &chain).is_empty());
            }
        }
    }

    #[test]
    fn broken_data_is_rejected_consistently() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let sela = examples::cech_dg(3);
        let j = jb(&sela);
        let mut data = gauge_data(&sela, &mut rng);
        let p = *data.coords.keys().next().unwrap();
        let c = data.coords[&p].add(&j.ring().t());
        data.coords.insert(p, c);
        let check = verify_cocycle(&j, &data);
        assert!(!check.is_cocycle && !check.defects.is_empty());
        // the two computations of MC still agree off the locus
        assert!(check.routes_agree && check.multiplicative);
        assert!(matches!(
            special_cocycle(&j, &data),
            Err(JbError::InvalidCocycle(_))
        ));
    }

    #[test]
    fn constant_terms_are_rejected() {
        let sela = examples::triangle_n3(2);
        let j = jb(&sela);
        let k = j.linf().standard_complex();
        let mut data = CocycleData::zero(j.ring());
        let one = j.ring().one();
        let z = j.ring().zero();
        data.set(k, &sela, &[0, 1], &[one, z.clone(), z]).unwrap();
        assert!(special_cocycle(&j, &data).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let sela = examples::triangle_n3(3);
        let data = gauge_data(&sela, &mut rng);
        let j = data.to_json(&sela);
        assert_eq!(CocycleData::from_json(&sela, &j, 3).unwrap(), data);
    }

    #[test]
    fn obstructed_chart() {
        // φ = t(a + b) is fine mod t² but ½[φ,φ] = t²c
        let sela = examples::obstructed_chart(2);
        let k = StandardComplex::new(&sela);
        let ring = ArtinLine::new(2);
        let mut data = CocycleData::zero(ring);
        let t = ring.t();
        data.set(&k, &sela, &[0], &[t.clone(), t, ring.zero()])
            .unwrap();
        let r = obstruction(&sela, &data, 2, 3, None).unwrap();
        assert_eq!(r.cocycle, vec![q(1)]);
        assert!(r.closed && r.certified && !r.class_is_zero);
        assert!(r.lift.is_none());
        // an unobstructed direction
        let mut data = CocycleData::zero(ring);
        data.set(&k, &sela, &[0], &[ring.t(), ring.zero(), ring.zero()])
            .unwrap();
        let r = obstruction(&sela, &data, 2, 3, None).unwrap();
        assert!(r.class_is_zero && r.certified);
        assert!(matches!(
            obstruction(&sela, &data, 2, 4, None),
            Err(JbError::NotInSocle { .. })
        ));
    }

    #[test]
    fn obstruction_is_lift_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for sela in [
            examples::triangle_n3(2),
            examples::cech_dg(2),
            examples::abelian_triangle(2),
        ] {
            let data = gauge_data(&sela, &mut rng);
            let k = StandardComplex::new(&sela);
            let n1 = k.dim(1);
            let base = obstruction(&sela, &data, 2, 3, None).unwrap();
            for _ in 0..3 {
                let u: Vec<Rational> = (0..n1).map(|_| q(rng.gen_range(-3..=3))).collect();
                let r = obstruction(&sela, &data, 2, 3, Some(&u)).unwrap();
                assert!(r.closed && r.certified);
                assert_eq!(r.class, base.class);
                assert!(r.class_is_zero);
                let lift = r.lift.unwrap();
                let mut s3 = sela.clone();
                s3.set_artin_order(3);
                assert!(verify_cocycle(&jb(&s3), &lift).is_cocycle);
            }
        }
    }
}
