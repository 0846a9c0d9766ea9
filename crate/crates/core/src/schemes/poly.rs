use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

/// Exponent vector.
pub type Exp = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GRevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let deg = |e: &[u32]| e.iter().map(|&x| x as u64).sum::<u64>();
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrLex => deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)),
            MonomialOrder::GRevLex => deg(a).cmp(&deg(b)).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn exp_sub(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn exp_add(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn total_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Sparse polynomial in named variables.
#[derive(Clone, PartialEq)]
pub struct Poly<S> {
    vars: Arc<Vec<String>>,
    order: MonomialOrder,
    terms: BTreeMap<Exp, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(vars: &Arc<Vec<String>>) -> Self {
        Poly {
            vars: Arc::clone(vars),
            order: MonomialOrder::default(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<Vec<String>>, c: S) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Arc<Vec<String>>) -> Self {
        Self::constant(vars, S::one())
    }

    pub fn var(vars: &Arc<Vec<String>>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, S::one())
    }

    pub fn monomial(vars: &Arc<Vec<String>>, e: Exp, c: S) -> Self {
        assert_eq!(e.len(), vars.len(), "exponent length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(vars: &Arc<Vec<String>>, terms: impl IntoIterator<Item = (Exp, S)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Exp, S> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub(crate) fn add_term(&mut self, e: Exp, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variables"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut p = Self::zero(&self.vars).with_order(self.order);
        if c.is_zero() {
            return p;
        }
        p.terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
            .collect();
        p
    }

    /// `c·x^e·self`.
    pub fn mul_term(&self, e: &[u32], c: &S) -> Self {
        let mut p = Self::zero(&self.vars).with_order(self.order);
        if c.is_zero() {
            return p;
        }
        p.terms = self
            .terms
            .iter()
            .map(|(f, x)| (exp_add(e, f), x.clone() * c.clone()))
            .collect();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut p = Self::zero(&self.vars).with_order(self.order);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                p.add_term(exp_add(e, f), c.clone() * d.clone());
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars).with_order(self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(&self.vars).with_order(self.order);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c.clone() * S::from_i64(e[i] as i64));
            }
        }
        p
    }

    /// `Σ v_i ∂f/∂x_i`.
    pub fn apply_field(&self, v: &[Poly<S>]) -> Self {
        v.iter().enumerate().fold(
            Self::zero(&self.vars).with_order(self.order),
            |acc, (i, vi)| acc.add(&vi.mul(&self.derivative(i))),
        )
    }

    /// Substitutes `images[i]` (polynomials in another ring) for `x_i`.
    pub fn substitute(&self, images: &[Poly<S>]) -> Poly<S> {
        assert_eq!(images.len(), self.nvars());
        let vars = images
            .first()
            .map(|p| Arc::clone(&p.vars))
            .unwrap_or_else(|| Arc::clone(&self.vars));
        let mut acc = Poly::zero(&vars).with_order(self.order);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(&vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Same polynomial read in a larger variable list containing these
    /// variables (by name).
    pub fn embed(&self, vars: &Arc<Vec<String>>) -> Option<Poly<S>> {
        let pos: Option<Vec<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let pos = pos?;
        let mut p = Poly::zero(vars).with_order(self.order);
        for (e, c) in &self.terms {
            let mut f = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                f[pos[i]] = k;
            }
            p.add_term(f, c.clone());
        }
        Some(p)
    }

    pub fn leading(&self) -> Option<(&Exp, &S)> {
        let order = self.order;
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_exp(&self) -> Option<&Exp> {
        self.leading().map(|(e, _)| e)
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.leading().map(|(_, c)| c)
    }

    /// Scaled to leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) => self.scale(&(S::one() / c.clone())),
            None => self.clone(),
        }
    }

    /// Keeps the terms of total degree `≤ d`.
    pub fn truncate(&self, d: u32) -> Self {
        let mut p = self.clone();
        p.terms.retain(|e, _| total_degree(e) <= d);
        p
    }
}

impl<S> Poly<S> {
    /// Terms in decreasing monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Exp, &S)> {
        let mut v: Vec<(&Exp, &S)> = self.terms.iter().collect();
        v.sort_by(|a, b| self.order.cmp(b.0, a.0));
        v
    }
}

fn fmt_monomial(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                vars[i].clone()
            } else {
                format!("{}^{}", vars[i], k)
            }
        })
        .collect();
    parts.join("*")
}

/// Parseable text, terms in decreasing order: `x^2 - 3/2*x*y + 1`.
impl<S: fmt::Display> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = fmt_monomial(&self.vars, e);
            let s = c.to_string();
            let (neg, abs) = match s.strip_prefix('-') {
                Some(a) => (true, a.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (mono.is_empty(), abs == "1") {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl<S: fmt::Display> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// All exponent vectors in `n` variables of total degree `≤ d`, in graded
/// lexicographic order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exp> {
    fn rec(n: usize, left: u32, cur: &mut Exp, out: &mut Vec<Exp>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| MonomialOrder::GrLex.cmp(a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn ring(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn orders() {
        // x > y; x*y^2 vs x^2: grevlex compares degree first
        let a = [1, 2];
        let b = [2, 0];
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::GrLex.cmp(&a, &b), Ordering::Greater);
        // x*z vs y^2 (degree 2): grevlex prefers y^2 > x*z
        assert_eq!(
            MonomialOrder::GRevLex.cmp(&[0, 2, 0], &[1, 0, 1]),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::GrLex.cmp(&[0, 2, 0], &[1, 0, 1]),
            Ordering::Less
        );
    }

    #[test]
    fn arithmetic_and_display() {
        let r = ring(&["x", "y"]);
        let x = Poly::<Rational>::var(&r, 0);
        let y = Poly::<Rational>::var(&r, 1);
        let p = x.add(&y).pow(2);
        assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(p.derivative(0).to_string(), "2*x + 2*y");
        assert!(x.mul(&y).sub(&y.mul(&x)).is_zero());
        let h = Rational::new(1.into(), 2.into());
        assert_eq!(x.scale(&-h).to_string(), "-1/2*x");
    }

    #[test]
    fn substitution_and_fields() {
        let r = ring(&["x", "y"]);
        let x = Poly::<Rational>::var(&r, 0);
        let y = Poly::<Rational>::var(&r, 1);
        let f = x.pow(2).add(&y.pow(3));
        // f(x + y, y)
        let g = f.substitute(&[x.add(&y), y.clone()]);
        assert_eq!(g, x.add(&y).pow(2).add(&y.pow(3)));
        // Euler field x∂x + y∂y on x^2: 2x^2
        assert_eq!(
            x.pow(2).apply_field(&[x.clone(), y.clone()]),
            x.pow(2).scale(&Rational::from_i64(2))
        );
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_up_to(3, 3).len(), 20);
        assert_eq!(monomials_up_to(2, 1)[0], vec![0, 0]);
    }
}
