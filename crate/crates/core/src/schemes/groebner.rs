//! Buchberger's algorithm with the Gebauer–Möller pair criteria, normal
//! selection strategy and full interreduction.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use super::poly::{divides, exp_add, exp_sub, lcm, Exp, MonomialOrder, Poly};
use super::SchemeError;
use crate::scalar::Scalar;

/// A reduced Gröbner basis: monic, interreduced, sorted by decreasing
/// leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<S: Scalar> {
    vars: Arc<Vec<String>>,
    order: MonomialOrder,
    polys: Vec<Poly<S>>,
}

/// Remainder of `p` on division by `divisors` (all terms reduced).
pub fn reduce<S: Scalar>(p: &Poly<S>, divisors: &[Poly<S>]) -> Poly<S> {
    let order = p.order();
    let mut rem = Poly::zero(p.vars()).with_order(order);
    let mut rest = p.clone();
    let leads: Vec<(&Exp, &S)> = divisors.iter().filter_map(|g| g.leading()).collect();
    while let Some((e, c)) = rest.leading().map(|(e, c)| (e.clone(), c.clone())) {
        match divisors
            .iter()
            .zip(&leads)
            .find(|(_, (le, _))| divides(le, &e))
        {
            Some((g, (le, lc))) => {
                let q = c / (*lc).clone();
                rest = rest.sub(&g.mul_term(&exp_sub(&e, le), &q));
            }
            None => {
                rem.add_term(e.clone(), c);
                rest = rest.sub(
                    &Poly::monomial(p.vars(), e, rest.coeff(rest.leading_exp().unwrap()))
                        .with_order(order),
                );
            }
        }
    }
    rem
}

fn s_polynomial<S: Scalar>(f: &Poly<S>, g: &Poly<S>) -> Poly<S> {
    let (ef, cf) = f.leading().unwrap();
    let (eg, cg) = g.leading().unwrap();
    let l = lcm(ef, eg);
    f.mul_term(&exp_sub(&l, ef), &(S::one() / cf.clone()))
        .sub(&g.mul_term(&exp_sub(&l, eg), &(S::one() / cg.clone())))
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

struct State<S> {
    polys: Vec<Poly<S>>,
    lead: Vec<Exp>,
    active: BTreeSet<usize>,
    pairs: Vec<(usize, usize)>,
}

impl<S: Scalar> State<S> {
    fn pair_lcm(&self, p: (usize, usize)) -> Exp {
        lcm(&self.lead[p.0], &self.lead[p.1])
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lead[h].clone();
        let mut c: VecDeque<usize> = self.active.iter().copied().collect();
        let mut d: Vec<usize> = Vec::new();
        while let Some(g1) = c.pop_front() {
            let l1 = lcm(&lh, &self.lead[g1]);
            let dominated = c
                .iter()
                .chain(d.iter())
                .any(|&g2| divides(&lcm(&lh, &self.lead[g2]), &l1));
            if disjoint(&lh, &self.lead[g1]) || !dominated {
                d.push(g1);
            }
        }
        let e: Vec<(usize, usize)> = d
            .into_iter()
            .filter(|&g| !disjoint(&lh, &self.lead[g]))
            .map(|g| (g, h))
            .collect();
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let l = self.pair_lcm(p);
            let drop = divides(&lh, &l)
                && lcm(&self.lead[p.0], &lh) != l
                && lcm(&lh, &self.lead[p.1]) != l;
            if !drop {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(e);
        let remove: Vec<usize> = self
            .active
            .iter()
            .copied()
            .filter(|&g| divides(&lh, &self.lead[g]))
            .collect();
        for g in remove {
            self.active.remove(&g);
        }
        self.active.insert(h);
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<S: Scalar>(gens: &[Poly<S>], order: MonomialOrder) -> GroebnerBasis<S> {
    let vars = gens
        .first()
        .map(|g| Arc::clone(g.vars()))
        .unwrap_or_else(|| Arc::new(Vec::new()));
    let mut st = State {
        polys: Vec::new(),
        lead: Vec::new(),
        active: BTreeSet::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let g = g.clone().with_order(order);
        let current: Vec<Poly<S>> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
        let r = reduce(&g, &current);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        st.lead.push(r.leading_exp().unwrap().clone());
        st.polys.push(r);
        let h = st.polys.len() - 1;
        st.update(h);
    }
    while !st.pairs.is_empty() {
        // normal strategy: smallest lcm first
        let (k, _) = st
            .pairs
            .iter()
            .enumerate()
            .min_by(|a, b| order.cmp(&st.pair_lcm(*a.1), &st.pair_lcm(*b.1)))
            .unwrap();
        let (i, j) = st.pairs.swap_remove(k);
        let s = s_polynomial(&st.polys[i], &st.polys[j]);
        let current: Vec<Poly<S>> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
        let r = reduce(&s, &current);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        st.lead.push(r.leading_exp().unwrap().clone());
        st.polys.push(r);
        let h = st.polys.len() - 1;
        st.update(h);
    }
    let basis: Vec<Poly<S>> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    GroebnerBasis::interreduce(vars, order, basis)
}

impl<S: Scalar> GroebnerBasis<S> {
    fn interreduce(vars: Arc<Vec<String>>, order: MonomialOrder, mut basis: Vec<Poly<S>>) -> Self {
        // minimal: drop elements whose leading monomial is divisible by another's
        basis.sort_by(|a, b| order.cmp(a.leading_exp().unwrap(), b.leading_exp().unwrap()));
        let mut minimal: Vec<Poly<S>> = Vec::new();
        for p in basis {
            let lp = p.leading_exp().unwrap();
            if !minimal
                .iter()
                .any(|q| divides(q.leading_exp().unwrap(), lp))
            {
                minimal.push(p);
            }
        }
        let mut reduced = Vec::new();
        for i in 0..minimal.len() {
            let others: Vec<Poly<S>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            reduced.push(reduce(&minimal[i], &others).monic());
        }
        reduced.sort_by(|a, b| order.cmp(b.leading_exp().unwrap(), a.leading_exp().unwrap()));
        GroebnerBasis {
            vars,
            order,
            polys: reduced,
        }
    }

    pub fn polys(&self) -> &[Poly<S>] {
        &self.polys
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn normal_form(&self, p: &Poly<S>) -> Poly<S> {
        reduce(&p.clone().with_order(self.order), &self.polys)
    }

    pub fn contains(&self, p: &Poly<S>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn leading_exps(&self) -> Vec<&Exp> {
        self.polys
            .iter()
            .map(|p| p.leading_exp().unwrap())
            .collect()
    }

    /// Requires a pure power of every variable among the leading monomials.
    fn check_zero_dimensional(&self) -> Result<(), SchemeError> {
        if self.polys.is_empty() {
            return match self.vars.first() {
                Some(v) => Err(SchemeError::NotZeroDimensional {
                    variable: v.clone(),
                }),
                None => Ok(()),
            };
        }
        for (i, v) in self.vars.iter().enumerate() {
            let pure = self
                .leading_exps()
                .iter()
                .any(|e| e[i] > 0 && e.iter().enumerate().all(|(k, &x)| k == i || x == 0));
            if !pure && !self.is_unit_ideal() {
                return Err(SchemeError::NotZeroDimensional {
                    variable: v.clone(),
                });
            }
        }
        Ok(())
    }

    /// Monomials outside the leading-term ideal.
    pub fn standard_monomials(&self) -> Result<Vec<Exp>, SchemeError> {
        self.check_zero_dimensional()?;
        let n = self.vars.len();
        let leads: Vec<Exp> = self.leading_exps().into_iter().cloned().collect();
        let standard = |e: &Exp| !leads.iter().any(|l| divides(l, e));
        let mut seen: BTreeSet<Exp> = BTreeSet::new();
        let start = vec![0; n];
        if !standard(&start) {
            return Ok(Vec::new());
        }
        let mut queue = VecDeque::from([start.clone()]);
        seen.insert(start);
        while let Some(e) = queue.pop_front() {
            for i in 0..n {
                let mut unit = vec![0; n];
                unit[i] = 1;
                let f = exp_add(&e, &unit);
                if standard(&f) && seen.insert(f.clone()) {
                    queue.push_back(f);
                }
            }
        }
        let mut out: Vec<Exp> = seen.into_iter().collect();
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(out)
    }

    /// `dim k[x]/I`.
    pub fn quotient_dimension(&self) -> Result<usize, SchemeError> {
        Ok(self.standard_monomials()?.len())
    }

    /// Equal ideals have equal reduced bases for the same order.
    pub fn same_ideal(&self, other: &Self) -> bool {
        self.order == other.order && self.polys == other.polys
    }
}

/// `dim k[x]/(gens)`.
pub fn quotient_dimension<S: Scalar>(gens: &[Poly<S>]) -> Result<usize, SchemeError> {
    buchberger(gens, MonomialOrder::default()).quotient_dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::parse::parse_poly;
    use crate::Rational;

    fn ring(names: &[&str]) -> Arc<Vec<String>> {
        Arc::new(names.iter().map(|s| s.to_string()).collect())
    }

    fn polys(r: &Arc<Vec<String>>, texts: &[&str]) -> Vec<Poly<Rational>> {
        texts.iter().map(|t| parse_poly(t, r).unwrap()).collect()
    }

    fn gb(r: &Arc<Vec<String>>, texts: &[&str]) -> Vec<String> {
        buchberger(&polys(r, texts), MonomialOrder::GRevLex)
            .polys()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn spec_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(gb(&r, &["x", "y"]), vec!["x", "y"]);
        assert_eq!(gb(&r, &["x^2+y", "y"]), vec!["x^2", "y"]);
        assert_eq!(gb(&r, &["x"]), vec!["x"]);
    }

    #[test]
    fn classic_example() {
        // Cox–Little–O'Shea: (x^3 - 2xy, x^2 y - 2y^2 + x) in grlex
        let r = ring(&["x", "y"]);
        let g = buchberger(
            &polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
            MonomialOrder::GrLex,
        );
        let got: Vec<String> = g.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["x^2", "x*y", "y^2 - 1/2*x"]);
    }

    #[test]
    fn quotient_dimensions() {
        let r = ring(&["x", "y"]);
        assert_eq!(quotient_dimension(&polys(&r, &["x", "y"])).unwrap(), 1);
        assert_eq!(quotient_dimension(&polys(&r, &["x^2", "y^2"])).unwrap(), 4);
        assert_eq!(quotient_dimension(&polys(&r, &["x", "y^2"])).unwrap(), 2);
        assert_eq!(quotient_dimension(&polys(&r, &["1"])).unwrap(), 0);
        assert_eq!(
            quotient_dimension(&polys(&r, &["x"])).unwrap_err(),
            SchemeError::NotZeroDimensional {
                variable: "y".into()
            }
        );
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y", "z"]);
        let gens = polys(&r, &["x*y - z", "y*z - x", "x*z - y"]);
        let g = buchberger(&gens, MonomialOrder::GRevLex);
        let combo = gens[0]
            .mul(&parse_poly("x + z^2", &r).unwrap())
            .add(&gens[2].mul(&parse_poly("3*y", &r).unwrap()));
        assert!(g.contains(&combo));
        assert!(!g.contains(&parse_poly("x", &r).unwrap()));
        let nf = g.normal_form(&parse_poly("x^3 + y", &r).unwrap());
        assert_eq!(g.normal_form(&nf), nf);
        // orders give the same ideal
        let lex = buchberger(&gens, MonomialOrder::Lex);
        for p in lex.polys() {
            assert!(g.contains(p));
        }
    }
}
