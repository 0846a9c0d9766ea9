use std::sync::Arc;

use jbkit::bch::{eval_bch, BchTable};
use jbkit::exactnum::{bernoulli, binomial, kernel, rank, SparseMatrix};
use jbkit::freelie::{
    ad_monomial, ad_monomial_sym, evaluate, lie_normal_form, lyndon_words, witt_dimension,
    BracketExpr, FreeLieElement, LieAlgebra,
};
use jbkit::liecore::{exp_conjugate, ArtinLine, ArtinMatrix, MatrixLie};
use jbkit::schemes::{
    buchberger, glue_check, hypersurface_resolution, kappa, koszul_resolution, milnor_dim,
    normal_dgla, parse_poly, parse_vars, MonomialOrder, Operator, OperatorAlgebra, Poly, TPoly,
};
use jbkit::{RatPoly, Rational, Scalar};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn xy() -> Arc<Vec<String>> {
    parse_vars("x,y").unwrap()
}

/// Sparse polynomial in `vars` with degree ≤ `deg` and up to `terms` terms.
fn poly(nvars: usize, deg: u32, terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, nvars), -3i64..=3),
        0..=terms,
    )
}

fn build(vars: &Arc<Vec<String>>, t: &[(Vec<u32>, i64)]) -> RatPoly {
    Poly::from_terms(vars, t.iter().map(|(e, c)| (e.clone(), q(*c))))
}

/// Raw `size × size` matrix over ℚ[t]/(t^order); the constant terms are dropped on conversion.
fn nilpotent_matrix(size: usize, order: usize) -> impl Strategy<Value = Vec<Vec<Vec<i64>>>> {
    prop::collection::vec(
        prop::collection::vec(prop::collection::vec(-2i64..=2, order), size),
        size,
    )
}

fn to_matrix(raw: &[Vec<Vec<i64>>], order: usize) -> ArtinMatrix<Rational> {
    let size = raw.len();
    let ring = ArtinLine::new(order);
    let mut m = ArtinMatrix::zero(size, ring);
    for i in 0..size {
        for j in 0..size {
            let mut c: Vec<Rational> = raw[i][j].iter().map(|&n| q(n)).collect();
            c[0] = Rational::zero();
            m.set(i, j, ring.from_coeffs(&c));
        }
    }
    m
}

fn eval_expr<A: LieAlgebra<Rational>>(
    e: &BracketExpr<Rational>,
    alg: &A,
    gens: &[A::Elem],
) -> A::Elem {
    match e {
        BracketExpr::Gen(a) => gens[*a as usize].clone(),
        BracketExpr::Bracket(a, b) => {
            alg.bracket(&eval_expr(a, alg, gens), &eval_expr(b, alg, gens))
        }
        BracketExpr::Sum(v) => v.iter().fold(alg.zero(), |acc, (c, x)| {
            alg.add(&acc, &alg.scale(&eval_expr(x, alg, gens), c))
        }),
    }
}

fn bracket_expr() -> impl Strategy<Value = BracketExpr<Rational>> {
    let leaf = (0u8..3).prop_map(BracketExpr::gen);
    leaf.prop_recursive(4, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| BracketExpr::br(a, b)),
            prop::collection::vec((small_rational(), inner), 1..3).prop_map(BracketExpr::Sum),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bernoulli_recurrence(n in 1usize..=40) {
        let s = (0..=n).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(binomial(n as u64 + 1, k as u64)) * bernoulli(k)
        });
        prop_assert!(s.is_zero());
        if n >= 3 && n % 2 == 1 {
            prop_assert!(bernoulli(n).is_zero());
        }
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let m = SparseMatrix::from_dense(&dense);
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.len(), 5);
        for v in &k {
            prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rationals_form_a_field(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        let s = &a / (&b + Rational::new(7.into(), 1.into()));
        // stored reduced with a positive denominator
        prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one() || s.is_zero());
        prop_assert!(s.denom() > &0.into());
    }

    #[test]
    fn jacobi_in_the_free_lie_algebra(
        a in (1usize..=4).prop_flat_map(|d| prop::sample::select(lyndon_words(2, d))),
        b in (1usize..=4).prop_flat_map(|d| prop::sample::select(lyndon_words(2, d))),
        c in (1usize..=4).prop_flat_map(|d| prop::sample::select(lyndon_words(2, d))),
    ) {
        let (ta, tb, tc) = (
            BracketExpr::<Rational>::basis_tree(&a),
            BracketExpr::basis_tree(&b),
            BracketExpr::basis_tree(&c),
        );
        let one = Rational::one();
        let jac = BracketExpr::Sum(vec![
            (one.clone(), BracketExpr::br(ta.clone(), BracketExpr::br(tb.clone(), tc.clone()))),
            (one.clone(), BracketExpr::br(tb.clone(), BracketExpr::br(tc.clone(), ta.clone()))),
            (one, BracketExpr::br(tc, BracketExpr::br(ta, tb))),
        ]);
        prop_assert!(lie_normal_form(&jac).is_zero());
    }

    #[test]
    fn ad_monomial_sym_on_equal_arguments(i in 0usize..=3, j in 0usize..=3, seed in any::<u64>()) {
        prop_assume!(i + j > 0);
        // a seeded i-subset of {1..i+j}
        let mut pool: Vec<usize> = (1..=i + j).collect();
        let mut s = seed;
        let mut subset = Vec::new();
        for _ in 0..i {
            let k = (s % pool.len() as u64) as usize;
            s /= pool.len() as u64;
            subset.push(pool.remove(k));
        }
        subset.sort();
        let x = FreeLieElement::<Rational>::generator(0);
        let y = FreeLieElement::<Rational>::generator(1);
        let sym = ad_monomial_sym(&subset, &vec![x; i], &vec![y; j]).unwrap();
        prop_assert_eq!(sym, ad_monomial::<Rational>(&subset, i, j).unwrap());
    }

    #[test]
    fn normal_form_is_evaluation_invariant(
        e in bracket_expr(),
        gens in prop::collection::vec(nilpotent_matrix(3, 3), 3),
    ) {
        let ring = ArtinLine::new(3);
        let alg = MatrixLie { size: 3, ring };
        let mats: Vec<ArtinMatrix<Rational>> = gens.iter().map(|g| to_matrix(g, 3)).collect();
        let direct = eval_expr(&e, &alg, &mats);
        let nf = lie_normal_form(&e);
        prop_assert_eq!(evaluate(&nf, &alg, &mats), direct);
    }

    #[test]
    fn products_of_n_elements_of_the_maximal_ideal_vanish(
        order in 2usize..=4,
        gens in prop::collection::vec(nilpotent_matrix(3, 4), 4),
    ) {
        let mats: Vec<_> = gens.iter().take(order).map(|g| to_matrix(g, order)).collect();
        let alg = MatrixLie { size: 3, ring: ArtinLine::new(order) };
        let nested = mats[1..].iter().fold(mats[0].clone(), |acc, m| alg.bracket(m, &acc));
        prop_assert!(nested.is_zero());
        let product = mats[1..].iter().fold(mats[0].clone(), |acc, m| acc.mul(m));
        prop_assert!(product.is_zero());
    }

    #[test]
    fn conjugation_is_a_group_action(
        p1 in nilpotent_matrix(3, 4),
        p2 in nilpotent_matrix(3, 4),
        d in nilpotent_matrix(3, 4),
    ) {
        let (psi1, psi2) = (to_matrix(&p1, 4), to_matrix(&p2, 4));
        let mut dm = to_matrix(&d, 4);
        dm = dm.add(&ArtinMatrix::unit(3, 0, 2, ArtinLine::new(4).one()));
        let alg = MatrixLie { size: 3, ring: ArtinLine::new(4) };
        let table = BchTable::new(3).unwrap();
        let beta = eval_bch(&table, &alg, &psi1, &psi2, 3).unwrap();
        let twice = exp_conjugate(&psi1, &exp_conjugate(&psi2, &dm).unwrap()).unwrap();
        prop_assert_eq!(exp_conjugate(&beta, &dm).unwrap(), twice);
    }

    #[test]
    fn groebner_normal_forms(
        g1 in poly(2, 3, 3),
        g2 in poly(2, 3, 3),
        h1 in poly(2, 2, 3),
        h2 in poly(2, 2, 3),
        r in poly(2, 3, 4),
    ) {
        let vars = xy();
        let (g1, g2) = (build(&vars, &g1), build(&vars, &g2));
        let gb = buchberger(&[g1.clone(), g2.clone()], MonomialOrder::GRevLex);
        let combo = build(&vars, &h1).mul(&g1).add(&build(&vars, &h2).mul(&g2));
        prop_assert!(gb.normal_form(&combo).is_zero());
        prop_assert!(gb.contains(&combo));
        let r = build(&vars, &r);
        let nf = gb.normal_form(&r);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        // r − nf(r) lies in the ideal
        prop_assert!(gb.contains(&r.sub(&nf)));
        // and nf(r) = 0 exactly when r does
        prop_assert_eq!(nf.is_zero(), gb.contains(&r));
        // the ideal does not depend on the order
        let lex = buchberger(&[g1, g2], MonomialOrder::Lex);
        prop_assert!(lex.polys().iter().all(|p| gb.contains(p)));
        prop_assert!(gb.polys().iter().all(|p| lex.contains(p)));
    }

    #[test]
    fn milnor_dim_is_invariant_under_unimodular_substitution(
        a in 2u32..=5,
        b in 2u32..=5,
        k in -3i64..=3,
        l in -3i64..=3,
        extra in 0i64..=2,
    ) {
        let vars = xy();
        let f = parse_poly(&format!("x^{a} + y^{b} + {extra}*x^2*y^2"), &vars).unwrap();
        let x = RatPoly::var(&vars, 0);
        let y = RatPoly::var(&vars, 1);
        // (x, y) ↦ (x + k y, l x + (kl + 1) y), determinant 1
        let sx = x.add(&y.scale(&q(k)));
        let sy = x.scale(&q(l)).add(&y.scale(&q(k * l + 1)));
        let g = f.substitute(&[sx, sy]);
        // finiteness is invariant too: (x² + y²)² has a non-isolated singular locus
        prop_assert_eq!(milnor_dim(&g).ok(), milnor_dim(&f).ok());
    }

    #[test]
    fn kappa_is_a_chain_map(
        v1 in poly(2, 2, 3),
        v2 in poly(2, 2, 3),
        a in 1u32..=3,
        b in 1u32..=3,
    ) {
        let vars = xy();
        let v = vec![build(&vars, &v1), build(&vars, &v2)];
        let gens = [
            parse_poly(&format!("x^{a}"), &vars).unwrap(),
            parse_poly(&format!("y^{b} + x*y"), &vars).unwrap(),
        ];
        let k = koszul_resolution(&gens).unwrap();
        prop_assert!(kappa(&normal_dgla(&k).unwrap(), &v).is_ok());
        let h = hypersurface_resolution(&parse_poly(&format!("x^{} + y^{}", a + 1, b + 1), &vars).unwrap());
        prop_assert!(kappa(&normal_dgla(&h).unwrap(), &v).is_ok());
    }

    #[test]
    fn gluings_compose_through_bch(
        f1 in poly(2, 2, 2),
        f2 in poly(2, 2, 2),
        m1 in poly(2, 1, 2),
        m2 in poly(2, 1, 2),
    ) {
        let vars = xy();
        let n = 4;
        let base = hypersurface_resolution(&parse_poly("x^2 + y^3", &vars).unwrap());
        let alg = OperatorAlgebra::for_complex(&base, n);
        let mk = |f: &RatPoly, m: &RatPoly, k: usize| {
            let mut op: Operator<Rational> = alg.vector_field(vec![TPoly::with_t(f, k, n), alg.tzero()]);
            op.m[1][1] = TPoly::with_t(m, 1, n);
            op
        };
        let psi1 = mk(&build(&vars, &f1), &build(&vars, &m1), 1);
        let psi2 = mk(&build(&vars, &f2), &build(&vars, &m2), 2);
        let d = alg.differential(&base, None);
        let table = BchTable::new(n - 1).unwrap();
        let beta = eval_bch(&table, &alg, &psi1, &psi2, n - 1).unwrap();
        let two = alg.conjugate(&psi1, &alg.conjugate(&psi2, &d).unwrap()).unwrap();
        prop_assert_eq!(alg.conjugate(&beta, &d).unwrap(), two);
        // ψ₁, ψ₂, −β(ψ₁, ψ₂) close up on a triple overlap
        let zero: Operator<Rational> = LieAlgebra::<Rational>::zero(&alg);
        let minus = alg.scale(&beta, &-Rational::one());
        let rep = glue_check(&alg, &base, &zero, &zero, &zero, Some([&psi1, &psi2, &minus])).unwrap();
        prop_assert_eq!(rep.psi_cocycle_holds, Some(true));
    }
}

#[test]
fn expansion_to_words_is_injective() {
    for d in 1..=6usize {
        let words = lyndon_words(2, d);
        assert_eq!(words.len() as u64, witt_dimension(2, d as u64));
        let cols: Vec<Vec<u8>> = (0..1u32 << d)
            .map(|m| (0..d).map(|i| ((m >> i) & 1) as u8).collect())
            .collect();
        let rows: Vec<Vec<Rational>> = words
            .iter()
            .map(|w| {
                let p = FreeLieElement::<Rational>::basis(w.clone()).expand_associative();
                cols.iter().map(|c| p.coeff(c)).collect()
            })
            .collect();
        assert_eq!(
            rank(&SparseMatrix::from_dense(&rows)),
            words.len(),
            "degree {d}"
        );
    }
}

#[test]
fn witt_formula_for_two_letters() {
    let expected = [2, 1, 2, 3, 6, 9, 18, 30];
    for (d, &e) in (1..=8).zip(&expected) {
        assert_eq!(witt_dimension(2, d), e);
        assert_eq!(lyndon_words(2, d as usize).len() as u64, e);
    }
}

#[test]
fn scalar_genericity_over_f64() {
    // the same free-Lie code path runs over floating point
    let e = ad_monomial::<f64>(&[1], 1, 1).unwrap();
    assert_eq!(e.coeff(&[0, 1]), 1.0);
    assert_eq!(<f64 as Scalar>::from_ratio(1, 2), 0.5);
}
