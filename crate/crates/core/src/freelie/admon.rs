//! Ad-monomials `ad(T_1)...ad(T_{n-1})(T_n)` and their symmetrizations.

use super::element::{FreeLie, FreeLieElement, LieAlgebra};
use super::FreeLieError;
use crate::scalar::Scalar;

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn check_subset(s: &[usize], i: usize, j: usize) -> Result<Vec<bool>, FreeLieError> {
    let n = i + j;
    if n == 0 {
        return Err(FreeLieError::EmptyMonomial);
    }
    let mut is_x = vec![false; n];
    for &k in s {
        if k == 0 || k > n || is_x[k - 1] {
            return Err(FreeLieError::BadSubset {
                subset: s.to_vec(),
                n,
            });
        }
        is_x[k - 1] = true;
    }
    if s.len() != i {
        return Err(FreeLieError::CardinalityMismatch {
            subset: s.len(),
            expected: i,
        });
    }
    Ok(is_x)
}

/// Nested bracket of a sequence, innermost last.
pub fn nested<S: Scalar, A: LieAlgebra<S>>(alg: &A, seq: &[A::Elem]) -> A::Elem {
    let (last, rest) = seq.split_last().expect("nonempty sequence");
    rest.iter()
        .rev()
        .fold(last.clone(), |acc, t| alg.bracket(t, &acc))
}

/// `ad_S(X_1..X_i, Y_1..Y_j)` in an arbitrary Lie algebra. `subset` is 1-based.
pub fn ad_monomial_in<S: Scalar, A: LieAlgebra<S>>(
    alg: &A,
    subset: &[usize],
    xs: &[A::Elem],
    ys: &[A::Elem],
) -> Result<A::Elem, FreeLieError> {
    let is_x = check_subset(subset, xs.len(), ys.len())?;
    let (mut xi, mut yi) = (0, 0);
    let seq: Vec<A::Elem> = is_x
        .iter()
        .map(|&x| {
            if x {
                xi += 1;
                xs[xi - 1].clone()
            } else {
                yi += 1;
                ys[yi - 1].clone()
            }
        })
        .collect();
    Ok(nested(alg, &seq))
}

/// Symmetrized ad-monomial: average of `ad_S` over all permutations of the
/// `X` arguments and of the `Y` arguments.
pub fn ad_monomial_sym_in<S: Scalar, A: LieAlgebra<S>>(
    alg: &A,
    subset: &[usize],
    xs: &[A::Elem],
    ys: &[A::Elem],
) -> Result<A::Elem, FreeLieError> {
    check_subset(subset, xs.len(), ys.len())?;
    let px = permutations(xs.len());
    let py = permutations(ys.len());
    let mut acc = alg.zero();
    for p in &px {
        let xp: Vec<A::Elem> = p.iter().map(|&k| xs[k].clone()).collect();
        for q in &py {
            let yq: Vec<A::Elem> = q.iter().map(|&k| ys[k].clone()).collect();
            acc = alg.add(&acc, &ad_monomial_in(alg, subset, &xp, &yq)?);
        }
    }
    let count = S::from_i64((px.len() * py.len()) as i64);
    Ok(alg.scale(&acc, &(S::one() / count)))
}

/// `ad_S(X^i Y^j)` in the free Lie algebra on `X = x`, `Y = y`.
pub fn ad_monomial<S: Scalar>(
    subset: &[usize],
    i: usize,
    j: usize,
) -> Result<FreeLieElement<S>, FreeLieError> {
    let xs = vec![FreeLieElement::generator(0); i];
    let ys = vec![FreeLieElement::generator(1); j];
    ad_monomial_in(&FreeLie, subset, &xs, &ys)
}

pub fn ad_monomial_sym<S: Scalar>(
    subset: &[usize],
    xs: &[FreeLieElement<S>],
    ys: &[FreeLieElement<S>],
) -> Result<FreeLieElement<S>, FreeLieError> {
    ad_monomial_sym_in(&FreeLie, subset, xs, ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::{lie_normal_form, BracketExpr};
    use crate::Rational;

    type E = FreeLieElement<Rational>;
    type X = BracketExpr<Rational>;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn spec_examples() {
        let xy = lie_normal_form(&X::br(X::gen(0), X::gen(1)));
        assert_eq!(ad_monomial::<Rational>(&[1], 1, 1).unwrap(), xy);
        let yyx = lie_normal_form(&X::br(X::gen(1), X::br(X::gen(1), X::gen(0))));
        assert_eq!(ad_monomial::<Rational>(&[3], 1, 2).unwrap(), yyx);
        let xxy = lie_normal_form(&X::br(X::gen(0), X::br(X::gen(0), X::gen(1))));
        assert_eq!(ad_monomial::<Rational>(&[1, 2], 2, 1).unwrap(), xxy);
    }

    #[test]
    fn cardinality_errors() {
        assert!(matches!(
            ad_monomial::<Rational>(&[1, 2], 1, 1),
            Err(FreeLieError::CardinalityMismatch { .. })
        ));
        assert!(ad_monomial::<Rational>(&[3], 1, 1).is_err());
    }

    #[test]
    fn symmetrization() {
        // letters: X1 = 0, X2 = 1, Y1 = 2
        let (x1, x2, y1) = (E::generator(0), E::generator(1), E::generator(2));
        let got = ad_monomial_sym(&[1, 2], &[x1.clone(), x2.clone()], std::slice::from_ref(&y1)).unwrap();
        let a = x1.bracket(&x2.bracket(&y1));
        let b = x2.bracket(&x1.bracket(&y1));
        let half = Rational::from_ratio(1, 2);
        assert_eq!(got, a.add(&b).scale(&half));

        let single = ad_monomial_sym(&[1], std::slice::from_ref(&x1), std::slice::from_ref(&y1)).unwrap();
        assert_eq!(single, x1.bracket(&y1));

        let (x, y) = (E::generator(0), E::generator(1));
        let rep = ad_monomial_sym(&[1, 3], &[x.clone(), x.clone()], std::slice::from_ref(&y)).unwrap();
        assert_eq!(rep, ad_monomial(&[1, 3], 2, 1).unwrap());
    }
}
