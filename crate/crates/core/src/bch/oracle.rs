use std::collections::BTreeMap;

use super::E;
use crate::exactnum::factorial;
use crate::freelie::{AssocPoly, FreeLieElement};
use crate::Rational;

type P = AssocPoly<Rational>;

fn truncated_exp(letter: u8, cap: usize) -> P {
    let mut out = P::zero();
    for k in 0..=cap {
        let c = Rational::new(1.into(), factorial(k as u64));
        out.add_term(vec![letter; k], c);
    }
    out
}

/// `log(1 + u)` truncated at degree `cap`; `u` has no constant term.
pub(crate) fn truncated_log1p(u: &P, cap: usize) -> P {
    let mut out = P::zero();
    let mut power = P::one();
    for k in 1..=cap {
        power = power.mul_truncated(u, Some(cap));
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Rational::new(sign.into(), (k as i64).into())));
    }
    out
}

/// `log(exp X · exp Y)` computed in the free associative algebra, split by
/// bidegree and brought back to the Lyndon basis through the Dynkin map.
pub fn bch_oracle(cap: usize) -> BTreeMap<(usize, usize), E> {
    let prod = truncated_exp(0, cap).mul_truncated(&truncated_exp(1, cap), Some(cap));
    let u = prod.sub(&P::one());
    let log = truncated_log1p(&u, cap);
    let mut out = BTreeMap::new();
    for n in 1..=cap {
        for i in 0..=n {
            let piece = log.multihomogeneous(&[i, n - i]);
            let e = FreeLieElement::from_assoc_projected(&piece);
            if !e.is_zero() {
                out.insert((i, n - i), e);
            }
        }
    }
    out
}

/// Associative `log(exp X · exp Y · exp Z)` truncated at `cap`.
pub fn log_of_three(cap: usize) -> P {
    let prod = truncated_exp(0, cap)
        .mul_truncated(&truncated_exp(1, cap), Some(cap))
        .mul_truncated(&truncated_exp(2, cap), Some(cap));
    truncated_log1p(&prod.sub(&P::one()), cap)
}
