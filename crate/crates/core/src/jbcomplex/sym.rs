//! Monomials of the graded-symmetric algebra on `V` and their products.

use std::collections::BTreeMap;

use crate::liecore::ArtinElem;
use crate::Rational;

/// A monomial `v_{i1}⋯v_{in}` as its sorted list of positions in `V`.
/// Odd positions occur at most once; the empty monomial is the unit.
pub type Monomial = Vec<usize>;

/// A cochain of `J_S`: Artin-ring coefficients on monomials.
pub type Chain = BTreeMap<Monomial, ArtinElem<Rational>>;

fn odd(deg: &[i32], v: usize) -> bool {
    deg[v].rem_euclid(2) == 1
}

/// Sorts the concatenation `a·b`, returning the Koszul sign, or `None` when
/// an odd generator repeats.
pub fn multiply(deg: &[i32], a: &[usize], b: &[usize]) -> Option<(Monomial, i64)> {
    let mut sign = 1;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    // odd elements of `a` not yet emitted, counted from position i
    let mut odd_left: usize = a.iter().filter(|&&v| odd(deg, v)).count();
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i] <= b[j]);
        if take_a {
            if odd(deg, a[i]) {
                if out.last() == Some(&a[i]) {
                    return None;
                }
                odd_left -= 1;
            }
            out.push(a[i]);
            i += 1;
        } else {
            if odd(deg, b[j]) {
                if out.last() == Some(&b[j]) {
                    return None;
                }
                if odd_left % 2 == 1 {
                    sign = -sign;
                }
            }
            out.push(b[j]);
            j += 1;
        }
    }
    Some((out, sign))
}

/// Koszul sign of moving the factors at `positions` of `m` to the front.
pub fn extraction_sign(deg: &[i32], m: &[usize], positions: &[usize]) -> i64 {
    // ε(I): pairs j ∉ I, i ∈ I, j < i, both odd
    let mut count = 0;
    let mut odd_outside = 0;
    let mut next = 0;
    for (p, &v) in m.iter().enumerate() {
        let inside = next < positions.len() && positions[next] == p;
        if inside {
            next += 1;
            if odd(deg, v) {
                count += odd_outside;
            }
        } else if odd(deg, v) {
            odd_outside += 1;
        }
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All monomials of length `1..=max_len` with degree in `lo..=hi`, grouped by
/// degree and ordered by length, then lexicographically.
pub fn enumerate(deg: &[i32], max_len: usize, lo: i32, hi: i32) -> BTreeMap<i32, Vec<Monomial>> {
    let mut out: BTreeMap<i32, Vec<Monomial>> = (lo..=hi).map(|j| (j, Vec::new())).collect();
    let n = deg.len();
    // degree bounds of the remaining letters, for pruning
    let (dmin, dmax) = (
        deg.iter().copied().min().unwrap_or(0),
        deg.iter().copied().max().unwrap_or(0),
    );
    fn rec(
        deg: &[i32],
        n: usize,
        len: usize,
        cur: &mut Monomial,
        d: i32,
        bounds: (i32, i32, i32, i32),
        out: &mut BTreeMap<i32, Vec<Monomial>>,
    ) {
        let (lo, hi, dmin, dmax) = bounds;
        let left = (len - cur.len()) as i32;
        if left == 0 {
            if (lo..=hi).contains(&d) {
                out.get_mut(&d).unwrap().push(cur.clone());
            }
            return;
        }
        if d + left * dmax < lo || d + left * dmin > hi {
            return;
        }
        let start = match cur.last() {
            None => 0,
            Some(&v) if odd(deg, v) => v + 1,
            Some(&v) => v,
        };
        for v in start..n {
            cur.push(v);
            rec(deg, n, len, cur, d + deg[v], bounds, out);
            cur.pop();
        }
    }
    for len in 1..=max_len {
        rec(
            deg,
            n,
            len,
            &mut Vec::new(),
            0,
            (lo, hi, dmin, dmax),
            &mut out,
        );
    }
    out
}

/// Nonempty subsets of `0..len`, as increasing index lists. Repeated factors
/// are distinguished by position.
pub fn position_subsets(len: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..(1u64 << len)).map(move |mask| (0..len).filter(|p| mask >> p & 1 == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_signs() {
        let deg = [-1, 0, 1, 1];
        assert_eq!(multiply(&deg, &[3], &[2]), Some((vec![2, 3], -1)));
        assert_eq!(multiply(&deg, &[2], &[3]), Some((vec![2, 3], 1)));
        assert_eq!(multiply(&deg, &[1], &[1]), Some((vec![1, 1], 1)));
        assert_eq!(multiply(&deg, &[0, 2], &[0]), None);
        // x_3 · (x_0 x_1 x_2): moves past two odd letters
        assert_eq!(
            multiply(&deg, &[3], &[0, 1, 2]),
            Some((vec![0, 1, 2, 3], 1))
        );
        assert_eq!(multiply(&deg, &[2, 3], &[0]), Some((vec![0, 2, 3], 1)));
        assert_eq!(multiply(&deg, &[3], &[0, 1]), Some((vec![0, 1, 3], -1)));
    }

    #[test]
    fn extraction() {
        let deg = [-1, 1, 1];
        // (v0 v1 v2) = ε · v2 · (v0 v1)
        assert_eq!(extraction_sign(&deg, &[0, 1, 2], &[2]), 1);
        assert_eq!(extraction_sign(&deg, &[0, 1, 2], &[1]), -1);
        assert_eq!(extraction_sign(&deg, &[0, 1, 2], &[1, 2]), 1);
    }

    #[test]
    fn enumeration_counts() {
        // one even, one odd generator in degree 0 and 1
        let deg = [0, 1];
        let m = enumerate(&deg, 3, 0, 1);
        assert_eq!(m[&0], vec![vec![0], vec![0, 0], vec![0, 0, 0]]);
        assert_eq!(m[&1], vec![vec![1], vec![0, 1], vec![0, 0, 1]]);
    }
}
