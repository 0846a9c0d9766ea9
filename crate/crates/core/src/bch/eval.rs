use super::{BchError, BchTable};
use crate::freelie::{evaluate, LieAlgebra};
use crate::scalar::Scalar;

fn check(table: &BchTable, bound: usize) -> Result<(), BchError> {
    if bound > table.cap() {
        Err(BchError::NilpotencyBeyondCap {
            bound,
            cap: table.cap(),
        })
    } else {
        Ok(())
    }
}

/// `β(u, v)` in a concrete Lie algebra in which every bracket of more than
/// `nilpotency` elements vanishes.
pub fn eval_bch<S: Scalar, A: LieAlgebra<S>>(
    table: &BchTable,
    alg: &A,
    u: &A::Elem,
    v: &A::Elem,
    nilpotency: usize,
) -> Result<A::Elem, BchError> {
    check(table, nilpotency)?;
    let series = table.series(nilpotency).map_coeffs(S::from_rational);
    Ok(evaluate(&series, alg, &[u.clone(), v.clone()]))
}

/// `β(u, v, w)` under the same nilpotency assumption.
pub fn eval_bch3<S: Scalar, A: LieAlgebra<S>>(
    table: &BchTable,
    alg: &A,
    u: &A::Elem,
    v: &A::Elem,
    w: &A::Elem,
    nilpotency: usize,
) -> Result<A::Elem, BchError> {
    check(table, nilpotency)?;
    let series = table.series3(nilpotency).map_coeffs(S::from_rational);
    Ok(evaluate(&series, alg, &[u.clone(), v.clone(), w.clone()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type M = Vec<Vec<Rational>>;

    /// Square matrices under the commutator.
    struct Mat(usize);

    impl Mat {
        fn mul(&self, a: &M, b: &M) -> M {
            let n = self.0;
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(Rational::from_i64(0), |s, k| {
                                s + a[i][k].clone() * b[k][j].clone()
                            })
                        })
                        .collect()
                })
                .collect()
        }

        fn unit(&self, i: usize, j: usize) -> M {
            let mut m = self.zero();
            m[i][j] = Rational::from_i64(1);
            m
        }
    }

    impl LieAlgebra<Rational> for Mat {
        type Elem = M;
        fn zero(&self) -> M {
            vec![vec![Rational::from_i64(0); self.0]; self.0]
        }
        fn add(&self, a: &M, b: &M) -> M {
            a.iter()
                .zip(b)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
                .collect()
        }
        fn scale(&self, a: &M, c: &Rational) -> M {
            a.iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect()
        }
        fn bracket(&self, a: &M, b: &M) -> M {
            let ab = self.mul(a, b);
            let ba = self.mul(b, a);
            self.add(&ab, &self.scale(&ba, &Rational::from_i64(-1)))
        }
        fn is_zero(&self, a: &M) -> bool {
            a.iter().flatten().all(|x| *x == Rational::from_i64(0))
        }
    }

    #[test]
    fn heisenberg_example() {
        let t = BchTable::new(4).unwrap();
        let alg = Mat(3);
        let (u, v) = (alg.unit(0, 1), alg.unit(1, 2));
        let got = eval_bch(&t, &alg, &u, &v, 2).unwrap();
        let half = alg.scale(&alg.unit(0, 2), &Rational::from_ratio(1, 2));
        assert_eq!(got, alg.add(&alg.add(&u, &v), &half));
    }

    #[test]
    fn commuting_and_zero() {
        let t = BchTable::new(3).unwrap();
        let alg = Mat(3);
        let (u, v) = (alg.unit(0, 1), alg.unit(0, 2));
        assert_eq!(eval_bch(&t, &alg, &u, &v, 3).unwrap(), alg.add(&u, &v));
        assert_eq!(eval_bch(&t, &alg, &u, &alg.zero(), 3).unwrap(), u);
        assert_eq!(
            eval_bch(&t, &alg, &u, &v, 4),
            Err(BchError::NilpotencyBeyondCap { bound: 4, cap: 3 })
        );
    }

    #[test]
    fn three_factors_in_floats() {
        let t = BchTable::new(3).unwrap();
        let e = |i: usize, j: usize| {
            let mut m = vec![vec![0.0f64; 3]; 3];
            m[i][j] = 1.0;
            m
        };
        struct F;
        impl LieAlgebra<f64> for F {
            type Elem = Vec<Vec<f64>>;
            fn zero(&self) -> Self::Elem {
                vec![vec![0.0; 3]; 3]
            }
            fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
                a.iter()
                    .zip(b)
                    .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
                    .collect()
            }
            fn scale(&self, a: &Self::Elem, c: &f64) -> Self::Elem {
                a.iter()
                    .map(|r| r.iter().map(|x| x * c).collect())
                    .collect()
            }
            fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
                let mut out = self.zero();
                for i in 0..3 {
                    for j in 0..3 {
                        for k in 0..3 {
                            out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
                        }
                    }
                }
                out
            }
            fn is_zero(&self, a: &Self::Elem) -> bool {
                a.iter().flatten().all(|x| *x == 0.0)
            }
        }
        let got = eval_bch3(&t, &F, &e(0, 1), &e(1, 2), &e(0, 1), 2).unwrap();
        // X + Y + X + ½[X,Y] + ½[X,X] + ½[Y,X] = 2X + Y
        assert_eq!(got[0][1], 2.0);
        assert_eq!(got[1][2], 1.0);
        assert_eq!(got[0][2], 0.0);
    }
}
