use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Bernoulli number `B_n` with the convention `x/(e^x - 1) = sum B_n x^n / n!`,
/// so `B_1 = -1/2`. Values are memoized.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = cache().lock().expect("bernoulli cache poisoned");
    while table.len() <= n {
        // sum_{k=0}^{m} binom(m+1, k) B_k = 0
        let m = table.len() as u64;
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binomial(m + 1, k as u64)) * b;
        }
        let next = -acc / Rational::from_integer(BigInt::from(m + 1));
        table.push(next);
    }
    table[n].clone()
}

/// Normalized coefficient `C_t = B_t / t!`, the coefficient of `x^t` in `x/(e^x - 1)`.
pub fn bernoulli_normalized(t: usize) -> Rational {
    bernoulli(t) / Rational::from_integer(factorial(t as u64))
}
