use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// A word over a finite ordered alphabet; letters are indices.
pub type Word = Vec<u8>;

/// True when `w` is strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|k| {
        let rot = w[k..].iter().chain(&w[..k]);
        w.iter().lt(rot)
    })
}

/// All Lyndon words of the given length over `letters` letters, in
/// lexicographic order (Duval's generation algorithm).
pub fn lyndon_words(letters: u8, length: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if letters == 0 || length == 0 {
        return out;
    }
    let k = letters;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == length {
            out.push(w.clone());
        }
        // extend periodically to full length, then increment
        let m = w.len();
        while w.len() < length {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    out
}

/// Standard factorization `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .map(|i| (&w[..i], &w[i..]))
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Witt's necklace formula: dimension of the degree-`n` part of the free Lie
/// algebra on `k` generators.
pub fn witt_dimension(k: u64, n: u64) -> u64 {
    let s: i128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (k as i128).pow((n / d) as u32))
        .sum();
    (s / n as i128) as u64
}

/// Associative expansion of the standard bracketing of a Lyndon word, with
/// integer coefficients. Cached across calls.
pub(crate) fn lyndon_expansion(w: &[u8]) -> std::sync::Arc<Vec<(Word, i64)>> {
    static CACHE: OnceLock<Mutex<HashMap<Word, std::sync::Arc<Vec<(Word, i64)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(w) {
        return v.clone();
    }
    let result: Vec<(Word, i64)> = match standard_factorization(w) {
        None => vec![(w.to_vec(), 1)],
        Some((u, v)) => {
            let eu = lyndon_expansion(u);
            let ev = lyndon_expansion(v);
            let mut acc: std::collections::BTreeMap<Word, i64> = Default::default();
            for (a, ca) in eu.iter() {
                for (b, cb) in ev.iter() {
                    let mut ab = a.clone();
                    ab.extend_from_slice(b);
                    *acc.entry(ab).or_default() += ca * cb;
                    let mut ba = b.clone();
                    ba.extend_from_slice(a);
                    *acc.entry(ba).or_default() -= ca * cb;
                }
            }
            acc.into_iter().filter(|(_, c)| *c != 0).collect()
        }
    };
    let arc = std::sync::Arc::new(result);
    cache.lock().unwrap().insert(w.to_vec(), arc.clone());
    arc
}
