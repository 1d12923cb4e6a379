//! Monomial bases of graded pieces, in graded-lexicographic descending order:
//! `x0^d` first, `x_{n-1}^d` last.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Number of monomials of degree `d` in `n` variables.
pub fn count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n + d - 1, d)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

type Cache = Mutex<HashMap<(usize, usize), Arc<Vec<Exponents>>>>;

/// All exponent vectors of degree `d` in `n` variables, in basis order.
pub fn basis(n: usize, d: usize) -> Arc<Vec<Exponents>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().expect("monomial cache").get(&(n, d)) {
        return b.clone();
    }
    let mut out = Vec::with_capacity(count(n, d));
    let mut cur = vec![0u32; n];
    fill(&mut out, &mut cur, 0, d as u32);
    let b = Arc::new(out);
    cache.lock().expect("monomial cache").insert((n, d), b.clone());
    b
}

fn fill(out: &mut Vec<Exponents>, cur: &mut Exponents, i: usize, rem: u32) {
    let n = cur.len();
    if n == 0 {
        if rem == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if i == n - 1 {
        cur[i] = rem;
        out.push(cur.clone());
        return;
    }
    for e in (0..=rem).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, rem - e);
    }
    cur[i] = 0;
}

/// Position of `e` in [`basis`]`(e.len(), |e|)`.
pub fn index_of(e: &[u32]) -> usize {
    let n = e.len();
    let mut rem: usize = e.iter().map(|&x| x as usize).sum();
    let mut idx = 0;
    for i in 0..n.saturating_sub(1) {
        let ei = e[i] as usize;
        // monomials sharing the prefix but with a larger exponent at i come first
        for v in ei + 1..=rem {
            idx += count(n - i - 1, rem - v);
        }
        rem -= ei;
    }
    idx
}

pub fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

/// `prod_i e_i! / (e_i - a_i)!`, the scalar produced by differentiating `x^e` by `y^a`.
/// Returns 0 when `a` does not divide `e`.
pub fn falling_factor(e: &[u32], a: &[u32]) -> u128 {
    let mut acc: u128 = 1;
    for (&ei, &ai) in e.iter().zip(a) {
        if ai > ei {
            return 0;
        }
        for t in 0..ai {
            acc *= (ei - t) as u128;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(count(6, 2), 21);
        assert_eq!(count(6, 3), 56);
        assert_eq!(count(6, 9), 2002);
        assert_eq!(count(3, 9), 55);
        assert_eq!(count(3, 0), 1);
    }

    #[test]
    fn order_is_graded_lex_descending() {
        let b = basis(3, 2);
        let expected: Vec<Exponents> =
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]];
        assert_eq!(*b, expected);
    }

    #[test]
    fn index_inverts_basis() {
        for (n, d) in [(1, 4), (3, 9), (6, 3), (6, 5), (2, 0)] {
            let b = basis(n, d);
            assert_eq!(b.len(), count(n, d));
            for (i, e) in b.iter().enumerate() {
                assert_eq!(index_of(e), i, "{e:?}");
            }
        }
    }
}
