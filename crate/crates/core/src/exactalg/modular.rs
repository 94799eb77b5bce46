//! Rank modulo word-size primes. A rank modulo `p` never exceeds the rank over
//! the rationals, so a modular rank that meets a proven upper bound certifies
//! the rational rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Rational;

/// Mersenne prime used by the elimination fast path.
pub const FAST_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// `count` distinct primes drawn from `(2^30, 2^62)` by a seeded generator.
pub fn random_primes(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.gen_range((1u64 << 30) + 1..(1u64 << 62)) | 1;
        if is_prime(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn reduce_int(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational in `Z/p`, or `None` when `p` divides the denominator.
pub fn reduce(x: &Rational, p: u64) -> Option<u64> {
    let den = reduce_int(x.denom(), p);
    if den == 0 {
        return None;
    }
    let num = reduce_int(x.numer(), p);
    Some(mul_mod(num, pow_mod(den, p - 2, p), p))
}

/// Rank of a dense residue matrix (row-major), stopping early at `cap`.
pub fn rank_dense(mut a: Vec<Vec<u64>>, p: u64, cap: usize) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        if r == m || r == cap {
            break;
        }
        let Some(piv) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            row[c] = 0;
            for j in c + 1..n {
                if prow[j] != 0 {
                    let d = mul_mod(f, prow[j], p);
                    row[j] = if row[j] >= d { row[j] - d } else { row[j] + p - d };
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of sparse rational columns modulo `p`; `None` if `p` divides a
/// denominator.
pub fn rank_mod_p(nrows: usize, columns: &[Vec<(usize, Rational)>], p: u64) -> Option<usize> {
    let mut dense = vec![vec![0u64; columns.len()]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for (r, x) in col {
            dense[*r][c] = reduce(x, p)?;
        }
    }
    let cap = nrows.min(columns.len());
    Some(rank_dense(dense, p, cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(FAST_PRIME));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn random_primes_are_large_and_reproducible() {
        let a = random_primes(7, 3);
        assert_eq!(a, random_primes(7, 3));
        assert!(a.iter().all(|&p| p > (1 << 30) && is_prime(p)));
    }

    #[test]
    fn reduce_handles_negatives() {
        let x = Rational::new(BigInt::from(-1), BigInt::from(2));
        let r = reduce(&x, 7).unwrap();
        assert_eq!(mul_mod(r, 2, 7), 6);
        let y = Rational::new(BigInt::from(1), BigInt::from(7));
        assert_eq!(reduce(&y, 7), None);
    }
}
