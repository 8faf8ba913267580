//! Elimination modulo word-size primes.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::ExactMatrix;

/// How many primes below `2^31` are kept.
const PRIME_COUNT: usize = 128;

/// The largest primes below `2^31`, in decreasing order.
pub static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();

pub(crate) fn primes() -> &'static [u64] {
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_COUNT);
        let mut n = (1u64 << 31) - 1;
        while out.len() < PRIME_COUNT {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// Echelon data modulo `p`: pivot columns and the pivot rows (full width,
/// normalised to 1 at the pivot).
pub(crate) struct ModEchelon {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<u64>>,
}

/// Row reduction modulo a prime `p < 2^31`. With `reduced` the pivot
/// columns are also cleared above the pivots (full RREF).
pub(crate) fn echelon_mod(m: &ExactMatrix, p: u64, reduced: bool) -> ModEchelon {
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..nrows).map(|i| m.row(i).iter().map(|x| reduce(x, p)).collect()).collect();
    let parallel = nrows * ncols > 1 << 16;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(pr, r);
        let inv = inv_mod(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot: Vec<u64> = a[r].clone();
        let eliminate = |i: usize, row: &mut Vec<u64>| {
            if i == r || (!reduced && i < r) {
                return;
            }
            let f = row[c];
            if f == 0 {
                return;
            }
            let nf = p - f;
            for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                if y != 0 {
                    *x = (*x + nf * y) % p;
                }
            }
        };
        if parallel {
            a.par_iter_mut().enumerate().with_min_len(64).for_each(|(i, row)| eliminate(i, row));
        } else {
            a.iter_mut().enumerate().for_each(|(i, row)| eliminate(i, row));
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    ModEchelon { pivots, rows: a }
}

/// Rank modulo each of the first `count` primes; the maximum is a lower
/// bound for the rank over `Q`.
pub fn modular_rank(m: &ExactMatrix, count: usize) -> usize {
    primes().iter().take(count.max(1)).map(|&p| echelon_mod(m, p, false).pivots.len()).max().unwrap_or(0)
}
