//! Bernoulli numbers (with `B_1 = -1/2`) and Bernoulli polynomials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lincomb::RatPoly;

static TABLE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `B_k` from `sum_{j<=m} C(m+1, j) B_j = 0`, cached.
pub fn bernoulli_number(k: usize) -> BigRational {
    let table = TABLE.get_or_init(|| RwLock::new(vec![<BigRational as One>::one()]));
    if let Some(b) = table.read().expect("bernoulli table poisoned").get(k) {
        return b.clone();
    }
    let mut t = table.write().expect("bernoulli table poisoned");
    while t.len() <= k {
        let m = t.len();
        if m > 1 && m % 2 == 1 {
            t.push(<BigRational as Zero>::zero());
            continue;
        }
        let mut s = <BigRational as Zero>::zero();
        for (j, b) in t.iter().enumerate() {
            if !b.is_zero() {
                s += b * BigRational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j)));
            }
        }
        t.push(-s / rat(m as i64 + 1));
    }
    t[k].clone()
}

/// Coefficients of `B_k(x) = sum_j C(k, j) B_j x^{k-j}`.
pub fn bernoulli_poly_coeffs(k: usize) -> RatPoly {
    let mut coeffs = vec![<BigRational as Zero>::zero(); k + 1];
    for j in 0..=k {
        coeffs[k - j] = bernoulli_number(j) * BigRational::from_integer(binomial(BigInt::from(k), BigInt::from(j)));
    }
    RatPoly::new(coeffs)
}

pub fn bernoulli_poly(k: usize, x: &BigRational) -> BigRational {
    bernoulli_poly_coeffs(k).eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn known_numbers() {
        assert_eq!(bernoulli_number(0), q(1, 1));
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(3), q(0, 1));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
    }

    #[test]
    fn faulhaber() {
        // sum_{n=A}^{B-1} n^c = (B_{c+1}(B) - B_{c+1}(A)) / (c+1)
        for c in 0..7usize {
            for (a, b) in [(1i64, 5i64), (3, 9), (0, 4)] {
                let brute: i64 = (a..b).map(|n| n.pow(c as u32)).sum();
                let f = (bernoulli_poly(c + 1, &q(b, 1)) - bernoulli_poly(c + 1, &q(a, 1))) / q(c as i64 + 1, 1);
                assert_eq!(f, q(brute, 1), "c={c} a={a} b={b}");
            }
        }
    }
}
