//! Tails `sigma(a)_n` of multiple Apery-like sums.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::{bits_for, check_digits, ApproxReal};
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Ring};

fn central_binomial(m: u64) -> BigInt {
    num_integer::binomial(BigInt::from(2 * m), BigInt::from(m))
}

/// Truncation point for `sigma` tails at `prec` bits: the tail beyond `N`
/// is at most `4^-N` times `sigma(a) < 1`.
fn truncation(n: u64, prec: u32) -> u64 {
    n + u64::from(prec / 2 + 2)
}

/// `sigma(a_1..a_i)_n` for every prefix length `i = 0..=r`, at `prec` bits.
///
/// Runs `sigma(a)_{m-1} = sigma(a)_m + m^{-a_r} sigma(a^init)_m` downward
/// from a truncation point `N`, all prefixes at once.
pub(crate) fn sigma_prefixes_bits(a: &Composition, n: u64, prec: u32) -> Vec<ApproxReal> {
    let big_n = truncation(n, prec);
    let entries = a.entries();
    let r = entries.len();
    // sigma(prefix)_N is at most 4^-N: start from zero with that error
    let start_err = (BigUint::one() << prec.saturating_sub(2 * big_n as u32)) + 1u32;
    let mut vals: Vec<ApproxReal> =
        (0..=r).map(|_| ApproxReal::from_parts(BigInt::from(0), prec, start_err.clone())).collect();
    let mut binom = central_binomial(big_n);
    vals[0] = ApproxReal::recip_int(&binom, prec);
    let mut m = big_n;
    while m > n {
        let mb = BigInt::from(m);
        for i in (1..=r).rev() {
            let step = vals[i - 1].div_int(&num_traits::pow(mb.clone(), entries[i - 1] as usize));
            vals[i] = vals[i].add(&step);
        }
        // C(2(m-1), m-1) = C(2m, m) * m / (2(2m-1))
        binom = binom * &mb / BigInt::from(2 * (2 * m - 1));
        vals[0] = ApproxReal::recip_int(&binom, prec);
        m -= 1;
    }
    vals
}

pub(crate) fn sigma_tail_bits(a: &Composition, n: u64, prec: u32) -> ApproxReal {
    sigma_prefixes_bits(a, n, prec).pop().expect("at least the empty prefix")
}

/// `sigma(a)_n` to `digits` decimal digits, for any composition `a`.
pub fn sigma_tail(a: &Composition, n: u64, digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    Ok(sigma_tail_bits(a, n, bits_for(digits)))
}

/// `sigma` extended linearly: `sum_b x_b sigma(b)_n` with rational weights.
pub fn sigma_lin<R: Ring + Into<BigRational>>(l: &LinComb<Composition, R>, n: u64, digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    Ok(sigma_lin_bits(l, n, bits_for(digits)))
}

pub(crate) fn sigma_lin_bits<R: Ring + Into<BigRational>>(l: &LinComb<Composition, R>, n: u64, prec: u32) -> ApproxReal {
    l.iter().fold(ApproxReal::zero(prec), |acc, (b, x)| {
        acc.add(&sigma_tail_bits(b, n, prec).mul_rational(&x.clone().into()))
    })
}

/// Work limit for the nested-sum oracle, in innermost terms.
const ORACLE_BUDGET: f64 = 4.0e7;

/// `sigma(a)_n` by direct nested summation over `n_1 > ... > n_r > n`, for
/// any integer tuple `a` (entries may be zero or negative).
///
/// The outer index is truncated at `N`; the inner sum is at most
/// `n_1^e` with `e = max(0, -a_1) + sum_{i>=2} (max(0, -a_i) + 1)` and
/// `C(2n_1, n_1) >= 4^{n_1} / (2 sqrt n_1)`, which bounds the tail.
pub fn sigma_oracle(a: &[i64], n: u64, digits: u32) -> Result<ApproxReal> {
    if digits > 25 {
        return Err(Error::Capability(format!("sigma_oracle supports at most 25 digits, asked for {digits}")));
    }
    let prec = bits_for(digits);
    let e: i64 = (-a.first().copied().unwrap_or(0)).max(0) + a.iter().skip(1).map(|&x| (-x).max(0) + 1).sum::<i64>();
    let target = (digits as f64 + 2.0) * std::f64::consts::LN_10;
    // tail <= sum_{j>N} 2 j^{e+1} 4^-j <= 3 * 2 (N+1)^{e+1} 4^-(N+1) once N >= 4(e+1)
    let mut big_n = (4 * (e + 1)).max(8) as u64 + n;
    let tail_log = |nn: u64| (6.0f64).ln() + (e + 1) as f64 * ((nn + 1) as f64).ln() - (nn + 1) as f64 * 4f64.ln();
    while -tail_log(big_n) < target {
        big_n += 1;
    }
    let span = (big_n - n) as f64;
    if span.powi(a.len().max(1) as i32) / (1..=a.len().max(1)).product::<usize>() as f64 > ORACLE_BUDGET {
        return Err(Error::Capability(format!("nested sum for {a:?} exceeds the oracle budget")));
    }
    if a.is_empty() {
        return Ok(ApproxReal::recip_int(&central_binomial(n), prec));
    }
    let mut total = ApproxReal::zero(prec);
    for n1 in n + 1..=big_n {
        let inner = nested(&a[1..], n1, n, prec);
        let w = power(n1, a[0], prec).div_int(&central_binomial(n1));
        total = total.add(&inner.mul(&w));
    }
    let tail = 6.0 * ((big_n + 1) as f64).powi((e + 1) as i32) * 4f64.powi(-((big_n + 1) as i32));
    let tail_ulps = (tail * 2f64.powi(prec.min(1000) as i32)).ceil();
    let tail_ulps = if tail_ulps.is_finite() {
        BigUint::from(tail_ulps as u128 + 1)
    } else {
        return Err(Error::Capability("oracle precision too high for its tail bound".into()));
    };
    Ok(total.widen(tail_ulps))
}

/// `n^{-a}` for an integer `a` of any sign.
fn power(n: u64, a: i64, prec: u32) -> ApproxReal {
    let p = num_traits::pow(BigInt::from(n), a.unsigned_abs() as usize);
    if a >= 0 {
        ApproxReal::recip_int(&p, prec)
    } else {
        ApproxReal::from_int(p, prec)
    }
}

/// `sum_{upper > k_1 > ... > k_s > low} prod k_i^{-b_i}`.
fn nested(b: &[i64], upper: u64, low: u64, prec: u32) -> ApproxReal {
    if b.is_empty() {
        return ApproxReal::from_int(1, prec);
    }
    let mut s = ApproxReal::zero(prec);
    for k in low + 1..upper {
        s = s.add(&nested(&b[1..], k, low, prec).mul(&power(k, b[0], prec)));
    }
    s
}

/// `sigma(∅)_n = C(2n, n)^-1` exactly.
pub fn sigma_empty(n: u64) -> BigRational {
    BigRational::new(BigInt::from(1), central_binomial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::{pi_bits, zeta_bits};

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_two_is_a_third_of_zeta_two() {
        let p = bits_for(40);
        let s = sigma_tail_bits(&c("2"), 0, p).mul_int(&BigInt::from(3));
        assert!(s.sub(&zeta_bits(2, p)).error_below(38));
        assert!(s.overlaps(&zeta_bits(2, p)));
    }

    #[test]
    fn sigma_twos() {
        let p = bits_for(40);
        for r in 1..=3u32 {
            let a = Composition::new(&vec![2; r as usize]).unwrap();
            let want = pi_bits(p)
                .powi(2 * r)
                .div_int(&num_traits::pow(BigInt::from(3), 2 * r as usize))
                .div_int(&(1..=2 * r).map(BigInt::from).product());
            assert!(sigma_tail_bits(&a, 0, p).overlaps(&want), "r={r}");
        }
    }

    #[test]
    fn oracle_agrees() {
        for (a, n) in [("3", 0u64), ("2,1", 2), ("3,1,2", 1)] {
            let x = sigma_tail(&c(a), n, 20).unwrap();
            let entries: Vec<i64> = c(a).entries().iter().map(|&e| i64::from(e)).collect();
            let y = sigma_oracle(&entries, n, 18).unwrap();
            assert!(x.truncate(y.prec()).overlaps(&y), "{a} {n}: {x:?} vs {y:?}");
        }
        let e = sigma_oracle(&[], 3, 15).unwrap();
        assert!(e.overlaps(&ApproxReal::from_rational(&sigma_empty(3), e.prec())));
    }
}
