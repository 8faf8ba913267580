//! `pi`, `sqrt 3`, `zeta(s)` and `L(s, chi_3)` as [`ApproxReal`]s.
//!
//! `pi` comes from Machin's formula, odd zeta values and `L(s, chi_3)` from
//! Euler-Maclaurin summation of Hurwitz zeta values, and even zeta values
//! from Bernoulli numbers.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bernoulli::bernoulli_number;
use super::{bits_for, check_digits, ApproxReal};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Pi,
    Sqrt3,
    Zeta(u32),
    L(u32),
}

fn cached(key: Key, prec: u32, f: impl FnOnce() -> ApproxReal) -> ApproxReal {
    static CACHE: OnceLock<Mutex<HashMap<(Key, u32), ApproxReal>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(x) = cache.lock().expect("constant cache poisoned").get(&(key, prec)) {
        return x.clone();
    }
    let x = f();
    cache.lock().expect("constant cache poisoned").insert((key, prec), x.clone());
    x
}

/// `atan(1/x)` by its alternating series.
fn atan_recip(x: u64, prec: u32) -> ApproxReal {
    let x2 = BigInt::from(x) * x;
    // floor(floor(a/b)/c) = floor(a/(bc)), so each power is an exact floor
    let mut power = (BigInt::from(1) << prec) / x;
    let mut sum = BigInt::from(0);
    let mut terms = 0u32;
    let mut k = 0u64;
    while !power.is_zero() {
        let t = &power / (2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        terms += 1;
        power /= &x2;
        k += 1;
    }
    // one unit per term from the two floors, one for the omitted tail
    ApproxReal::from_parts(sum, prec, BigUint::from(2 * terms + 1))
}

pub(crate) fn pi_bits(prec: u32) -> ApproxReal {
    cached(Key::Pi, prec, || {
        let a = atan_recip(5, prec).mul_int(&BigInt::from(16));
        let b = atan_recip(239, prec).mul_int(&BigInt::from(4));
        a.sub(&b)
    })
}

pub(crate) fn sqrt3_bits(prec: u32) -> ApproxReal {
    cached(Key::Sqrt3, prec, || {
        let m = (BigInt::from(3) << (2 * prec)).sqrt();
        ApproxReal::from_parts(m, prec, BigUint::one())
    })
}

/// `zeta(2m) / pi^{2m}` as an exact rational.
pub fn zeta_even_ratio(s: u32) -> BigRational {
    assert!(s >= 2 && s % 2 == 0);
    let b = bernoulli_number(s as usize);
    let fact: BigInt = (1..=s).map(BigInt::from).product();
    let sign = if (s / 2) % 2 == 1 { 1 } else { -1 };
    b * BigRational::new(BigInt::from(sign) * (BigInt::from(1) << (s - 1)), fact)
}

/// Hurwitz `zeta(s, u/v)` for `s >= 2`, `0 < u <= v`.
fn hurwitz_bits(s: u32, u: u64, v: u64, prec: u32) -> ApproxReal {
    let (bu, bv) = (BigInt::from(u), BigInt::from(v));
    let one_p = BigInt::from(1) << prec;
    // Remainder terms decay like (s+2j)^{2j} / (2 pi y)^{2j}: take y near prec/8.
    let n_terms = u64::from(prec / 8 + 10);
    let vs = num_traits::pow(bv.clone(), s as usize);
    let mut mant = BigInt::from(0);
    for n in 0..n_terms {
        let d = num_traits::pow(BigInt::from(n) * &bv + &bu, s as usize);
        mant += (&vs * &one_p) / d;
    }
    let mut err = BigUint::from(n_terms);

    // y = N + u/v as an exact rational
    let y = BigRational::new(BigInt::from(n_terms) * &bv + &bu, bv.clone());
    let y_pow = |e: u32| -> BigRational { num_traits::pow(y.clone(), e as usize).recip() };
    let mut tail = y_pow(s - 1) / BigRational::from_integer(BigInt::from(s - 1));
    tail += y_pow(s) / BigRational::from_integer(BigInt::from(2));
    let bound = BigRational::new(BigInt::from(1), BigInt::from(1) << (prec + 8));
    let mut rising = BigRational::from_integer(BigInt::from(s)); // (s)_{2j-1}
    let mut fact = BigInt::from(2); // (2j)!
    let mut j = 1u32;
    loop {
        let term = bernoulli_number(2 * j as usize) / BigRational::from_integer(fact.clone())
            * &rising
            * y_pow(s + 2 * j - 1);
        if term.abs() < bound {
            break;
        }
        tail += term;
        rising *= BigRational::from_integer(BigInt::from((s + 2 * j - 1) * (s + 2 * j)));
        fact *= BigInt::from((2 * j + 1) * (2 * j + 2));
        j += 1;
        assert!(j < prec, "Euler-Maclaurin tail failed to converge");
    }
    let t = ApproxReal::from_rational(&tail, prec);
    mant += t.mantissa();
    err += t.err_ulps();
    // the first omitted term bounds the remainder for real s > 1; it is
    // below 2^-8 units, so one extra unit covers it twice over
    err += 1u32;
    ApproxReal::from_parts(mant, prec, err)
}

pub(crate) fn zeta_bits(s: u32, prec: u32) -> ApproxReal {
    assert!(s >= 2, "zeta(s) needs s >= 2");
    cached(Key::Zeta(s), prec, || {
        if s % 2 == 0 {
            pi_bits(prec).powi(s).mul_rational(&zeta_even_ratio(s))
        } else {
            hurwitz_bits(s, 1, 1, prec)
        }
    })
}

/// `L(s, chi_3) = 3^-s (zeta(s, 1/3) - zeta(s, 2/3))`.
pub(crate) fn l_chi3_bits(s: u32, prec: u32) -> ApproxReal {
    assert!(s >= 2, "L(s, chi_3) needs s >= 2");
    cached(Key::L(s), prec, || {
        let d = hurwitz_bits(s, 1, 3, prec).sub(&hurwitz_bits(s, 2, 3, prec));
        d.div_int(&num_traits::pow(BigInt::from(3), s as usize))
    })
}

pub fn pi(digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    Ok(pi_bits(bits_for(digits)))
}

pub fn sqrt3(digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    Ok(sqrt3_bits(bits_for(digits)))
}

/// `zeta(s)` for integer `s >= 2`.
pub fn zeta_int(s: u32, digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    if s < 2 {
        return Err(Error::Domain(format!("zeta({s}) diverges")));
    }
    Ok(zeta_bits(s, bits_for(digits)))
}

/// `L(s, chi)` for the non-principal character modulo 3 and integer `s >= 2`.
pub fn l_chi3(s: u32, digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    if s < 2 {
        return Err(Error::Domain(format!("L({s}, chi_3) is only provided for s >= 2")));
    }
    Ok(l_chi3_bits(s, bits_for(digits)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const ZETA3_40: &str = "1.2020569031595942853997381615114499907649";
    const ZETA5_30: &str = "1.036927755143369926331365486457";
    // sum (3n+1)^-2 - (3n+2)^-2
    const L2_30: &str = "0.781302412896486296867187429624";

    #[test]
    fn pi_digits() {
        let p = pi(50).unwrap();
        assert_eq!(&p.to_decimal(48), &PI_50[..50]);
        assert!(p.error_below(50));
    }

    #[test]
    fn zeta_values() {
        assert_eq!(&zeta_int(3, 40).unwrap().to_decimal(38), &ZETA3_40[..40]);
        assert_eq!(&zeta_int(5, 30).unwrap().to_decimal(28), &ZETA5_30[..30]);
        let z2 = zeta_int(2, 40).unwrap();
        let pi2 = pi(40).unwrap().powi(2).div_int(&BigInt::from(6));
        assert!(z2.overlaps(&pi2));
        assert_eq!(zeta_even_ratio(4), BigRational::new(1.into(), 90.into()));
    }

    #[test]
    fn l_value() {
        let l = l_chi3(2, 30).unwrap();
        assert_eq!(&l.to_decimal(28), &L2_30[..30]);
    }

    #[test]
    fn odd_zeta_matches_direct_series() {
        // zeta(3) - sum_{n<=200} n^-3 lies in [1/(2*201^2), 1/(2*200^2)]
        let p = bits_for(20);
        let z = zeta_bits(3, p);
        let mut partial = ApproxReal::zero(p);
        for n in 1..=200u32 {
            partial = partial.add(&ApproxReal::recip_int(&BigInt::from(n).pow(3), p));
        }
        let t = z.sub(&partial).to_f64();
        assert!(t > 1.0 / (2.0 * 201f64.powi(2)) && t < 1.0 / (2.0 * 200f64.powi(2)));
    }

    #[test]
    fn digit_cap() {
        assert!(matches!(pi(10_000), Err(Error::Config(_))));
    }
}
