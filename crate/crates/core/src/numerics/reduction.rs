//! Rewriting `sigma(a)_n` for an integer tuple `a` as a combination of
//! `sigma(b)_n` over genuine compositions `b`, with polynomial coefficients
//! in `n`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bernoulli::bernoulli_poly_coeffs;
use super::{bits_for, check_digits, ApproxReal};
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, RatPoly, Ring};

/// Formal combination `sum f_b(n) b` with polynomial coefficients.
pub type PolyLinComb = LinComb<Composition, RatPoly>;

type Tuple = Vec<i64>;
type Partial = LinComb<Tuple, RatPoly>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn constant(q: BigRational) -> RatPoly {
    RatPoly::constant(q)
}

/// `lambda_{c,d} = 2 (-1)^{c-d} c! / ((d+1)! (c-d)!) (c+d+2)`.
pub fn lambda(c: u32, d: u32) -> BigRational {
    assert!(d < c);
    let f = |n: u32| -> BigInt { (1..=n).map(BigInt::from).product() };
    let sign = if (c - d) % 2 == 0 { 1 } else { -1 };
    BigRational::new(BigInt::from(2 * sign) * f(c) * BigInt::from(c + d + 2), f(d + 1) * f(c - d))
}

struct Reducer {
    memo: HashMap<Tuple, Partial>,
}

impl Reducer {
    fn reduce(&mut self, a: &[i64]) -> Partial {
        if let Some(v) = self.memo.get(a) {
            return v.clone();
        }
        let out = self.compute(a);
        self.memo.insert(a.to_vec(), out.clone());
        out
    }

    fn add_reduced(&mut self, out: &mut Partial, a: &[i64], f: &RatPoly) {
        let r = self.reduce(a);
        out.add_scaled(&r, f);
    }

    fn compute(&mut self, a: &[i64]) -> Partial {
        if a.iter().all(|&x| x > 0) {
            return LinComb::single(a.to_vec(), RatPoly::one());
        }
        let third = constant(BigRational::new(BigInt::from(1), BigInt::from(3)));
        let r = a.len();
        if r == 1 {
            // 3 sigma(-c) = n^c sigma(∅) - sum_d lambda_{c,d} sigma(-d) - 2(-1)^{c+1} sigma(1)
            let c = (-a[0]) as u32;
            let mut out = LinComb::single(Vec::new(), RatPoly::monomial(<BigRational as One>::one(), c as usize));
            for d in 0..c {
                self.add_reduced(&mut out, &[-i64::from(d)], &constant(-lambda(c, d)));
            }
            let s = if c % 2 == 1 { 2 } else { -2 };
            out.add_term(vec![1], constant(rat(-s)));
            return out.scale(&third);
        }
        if a[0] >= 1 {
            let i = (1..r).find(|&i| a[i] <= 0).expect("some entry is non-positive");
            return self.sum_out(a, i);
        }
        // leading entry -c <= 0:
        // 3 sigma(a) = sigma(a_2 - c, a_3, ..) - sum_d lambda_{c,d} sigma(-d, a_2, ..) - 2(-1)^{c+1} sigma(1, a_2, ..)
        let c = (-a[0]) as u32;
        let mut out = LinComb::zero();
        let mut merged = a[1..].to_vec();
        merged[0] -= i64::from(c);
        self.add_reduced(&mut out, &merged, &RatPoly::one());
        for d in 0..c {
            let mut t = a.to_vec();
            t[0] = -i64::from(d);
            self.add_reduced(&mut out, &t, &constant(-lambda(c, d)));
        }
        let mut t = a.to_vec();
        t[0] = 1;
        let s = if c % 2 == 1 { 2 } else { -2 };
        self.add_reduced(&mut out, &t, &constant(rat(-s)));
        out.scale(&third)
    }

    /// Sum out the index `n_i` carrying the entry `a_i = -c`, using
    /// `sum_{x=lo}^{hi-1} x^c = (B_{c+1}(hi) - B_{c+1}(lo)) / (c+1)`.
    fn sum_out(&mut self, a: &[i64], i: usize) -> Partial {
        let c = (-a[i]) as usize;
        let r = a.len();
        let scale = BigRational::new(BigInt::from(1), BigInt::from(c + 1));
        let b = bernoulli_poly_coeffs(c + 1);
        let mut out = LinComb::zero();
        // upper limit n_{i-1}: absorb n_{i-1}^j into the previous entry
        for (j, beta) in b.coeffs().iter().enumerate() {
            if Zero::is_zero(beta) {
                continue;
            }
            let mut t: Tuple = a.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &v)| v).collect();
            t[i - 1] -= j as i64;
            self.add_reduced(&mut out, &t, &constant(beta * &scale));
        }
        let shifted = b.shift(&<BigRational as One>::one());
        if i + 1 < r {
            // lower limit n_{i+1} + 1: absorb into the next entry
            for (j, gamma) in shifted.coeffs().iter().enumerate() {
                if Zero::is_zero(gamma) {
                    continue;
                }
                let mut t: Tuple = a.iter().enumerate().filter(|&(x, _)| x != i).map(|(_, &v)| v).collect();
                t[i] -= j as i64;
                self.add_reduced(&mut out, &t, &constant(-(gamma * &scale)));
            }
        } else {
            // lower limit n + 1: a polynomial in the tail index
            let t: Tuple = a[..r - 1].to_vec();
            let f = shifted.mul(&constant(-scale));
            self.add_reduced(&mut out, &t, &f);
        }
        out
    }
}

/// The unique combination `sum f_b(n) b` with `sigma(a)_n = sum f_b(n) sigma(b)_n`.
pub fn reduce_integer_entries(a: &[i64]) -> Result<PolyLinComb> {
    if a.is_empty() {
        return Err(Error::Domain("reduce_integer_entries needs at least one entry".into()));
    }
    if a.iter().any(|&x| x.abs() > 40) {
        return Err(Error::Domain(format!("entries of {a:?} are too large")));
    }
    let mut red = Reducer { memo: HashMap::new() };
    let partial = red.reduce(a);
    let mut out = LinComb::zero();
    for (t, f) in partial.iter() {
        let entries: Vec<u32> = t.iter().map(|&x| x as u32).collect();
        out.add_term(Composition::new(&entries)?, f.clone());
    }
    Ok(out)
}

/// `sum_b f_b(n) sigma(b)_n` at a given `n`.
pub fn eval_poly_lincomb(l: &PolyLinComb, n: u64, digits: u32) -> Result<ApproxReal> {
    check_digits(digits)?;
    let prec = bits_for(digits);
    let x = rat(n as i64);
    Ok(l.iter().fold(ApproxReal::zero(prec), |acc, (b, f)| {
        acc.add(&super::sigma::sigma_tail_bits(b, n, prec).mul_rational(&f.eval(&x)))
    }))
}
