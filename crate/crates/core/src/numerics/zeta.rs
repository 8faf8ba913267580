//! Symmetric double tails `zeta(a)_{n,n}` and the general double tail
//! `zeta(a)_{m,n}` by direct summation.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};


use super::{bits_for, check_digits, ApproxReal};
use crate::compositions::{Composition, DualityClass};
use crate::error::{Error, Result};
use crate::lincomb::alpha_parts;

/// Evaluates `zeta([a])_{m,m}` for all `0 <= m <= n_max` at a fixed
/// precision, memoised per class.
///
/// Uses `zeta(a)_{m-1,m-1} - zeta(a)_{m,m} = sum over the three parts p of
/// a of m^{|p|-|a|} zeta(p)_{m,m}` downward from a truncation point `M`,
/// where `zeta(a)_{M,M} <= 4^-M pi^2/6` bounds what is dropped.
pub struct ZetaTailEvaluator {
    prec: u32,
    top: u64,
    memo: RwLock<HashMap<DualityClass, Arc<Vec<ApproxReal>>>>,
}

impl ZetaTailEvaluator {
    pub fn new(digits: u32, n_max: u64) -> Result<Self> {
        check_digits(digits)?;
        Ok(Self::with_bits(bits_for(digits), n_max))
    }

    pub(crate) fn with_bits(prec: u32, n_max: u64) -> Self {
        ZetaTailEvaluator { prec, top: n_max + u64::from(prec / 2 + 2), memo: RwLock::new(HashMap::new()) }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// `zeta(c)_{n,n}`; panics if `n` exceeds the configured maximum.
    pub fn tail(&self, c: &DualityClass, n: u64) -> ApproxReal {
        assert!(n <= self.top - u64::from(self.prec / 2 + 2), "n beyond the evaluator range");
        self.values(c)[n as usize].clone()
    }

    fn values(&self, c: &DualityClass) -> Arc<Vec<ApproxReal>> {
        if let Some(v) = self.memo.read().expect("zeta memo poisoned").get(c) {
            return Arc::clone(v);
        }
        let v = Arc::new(self.compute(c));
        let mut w = self.memo.write().expect("zeta memo poisoned");
        Arc::clone(w.entry(c.clone()).or_insert(v))
    }

    fn compute(&self, c: &DualityClass) -> Vec<ApproxReal> {
        let p = self.prec;
        let top = self.top;
        let mut out = vec![ApproxReal::zero(p); top as usize + 1];
        if c.is_empty() {
            let mut binom = BigInt::from(1);
            for m in 0..=top {
                if m > 0 {
                    // C(2m, m) = C(2m-2, m-1) * 2(2m-1) / m
                    binom = binom * BigInt::from(2 * (2 * m - 1)) / BigInt::from(m);
                }
                out[m as usize] = ApproxReal::recip_int(&binom, p);
            }
            return out;
        }
        let a = c.representative();
        let k = a.weight();
        let parts: Vec<(Arc<Vec<ApproxReal>>, u32)> = alpha_parts(a)
            .expect("representatives are admissible")
            .iter()
            .map(|part| {
                let pc = DualityClass::of(part).expect("parts of admissible are admissible");
                (self.values(&pc), k - part.weight())
            })
            .collect();
        // zeta(a)_{M,M} < 2 * 4^-M, below two units at this precision
        let mut acc = ApproxReal::from_parts(BigInt::from(0), p, BigUint::from(2u32));
        out[top as usize] = acc.clone();
        for m in (1..=top).rev() {
            let mb = BigInt::from(m);
            for (vals, drop) in &parts {
                acc = acc.add(&vals[m as usize].div_int(&num_traits::pow(mb.clone(), *drop as usize)));
            }
            out[m as usize - 1] = acc.clone();
        }
        out
    }

    pub fn cached_classes(&self) -> usize {
        self.memo.read().expect("zeta memo poisoned").len()
    }
}

/// `zeta([a])_{n,n}` to `digits` digits.
pub fn zeta_sym_tail(c: &DualityClass, n: u64, digits: u32) -> Result<ApproxReal> {
    Ok(ZetaTailEvaluator::new(digits, n)?.tail(c, n))
}

/// The multiple zeta value `zeta(a)` of an admissible composition.
pub fn mzv(a: &Composition, digits: u32) -> Result<ApproxReal> {
    zeta_sym_tail(&DualityClass::of(a)?, 0, digits)
}

const DOUBLE_TAIL_MAX_N: u64 = 4_000_000;

/// `zeta(a)_{m,n} = sum_{n_1 > ... > n_r > n} C(n_1+m, m)^-1 n_1^-a_1 ... n_r^-a_r`
/// by direct summation of the truncated series, at most 15 digits.
///
/// All terms are positive, so the partial sum up to `N` is a lower bound;
/// the tail is at most `m! 2^c int_N^inf x^-s (1+ln x)^q dx` with
/// `s = a_1 + m`, `q` the number of inner entries equal to 1 and `c` the
/// number of inner entries `>= 2`.
pub fn zeta_double_tail_oracle(a: &Composition, m: u64, n: u64, digits: u32) -> Result<ApproxReal> {
    if digits > 15 {
        return Err(Error::Capability(format!("double-tail oracle supports at most 15 digits, asked for {digits}")));
    }
    if a.is_empty() || !a.is_admissible() {
        return Err(Error::Domain(format!("double tail needs a non-empty admissible composition, got ({a})")));
    }
    let prec = bits_for(digits);
    let e = a.entries();
    if e.len() == 1 && m == 0 {
        // plain zeta tail: zeta(a_1) minus the first n terms
        let mut x = super::constants::zeta_bits(u32::from(e[0]), prec);
        for j in 1..=n {
            x = x.sub(&ApproxReal::recip_int(&num_traits::pow(BigInt::from(j), e[0] as usize), prec));
        }
        return Ok(x);
    }
    let s = f64::from(e[0]) + m as f64;
    let q = e[1..].iter().filter(|&&x| x == 1).count() as i32;
    let c = e[1..].iter().filter(|&&x| x >= 2).count() as i32;
    let m_fact: f64 = (1..=m).map(|x| x as f64).product();
    let tail = |big_n: u64| {
        let nn = big_n as f64;
        let l = 1.0 + nn.ln();
        let mut sum = 0.0;
        let mut falling = 1.0;
        for j in 0..=q {
            sum += falling * l.powi(q - j) / (s - 1.0).powi(j + 1);
            falling *= f64::from(q - j);
        }
        m_fact * 2f64.powi(c) * nn.powf(1.0 - s) * sum * 1.01
    };
    let goal = 0.25 * 10f64.powi(-(digits as i32));
    let mut big_n = (n + 16).max(f64::from(q).exp().ceil() as u64);
    while tail(big_n) > goal {
        big_n *= 2;
        if big_n > DOUBLE_TAIL_MAX_N {
            return Err(Error::Capability(format!("double tail of ({a}) at m={m} converges too slowly")));
        }
    }

    // acc[i] = sum over n_1 > k_i > ... > k_r > n with the outer index below j
    let r = e.len();
    let mut acc: Vec<ApproxReal> = vec![ApproxReal::zero(prec); r + 1];
    acc[r] = ApproxReal::from_int(1, prec);
    let mut total = ApproxReal::zero(prec);
    let mut binom = num_integer::binomial(BigInt::from(n + 1 + m), BigInt::from(m));
    for j in n + 1..=big_n {
        let jb = BigInt::from(j);
        let w = acc[1].div_int(&(&binom * num_traits::pow(jb.clone(), e[0] as usize)));
        total = total.add(&w);
        for i in 1..r {
            let step = acc[i + 1].div_int(&num_traits::pow(jb.clone(), e[i] as usize));
            acc[i] = acc[i].add(&step);
        }
        // C(j+1+m, m) = C(j+m, m) (j+1+m) / (j+1)
        binom = binom * BigInt::from(j + 1 + m) / BigInt::from(j + 1);
    }
    let t = tail(big_n);
    let half = ApproxReal::from_parts(
        BigInt::from(((t / 2.0) * 2f64.powi(prec as i32)).ceil() as u128),
        prec,
        BigUint::from(((t / 2.0) * 2f64.powi(prec as i32)).ceil() as u128 + 1),
    );
    Ok(total.add(&half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::constants::pi_bits;
    use crate::numerics::sigma::sigma_tail_bits;

    fn k(s: &str) -> DualityClass {
        DualityClass::of(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn zeta_two_full_and_tails() {
        let ev = ZetaTailEvaluator::new(40, 5).unwrap();
        let p = ev.prec();
        let pi2 = pi_bits(p).powi(2).div_int(&BigInt::from(6));
        assert!(ev.tail(&k("2"), 0).overlaps(&pi2));
        for n in [0u64, 1, 5] {
            let s = sigma_tail_bits(&"2".parse().unwrap(), n, p).mul_int(&BigInt::from(3));
            assert!(ev.tail(&k("2"), n).overlaps(&s), "n={n}");
        }
        let z31 = pi_bits(p).powi(4).div_int(&BigInt::from(360));
        assert!(ev.tail(&k("3,1"), 0).overlaps(&z31));
    }

    #[test]
    fn oracle_matches_recursion() {
        let ev = ZetaTailEvaluator::new(20, 4).unwrap();
        for (a, n) in [("2", 2u64), ("3,1", 3), ("2,2,1", 2)] {
            let c: Composition = a.parse().unwrap();
            let x = ev.tail(&DualityClass::of(&c).unwrap(), n);
            let y = zeta_double_tail_oracle(&c, n, n, 12).unwrap();
            assert!(x.truncate(y.prec()).overlaps(&y), "{a} {n}: {x:?} {y:?}");
        }
        let z2 = zeta_double_tail_oracle(&"2".parse().unwrap(), 0, 0, 10).unwrap();
        assert!((z2.to_f64() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10);
    }
}
