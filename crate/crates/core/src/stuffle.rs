//! The stuffle product, the modified stuffle `⊞`, and the evaluation `phi_{p,q}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::compositions::{Composition, MAX_WEIGHT};
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Ring};

/// `a * b`: the sum over all stufflings of `a` and `b`.
pub fn stuffle(a: &Composition, b: &Composition) -> LinComb<Composition, BigInt> {
    assert!(a.weight() + b.weight() <= MAX_WEIGHT, "stuffle weight exceeds {MAX_WEIGHT}");
    let mut out = LinComb::zero();
    let mut prefix = Vec::with_capacity(a.depth() + b.depth());
    stuffle_into(a.entries(), b.entries(), &mut prefix, &mut out);
    out
}

fn stuffle_into(a: &[u8], b: &[u8], prefix: &mut Vec<u8>, out: &mut LinComb<Composition, BigInt>) {
    if a.is_empty() || b.is_empty() {
        let mut v = prefix.clone();
        v.extend_from_slice(a);
        v.extend_from_slice(b);
        out.add_term(Composition::from_raw(v), BigInt::from(1));
        return;
    }
    for (head, ra, rb) in [(a[0], &a[1..], b), (b[0], a, &b[1..]), (a[0] + b[0], &a[1..], &b[1..])] {
        prefix.push(head);
        stuffle_into(ra, rb, prefix, out);
        prefix.pop();
    }
}

/// Bilinear extension of [`stuffle`].
pub fn stuffle_lin<R: Ring>(x: &LinComb<Composition, R>, y: &LinComb<Composition, R>) -> LinComb<Composition, R> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca.mul(cb);
            for (t, m) in stuffle(a, b).iter() {
                out.add_term(t.clone(), c.mul(&R::from_bigint(m)));
            }
        }
    }
    out
}

/// `a ⊞ b`: add the first entries and stuffle the tails.
///
/// With the conventions `a ⊞ ∅ = ∅ ⊞ a = 0` for non-empty `a` and `∅ ⊞ ∅ = ∅`.
pub fn boxast(a: &Composition, b: &Composition) -> LinComb<Composition, BigInt> {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return LinComb::single(Composition::empty(), BigInt::from(1)),
        (true, false) | (false, true) => return LinComb::zero(),
        _ => {}
    }
    let head = a.entries()[0] + b.entries()[0];
    let ta = Composition::from_raw(a.entries()[1..].to_vec());
    let tb = Composition::from_raw(b.entries()[1..].to_vec());
    stuffle(&ta, &tb).map_basis(|t| {
        let mut v = Vec::with_capacity(t.depth() + 1);
        v.push(head);
        v.extend_from_slice(t.entries());
        Composition::from_raw(v)
    })
}

/// Bilinear extension of [`boxast`].
pub fn boxast_lin<R: Ring>(x: &LinComb<Composition, R>, y: &LinComb<Composition, R>) -> LinComb<Composition, R> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca.mul(cb);
            for (t, m) in boxast(a, b).iter() {
                out.add_term(t.clone(), c.mul(&R::from_bigint(m)));
            }
        }
    }
    out
}

/// `phi_{p,q}(a) = q^{-a_1} sum_{q > n_2 > ... > n_r > p} n_2^{-a_2} ... n_r^{-a_r}`.
pub fn phi_single(p: u64, q: u64, a: &Composition) -> Result<BigRational> {
    if p >= q {
        return Err(Error::Domain(format!("phi needs p < q, got p={p}, q={q}")));
    }
    if a.is_empty() {
        return Err(Error::Domain("phi is defined on non-empty compositions".into()));
    }
    let e = a.entries();
    let inv_pow = |n: u64, s: u8| BigRational::new(BigInt::from(1), BigInt::from(n).pow(s as u32));
    // level[m - p - 1] = sum over chains with n_i = m > n_{i+1} > ... > n_r > p.
    let span = (q - p - 1) as usize;
    let mut level: Option<Vec<BigRational>> = None;
    for i in (1..e.len()).rev() {
        let mut next = Vec::with_capacity(span);
        let mut below = <BigRational as Zero>::zero();
        for (idx, m) in ((p + 1)..q).enumerate() {
            let w = inv_pow(m, e[i]);
            next.push(match &level {
                None => w,
                Some(prev) => {
                    if idx > 0 {
                        below += &prev[idx - 1];
                    }
                    &below * w
                }
            });
        }
        level = Some(next);
    }
    let inner = match level {
        None => <BigRational as One>::one(),
        Some(v) => v.into_iter().fold(<BigRational as Zero>::zero(), |s, x| s + x),
    };
    Ok(inner * inv_pow(q, e[0]))
}

/// Linear extension of [`phi_single`].
pub fn phi(p: u64, q: u64, l: &LinComb<Composition, BigRational>) -> Result<BigRational> {
    let mut s = <BigRational as Zero>::zero();
    for (a, x) in l.iter() {
        s += phi_single(p, q, a)? * x;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }
    fn lc(terms: &[(&str, i64)]) -> LinComb<Composition, BigInt> {
        LinComb::from_terms(terms.iter().map(|(s, n)| (c(s), BigInt::from(*n))))
    }
    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn stuffle_example() {
        assert_eq!(
            stuffle(&c("3"), &c("4,1")),
            lc(&[("3,4,1", 1), ("4,3,1", 1), ("4,1,3", 1), ("7,1", 1), ("4,4", 1)])
        );
        assert_eq!(stuffle(&Composition::empty(), &c("2,5")), lc(&[("2,5", 1)]));
    }

    #[test]
    fn boxast_examples() {
        assert_eq!(
            boxast(&c("2,3"), &c("1,4,1")),
            lc(&[("3,3,4,1", 1), ("3,4,3,1", 1), ("3,4,1,3", 1), ("3,7,1", 1), ("3,4,4", 1)])
        );
        assert_eq!(boxast(&c("1"), &c("1")), lc(&[("2", 1)]));
        assert!(boxast(&c("2"), &Composition::empty()).is_zero());
        assert_eq!(boxast(&Composition::empty(), &Composition::empty()), lc(&[("()", 1)]));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_single(0, 2, &c("2,1")).unwrap(), q(1, 4));
        assert_eq!(phi_single(3, 7, &c("3")).unwrap(), q(1, 343));
        assert!(phi_single(2, 2, &c("2")).is_err());
        // 4^{-1} * sum_{4 > n2 > n3 > 0} 1/(n2 n3) = (1/4)(1/2 + 1/3 + 1/6) = 1/4
        assert_eq!(phi_single(0, 4, &c("1,1,1")).unwrap(), q(1, 4));
        // Chains 5 > n2 > n3 > 1: (3,2), (4,2), (4,3).
        let want = q(1, 25) * (q(1, 6) + q(1, 8) + q(1, 12));
        assert_eq!(phi_single(1, 5, &c("2,1,1")).unwrap(), want);
    }

    #[test]
    fn phi_square_of_boxast() {
        let sq = boxast(&c("2"), &c("2")).map_coeffs(|x| BigRational::from_integer(x.clone()));
        let v = phi_single(1, 3, &c("2")).unwrap();
        assert_eq!(phi(1, 3, &sq).unwrap(), &v * &v);
    }
}
