use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A binary fixed-point real `mant * 2^-prec` together with a bound
/// `err * 2^-prec` on its distance to the true value.
///
/// All arithmetic keeps `prec` fixed and rounds toward minus infinity,
/// adding one unit to the error bound for every rounding.
#[derive(Clone, PartialEq, Eq)]
pub struct ApproxReal {
    mant: BigInt,
    prec: u32,
    err: BigUint,
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

fn mag(x: &BigInt) -> BigUint {
    x.magnitude().clone()
}

impl ApproxReal {
    pub fn zero(prec: u32) -> Self {
        ApproxReal { mant: BigInt::from(0), prec, err: BigUint::zero() }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        ApproxReal { mant: n.into() << prec, prec, err: BigUint::zero() }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let num = q.numer() << prec;
        let (mant, r) = num.div_mod_floor(q.denom());
        let err = if r.is_zero() { BigUint::zero() } else { BigUint::one() };
        ApproxReal { mant, prec, err }
    }

    /// Build from raw parts: value `mant * 2^-prec`, error `err * 2^-prec`.
    pub fn from_parts(mant: BigInt, prec: u32, err: BigUint) -> Self {
        ApproxReal { mant, prec, err }
    }

    /// `1/d` for a positive integer `d`.
    pub fn recip_int(d: &BigInt, prec: u32) -> Self {
        Self::from_int(1, prec).div_int(d)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    /// Error bound in units of `2^-prec`.
    pub fn err_ulps(&self) -> &BigUint {
        &self.err
    }

    /// Widen the error bound by `ulps` units.
    pub fn widen(mut self, ulps: impl Into<BigUint>) -> Self {
        self.err += ulps.into();
        self
    }

    /// Error bound as an exact rational.
    pub fn abs_error(&self) -> BigRational {
        BigRational::new(BigInt::from(self.err.clone()), BigInt::from(1) << self.prec)
    }

    pub fn value(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::from(1) << self.prec)
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.prec.saturating_sub(60);
        let m = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(-((self.prec - shift) as i32))
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.prec, o.prec, "mixed precisions");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        ApproxReal { mant: &self.mant + &o.mant, prec: self.prec, err: &self.err + &o.err }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        ApproxReal { mant: &self.mant - &o.mant, prec: self.prec, err: &self.err + &o.err }
    }

    pub fn neg(&self) -> Self {
        ApproxReal { mant: -&self.mant, prec: self.prec, err: self.err.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let p = self.prec;
        let prod = &self.mant * &o.mant;
        let mant = prod >> p;
        let spread = mag(&self.mant) * &o.err + mag(&o.mant) * &self.err + &self.err * &o.err;
        let err = ceil_div(&spread, &(BigUint::one() << p)) + 1u32;
        ApproxReal { mant, prec: p, err }
    }

    /// Division; panics when the divisor's interval contains zero.
    pub fn div(&self, o: &Self) -> Self {
        self.check(o);
        let p = self.prec;
        let b = mag(&o.mant);
        assert!(b > o.err, "division by an interval containing zero");
        let mant = (&self.mant << p).div_floor(&o.mant);
        let num = (&self.err * &b + mag(&self.mant) * &o.err) << p;
        let den = (&b - &o.err) * &b;
        let err = ceil_div(&num, &den) + 1u32;
        ApproxReal { mant, prec: p, err }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        ApproxReal { mant: &self.mant * k, prec: self.prec, err: &self.err * mag(k) }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "division by zero");
        let mant = self.mant.div_floor(k);
        let err = ceil_div(&self.err, &mag(k)) + 1u32;
        ApproxReal { mant, prec: self.prec, err }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        self.mul_int(q.numer()).div_int(q.denom())
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = Self::from_int(1, self.prec);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn abs(&self) -> Self {
        ApproxReal { mant: self.mant.abs(), prec: self.prec, err: self.err.clone() }
    }

    /// Re-express at a lower precision, adding one unit for the truncation.
    pub fn truncate(&self, prec: u32) -> Self {
        assert!(prec <= self.prec, "truncate can only lower the precision");
        let s = self.prec - prec;
        let err = ceil_div(&self.err, &(BigUint::one() << s)) + 1u32;
        ApproxReal { mant: &self.mant >> s, prec, err }
    }

    /// True when the enclosing interval contains zero.
    pub fn contains_zero(&self) -> bool {
        mag(&self.mant) <= self.err
    }

    /// True when the error bound is below `10^-digits`.
    pub fn error_below(&self, digits: u32) -> bool {
        &self.err * num_traits::pow(BigUint::from(10u32), digits as usize) < (BigUint::one() << self.prec)
    }

    /// Upper bound on `|self|`, i.e. the far end of the interval.
    pub fn magnitude_bound(&self) -> BigRational {
        BigRational::new(BigInt::from(mag(&self.mant) + &self.err), BigInt::from(1) << self.prec)
    }

    /// Compare two intervals: `Some` only when they are disjoint.
    pub fn partial_compare(&self, o: &Self) -> Option<Ordering> {
        let d = self.sub(o);
        if d.contains_zero() {
            None
        } else {
            Some(d.mant.sign().cmp(&Sign::NoSign))
        }
    }

    /// Whether the two intervals overlap.
    pub fn overlaps(&self, o: &Self) -> bool {
        self.partial_compare(o).is_none()
    }

    /// Decimal rendering with `digits` digits after the point, truncated.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scaled = (&self.mant * num_traits::pow(BigInt::from(10), digits as usize)) >> self.prec;
        let neg = scaled.is_negative() || (scaled.is_zero() && self.mant.is_negative());
        let s = scaled.abs().to_string();
        let d = digits as usize;
        let s = if s.len() <= d { format!("{}{}", "0".repeat(d + 1 - s.len()), s) } else { s };
        let (int, frac) = s.split_at(s.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Error bound in scientific notation, rounded up.
    pub fn error_string(&self) -> String {
        if self.err.is_zero() {
            return "0".into();
        }
        // err * 2^-prec = m * 10^-e with 1 <= m < 10
        let e = self.abs_error();
        let mut exp = 0i32;
        let mut x = e.clone();
        let ten = BigRational::from_integer(BigInt::from(10));
        let one = <BigRational as One>::one();
        while x < one {
            x *= &ten;
            exp -= 1;
        }
        while x >= ten {
            x /= &ten;
            exp += 1;
        }
        let m = (x * BigInt::from(100)).ceil().to_integer();
        let m = m.to_u32().unwrap_or(1000);
        let (m, exp) = if m >= 1000 { (100, exp + 1) } else { (m, exp) };
        format!("{}.{:02}e{}", m / 100, m % 100, exp)
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((f64::from(self.prec) * std::f64::consts::LOG10_2) as u32).min(f.precision().unwrap_or(40) as u32);
        write!(f, "{} ± {}", self.to_decimal(digits), self.error_string())
    }
}

impl fmt::Debug for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ApproxReal({} ± {}, prec {})", self.to_decimal(30), self.error_string(), self.prec)
    }
}
