//! Exact coefficient vectors for sums with all entries 2 except one entry 1
//! or 3, the matching zeta evaluation, the weight-5 tables derived from them,
//! and the Bernoulli-number coefficient of `zeta(k)` for the `t = -1/2`
//! specialisation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::bernoulli::bernoulli_number;
use super::constants::{l_chi3_bits, pi_bits, sqrt3_bits, zeta_bits};
use super::{bits_for, check_digits, ApproxReal};
use crate::compositions::{Composition, DualityClass};
use crate::delta::DeltaEngine;
use crate::error::{Error, Result};
use crate::lincomb::json::parse_rational;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binom(n: u32, k: u32) -> BigRational {
    if k > n {
        return <BigRational as Zero>::zero();
    }
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn fact(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn pow_q(base: i64, e: i32) -> BigRational {
    let b = rat(base);
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

fn sign(r: u32) -> BigRational {
    if r % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `(1/3)^e / e!`, the factor coming from `(pi/3)^e / e!`.
fn third_power(e: u32) -> BigRational {
    pow_q(3, -(e as i32)) / BigRational::from_integer(fact(e))
}

/// Rational coordinates, in odd weight `k`, over
/// `pi^{k-1-2r} zeta(2r+1)` and `pi^{k-2r} sqrt3 L(2r, chi)` for
/// `1 <= r <= (k-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantBasisVector {
    pub weight: u32,
    pub zeta_odd: BTreeMap<u32, BigRational>,
    pub l_even: BTreeMap<u32, BigRational>,
}

impl ConstantBasisVector {
    pub fn new(weight: u32) -> Self {
        ConstantBasisVector { weight, zeta_odd: BTreeMap::new(), l_even: BTreeMap::new() }
    }

    fn bump(map: &mut BTreeMap<u32, BigRational>, r: u32, x: BigRational) {
        let e = map.entry(r).or_insert_with(<BigRational as Zero>::zero);
        *e += x;
        if e.is_zero() {
            map.remove(&r);
        }
    }

    pub fn add_zeta(&mut self, r: u32, x: BigRational) {
        Self::bump(&mut self.zeta_odd, r, x);
    }

    pub fn add_l(&mut self, r: u32, x: BigRational) {
        Self::bump(&mut self.l_even, r, x);
    }

    pub fn zeta(&self, r: u32) -> BigRational {
        self.zeta_odd.get(&r).cloned().unwrap_or_else(<BigRational as Zero>::zero)
    }

    pub fn l(&self, r: u32) -> BigRational {
        self.l_even.get(&r).cloned().unwrap_or_else(<BigRational as Zero>::zero)
    }

    /// Dense coordinates: `L` terms for `r = 1..h`, then `zeta` terms.
    pub fn dense(&self) -> Vec<BigRational> {
        let h = (self.weight - 1) / 2;
        (1..=h).map(|r| self.l(r)).chain((1..=h).map(|r| self.zeta(r))).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::new(self.weight);
        for (&r, x) in &self.zeta_odd {
            out.add_zeta(r, x * c);
        }
        for (&r, x) in &self.l_even {
            out.add_l(r, x * c);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.weight, o.weight);
        let mut out = self.clone();
        for (&r, x) in &o.zeta_odd {
            out.add_zeta(r, x.clone());
        }
        for (&r, x) in &o.l_even {
            out.add_l(r, x.clone());
        }
        out
    }

    pub(crate) fn contract_bits(&self, prec: u32) -> ApproxReal {
        let pi = pi_bits(prec);
        let s3 = sqrt3_bits(prec);
        let k = self.weight;
        let mut acc = ApproxReal::zero(prec);
        for (&r, x) in &self.zeta_odd {
            let t = pi.powi(k - 1 - 2 * r).mul(&zeta_bits(2 * r + 1, prec));
            acc = acc.add(&t.mul_rational(x));
        }
        for (&r, x) in &self.l_even {
            let t = pi.powi(k - 2 * r).mul(&s3).mul(&l_chi3_bits(2 * r, prec));
            acc = acc.add(&t.mul_rational(x));
        }
        acc
    }

    /// Numerical value of the combination.
    pub fn contract(&self, digits: u32) -> Result<ApproxReal> {
        check_digits(digits)?;
        Ok(self.contract_bits(bits_for(digits)))
    }

    /// `{"weight": k, "zeta_odd": {"r": "p/q"}, "L_even": {"r": "p/q"}}`.
    pub fn to_json(&self) -> Value {
        let side = |m: &BTreeMap<u32, BigRational>| -> Value {
            Value::Object(m.iter().map(|(r, x)| (r.to_string(), Value::String(x.to_string()))).collect::<Map<_, _>>())
        };
        json!({ "weight": self.weight, "zeta_odd": side(&self.zeta_odd), "L_even": side(&self.l_even) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let weight = v
            .get("weight")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("constant vector needs a weight".into()))? as u32;
        let mut out = Self::new(weight);
        for (key, target) in [("zeta_odd", 0), ("L_even", 1)] {
            if let Some(obj) = v.get(key).and_then(Value::as_object) {
                for (r, x) in obj {
                    let r: u32 = r.parse().map_err(|_| Error::Parse(format!("bad index {r:?}")))?;
                    let x = parse_rational(x.as_str().ok_or_else(|| Error::Parse("coefficient must be a string".into()))?)?;
                    if target == 0 {
                        out.add_zeta(r, x);
                    } else {
                        out.add_l(r, x);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `sigma(2^a, 1, 2^b)` for `a >= 1`, weight `k = 2a + 2b + 1`.
pub fn th7_coeffs(a: u32, b: u32) -> Result<ConstantBasisVector> {
    if a < 1 {
        return Err(Error::Domain("th7_coeffs needs a >= 1".into()));
    }
    let k = 2 * a + 2 * b + 1;
    let mut v = ConstantBasisVector::new(k);
    for r in a..=a + b {
        let z = binom(2 * r, 2 * a - 1) * third_power(k - 1 - 2 * r) * sign(r) * (rat(1) - pow_q(3, -2 * r as i32));
        v.add_zeta(r, z);
        let l = binom(2 * r - 1, 2 * a - 1) * third_power(k - 2 * r) * sign(r);
        v.add_l(r, l);
    }
    for r in b + 1..=a + b {
        let z = binom(2 * r, 2 * b + 1) * third_power(k - 1 - 2 * r) * sign(r) * rat(2) * (rat(1) - pow_q(2, -2 * r as i32));
        v.add_zeta(r, -z);
    }
    Ok(v)
}

/// `sigma(2^a, 3, 2^b)`, weight `k = 2a + 2b + 3`.
pub fn th8_coeffs(a: u32, b: u32) -> Result<ConstantBasisVector> {
    let k = 2 * a + 2 * b + 3;
    let mut v = ConstantBasisVector::new(k);
    for r in a.max(1)..=a + b + 1 {
        let z = binom(2 * r, 2 * a)
            * third_power(k - 1 - 2 * r)
            * sign(r)
            * (rat(1) - pow_q(2, -2 * r as i32))
            * (rat(1) - pow_q(3, -2 * r as i32));
        v.add_zeta(r, -z);
    }
    for r in a + 1..=a + b + 1 {
        let l = binom(2 * r - 1, 2 * a) * third_power(k - 2 * r) * sign(r) * (rat(1) + pow_q(2, 1 - 2 * r as i32));
        v.add_l(r, -l);
    }
    for r in b + 1..=a + b + 1 {
        let z = binom(2 * r, 2 * b + 2) * third_power(k - 1 - 2 * r) * rat(2) * sign(r);
        v.add_zeta(r, z);
    }
    Ok(v)
}

/// `zeta(2^a, 3, 2^b)` over `pi^{k-1-2r} zeta(2r+1)`, weight `k = 2a + 2b + 3`.
pub fn zagier_coeffs(a: u32, b: u32) -> Result<ConstantBasisVector> {
    let k = 2 * a + 2 * b + 3;
    let mut v = ConstantBasisVector::new(k);
    for r in b + 1..=a + b + 1 {
        let z = rat(2) * sign(r) * binom(2 * r, 2 * b + 2) / BigRational::from_integer(fact(k - 2 * r));
        v.add_zeta(r, z);
    }
    for r in a + 1..=a + b + 1 {
        let z = rat(2) * sign(r) * binom(2 * r, 2 * a + 1) / BigRational::from_integer(fact(k - 2 * r))
            * (rat(1) - pow_q(2, -2 * r as i32));
        v.add_zeta(r, -z);
    }
    Ok(v)
}

/// `(2^a, x, 2^b)`.
pub fn twos_around(a: u32, x: u32, b: u32) -> Composition {
    let mut e = vec![2u32; a as usize];
    e.push(x);
    e.extend(std::iter::repeat(2).take(b as usize));
    Composition::new(&e).expect("small entries")
}

fn weight5_vectors() -> [(Composition, ConstantBasisVector); 4] {
    [
        (twos_around(0, 3, 1), th8_coeffs(0, 1).expect("valid")),
        (twos_around(1, 3, 0), th8_coeffs(1, 0).expect("valid")),
        (twos_around(2, 1, 0), th7_coeffs(2, 0).expect("valid")),
        (twos_around(1, 1, 1), th7_coeffs(1, 1).expect("valid")),
    ]
}

/// Rows `sigma(3,2), sigma(2,3), sigma(2,2,1), sigma(2,1,2)` over
/// `pi^3 sqrt3 L(2), pi sqrt3 L(4), pi^2 zeta(3), zeta(5)`.
pub fn eu127_matrix() -> Vec<Vec<BigRational>> {
    weight5_vectors().iter().map(|(_, v)| v.dense()).collect()
}

/// Rows `zeta(5), zeta(4,1), zeta(3,2), zeta(2,3)` over `pi^2 zeta(3), zeta(5)`.
///
/// `zeta(3,2)` and `zeta(2,3)` come from [`zagier_coeffs`], and `zeta(4,1)`
/// from `zeta(5) - zeta(4,1) = zeta(3,2) + zeta(2,3)`.
pub fn eu128_matrix() -> Vec<Vec<BigRational>> {
    let row = |v: &ConstantBasisVector| vec![v.zeta(1), v.zeta(2)];
    let z5 = vec![rat(0), rat(1)];
    let z32 = row(&zagier_coeffs(0, 1).expect("valid"));
    let z23 = row(&zagier_coeffs(1, 0).expect("valid"));
    let z41: Vec<BigRational> = (0..2).map(|i| &z5[i] - &z32[i] - &z23[i]).collect();
    vec![z5, z41, z32, z23]
}

/// Solve `y^T m = w^T` over `Q`, if `w` lies in the row space of `m`.
pub(crate) fn row_combination(m: &[Vec<BigRational>], w: &[BigRational]) -> Option<Vec<BigRational>> {
    // Gauss-Jordan on [m^T | w]
    let rows = m.first().map_or(0, Vec::len);
    let cols = m.len();
    let mut a: Vec<Vec<BigRational>> =
        (0..rows).map(|i| (0..cols).map(|j| m[j][i].clone()).chain([w[i].clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let piv = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut y = vec![<BigRational as Zero>::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        y[c] = a[i][cols].clone();
    }
    Some(y)
}

/// Rows `sigma(5), sigma(4,1), 2 sigma(3,1,1) + 3 sigma(2,1,1,1)` over
/// `pi sqrt3 L(4), pi^2 zeta(3), zeta(5)`.
///
/// Derived from `zeta(c) = sigma(delta(c))` on the four weight-5 classes,
/// with the four sums of [`eu127_matrix`] substituted and the table of
/// [`eu128_matrix`] on the left. Fails if a requested row is not determined
/// by these equations or if an `L(2)` term survives.
pub fn eu129_matrix() -> Result<Vec<Vec<BigRational>>> {
    let known: Vec<(Composition, ConstantBasisVector)> = weight5_vectors().to_vec();
    let unknown: Vec<Composition> = ["5", "4,1", "3,1,1", "2,1,1,1"].iter().map(|s| s.parse().expect("literal")).collect();
    let zeta = eu128_matrix();
    let lhs_names = ["5", "4,1", "3,2", "2,3"];
    let engine = DeltaEngine::global();

    // each equation: sum_u e_u sigma(u) = zeta row - sum_known (...)
    let mut e_rows = Vec::new();
    let mut rhs_rows = Vec::new();
    for (name, z) in lhs_names.iter().zip(&zeta) {
        let c = DualityClass::of(&name.parse()?)?;
        let d = engine.class(&c);
        let mut rhs = ConstantBasisVector::new(5);
        rhs.add_zeta(1, z[0].clone());
        rhs.add_zeta(2, z[1].clone());
        let mut row = vec![<BigRational as Zero>::zero(); unknown.len()];
        for (b, x) in d.iter() {
            let x = BigRational::from_integer(x.clone());
            if let Some(i) = unknown.iter().position(|u| u == b) {
                row[i] += x;
            } else if let Some((_, v)) = known.iter().find(|(kb, _)| kb == b) {
                rhs = rhs.add(&v.scale(&-x));
            } else {
                return Err(Error::Domain(format!("unexpected term ({b}) in delta([{name}])")));
            }
        }
        e_rows.push(row);
        rhs_rows.push(rhs);
    }

    let targets = [vec![rat(1), rat(0), rat(0), rat(0)], vec![rat(0), rat(1), rat(0), rat(0)], vec![rat(0), rat(0), rat(2), rat(3)]];
    let mut out = Vec::new();
    for w in &targets {
        let y = row_combination(&e_rows, w).ok_or_else(|| Error::Domain("row not determined by the equations".into()))?;
        let v = y.iter().zip(&rhs_rows).fold(ConstantBasisVector::new(5), |acc, (c, r)| acc.add(&r.scale(c)));
        if !v.l(1).is_zero() {
            return Err(Error::Domain("an L(2) term survives".into()));
        }
        out.push(vec![v.l(2), v.zeta(1), v.zeta(2)]);
    }
    Ok(out)
}

/// Coefficient `c_k` of `zeta(k)` in
/// `sum_{a in A_k} (-1)^depth (-1/2)^height zeta(a)`, for even `k >= 2`:
/// `(-1)^{k/2-1} 2^{1-k} k! / (3 B_k) sum_{p+q=k} (2^p-2)(-1)^{p/2-1} B_p 2^{-q/2} / (p! (q+1)!)`.
pub fn bbb_coefficient(k: u32) -> Result<BigRational> {
    if k % 2 == 1 || k < 2 {
        return Err(Error::Domain(format!("bbb_coefficient needs even k >= 2, got {k}")));
    }
    let mut s = <BigRational as Zero>::zero();
    for p in (0..=k).step_by(2) {
        let q = k - p;
        let sp = if p == 0 { rat(-1) } else { sign(p / 2 - 1) };
        s += (pow_q(2, p as i32) - rat(2)) * sp * bernoulli_number(p as usize) * pow_q(2, -((q / 2) as i32))
            / BigRational::from_integer(fact(p) * fact(q + 1));
    }
    let lead = sign(k / 2 - 1) * pow_q(2, 1 - k as i32) * BigRational::from_integer(fact(k))
        / (rat(3) * bernoulli_number(k as usize));
    Ok(lead * s)
}
