//! JSON form of linear combinations:
//! `[{"coeff": <int | "p/q" | [c0, c1, ...]>, "basis": [entries] | {"class": [entries]}}, ...]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use super::{LinComb, Poly, Ring};
use crate::compositions::{Composition, DualityClass};
use crate::error::{Error, Result};

/// Basis elements with a weight and a JSON encoding.
pub trait Basis: Ord + Clone + std::fmt::Display {
    fn weight(&self) -> u32;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn entries_json(c: &Composition) -> Value {
    Value::Array(c.entries().iter().map(|&e| json!(e)).collect())
}

fn entries_from_json(v: &Value) -> Result<Composition> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected entry list, got {v}")))?;
    let entries = arr
        .iter()
        .map(|e| {
            e.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::Parse(format!("bad entry {e}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Composition::new(&entries)
}

impl Basis for Composition {
    fn weight(&self) -> u32 {
        Composition::weight(self)
    }
    fn to_json(&self) -> Value {
        entries_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        entries_from_json(v)
    }
}

impl Basis for DualityClass {
    fn weight(&self) -> u32 {
        DualityClass::weight(self)
    }
    fn to_json(&self) -> Value {
        json!({ "class": entries_json(self.representative()) })
    }
    fn from_json(v: &Value) -> Result<Self> {
        let inner = v
            .get("class")
            .ok_or_else(|| Error::Parse(format!("expected {{\"class\": ...}}, got {v}")))?;
        DualityClass::of(&entries_from_json(inner)?)
    }
}

/// Coefficients with a JSON encoding.
pub trait JsonCoeff: Ring {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

pub(crate) fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    if let Some(x) = v.as_i64() {
        return Ok(BigInt::from(x));
    }
    if let Some(s) = v.as_str() {
        return s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")));
    }
    Err(Error::Parse(format!("expected integer, got {v}")))
}

impl JsonCoeff for BigInt {
    fn to_json(&self) -> Value {
        int_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        int_from_json(v)
    }
}

impl JsonCoeff for BigRational {
    fn to_json(&self) -> Value {
        if self.denom().is_one() {
            json!(self.numer().to_string())
        } else {
            json!(format!("{}/{}", self.numer(), self.denom()))
        }
    }
    fn from_json(v: &Value) -> Result<Self> {
        if let Some(x) = v.as_i64() {
            return Ok(BigRational::from_integer(BigInt::from(x)));
        }
        let s = v.as_str().ok_or_else(|| Error::Parse(format!("expected rational, got {v}")))?;
        parse_rational(s)
    }
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl<C: JsonCoeff> JsonCoeff for Poly<C> {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(|c| c.to_json()).collect())
    }
    fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected coefficient list, got {v}")))?;
        Ok(Poly::new(arr.iter().map(C::from_json).collect::<Result<Vec<_>>>()?))
    }
}

impl<B: Basis, R: JsonCoeff> LinComb<B, R> {
    /// Terms in descending basis order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .rev()
                .map(|(b, c)| json!({ "coeff": c.to_json(), "basis": b.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected a JSON array of terms".into()))?;
        let mut out = LinComb::zero();
        for t in arr {
            let c = t.get("coeff").ok_or_else(|| Error::Parse(format!("missing coeff in {t}")))?;
            let b = t.get("basis").ok_or_else(|| Error::Parse(format!("missing basis in {t}")))?;
            out.add_term(B::from_json(b)?, R::from_json(c)?);
        }
        Ok(out)
    }
}
