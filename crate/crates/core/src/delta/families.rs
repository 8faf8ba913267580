//! Closed-form families `delta(lhs) = rhs`.
//!
//! Each builder writes down both sides directly from the closed formula; the
//! check [`FamilyPair::holds`] applies the inductive `delta` to the left side
//! and compares. Nothing here calls `delta` while building a pair.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;

use super::{hook, DeltaEngine};
use crate::compositions::{admissible, all_compositions, even_entries, Composition, DualityClass};
use crate::error::{Error, Result};
use crate::lincomb::{class_projection, IntPoly, LinComb, Poly, Ring};

/// Left side on classes and right side on compositions.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyPair<R: Ring> {
    pub lhs: LinComb<DualityClass, R>,
    pub rhs: LinComb<Composition, R>,
}

impl<R: Ring> FamilyPair<R> {
    /// `delta(lhs) - rhs`, zero exactly when the identity holds.
    pub fn defect_with(&self, engine: &DeltaEngine) -> LinComb<Composition, R> {
        engine.apply(&self.lhs).sub(&self.rhs)
    }

    pub fn holds(&self) -> bool {
        self.defect_with(DeltaEngine::global()).is_zero()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> FamilyPair<S> {
        FamilyPair { lhs: self.lhs.map_coeffs(&f), rhs: self.rhs.map_coeffs(&f) }
    }
}

/// Named closed families with their parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFamily {
    /// `delta(sum (-1)^depth [a]) = sum_{even} (-3)^depth b`, `k` even.
    EvenAlternating { k: u32 },
    /// `delta([2,...,2])` with `m` twos.
    AllTwos { m: u32 },
    /// `delta(sum_b (-1)^b [b,1,...,1])`, `k` even.
    Leshchiner { k: u32 },
    /// `delta([a,...,a])` with `m` copies, `a >= 3`.
    ARepeated { a: u32, m: u32 },
    /// `delta([u+1, 1^{v-1}])` for `1 <= u <= v`.
    HeightOne { u: u32, v: u32 },
    /// `delta([2, 1^{u-2}, v])` for `u, v >= 2`.
    TwoOnesV { u: u32, v: u32 },
    /// The polynomial family in `t`, `k` even.
    TFamily { k: u32 },
    /// `delta(sum (-1)^depth 4^{height-1} [a]) = (-1)^r 3^{2r-1} (2^r)`.
    SelfDualT4 { r: u32 },
}

impl ClosedFamily {
    pub fn name(&self) -> &'static str {
        match self {
            ClosedFamily::EvenAlternating { .. } => "even_alternating",
            ClosedFamily::AllTwos { .. } => "all_twos",
            ClosedFamily::Leshchiner { .. } => "leshchiner",
            ClosedFamily::ARepeated { .. } => "a_repeated",
            ClosedFamily::HeightOne { .. } => "height_one",
            ClosedFamily::TwoOnesV { .. } => "two_ones_v",
            ClosedFamily::TFamily { .. } => "t_family",
            ClosedFamily::SelfDualT4 { .. } => "selfdual_t4",
        }
    }

    /// Parse a family name followed by its integer parameters.
    pub fn from_parts(name: &str, params: &[u32]) -> Result<Self> {
        let need = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Parse(format!("{name} takes {n} parameter(s), got {}", params.len())))
            }
        };
        let fam = match name.replace('-', "_").as_str() {
            "even_alternating" => {
                need(1)?;
                ClosedFamily::EvenAlternating { k: params[0] }
            }
            "all_twos" => {
                need(1)?;
                ClosedFamily::AllTwos { m: params[0] }
            }
            "leshchiner" => {
                need(1)?;
                ClosedFamily::Leshchiner { k: params[0] }
            }
            "a_repeated" => {
                need(2)?;
                ClosedFamily::ARepeated { a: params[0], m: params[1] }
            }
            "height_one" => {
                need(2)?;
                ClosedFamily::HeightOne { u: params[0], v: params[1] }
            }
            "two_ones_v" => {
                need(2)?;
                ClosedFamily::TwoOnesV { u: params[0], v: params[1] }
            }
            "t_family" => {
                need(1)?;
                ClosedFamily::TFamily { k: params[0] }
            }
            "selfdual_t4" => {
                need(1)?;
                ClosedFamily::SelfDualT4 { r: params[0] }
            }
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        };
        Ok(fam)
    }

    /// The pair over `Z[t]`; integer families come back as constants.
    pub fn poly_pair(&self) -> Result<FamilyPair<IntPoly>> {
        match *self {
            ClosedFamily::TFamily { k } => t_family(k),
            _ => Ok(self.integer_pair()?.map(|c| Poly::constant(c.clone()))),
        }
    }

    /// The pair over `Z`; the `t` family has no integer form and is rejected.
    pub fn integer_pair(&self) -> Result<FamilyPair<BigInt>> {
        match *self {
            ClosedFamily::EvenAlternating { k } => even_alternating(k),
            ClosedFamily::AllTwos { m } => all_twos(m),
            ClosedFamily::Leshchiner { k } => leshchiner(k),
            ClosedFamily::ARepeated { a, m } => a_repeated(a, m),
            ClosedFamily::HeightOne { u, v } => height_one(u, v),
            ClosedFamily::TwoOnesV { u, v } => two_ones_v(u, v),
            ClosedFamily::SelfDualT4 { r } => selfdual_t4(r),
            ClosedFamily::TFamily { .. } => {
                Err(Error::Domain("t_family has polynomial coefficients; use poly_pair".into()))
            }
        }
    }

    pub fn holds(&self) -> Result<bool> {
        Ok(self.poly_pair()?.holds())
    }
}

impl fmt::Display for ClosedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClosedFamily::EvenAlternating { k } | ClosedFamily::Leshchiner { k } | ClosedFamily::TFamily { k } => {
                write!(f, "{}({k})", self.name())
            }
            ClosedFamily::AllTwos { m } => write!(f, "{}({m})", self.name()),
            ClosedFamily::SelfDualT4 { r } => write!(f, "{}({r})", self.name()),
            ClosedFamily::ARepeated { a, m } => write!(f, "{}({a},{m})", self.name()),
            ClosedFamily::HeightOne { u, v } | ClosedFamily::TwoOnesV { u, v } => {
                write!(f, "{}({u},{v})", self.name())
            }
        }
    }
}

/// Parses `name:p1,p2` or `name(p1,p2)`.
impl FromStr for ClosedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = match s.find([':', '(']) {
            Some(i) => (&s[..i], s[i + 1..].trim_end_matches(')')),
            None => (s, ""),
        };
        let params = rest
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u32>().map_err(|_| Error::Parse(format!("bad parameter {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        ClosedFamily::from_parts(name, &params)
    }
}

fn even_weight(name: &str, k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::Domain(format!("{name} needs an even weight, got {k}")));
    }
    Ok(())
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn pow_i(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

fn comp(v: &[u32]) -> Composition {
    Composition::new(v).expect("valid composition")
}

fn repeated(x: u32, n: u32) -> Vec<u32> {
    vec![x; n as usize]
}

fn count_twos(b: &Composition) -> usize {
    b.entries().iter().filter(|&&e| e == 2).count()
}

fn first_is_two(b: &Composition) -> bool {
    b.entries().first() == Some(&2)
}

/// `class_projection(sum_{a in A_k} weight(a) a)`.
fn signed_classes<R: Ring>(k: u32, weight: impl Fn(&Composition) -> R) -> LinComb<DualityClass, R> {
    let sum: LinComb<Composition, R> = admissible(k).into_iter().map(|a| {
        let w = weight(&a);
        (a, w)
    }).collect();
    class_projection(&sum).expect("admissible support")
}

fn sign(depth: usize) -> i64 {
    if depth % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn even_alternating(k: u32) -> Result<FamilyPair<BigInt>> {
    even_weight("even_alternating", k)?;
    let lhs = signed_classes(k, |a| int(sign(a.depth())));
    let rhs = even_entries(k).into_iter().map(|b| {
        let c = pow_i(-3, b.depth());
        (b, c)
    }).collect();
    Ok(FamilyPair { lhs, rhs })
}

/// Coefficient `3 * 2^{s-1}` when the first entry is 2 and `2^s` otherwise,
/// `s` the number of twos, over compositions with entries in `{2, 4}`.
pub fn all_twos(m: u32) -> Result<FamilyPair<BigInt>> {
    let lhs = LinComb::single(DualityClass::of(&comp(&repeated(2, m)))?, int(1));
    let rhs = all_compositions(2 * m)
        .into_iter()
        .filter(|b| b.entries().iter().all(|&e| e == 2 || e == 4))
        .map(|b| {
            let s = count_twos(&b);
            let c = if first_is_two(&b) { int(3) * pow_i(2, s - 1) } else { pow_i(2, s) };
            (b, c)
        })
        .collect();
    Ok(FamilyPair { lhs, rhs })
}

pub fn leshchiner(k: u32) -> Result<FamilyPair<BigInt>> {
    even_weight("leshchiner", k)?;
    if k < 2 {
        return Err(Error::Domain("leshchiner needs k >= 2".into()));
    }
    let m = k / 2;
    let mut lhs = LinComb::zero();
    for b in 2..=k {
        lhs.add_term(DualityClass::of(&hook(b, k - b)?)?, int(sign(b as usize)));
    }
    let mut rhs = LinComb::single(comp(&repeated(2, m)), int(3 * sign((m - 1) as usize)));
    for c in 2..=m {
        let mut v = vec![2 * c];
        v.extend(repeated(2, m - c));
        rhs.add_term(comp(&v), int(4 * sign((m - c) as usize)));
    }
    Ok(FamilyPair { lhs, rhs })
}

/// Membership test for the right side of `delta([a^m])`: returns the
/// coefficient when `b` satisfies the four conditions, else `None`.
fn a_repeated_coeff(a: u32, m: u32, b: &Composition) -> Option<i64> {
    let e: Vec<u32> = b.entries().iter().map(|&x| u32::from(x)).collect();
    let (&b1, tail) = e.split_first()?;
    let leading_big = b1 == a + 2;
    if !((2..=a).contains(&b1) || leading_big) {
        return None;
    }
    if !tail.iter().all(|&x| x == 1 || x == 2 || x == a || x == a + 1 || x == a + 2) {
        return None;
    }
    let s = tail.iter().filter(|&&x| x >= a).count() as u32;
    let cap = if leading_big { m.checked_sub(2)? } else { m - 1 };
    if s > cap {
        return None;
    }
    let (u, v) = if leading_big { (a - 2, m - 2 - s) } else { (a - b1, m - 1 - s) };
    let reduced: Vec<u32> = tail
        .iter()
        .filter(|&&x| x != a)
        .map(|&x| if x == a + 1 { 1 } else if x == a + 2 { 2 } else { x })
        .collect();
    let mut core = repeated(1, u);
    for _ in 0..v {
        core.push(2);
        core.extend(repeated(1, a - 2));
    }
    if reduced != core {
        return None;
    }
    Some(match b1 {
        2 => 3,
        _ if leading_big => 1,
        _ => 2,
    })
}

pub fn a_repeated(a: u32, m: u32) -> Result<FamilyPair<BigInt>> {
    if a < 3 || m < 1 {
        return Err(Error::Domain(format!("a_repeated needs a >= 3 and m >= 1, got a={a}, m={m}")));
    }
    let lhs = LinComb::single(DualityClass::of(&comp(&repeated(a, m)))?, int(1));
    let rhs = all_compositions(a * m)
        .into_iter()
        .filter_map(|b| a_repeated_coeff(a, m, &b).map(|c| (b, int(c))))
        .collect();
    Ok(FamilyPair { lhs, rhs })
}

pub fn height_one(u: u32, v: u32) -> Result<FamilyPair<BigInt>> {
    if !(1 <= u && u <= v) {
        return Err(Error::Domain(format!("height_one needs 1 <= u <= v, got u={u}, v={v}")));
    }
    let lhs = LinComb::single(DualityClass::of(&hook(u + 1, v - 1)?)?, int(1));
    let bin = |n: i64, k: i64| if k < 0 || k > n { BigInt::from(0) } else { binomial(int(n), int(k)) };
    let mut rhs = LinComb::zero();
    for b in all_compositions(u + v) {
        let e = b.entries();
        let b1 = i64::from(e[0]);
        if !(2..=i64::from(v) + 1).contains(&b1) || !e[1..].iter().all(|&x| x == 1 || x == 2) {
            continue;
        }
        let (r, u, v) = (e.len() as i64, i64::from(u), i64::from(v));
        if r < u.max(v + 2 - b1) {
            continue;
        }
        let s = 2 * r + b1 - u - v - 2;
        let c = match b1 {
            2 => int(3) * bin(s, r - u),
            _ if r < v => int(2) * bin(s, r - u),
            _ => int(2) * bin(s, r - u) + int(2) * bin(s, r - v),
        };
        rhs.add_term(b, c);
    }
    Ok(FamilyPair { lhs, rhs })
}

pub fn two_ones_v(u: u32, v: u32) -> Result<FamilyPair<BigInt>> {
    if u < 2 || v < 2 {
        return Err(Error::Domain(format!("two_ones_v needs u, v >= 2, got u={u}, v={v}")));
    }
    let with_last = |head: u32, ones: u32, last: u32| {
        let mut x = vec![head];
        x.extend(repeated(1, ones));
        x.push(last);
        comp(&x)
    };
    let lhs = LinComb::single(DualityClass::of(&with_last(2, u - 2, v))?, int(1));
    let mut rhs = LinComb::zero();
    for b in 3..=u {
        rhs.add_term(with_last(b, u - b, v), int(2));
    }
    for b in 3..=v {
        rhs.add_term(with_last(b, v - b, u), int(2));
    }
    rhs.add_term(with_last(2, u - 2, v), int(3));
    rhs.add_term(with_last(2, v - 2, u), int(3));
    rhs.add_term(comp(&[u + v]), int(1));
    Ok(FamilyPair { lhs, rhs })
}

/// `c_b(t) = (-1)^s (t^2 - 4t)^{depth-s} * (3t (2t+1)^{s-1} if b_1 = 2 else (2t+1)^s)`.
pub fn c_b(b: &Composition) -> IntPoly {
    let t = IntPoly::var();
    let s = count_twos(b);
    let d = b.depth();
    let quad = &(&t * &t) - &Poly::constant(int(4)).mul(&t);
    let lin = &Poly::constant(int(2)).mul(&t) + &IntPoly::one();
    let tail = if first_is_two(b) {
        Poly::constant(int(3)).mul(&t).mul(&lin.pow((s - 1) as u32))
    } else {
        lin.pow(s as u32)
    };
    let c = quad.pow((d - s) as u32).mul(&tail);
    if s % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `sum (-1)^depth t^height [a]` against `sum c_b(t) b` over even compositions.
pub fn t_family(k: u32) -> Result<FamilyPair<IntPoly>> {
    even_weight("t_family", k)?;
    let lhs = signed_classes(k, |a| IntPoly::monomial(int(sign(a.depth())), a.height()));
    let rhs = even_entries(k).into_iter().map(|b| {
        let c = c_b(&b);
        (b, c)
    }).collect();
    Ok(FamilyPair { lhs, rhs })
}

/// Both sides of the `t` family evaluated at an integer `t`.
pub fn t_family_at(k: u32, t: i64) -> Result<FamilyPair<BigInt>> {
    let x = int(t);
    Ok(t_family(k)?.map(|p| p.eval(&x)))
}

/// Both sides of the `t` family evaluated at a rational `t`.
pub fn t_family_at_rational(k: u32, t: &BigRational) -> Result<FamilyPair<BigRational>> {
    Ok(t_family(k)?.map(|p| p.to_rational().eval(t)))
}

pub fn selfdual_t4(r: u32) -> Result<FamilyPair<BigInt>> {
    if r < 1 {
        return Err(Error::Domain("selfdual_t4 needs r >= 1".into()));
    }
    let lhs = signed_classes(2 * r, |a| int(sign(a.depth())) * pow_i(4, a.height() - 1));
    let c = int(sign(r as usize)) * pow_i(3, (2 * r - 1) as usize);
    let rhs = LinComb::single(comp(&repeated(2, r)), c);
    Ok(FamilyPair { lhs, rhs })
}

/// The `t = -1` formula as displayed: weights `(-1)^{depth-height}` against
/// `5^{depth-s} (3 if b_1 = 2 else 1)`.
pub fn t_minus_one_displayed(k: u32) -> Result<FamilyPair<BigInt>> {
    even_weight("t_minus_one_displayed", k)?;
    let lhs = signed_classes(k, |a| int(sign(a.depth() + a.height())));
    let rhs = even_entries(k).into_iter().map(|b| {
        let base = pow_i(5, b.depth() - count_twos(&b));
        let c = if first_is_two(&b) { int(3) * base } else { base };
        (b, c)
    }).collect();
    Ok(FamilyPair { lhs, rhs })
}

/// The `t = -2` formula as displayed: weights `(-1)^{depth-height} 2^height`
/// against `3^depth 4^{depth-s} (2 if b_1 = 2 else 1)`.
pub fn t_minus_two_displayed(k: u32) -> Result<FamilyPair<BigInt>> {
    even_weight("t_minus_two_displayed", k)?;
    let lhs = signed_classes(k, |a| int(sign(a.depth() + a.height())) * pow_i(2, a.height()));
    let rhs = even_entries(k).into_iter().map(|b| {
        let d = b.depth();
        let base = pow_i(3, d) * pow_i(4, d - count_twos(&b));
        let c = if first_is_two(&b) { int(2) * base } else { base };
        (b, c)
    }).collect();
    Ok(FamilyPair { lhs, rhs })
}

/// The `t = -1/2` formula as displayed: weights `(-1)^{depth-height} 2^{-height}`
/// against `(3/2)^{2 depth}` on even compositions with entries `>= 4`, and
/// `(3/2)^{2 depth - 1}` when only the first entry is 2.
pub fn t_minus_half_displayed(k: u32) -> Result<FamilyPair<BigRational>> {
    even_weight("t_minus_half_displayed", k)?;
    let half = BigRational::new(int(1), int(2));
    let three_halves = BigRational::new(int(3), int(2));
    let lhs = signed_classes(k, |a| {
        BigRational::from_integer(int(sign(a.depth() + a.height()))) * num_traits::pow(half.clone(), a.height())
    });
    let mut rhs = LinComb::zero();
    for b in even_entries(k) {
        let d = b.depth();
        let e = b.entries();
        let rest_ge4 = e.iter().skip(1).all(|&x| x >= 4);
        if e.is_empty() {
            rhs.add_term(b, <BigRational as One>::one());
        } else if e[0] >= 4 && rest_ge4 {
            rhs.add_term(b, num_traits::pow(three_halves.clone(), 2 * d));
        } else if e[0] == 2 && rest_ge4 {
            rhs.add_term(b, num_traits::pow(three_halves.clone(), 2 * d - 1));
        }
    }
    Ok(FamilyPair { lhs, rhs })
}
