//! Finitely supported linear combinations and the structural maps on them.

pub(crate) mod json;
mod ring;

use std::collections::BTreeMap;
use std::fmt;

pub use json::{parse_rational, Basis, JsonCoeff};
pub use ring::{IntPoly, Poly, RatPoly, Ring};

use crate::compositions::{Composition, DualityClass};
use crate::error::{Error, Result};

/// A formal sum `sum lambda_b b` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<B: Ord, R> {
    terms: BTreeMap<B, R>,
}

impl<B: Ord + Clone, R: Ring> Default for LinComb<B, R> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone, R: Ring> LinComb<B, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(b: B, c: R) -> Self {
        let mut l = Self::zero();
        l.add_term(b, c);
        l
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, R)>) -> Self {
        let mut l = Self::zero();
        for (b, c) in it {
            l.add_term(b, c);
        }
        l
    }

    /// Add `c * b`, purging the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &R::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &R::one().neg());
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, x)| (b.clone(), x.mul(c))))
    }

    pub fn neg(&self) -> Self {
        self.scale(&R::one().neg())
    }

    pub fn coefficient_of(&self, b: &B) -> R {
        self.terms.get(b).cloned().unwrap_or_else(R::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&B, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Alias of [`LinComb::is_zero`]: no stored terms.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, b: &B) -> bool {
        self.terms.contains_key(b)
    }

    /// Apply a map on coefficients (entries mapping to zero are dropped).
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LinComb<B, S> {
        LinComb::from_terms(self.terms.iter().map(|(b, x)| (b.clone(), f(x))))
    }

    /// Linear extension of a basis map.
    pub fn map_basis<B2: Ord + Clone>(&self, f: impl Fn(&B) -> B2) -> LinComb<B2, R> {
        LinComb::from_terms(self.terms.iter().map(|(b, x)| (f(b), x.clone())))
    }
}

impl<B: Basis, R: Ring> LinComb<B, R> {
    /// Split by weight; the parts sum back to `self`.
    pub fn grade_split(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (b, x) in &self.terms {
            out.entry(b.weight()).or_default().add_term(b.clone(), x.clone());
        }
        out
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|b| b.weight() == k)
    }
}

impl<B: Ord + Clone, R: Ring> FromIterator<(B, R)> for LinComb<B, R> {
    fn from_iter<I: IntoIterator<Item = (B, R)>>(it: I) -> Self {
        Self::from_terms(it)
    }
}

/// Terms are printed in descending basis order (the canonical order).
impl<B: Ord + Clone + fmt::Display, R: Ring> fmt::Display for LinComb<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (b, c) in self.terms.iter().rev() {
            let s = c.to_string();
            let compound = s.contains(' ');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let b = b.to_string();
            let b = if b.starts_with('[') { b } else { format!("({b})") };
            if body == "1" {
                f.write_str(&b)?;
            } else if compound {
                write!(f, "({body}){b}")?;
            } else {
                write!(f, "{body}{b}")?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + Clone + fmt::Display, R: Ring> fmt::Debug for LinComb<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[a] -> [a^init] + [a^mid] + [a^fin]`, extended linearly.
pub fn alpha<R: Ring>(l: &LinComb<DualityClass, R>) -> Result<LinComb<DualityClass, R>> {
    let mut out = LinComb::zero();
    for (c, x) in l.iter() {
        if c.is_empty() {
            return Err(Error::Domain("alpha is not defined on [∅]".into()));
        }
        for part in alpha_parts(c.representative())? {
            out.add_term(DualityClass::of(&part)?, x.clone());
        }
    }
    Ok(out)
}

/// The three parts `init`, `mid`, `fin` of a non-empty admissible composition.
pub fn alpha_parts(a: &Composition) -> Result<[Composition; 3]> {
    let fin = a.fin_part()?;
    Ok([a.init_part(), fin.init_part(), fin])
}

/// The component of `alpha(l)` in weight `k_prime`.
pub fn alpha_component<R: Ring>(
    k_prime: u32,
    l: &LinComb<DualityClass, R>,
) -> Result<LinComb<DualityClass, R>> {
    Ok(alpha(l)?.grade_split().remove(&k_prime).unwrap_or_default())
}

/// `a -> a^init` on non-empty compositions.
pub fn mu<R: Ring>(l: &LinComb<Composition, R>) -> Result<LinComb<Composition, R>> {
    let mut out = LinComb::zero();
    for (a, x) in l.iter() {
        if a.is_empty() {
            return Err(Error::Domain("mu is not defined on ∅".into()));
        }
        out.add_term(a.init_part(), x.clone());
    }
    Ok(out)
}

/// The unique weight-`k` combination whose image under `mu` is `target`.
pub fn mu_invert<R: Ring>(target: &LinComb<Composition, R>, k: u32) -> Result<LinComb<Composition, R>> {
    let mut out = LinComb::zero();
    for (b, x) in target.iter() {
        let kb = b.weight();
        if kb >= k {
            return Err(Error::NoPreimage(format!("({b}) has weight {kb} >= {k}")));
        }
        if !b.is_admissible() {
            return Err(Error::NoPreimage(format!("({b}) is not admissible")));
        }
        let mut entries: Vec<u32> = b.entries().iter().map(|&e| e as u32).collect();
        entries.push(k - kb);
        let a = Composition::new(&entries)?;
        if !a.is_admissible() {
            return Err(Error::NoPreimage(format!("preimage ({a}) of ({b}) is not admissible")));
        }
        out.add_term(a, x.clone());
    }
    Ok(out)
}

/// `a -> [a]`, extended linearly.
pub fn class_projection<R: Ring>(l: &LinComb<Composition, R>) -> Result<LinComb<DualityClass, R>> {
    let mut out = LinComb::zero();
    for (a, x) in l.iter() {
        out.add_term(DualityClass::of(a)?, x.clone());
    }
    Ok(out)
}

/// Sum of all coefficients.
pub fn coefficient_sum<B: Ord + Clone, R: Ring>(l: &LinComb<B, R>) -> R {
    l.iter().fold(R::zero(), |acc, (_, x)| acc.add(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }
    fn k(s: &str) -> DualityClass {
        s.parse().unwrap()
    }
    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn module_basics() {
        let l = LinComb::from_terms([(c("3"), z(2)), (c("2,1"), z(3))]);
        assert_eq!(l.coefficient_of(&c("3")), z(2));
        assert!(l.scale(&z(0)).is_zero());
        let ell = LinComb::from_terms([(c("2,1,3"), z(1)), (c("2,1,2"), z(-2)), (c("2,2"), z(1))]);
        let parts = ell.grade_split();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![4, 5, 6]);
        let back = parts.values().fold(LinComb::zero(), |acc, p| acc.add(p));
        assert_eq!(back, ell);
        assert_eq!(l.to_string(), "2(3) + 3(2,1)");
    }

    #[test]
    fn mu_examples() {
        let one = |s: &str| LinComb::single(c(s), z(1));
        assert_eq!(mu(&one("3,2")).unwrap(), one("3"));
        assert_eq!(mu(&one("2")).unwrap(), one("()"));
        assert!(mu(&one("()")).is_err());
        let t = LinComb::from_terms([(c("3"), z(2)), (c("2,1"), z(3)), (Composition::empty(), z(2))]);
        let want = LinComb::from_terms([(c("4"), z(2)), (c("3,1"), z(2)), (c("2,1,1"), z(3))]);
        assert_eq!(mu_invert(&t, 4).unwrap(), want);
        assert_eq!(mu_invert(&LinComb::single(Composition::empty(), z(3)), 2).unwrap(),
                   LinComb::single(c("2"), z(3)));
        assert!(mu_invert(&LinComb::<_, BigInt>::zero(), 7).unwrap().is_zero());
        assert!(mu_invert(&one("1"), 3).is_err());
        assert!(mu_invert(&one("()"), 1).is_err());
    }

    #[test]
    fn alpha_examples() {
        let one = |s: &str| LinComb::single(k(s), z(1));
        let a = alpha(&one("3,2")).unwrap();
        let want = LinComb::from_terms([(k("3"), z(1)), (k("2"), z(1)), (k("2,2"), z(1))]);
        assert_eq!(a, want);
        assert_eq!(alpha(&one("2")).unwrap(), LinComb::single(DualityClass::empty(), z(3)));
        for n in 3..10u32 {
            let a = alpha(&LinComb::single(DualityClass::of(&Composition::new(&[n]).unwrap()).unwrap(), z(1)))
                .unwrap();
            let want = LinComb::from_terms([
                (DualityClass::empty(), z(2)),
                (DualityClass::of(&Composition::new(&[n - 1]).unwrap()).unwrap(), z(1)),
            ]);
            assert_eq!(a, want);
        }
        assert!(alpha(&LinComb::single(DualityClass::empty(), z(1))).is_err());
    }

    #[test]
    fn class_projection_examples() {
        let l = LinComb::from_terms([(c("3"), z(1)), (c("2,1"), z(1))]);
        assert_eq!(class_projection(&l).unwrap(), LinComb::single(k("3"), z(2)));
        assert_eq!(class_projection(&LinComb::single(c("3,1"), z(1))).unwrap(), LinComb::single(k("3,1"), z(1)));
    }

    #[test]
    fn remark_two_kernel_element() {
        let ell = LinComb::from_terms([(c("2,1,3"), z(1)), (c("2,1,2"), z(-2)), (c("2,2"), z(1))]);
        let proj = class_projection(&ell).unwrap();
        assert!(alpha(&proj).unwrap().is_zero());
        let nonzero = proj
            .grade_split()
            .values()
            .filter(|p| !alpha(p).unwrap().is_zero())
            .count();
        assert!(nonzero > 0);
    }
}
