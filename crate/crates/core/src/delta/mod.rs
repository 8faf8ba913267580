//! The map `delta` from duality classes to compositions.
//!
//! Two independent routes are provided: [`DeltaEngine`] builds `delta` by
//! induction on the weight through `mu(delta[a]) = delta(alpha[a])`, and
//! [`delta_explicit`] evaluates the closed formula
//! `delta[a] = sum_{i=1}^{k-1} (1 + not(e_i) + e_{i+1}) abar_{k-i} ⊞ a_i`.

pub mod families;
mod submatrix;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::compositions::{BinaryWord, Composition, DualityClass};
use crate::error::Result;
use crate::lincomb::{alpha_parts, mu_invert, LinComb, Ring};
use crate::stuffle::boxast;

pub use submatrix::{delta_submatrix, p7_blocks, P7Report};

/// Integer-valued `delta` on a single class.
pub type DeltaValue = LinComb<Composition, BigInt>;

/// Memoised inductive computation of `delta`.
///
/// The cache is shared: lookups take a read lock, and each missing class is
/// computed outside the lock and then published once.
#[derive(Default)]
pub struct DeltaEngine {
    memo: RwLock<HashMap<DualityClass, Arc<DeltaValue>>>,
}

impl DeltaEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide engine used by the convenience functions.
    pub fn global() -> &'static DeltaEngine {
        static ENGINE: OnceLock<DeltaEngine> = OnceLock::new();
        ENGINE.get_or_init(DeltaEngine::new)
    }

    pub fn class(&self, c: &DualityClass) -> Arc<DeltaValue> {
        if let Some(v) = self.memo.read().expect("delta memo poisoned").get(c) {
            return Arc::clone(v);
        }
        let value = Arc::new(self.compute(c));
        let mut w = self.memo.write().expect("delta memo poisoned");
        Arc::clone(w.entry(c.clone()).or_insert(value))
    }

    fn compute(&self, c: &DualityClass) -> DeltaValue {
        if c.is_empty() {
            return LinComb::single(Composition::empty(), BigInt::from(1));
        }
        let a = c.representative();
        let mut target = LinComb::zero();
        for part in alpha_parts(a).expect("representatives are admissible") {
            let pc = DualityClass::of(&part).expect("parts of admissible are admissible");
            target.add_scaled(&self.class(&pc), &BigInt::from(1));
        }
        mu_invert(&target, a.weight()).expect("delta(alpha[a]) lies in the image of mu")
    }

    /// `delta` over any coefficient ring, by linear extension.
    pub fn apply<R: Ring>(&self, l: &LinComb<DualityClass, R>) -> LinComb<Composition, R> {
        let mut out = LinComb::zero();
        for (c, x) in l.iter() {
            for (b, m) in self.class(c).iter() {
                out.add_term(b.clone(), x.mul(&R::from_bigint(m)));
            }
        }
        out
    }

    pub fn cached_classes(&self) -> usize {
        self.memo.read().expect("delta memo poisoned").len()
    }
}

/// Inductive `delta` through the process-wide engine.
pub fn delta_inductive<R: Ring>(l: &LinComb<DualityClass, R>) -> LinComb<Composition, R> {
    DeltaEngine::global().apply(l)
}

/// `delta` of a single class through the process-wide engine.
pub fn delta_class(c: &DualityClass) -> Arc<DeltaValue> {
    DeltaEngine::global().class(c)
}

/// `delta[a]` by the explicit formula, evaluated on the given class.
pub fn delta_explicit(c: &DualityClass) -> DeltaValue {
    delta_explicit_rep(c.representative()).expect("representatives are admissible")
}

/// The explicit formula evaluated on a chosen member `a` of its class.
pub fn delta_explicit_rep(a: &Composition) -> Result<DeltaValue> {
    a.dual()?; // admissibility check
    if a.is_empty() {
        return Ok(LinComb::single(Composition::empty(), BigInt::from(1)));
    }
    let eps = a.to_word().0;
    let k = eps.len();
    let mut out = LinComb::zero();
    for i in 1..k {
        // eps is 0-indexed: eps[i-1] is e_i.
        let coeff = 1 + u32::from(!eps[i - 1]) + u32::from(eps[i]);
        let suffix = BinaryWord(eps[i..].to_vec());
        let prefix_dual = BinaryWord(eps[..i].to_vec()).complement_reverse();
        let ai = Composition::from_word(&suffix)?;
        let abar = Composition::from_word(&prefix_dual)?;
        out.add_scaled(&boxast(&abar, &ai), &BigInt::from(coeff));
    }
    Ok(out)
}

/// Closed form for depth one: `2 sum_{b=3}^{a} (b, 1^{a-b}) + 3 (2, 1^{a-2})`.
pub fn delta_depth1(a: u32) -> Result<DeltaValue> {
    if a < 2 {
        return Err(crate::Error::Domain(format!("delta_depth1 needs a >= 2, got {a}")));
    }
    let mut out = LinComb::zero();
    for b in 3..=a {
        out.add_term(hook(b, a - b)?, BigInt::from(2));
    }
    out.add_term(hook(2, a - 2)?, BigInt::from(3));
    Ok(out)
}

/// `(b, 1, ..., 1)` with `ones` trailing ones.
pub(crate) fn hook(b: u32, ones: u32) -> Result<Composition> {
    let mut v = vec![b];
    v.extend(std::iter::repeat(1).take(ones as usize));
    Composition::new(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> DualityClass {
        s.parse().unwrap()
    }
    fn lc(terms: &[(i64, &str)]) -> DeltaValue {
        LinComb::from_terms(terms.iter().map(|(n, s)| (s.parse().unwrap(), BigInt::from(*n))))
    }

    #[test]
    fn small_values() {
        let e = DeltaEngine::new();
        assert_eq!(*e.class(&k("2")), lc(&[(3, "2")]));
        assert_eq!(*e.class(&k("3")), lc(&[(2, "3"), (3, "2,1")]));
        assert_eq!(*e.class(&k("3,2")), lc(&[(1, "4,1"), (2, "3,2"), (3, "2,3"), (6, "2,2,1"), (3, "2,1,2")]));
        assert_eq!(*e.class(&DualityClass::empty()), lc(&[(1, "()")]));
    }

    #[test]
    fn explicit_values() {
        assert_eq!(
            delta_explicit(&k("3,3")),
            lc(&[(3, "2,1,2,1"), (3, "2,3,1"), (3, "2,1,3"), (3, "2,4"), (2, "3,2,1"), (2, "3,3"), (1, "5,1")])
        );
        assert_eq!(delta_explicit(&k("2,2")), lc(&[(1, "4"), (6, "2,2")]));
        assert_eq!(delta_explicit(&DualityClass::empty()), lc(&[(1, "()")]));
    }

    #[test]
    fn depth_one() {
        assert_eq!(delta_depth1(2).unwrap(), lc(&[(3, "2")]));
        assert_eq!(delta_depth1(3).unwrap(), lc(&[(2, "3"), (3, "2,1")]));
        assert_eq!(delta_depth1(5).unwrap(), lc(&[(2, "5"), (2, "4,1"), (2, "3,1,1"), (3, "2,1,1,1")]));
        assert!(delta_depth1(1).is_err());
    }
}
