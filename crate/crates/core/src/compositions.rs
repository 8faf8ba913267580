//! Compositions, binary words, duality classes and enumeration.
//!
//! A composition `(a_1, ..., a_r)` is encoded by the binary word
//! `0^{a_1-1} 1 0^{a_2-1} 1 ... 0^{a_r-1} 1`. Duality reverses and
//! complements that word, which maps admissible compositions (empty, or
//! `a_1 >= 2`) to admissible compositions of the same weight.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest weight a [`Composition`] may carry.
pub const MAX_WEIGHT: u32 = 63;

/// A finite sequence of positive integers.
///
/// Ordering is lexicographic on the entry list, with a proper prefix
/// ordered before its extensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u8>);

impl Composition {
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// Build a composition, rejecting zero entries and weights above [`MAX_WEIGHT`].
    pub fn new(entries: &[u32]) -> Result<Self> {
        let mut weight = 0u32;
        let mut out = Vec::with_capacity(entries.len());
        for &e in entries {
            if e == 0 {
                return Err(Error::InvalidComposition(format!("zero entry in {entries:?}")));
            }
            weight = weight.saturating_add(e);
            if weight > MAX_WEIGHT {
                return Err(Error::InvalidComposition(format!(
                    "weight exceeds {MAX_WEIGHT}: {entries:?}"
                )));
            }
            out.push(e as u8);
        }
        Ok(Composition(out))
    }

    /// Internal constructor for entry lists already known to be valid.
    pub(crate) fn from_raw(entries: Vec<u8>) -> Self {
        debug_assert!(entries.iter().all(|&e| e >= 1));
        debug_assert!(entries.iter().map(|&e| e as u32).sum::<u32>() <= MAX_WEIGHT);
        Composition(entries)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Number of entries that are at least 2.
    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&e| e >= 2).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.first().map_or(true, |&e| e >= 2)
    }

    pub fn to_word(&self) -> BinaryWord {
        let mut bits = Vec::with_capacity(self.weight() as usize);
        for &e in &self.0 {
            bits.extend(std::iter::repeat(false).take(e as usize - 1));
            bits.push(true);
        }
        BinaryWord(bits)
    }

    /// Inverse of [`Composition::to_word`]; the word must be empty or end in 1.
    pub fn from_word(w: &BinaryWord) -> Result<Self> {
        if w.0.last() == Some(&false) {
            return Err(Error::InvalidWord(format!("{w} ends in 0")));
        }
        if w.0.len() > MAX_WEIGHT as usize {
            return Err(Error::InvalidWord(format!("{w} is longer than {MAX_WEIGHT}")));
        }
        let mut entries = Vec::new();
        let mut run = 1u8;
        for &b in &w.0 {
            if b {
                entries.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        Ok(Composition(entries))
    }

    /// The dual composition, defined for admissible input.
    pub fn dual(&self) -> Result<Self> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissible(self.to_string()));
        }
        Ok(self.dual_unchecked())
    }

    fn dual_unchecked(&self) -> Self {
        let w = self.to_word();
        let bits: Vec<bool> = w.0.iter().rev().map(|b| !b).collect();
        Composition::from_word(&BinaryWord(bits)).expect("dual of an admissible word ends in 1")
    }

    pub fn is_self_dual(&self) -> bool {
        self.is_admissible() && self.dual_unchecked() == *self
    }

    /// Drop the last entry. Defined for every composition.
    pub fn init_part(&self) -> Self {
        let mut v = self.0.clone();
        v.pop();
        Composition(v)
    }

    /// The final part, i.e. `dual(init(dual(a)))`, by the piecewise rule.
    pub fn fin_part(&self) -> Result<Self> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissible(self.to_string()));
        }
        let a = &self.0;
        if a.is_empty() {
            return Ok(Composition::empty());
        }
        if a[0] >= 3 {
            let mut v = a.clone();
            v[0] -= 1;
            return Ok(Composition(v));
        }
        // a = (2, 1, ..., 1, a_i, ...) with a_i >= 2, or all trailing ones.
        match a.iter().skip(1).position(|&e| e >= 2) {
            Some(p) => Ok(Composition(a[p + 1..].to_vec())),
            None => Ok(Composition::empty()),
        }
    }

    /// `init(fin(a))`, equal to `fin(init(a))`.
    pub fn mid_part(&self) -> Result<Self> {
        Ok(self.fin_part()?.init_part())
    }

    pub fn class(&self) -> Result<DualityClass> {
        DualityClass::of(self)
    }

    /// Multiply every entry by two.
    pub fn doubled(&self) -> Self {
        Composition::from_raw(self.0.iter().map(|&e| 2 * e).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parse `"3,1"`, `"(3,1)"`, `"()"` or the empty string.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Composition::empty());
        }
        let mut entries = Vec::new();
        for part in t.split(',') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad entry {part:?} in {s:?}")))?;
            entries.push(v);
        }
        Composition::new(&entries)
    }
}

/// A word over `{0, 1}`, stored most significant (leftmost) bit first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryWord(pub Vec<bool>);

impl BinaryWord {
    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// Complement every bit and reverse the order.
    pub fn complement_reverse(&self) -> Self {
        BinaryWord(self.0.iter().rev().map(|b| !b).collect())
    }

    /// The `len`-bit base-2 expansion of `i`, leading zeros kept.
    pub fn from_index(i: u64, len: usize) -> Self {
        BinaryWord((0..len).rev().map(|b| (i >> b) & 1 == 1).collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BinaryWord(v)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad bit {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }
}

/// The unordered pair `{a, dual(a)}` of admissible compositions.
///
/// The representative is the lexicographically larger member of the pair,
/// so `[4]` rather than `[2,1,1]` and `[3,1,2]` rather than `[2,3,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DualityClass(Composition);

impl DualityClass {
    pub fn of(a: &Composition) -> Result<Self> {
        let d = a.dual()?;
        Ok(DualityClass(if d > *a { d } else { a.clone() }))
    }

    pub fn empty() -> Self {
        DualityClass(Composition::empty())
    }

    pub fn representative(&self) -> &Composition {
        &self.0
    }

    /// Both members of the class (one member if self-dual).
    pub fn members(&self) -> Vec<Composition> {
        let d = self.0.dual_unchecked();
        if d == self.0 {
            vec![d]
        } else {
            vec![self.0.clone(), d]
        }
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_self_dual(&self) -> bool {
        self.0.is_self_dual()
    }
}

impl fmt::Display for DualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("[]")
        } else {
            write!(f, "[{}]", self.0)
        }
    }
}

impl fmt::Debug for DualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse `"[3,1]"`, `"3,1"` or `"[]"`; either member of the class is accepted.
impl FromStr for DualityClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .unwrap_or(t);
        DualityClass::of(&t.parse()?)
    }
}

/// Enumeration filters for [`enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    /// All admissible compositions, `A_k`.
    Admissible,
    /// All duality classes, `B_k`.
    Classes,
    /// Compositions with only even entries, `A_k^even`.
    EvenEntries,
    /// Self-dual classes, `B_k^sd`.
    SelfDualClasses,
    /// Admissible compositions with every entry at least 2.
    EntriesGe2,
    /// Admissible compositions with every entry at most 2.
    EntriesLe2,
    /// Compositions with entries in `{2, 3}`.
    Entries23,
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "admissible" => Filter::Admissible,
            "classes" => Filter::Classes,
            "even" | "even_entries" | "even-entries" => Filter::EvenEntries,
            "self-dual" | "self_dual" | "self_dual_classes" | "self-dual-classes" => {
                Filter::SelfDualClasses
            }
            "ge2" | "entries_ge_2" => Filter::EntriesGe2,
            "le2" | "entries_le_2" => Filter::EntriesLe2,
            "23" | "entries_in_2_3" | "entries-2-3" => Filter::Entries23,
            _ => return Err(Error::Parse(format!("unknown filter {s:?}"))),
        })
    }
}

/// Output of [`enumerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Listing {
    Compositions(Vec<Composition>),
    Classes(Vec<DualityClass>),
}

impl Listing {
    pub fn len(&self) -> usize {
        match self {
            Listing::Compositions(v) => v.len(),
            Listing::Classes(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn render(&self) -> Vec<String> {
        match self {
            Listing::Compositions(v) => v.iter().map(|c| format!("({c})")).collect(),
            Listing::Classes(v) => v.iter().map(|c| c.to_string()).collect(),
        }
    }
}

pub fn enumerate(weight: u32, filter: Filter) -> Listing {
    match filter {
        Filter::Admissible => Listing::Compositions(admissible(weight)),
        Filter::Classes => Listing::Classes(classes(weight)),
        Filter::EvenEntries => Listing::Compositions(even_entries(weight)),
        Filter::SelfDualClasses => Listing::Classes(self_dual_classes(weight)),
        Filter::EntriesGe2 => Listing::Compositions(
            admissible(weight).into_iter().filter(|c| c.entries().iter().all(|&e| e >= 2)).collect(),
        ),
        Filter::EntriesLe2 => Listing::Compositions(
            admissible(weight).into_iter().filter(|c| c.entries().iter().all(|&e| e <= 2)).collect(),
        ),
        Filter::Entries23 => Listing::Compositions(
            admissible(weight)
                .into_iter()
                .filter(|c| c.entries().iter().all(|&e| e == 2 || e == 3))
                .collect(),
        ),
    }
}

/// Admissible compositions of weight `k` in descending lexicographic order.
///
/// Walks the words `0 b_2 ... b_{k-1} 1` by increasing middle bits, which
/// is exactly descending lexicographic order of the compositions.
pub fn admissible(k: u32) -> Vec<Composition> {
    assert!(k <= MAX_WEIGHT, "weight {k} exceeds {MAX_WEIGHT}");
    match k {
        0 => return vec![Composition::empty()],
        1 => return Vec::new(),
        _ => {}
    }
    let middle = (k - 2) as usize;
    assert!(middle < 40, "enumeration of weight {k} is too large");
    let mut out = Vec::with_capacity(1 << middle);
    for bits in 0u64..(1u64 << middle) {
        let mut entries = Vec::new();
        let mut run = 2u8; // leading 0 then the first middle bit
        for b in (0..middle).rev() {
            if (bits >> b) & 1 == 1 {
                entries.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        entries.push(run);
        out.push(Composition(entries));
    }
    out
}

/// Duality classes of weight `k`, representatives in descending lexicographic order.
pub fn classes(k: u32) -> Vec<DualityClass> {
    admissible(k)
        .into_iter()
        .filter_map(|a| {
            let d = a.dual_unchecked();
            (a >= d).then_some(DualityClass(a))
        })
        .collect()
}

/// Even compositions of weight `k`, where index `i` holds the doubled
/// composition of the complement-reverse of the `k/2`-bit expansion of `i`.
pub fn even_entries(k: u32) -> Vec<Composition> {
    if k % 2 == 1 {
        return Vec::new();
    }
    if k == 0 {
        return vec![Composition::empty()];
    }
    let h = (k / 2) as usize;
    (0..1u64 << (h - 1))
        .map(|i| {
            let w = BinaryWord::from_index(i, h).complement_reverse();
            Composition::from_word(&w).expect("complement of a leading 0").doubled()
        })
        .collect()
}

/// Self-dual classes of weight `k`, index `i` holding the class of the word
/// `w(i) cr(w(i))` with `w(i)` the `k/2`-bit expansion of `i`.
pub fn self_dual_classes(k: u32) -> Vec<DualityClass> {
    if k % 2 == 1 {
        return Vec::new();
    }
    if k == 0 {
        return vec![DualityClass::empty()];
    }
    let h = (k / 2) as usize;
    (0..1u64 << (h - 1))
        .map(|i| {
            let w = BinaryWord::from_index(i, h);
            let full = w.concat(&w.complement_reverse());
            DualityClass(Composition::from_word(&full).expect("ends in 1"))
        })
        .collect()
}

/// Every composition (admissible or not) of weight `k`, descending lexicographic.
pub fn all_compositions(k: u32) -> Vec<Composition> {
    if k == 0 {
        return vec![Composition::empty()];
    }
    let middle = (k - 1) as usize;
    assert!(middle < 40, "enumeration of weight {k} is too large");
    (0u64..(1u64 << middle))
        .map(|bits| {
            let mut entries = Vec::new();
            let mut run = 1u8;
            for b in (0..middle).rev() {
                if (bits >> b) & 1 == 1 {
                    entries.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            entries.push(run);
            Composition(entries)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn word_examples() {
        assert_eq!(c("2").to_word().to_string(), "01");
        assert_eq!(c("3,1").to_word().to_string(), "0011");
        assert_eq!(Composition::empty().to_word().to_string(), "");
        let w: BinaryWord = "01101".parse().unwrap();
        assert_eq!(Composition::from_word(&w).unwrap(), c("2,1,2"));
        assert!(Composition::from_word(&"0110".parse().unwrap()).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(c("3").dual().unwrap(), c("2,1"));
        assert_eq!(c("4").dual().unwrap(), c("2,1,1"));
        assert_eq!(c("2,2").dual().unwrap(), c("2,2"));
        assert!(c("1,2").dual().is_err());
    }

    #[test]
    fn parts_examples() {
        let a = c("3,2");
        assert_eq!(a.init_part(), c("3"));
        assert_eq!(a.fin_part().unwrap(), c("2,2"));
        assert_eq!(a.mid_part().unwrap(), c("2"));
        assert_eq!(c("2,1,1").fin_part().unwrap(), Composition::empty());
        assert_eq!(c("2,1,3,1").fin_part().unwrap(), c("3,1"));
        let e = Composition::empty();
        assert_eq!(e.init_part(), e);
        assert_eq!(e.fin_part().unwrap(), e);
        assert_eq!(e.mid_part().unwrap(), e);
    }

    #[test]
    fn class_rendering() {
        assert_eq!(c("2,1,1").class().unwrap().to_string(), "[4]");
        assert_eq!(c("2,3,1").class().unwrap().to_string(), "[3,1,2]");
        let k: DualityClass = "[2,1,2]".parse().unwrap();
        assert_eq!(k.to_string(), "[2,3]");
        assert_eq!(DualityClass::empty().to_string(), "[]");
    }

    #[test]
    fn enumeration_examples() {
        let four: Vec<String> = classes(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, ["[4]", "[3,1]", "[2,2]"]);
        let five: Vec<String> = classes(5).iter().map(|x| x.to_string()).collect();
        assert_eq!(five, ["[5]", "[4,1]", "[3,2]", "[2,3]"]);
        assert_eq!(admissible(2), vec![c("2")]);
        assert_eq!(admissible(4), vec![c("4"), c("3,1"), c("2,2"), c("2,1,1")]);
        assert!(enumerate(5, Filter::EvenEntries).is_empty());
        assert!(enumerate(7, Filter::SelfDualClasses).is_empty());
    }

    #[test]
    fn indexed_orders() {
        let sd: Vec<String> = self_dual_classes(8).iter().map(|x| x.to_string()).collect();
        assert_eq!(
            sd,
            [
                "[5,1,1,1]", "[4,2,1,1]", "[3,2,2,1]", "[3,1,3,1]", "[2,3,1,2]", "[2,2,2,2]",
                "[2,1,2,3]", "[2,1,1,4]"
            ]
        );
        let ev: Vec<String> = even_entries(8).iter().map(|x| x.to_string()).collect();
        assert_eq!(ev, ["2,2,2,2", "4,2,2", "2,4,2", "6,2", "2,2,4", "4,4", "2,6", "8"]);
    }

    #[test]
    fn cardinalities() {
        for k in 2..=14u32 {
            assert_eq!(admissible(k).len(), 1 << (k - 2));
            let cls = classes(k);
            let sizes: usize = cls.iter().map(|x| x.members().len()).sum();
            assert_eq!(sizes, 1 << (k - 2));
            if k % 2 == 0 {
                assert_eq!(even_entries(k).len(), 1 << (k / 2 - 1));
                assert_eq!(self_dual_classes(k).len(), 1 << (k / 2 - 1));
                let sd = cls.iter().filter(|x| x.is_self_dual()).count();
                assert_eq!(sd, 1 << (k / 2 - 1));
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("3,x".parse::<Composition>().is_err());
        assert!("0,1".parse::<Composition>().is_err());
        assert!("1,2".parse::<DualityClass>().is_err());
        assert_eq!("()".parse::<Composition>().unwrap(), Composition::empty());
    }
}
