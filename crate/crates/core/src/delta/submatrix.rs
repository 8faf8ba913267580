//! The square block `Delta_k` of `delta_k` between self-dual classes and
//! even compositions, and a checker for its recursive block structure.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::DeltaEngine;
use crate::compositions::{BinaryWord, Composition, DualityClass};
use crate::error::{Error, Result};
use crate::exact_linalg::ExactMatrix;

/// `log2` of the size of `Delta_k`.
fn m(k: u32) -> u32 {
    if k == 0 {
        0
    } else {
        k / 2 - 1
    }
}

fn check_even(k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::Domain(format!("Delta_k needs even k, got {k}")));
    }
    if k > 2 * 24 {
        return Err(Error::Domain(format!("Delta_{k} is too large to build densely")));
    }
    Ok(())
}

/// Column labels: the class of the word `w(i) cr(w(i))`, with `w(i)` the
/// `k/2`-bit expansion of `i`.
pub(crate) fn psi(k: u32) -> Vec<DualityClass> {
    let half = (k / 2) as usize;
    (0..1u64 << m(k))
        .map(|i| {
            let w = BinaryWord::from_index(i, half);
            let a = Composition::from_word(&w.concat(&w.complement_reverse())).expect("word ends in 1");
            DualityClass::of(&a).expect("admissible")
        })
        .collect()
}

/// Row labels: the doubled composition of `cr(w(i))`.
pub(crate) fn phi(k: u32) -> Vec<Composition> {
    let half = (k / 2) as usize;
    (0..1u64 << m(k))
        .map(|i| {
            let w = BinaryWord::from_index(i, half).complement_reverse();
            Composition::from_word(&w).expect("word ends in 1").doubled()
        })
        .collect()
}

/// `Delta_k` for even `k`: entry `(i, j)` is the coefficient of `phi(i)` in
/// `delta(psi(j))`.
pub fn delta_submatrix(k: u32) -> Result<ExactMatrix> {
    check_even(k)?;
    let rows = phi(k);
    let engine = DeltaEngine::global();
    let columns: Vec<Vec<BigInt>> = psi(k)
        .iter()
        .map(|c| {
            let d = engine.class(c);
            rows.iter().map(|b| d.coefficient_of(b)).collect()
        })
        .collect();
    ExactMatrix::from_columns(&columns, rows.len())
}

/// Outcome of checking the block structure of `Delta_k`.
#[derive(Clone, Debug)]
pub struct P7Report {
    pub k: u32,
    /// Row and column blocks are contiguous and have sizes `2^{m(k-2i)}`.
    pub blocks_contiguous: bool,
    /// `U_{i,i} = Delta_{k-2i}` for every `i`.
    pub diagonal_blocks_match: bool,
    /// `U_{i,j} = 0` unless `j` is `i` or `2i`.
    pub off_blocks_vanish: bool,
    pub upper_triangular: bool,
    /// Diagonal reads `3, 1, 3, 1, ...`.
    pub diagonal_alternates: bool,
    pub determinant: BigInt,
}

impl P7Report {
    pub fn holds(&self) -> bool {
        self.blocks_contiguous
            && self.diagonal_blocks_match
            && self.off_blocks_vanish
            && self.upper_triangular
            && self.diagonal_alternates
            && !self.determinant.is_zero()
    }
}

/// Column block of `psi(i)`: one more than the run of ones after the
/// leading zero of `w(i)`. For `k >= 4` this is the last entry of `psi(i)`.
fn column_keys(k: u32) -> Vec<u32> {
    let half = (k / 2) as usize;
    (0..1u64 << m(k))
        .map(|i| {
            let w = BinaryWord::from_index(i, half);
            1 + w.0.iter().skip(1).take_while(|&&b| b).count() as u32
        })
        .collect()
}

/// Contiguous index ranges, grouped by `key`, in order of first appearance.
fn blocks(keys: &[u32]) -> Option<Vec<(u32, std::ops::Range<usize>)>> {
    let mut out: Vec<(u32, std::ops::Range<usize>)> = Vec::new();
    for (i, &key) in keys.iter().enumerate() {
        match out.last_mut() {
            Some((prev, r)) if *prev == key => r.end = i + 1,
            _ => {
                if out.iter().any(|(p, _)| *p == key) {
                    return None;
                }
                out.push((key, i..i + 1));
            }
        }
    }
    Some(out)
}

/// Block checks apply from `k = 4`; `Delta_0` and `Delta_2` are `1x1` and
/// only the determinant and diagonal are checked there.
pub fn p7_blocks(k: u32) -> Result<P7Report> {
    check_even(k)?;
    let d = delta_submatrix(k)?;
    let n = d.rows();
    let row_keys: Vec<u32> = phi(k).iter().map(|b| u32::from(*b.entries().last().unwrap_or(&0)) / 2).collect();
    let col_keys = column_keys(k);

    let mut contiguous = true;
    let mut diag_match = true;
    let mut off_vanish = true;
    match (blocks(&row_keys), blocks(&col_keys)) {
        (Some(rb), Some(cb)) if k >= 4 => {
            for (i, rows) in &rb {
                let want = 1usize << m(k - 2 * i);
                contiguous &= rows.len() == want;
                for (j, cols) in &cb {
                    let r: Vec<usize> = rows.clone().collect();
                    let c: Vec<usize> = cols.clone().collect();
                    let u = d.submatrix(&r, &c);
                    if i == j {
                        diag_match &= u == delta_submatrix(k - 2 * i)?;
                    } else if *j != 2 * i {
                        off_vanish &= u.is_zero();
                    }
                }
            }
            contiguous &= rb.iter().map(|(i, _)| *i).eq(1..=k / 2);
            contiguous &= cb.iter().map(|(j, _)| *j).eq(1..=k / 2);
        }
        (Some(_), Some(_)) => {}
        _ => contiguous = false,
    }

    let diag = d.diagonal();
    let diagonal_alternates = k == 0
        || diag.iter().enumerate().all(|(i, x)| *x == BigInt::from(if i % 2 == 0 { 3 } else { 1 }));
    debug_assert_eq!(diag.len(), n);
    Ok(P7Report {
        k,
        blocks_contiguous: contiguous,
        diagonal_blocks_match: diag_match,
        off_blocks_vanish: off_vanish,
        upper_triangular: d.is_upper_triangular(),
        diagonal_alternates: diagonal_alternates && (k > 0 || diag == vec![BigInt::one()]),
        determinant: d.determinant()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_weight8() {
        let cols: Vec<String> = psi(8).iter().map(|c| c.representative().to_string()).collect();
        assert_eq!(cols, ["5,1,1,1", "4,2,1,1", "3,2,2,1", "3,1,3,1", "2,3,1,2", "2,2,2,2", "2,1,2,3", "2,1,1,4"]);
        let rows: Vec<String> = phi(8).iter().map(|b| b.to_string()).collect();
        assert_eq!(rows, ["2,2,2,2", "4,2,2", "2,4,2", "6,2", "2,2,4", "4,4", "2,6", "8"]);
    }

    #[test]
    fn column_keys_are_last_entries() {
        for k in (4..=12).step_by(2) {
            let last: Vec<u32> = psi(k).iter().map(|c| u32::from(*c.representative().entries().last().unwrap())).collect();
            assert_eq!(column_keys(k), last);
        }
    }

    #[test]
    fn small_matrices() {
        assert_eq!(delta_submatrix(0).unwrap(), ExactMatrix::from_i64(&[&[1]]).unwrap());
        assert_eq!(delta_submatrix(2).unwrap(), ExactMatrix::from_i64(&[&[3]]).unwrap());
        assert_eq!(delta_submatrix(4).unwrap(), ExactMatrix::from_i64(&[&[3, 6], &[0, 1]]).unwrap());
        assert!(delta_submatrix(5).is_err());
    }

    #[test]
    fn structure_to_ten() {
        for k in (0..=10).step_by(2) {
            let r = p7_blocks(k).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }
}
