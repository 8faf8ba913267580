//! Matrices of `alpha_k` and `delta_k`, the intersection construction of
//! `M_k`, the odd-weight block matrix, and the rank tables.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::modular::{primes, reduce};
use super::{ExactMatrix, KernelBasis};
use crate::compositions::{admissible, classes, Composition, DualityClass};
use crate::delta::DeltaEngine;
use crate::error::{Error, Result};
use crate::lincomb::{alpha_parts, LinComb};

/// Ranks of `Ker(alpha_k)` for `k = 1..=16`.
pub const KER_ALPHA_RANKS: [usize; 16] = [0, 0, 0, 0, 0, 1, 0, 3, 2, 9, 10, 31, 42, 105, 165, 364];

/// Ranks of `M_k = Ker(delta_k)` for `k = 0..=16`.
pub const M_K_RANKS: [usize; 17] = [0, 0, 0, 0, 0, 0, 1, 0, 4, 2, 14, 15, 52, 78, 200, 350, 789];

fn index_of<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> HashMap<T, usize> {
    items.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect()
}

/// `alpha([a])` as class coefficients.
fn alpha_of(c: &DualityClass) -> LinComb<DualityClass, BigInt> {
    let mut out = LinComb::zero();
    for part in alpha_parts(c.representative()).expect("representatives are admissible") {
        out.add_term(DualityClass::of(&part).expect("admissible part"), BigInt::one());
    }
    out
}

/// Block `alpha_{k',k}`: rows `B_{k'}`, columns `B_k`.
pub fn alpha_block(k_low: u32, k: u32) -> ExactMatrix {
    let rows = classes(k_low);
    let cols = classes(k);
    let idx = index_of(&rows);
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (b, x) in alpha_of(c).iter() {
            if let Some(&i) = idx.get(b) {
                m.set(i, j, m.get(i, j) + x);
            }
        }
    }
    m
}

/// `alpha_k`: columns `B_k`, rows `B_0, B_1, ..., B_{k-1}` stacked in that order.
pub fn alpha_matrix(k: u32) -> ExactMatrix {
    let cols = classes(k).len();
    let mut m = ExactMatrix::zeros(0, cols);
    for kl in 0..k {
        m = m.vstack(&alpha_block(kl, k)).expect("same column count");
    }
    m
}

/// `delta_k`: columns `B_k`, rows `A_k`, column `[a]` holding `delta([a])`.
pub fn delta_k_matrix(k: u32) -> ExactMatrix {
    let rows = admissible(k);
    let cols = classes(k);
    let idx = index_of(&rows);
    let engine = DeltaEngine::global();
    let columns: Vec<Vec<BigInt>> = cols
        .par_iter()
        .map(|c| {
            let mut col = vec![BigInt::zero(); rows.len()];
            for (b, x) in engine.class(c).iter() {
                col[idx[b]] = x.clone();
            }
            col
        })
        .collect();
    ExactMatrix::from_columns(&columns, rows.len()).expect("consistent lengths")
}

pub fn ker_alpha_rank(k: u32) -> usize {
    alpha_matrix(k).kernel_basis().rank()
}

pub fn ker_delta_rank(k: u32) -> usize {
    delta_k_matrix(k).kernel_basis().rank()
}

/// `(k, rank Ker(alpha_k))` for `1 <= k <= max_k`. Weights above 12 use
/// modular elimination; see [`modular_kernel_rank`].
pub fn ker_alpha_ranks(max_k: u32) -> Vec<(u32, usize)> {
    (1..=max_k)
        .into_par_iter()
        .map(|k| {
            let r = if k <= 12 { ker_alpha_rank(k) } else { modular_kernel_rank(&alpha_columns(k), alpha_rows(k)) };
            (k, r)
        })
        .collect()
}

/// `(k, rank M_k)` for `0 <= k <= max_k`, with the same split as [`ker_alpha_ranks`].
pub fn m_k_ranks(max_k: u32) -> Vec<(u32, usize)> {
    (0..=max_k)
        .map(|k| {
            let r = if k <= 12 { ker_delta_rank(k) } else { modular_kernel_rank(&delta_columns(k), admissible(k).len()) };
            (k, r)
        })
        .collect()
}

fn alpha_rows(k: u32) -> usize {
    (0..k).map(|kl| classes(kl).len()).sum()
}

fn alpha_columns(k: u32) -> Vec<Vec<(usize, BigInt)>> {
    let mut offset = HashMap::new();
    let mut base = 0;
    for kl in 0..k {
        let cs = classes(kl);
        for (i, c) in cs.iter().enumerate() {
            offset.insert(c.clone(), base + i);
        }
        base += cs.len();
    }
    classes(k)
        .iter()
        .map(|c| alpha_of(c).iter().map(|(b, x)| (offset[b], x.clone())).collect())
        .collect()
}

fn delta_columns(k: u32) -> Vec<Vec<(usize, BigInt)>> {
    let rows: Vec<Composition> = admissible(k);
    let idx = index_of(&rows);
    let engine = DeltaEngine::global();
    classes(k)
        .par_iter()
        .map(|c| engine.class(c).iter().map(|(b, x)| (idx[b], x.clone())).collect())
        .collect()
}

/// Kernel dimension of a sparse column matrix from elimination modulo two
/// primes that must agree. The elimination is done on the transpose, storing
/// only the pivot rows, so memory stays at `rank x rows` words.
fn modular_kernel_rank(columns: &[Vec<(usize, BigInt)>], nrows: usize) -> usize {
    let ranks: Vec<usize> = primes()
        .iter()
        .take(2)
        .map(|&p| {
            let cols: Vec<Vec<(usize, u64)>> = columns
                .iter()
                .map(|c| c.iter().map(|(i, x)| (*i, reduce(x, p))).filter(|(_, x)| *x != 0).collect())
                .collect();
            incremental_rank_mod(&cols, nrows, p)
        })
        .collect();
    assert!(ranks.windows(2).all(|w| w[0] == w[1]), "modular ranks disagree: {ranks:?}");
    columns.len() - ranks[0]
}

/// Insert vectors one at a time into an echelon basis modulo `p`.
fn incremental_rank_mod(vectors: &[Vec<(usize, u64)>], len: usize, p: u64) -> usize {
    // pivot column -> normalised row
    let mut basis: Vec<Option<Vec<u32>>> = vec![None; len];
    let mut rank = 0;
    for v in vectors {
        let mut row = vec![0u64; len];
        for &(i, x) in v {
            row[i] = (row[i] + x) % p;
        }
        let mut c = 0;
        loop {
            while c < len && row[c] == 0 {
                c += 1;
            }
            if c == len {
                break;
            }
            match &basis[c] {
                Some(b) => {
                    let f = p - row[c];
                    row[c..]
                        .par_iter_mut()
                        .with_min_len(4096)
                        .zip(b[c..].par_iter())
                        .for_each(|(x, &y)| {
                            if y != 0 {
                                *x = (*x + f * u64::from(y)) % p;
                            }
                        });
                }
                None => {
                    let inv = super::modular::pow_mod(row[c], p - 2, p);
                    basis[c] = Some(row.iter().map(|&x| (x * inv % p) as u32).collect());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Result of comparing the intersection construction with `Ker(delta_k)`.
#[derive(Clone, Debug)]
pub struct IntersectionReport {
    pub k: u32,
    pub intersection: KernelBasis,
    pub delta_kernel: KernelBasis,
    pub same_lattice: bool,
}

/// `M_k` built from `alpha` alone: `M_0 = 0` and, for `k >= 1`, `M_k` is the
/// set of `x` with `alpha_{k',k}(x) in M_{k'}` for all `k' < k`. Each report
/// compares against the saturated kernel of `delta_k`.
pub fn m_k_via_intersection(max_k: u32) -> Vec<IntersectionReport> {
    let mut lower: Vec<KernelBasis> = Vec::new();
    let mut out = Vec::new();
    for k in 0..=max_k {
        let ncols = classes(k).len();
        let basis = if k == 0 {
            KernelBasis::new(ncols, Vec::new())
        } else {
            let mut stacked = ExactMatrix::zeros(0, ncols);
            for (kl, m) in lower.iter().enumerate() {
                let block = m.annihilator().mul(&alpha_block(kl as u32, k)).expect("conformable");
                stacked = stacked.vstack(&block).expect("same column count");
            }
            stacked.kernel_basis()
        };
        let delta_kernel = delta_k_matrix(k).kernel_basis();
        let same_lattice = basis.same_lattice(&delta_kernel);
        lower.push(basis.clone());
        out.push(IntersectionReport { k, intersection: basis, delta_kernel, same_lattice });
    }
    out
}

fn binom(n: u32, k: i64) -> BigInt {
    if k < 0 || k > i64::from(n) {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn pow(b: u32, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(b), e as usize)
}

/// The `(k-1) x (k-1)` matrix `[[A, B], [C, D]]` relating the sums with a
/// single 1 or 3 among twos to the constant basis, for odd `k >= 3`.
pub fn th7_block_matrix(k: u32) -> Result<ExactMatrix> {
    if k % 2 == 0 || k < 3 {
        return Err(Error::Domain(format!("th7_block_matrix needs odd k >= 3, got {k}")));
    }
    let h = ((k - 1) / 2) as usize;
    let ki = i64::from(k);
    let mut m = ExactMatrix::zeros(2 * h, 2 * h);
    for p in 1..=h {
        for q in 1..=h {
            let (pi, qu) = (p as i64, q as u32);
            let a = -binom(2 * qu - 1, 2 * pi - 2) * (pow(2, 2 * qu - 1) + 1);
            let b = -binom(2 * qu, 2 * pi - 2) * (pow(2, 2 * qu) - 1) * (pow(3, 2 * qu) - 1)
                + binom(2 * qu, ki + 1 - 2 * pi) * pow(2, 2 * qu + 1) * pow(3, 2 * qu);
            let c = binom(2 * qu - 1, ki - 2 * pi) * pow(2, 2 * qu - 1);
            let d = -binom(2 * qu, ki - 2 * pi) * pow(2, 2 * qu) * (pow(3, 2 * qu) - 1)
                - BigInt::from(2) * binom(2 * qu, 2 * pi - 1) * (pow(2, 2 * qu) - 1) * pow(3, 2 * qu);
            m.set(p - 1, q - 1, a);
            m.set(p - 1, h + q - 1, b);
            m.set(h + p - 1, q - 1, c);
            m.set(h + p - 1, h + q - 1, d);
        }
    }
    Ok(m)
}
