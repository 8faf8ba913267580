//! Exact integer linear algebra: rank, determinant and saturated kernels,
//! plus the matrices of `alpha_k` and `delta_k` and the rank tables built on them.

mod bareiss;
mod builders;
mod lattice;
mod modular;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub use bareiss::{rank_bareiss, rational_kernel};
pub use builders::{
    alpha_block, alpha_matrix, delta_k_matrix, ker_alpha_rank, ker_alpha_ranks, ker_delta_rank, m_k_ranks,
    m_k_via_intersection, th7_block_matrix, IntersectionReport, KER_ALPHA_RANKS, M_K_RANKS,
};
pub use lattice::hermite_normal_form;
pub use modular::{modular_rank, PRIMES};

/// Dense row-major matrix of big integers.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Build from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Domain(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(ExactMatrix { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(columns: &[Vec<BigInt>], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Domain(format!("column {j} has length {}, expected {rows}", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Stack `self` above `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Domain(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        m.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigInt::zero(), |s, (a, b)| s + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Domain(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(bareiss::determinant(self))
    }

    /// Exact rank; the modular rank is confirmed by a verified kernel of
    /// the complementary dimension.
    pub fn rank(&self) -> usize {
        self.cols - self.kernel_basis().rank()
    }

    /// Saturated integer basis of the right kernel.
    pub fn kernel_basis(&self) -> KernelBasis {
        lattice::saturated_kernel(self)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(crate::lincomb::json::int_json).collect()))
                .collect(),
        )
    }

    /// Right-aligned plain text, one row per line.
    pub fn render_text(&self) -> String {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{}", self.rows, self.cols, self.render_text())
    }
}

/// Primitive integer basis of `Ker(M) ∩ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl KernelBasis {
    pub fn new(dim: usize, vectors: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == dim));
        KernelBasis { dim, vectors }
    }

    /// Ambient dimension (number of matrix columns).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        lattice::coordinates(&self.vectors, v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        v.len() == self.dim && self.coordinates(v).is_some()
    }

    /// Equal rank and mutual membership of basis vectors.
    pub fn same_lattice(&self, other: &KernelBasis) -> bool {
        self.dim == other.dim
            && self.rank() == other.rank()
            && self.vectors.iter().all(|v| other.contains(v))
            && other.vectors.iter().all(|v| self.contains(v))
    }

    /// True when every vector has content 1.
    pub fn is_primitive(&self) -> bool {
        self.vectors.iter().all(|v| lattice::content(v) == BigInt::from(1))
    }

    /// Rows of a matrix whose right kernel over `Q` is the span of this basis.
    pub fn annihilator(&self) -> ExactMatrix {
        if self.vectors.is_empty() {
            return ExactMatrix::identity(self.dim);
        }
        let m = ExactMatrix::from_rows(self.vectors.clone(), self.dim).expect("consistent lengths");
        let ann = m.kernel_basis();
        ExactMatrix::from_rows(ann.vectors, self.dim).expect("consistent lengths")
    }

    /// Vectors as rational rows, for display and solving.
    pub fn rational_vectors(&self) -> Vec<Vec<BigRational>> {
        self.vectors
            .iter()
            .map(|v| v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect()
    }
}
