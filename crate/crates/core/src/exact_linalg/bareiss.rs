//! Fraction-free elimination and a plain rational Gauss-Jordan, used for
//! determinants, small ranks and as an independent check on the modular path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactMatrix;

pub(crate) fn determinant(m: &ExactMatrix) -> BigInt {
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank by fraction-free row echelon form. Exact, and quadratic in memory
/// only; intended for small matrices and cross-checks.
pub fn rank_bareiss(m: &ExactMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form over `Q`: the pivot columns and the pivot rows.
pub(crate) fn rref_rational(m: &ExactMatrix) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (pivots, a)
}

/// Basis of the right kernel over `Q`, one vector per free column, with a 1
/// in that free column.
pub fn rational_kernel(m: &ExactMatrix) -> Vec<Vec<BigRational>> {
    let (pivots, rref) = rref_rational(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); m.cols()];
            v[f] = BigRational::one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        let m = ExactMatrix::from_i64(&[&[2, 1, 3], &[0, -1, 4], &[5, 2, 0]]).unwrap();
        // 2(0-8) - 1(0-20) + 3(0+5) = -16 + 20 + 15
        assert_eq!(determinant(&m), BigInt::from(19));
        let s = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(determinant(&s), BigInt::from(-1));
        let z = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(determinant(&z), BigInt::zero());
    }

    #[test]
    fn ranks_and_kernels() {
        let m = ExactMatrix::from_i64(&[&[2, 4], &[1, 2]]).unwrap();
        assert_eq!(rank_bareiss(&m), 1);
        let k = rational_kernel(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], BigRational::from_integer(BigInt::from(-2)));
        let w = ExactMatrix::from_i64(&[&[0, 0, 1, 1], &[0, 0, 2, 3]]).unwrap();
        assert_eq!(rank_bareiss(&w), 2);
        assert_eq!(rational_kernel(&w).len(), 2);
    }
}
