//! Saturated integer kernels.
//!
//! The reduced row echelon form is computed modulo several primes, lifted by
//! CRT and rational reconstruction, and accepted only after the lifted kernel
//! vectors are checked to be annihilated exactly over `Z`. That check also
//! certifies the rank: the modular rank is a lower bound and the verified
//! kernel gives the matching upper bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modular::{echelon_mod, primes};
use super::{ExactMatrix, KernelBasis};

/// Give up after this many primes; never reached on well-conditioned input.
const MAX_PRIMES: usize = 96;

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `n/d` with `|n|, d <= sqrt(m/2)` and `n = a d (mod m)`, if it exists.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Lifted echelon data: pivot columns, free columns and the rational
/// entries `R[i][f]` of pivot row `i` in free column `f`.
struct LiftedRref {
    pivots: Vec<usize>,
    free: Vec<usize>,
    entries: Vec<Vec<BigRational>>,
}

impl LiftedRref {
    /// The kernel vector with a 1 in free column `j`, scaled to be integral.
    fn integral_kernel_vector(&self, j: usize, cols: usize) -> Vec<BigInt> {
        let den = self.entries.iter().fold(BigInt::one(), |l, row| l.lcm(row[j].denom()));
        let mut v = vec![BigInt::zero(); cols];
        v[self.free[j]] = den.clone();
        for (row, &p) in self.entries.iter().zip(&self.pivots) {
            v[p] = -(row[j].numer() * (&den / row[j].denom()));
        }
        v
    }
}

fn lift_rref(m: &ExactMatrix) -> LiftedRref {
    let cols = m.cols();
    let mut best: Option<(Vec<usize>, Vec<Vec<BigInt>>, BigInt)> = None;
    for &p in primes().iter().take(MAX_PRIMES) {
        let e = echelon_mod(m, p, true);
        let mut is_pivot = vec![false; cols];
        for &c in &e.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let residues: Vec<Vec<u64>> = e.rows.iter().map(|row| free.iter().map(|&f| row[f]).collect()).collect();
        let pb = BigInt::from(p);

        let better = match &best {
            None => true,
            Some((piv, _, _)) => {
                e.pivots.len() > piv.len() || (e.pivots.len() == piv.len() && e.pivots < *piv)
            }
        };
        if better {
            let acc = residues.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            best = Some((e.pivots.clone(), acc, pb));
        } else {
            let (piv, acc, modulus) = best.as_mut().expect("set above");
            if *piv != e.pivots {
                continue; // unlucky prime
            }
            // x' = x + M * ((r - x) * M^{-1} mod p)
            let minv = modinv(&(&*modulus % &pb), &pb);
            for (arow, rrow) in acc.iter_mut().zip(&residues) {
                for (x, &r) in arow.iter_mut().zip(rrow) {
                    let diff = (BigInt::from(r) - &*x).mod_floor(&pb);
                    let t = (diff * &minv).mod_floor(&pb);
                    *x += &*modulus * t;
                }
            }
            *modulus *= &pb;
        }

        let (piv, acc, modulus) = best.as_ref().expect("set above");
        let mut entries = Vec::with_capacity(acc.len());
        let mut ok = true;
        'rows: for arow in acc {
            let mut row = Vec::with_capacity(arow.len());
            for x in arow {
                match rational_reconstruct(x, modulus) {
                    Some(q) => row.push(q),
                    None => {
                        ok = false;
                        break 'rows;
                    }
                }
            }
            entries.push(row);
        }
        if !ok {
            continue;
        }
        let mut is_pivot = vec![false; cols];
        for &c in piv {
            is_pivot[c] = true;
        }
        let lifted = LiftedRref {
            pivots: piv.clone(),
            free: (0..cols).filter(|&c| !is_pivot[c]).collect(),
            entries,
        };
        let verified = (0..lifted.free.len()).all(|j| {
            let v = lifted.integral_kernel_vector(j, cols);
            m.mul_vec(&v).iter().all(Zero::is_zero)
        });
        if verified {
            return lifted;
        }
    }
    panic!("kernel lift did not stabilise after {MAX_PRIMES} primes");
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "modulus and prime are not coprime");
    e.x.mod_floor(m)
}

pub(crate) fn saturated_kernel(m: &ExactMatrix) -> KernelBasis {
    let cols = m.cols();
    if cols == 0 {
        return KernelBasis::new(0, Vec::new());
    }
    if m.rows() == 0 || m.is_zero() {
        let vecs = (0..cols)
            .map(|j| (0..cols).map(|i| BigInt::from(u8::from(i == j))).collect())
            .collect();
        return KernelBasis::new(cols, vecs);
    }
    let lifted = lift_rref(m);
    let nf = lifted.free.len();
    if nf == 0 {
        return KernelBasis::new(cols, Vec::new());
    }

    // Lattice of free-coordinate vectors f with R f integral, as rows.
    let mut basis: Vec<Vec<BigInt>> =
        (0..nf).map(|j| (0..nf).map(|i| BigInt::from(u8::from(i == j))).collect()).collect();
    for row in &lifted.entries {
        let d = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        if d.is_one() {
            continue;
        }
        let n: Vec<BigInt> = row.iter().map(|q| q.numer() * (&d / q.denom())).collect();
        impose_congruence(&mut basis, &n, &d);
        basis = hermite_normal_form(basis);
    }

    let vectors = basis
        .into_iter()
        .map(|f| {
            let mut x = vec![BigInt::zero(); cols];
            for (j, &c) in lifted.free.iter().enumerate() {
                x[c] = f[j].clone();
            }
            for (row, &p) in lifted.entries.iter().zip(&lifted.pivots) {
                let s = row.iter().zip(&f).fold(BigRational::zero(), |s, (q, y)| {
                    s + q * BigRational::from_integer(y.clone())
                });
                assert!(s.is_integer(), "saturation left a fractional entry");
                x[p] = -s.to_integer();
            }
            x
        })
        .collect::<Vec<_>>();
    debug_assert!(vectors.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero)));
    KernelBasis::new(cols, vectors)
}

/// Replace the lattice spanned by `basis` with its sublattice of vectors
/// `b` satisfying `n . b = 0 (mod d)`.
fn impose_congruence(basis: &mut [Vec<BigInt>], n: &[BigInt], d: &BigInt) {
    let dot = |b: &[BigInt]| n.iter().zip(b).fold(BigInt::zero(), |s, (x, y)| s + x * y).mod_floor(d);
    let mut c: Vec<BigInt> = basis.iter().map(|b| dot(b)).collect();
    let Some(j0) = c.iter().position(|x| !x.is_zero()) else {
        return;
    };
    for j in j0 + 1..basis.len() {
        if c[j].is_zero() {
            continue;
        }
        let e = c[j0].extended_gcd(&c[j]);
        let g = e.gcd;
        let (u, w) = (&c[j] / &g, &c[j0] / &g);
        let bj0 = basis[j0].clone();
        let bj = basis[j].clone();
        basis[j0] = bj0.iter().zip(&bj).map(|(a, b)| &e.x * a + &e.y * b).collect();
        basis[j] = bj0.iter().zip(&bj).map(|(a, b)| &u * a - &w * b).collect();
        c[j0] = g;
        c[j] = BigInt::zero();
    }
    let scale = d / c[j0].gcd(d);
    for x in basis[j0].iter_mut() {
        *x *= &scale;
    }
}

/// Row-style Hermite normal form: echelon rows with positive pivots and the
/// entries above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let e = rows[r][c].extended_gcd(&rows[i][c]);
            let (u, w) = (&rows[i][c] / &e.gcd, &rows[r][c] / &e.gcd);
            let (a, b) = (rows[r].clone(), rows[i].clone());
            rows[r] = a.iter().zip(&b).map(|(x, y)| &e.x * x + &e.y * y).collect();
            rows[i] = a.iter().zip(&b).map(|(x, y)| &u * x - &w * y).collect();
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        let piv = rows[r][c].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&piv);
            if !q.is_zero() {
                let pr = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Integer coordinates of `v` in the lattice spanned by `basis`, if any.
pub(crate) fn coordinates(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = basis.len();
    let n = v.len();
    if basis.iter().any(|b| b.len() != n) {
        return None;
    }
    // Columns are basis vectors, last column is v.
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                basis.iter().map(|b| BigRational::from_integer(b[i].clone())).collect();
            row.push(BigRational::from_integer(v[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pr = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    if pivots.len() < k {
        return None; // dependent basis: coordinates not unique
    }
    let mut coords = vec![BigInt::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        if !a[i][k].is_integer() {
            return None;
        }
        coords[c] = a[i][k].to_integer();
    }
    Some(coords)
}
