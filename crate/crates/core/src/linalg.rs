//! Small exact linear algebra kernels: rational RREF and inversion, integer
//! Hermite normal form, prime-field elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form. Returns the nonzero reduced rows and their pivot
/// column indices (strictly increasing).
pub fn rref(mut rows: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(sel) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..ncols {
                    let t = &rows[rank][c] * &f;
                    rows[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rat_rank(rows: Vec<Vec<BigRational>>) -> usize {
    rref(rows).1.len()
}

/// Inverse of a square rational matrix; `None` when singular.
pub fn invert(mat: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<BigRational>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let sel = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, sel);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let t = &aug[col][c] * &f;
                    aug[r][c] -= t;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row-style Hermite normal form of the lattice spanned by the input rows:
/// canonical basis with positive pivots and entries above each pivot reduced
/// into [0, pivot).
pub fn hnf(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    for col in 0..ncols {
        // Clear column `col` below the current rank using extended gcd row ops.
        loop {
            let mut idxs: Vec<usize> =
                (rank..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
            if idxs.is_empty() {
                break;
            }
            if idxs.len() == 1 {
                let r = idxs[0];
                rows.swap(rank, r);
                if rows[rank][col].is_negative() {
                    for x in rows[rank].iter_mut() {
                        *x = -&*x;
                    }
                }
                break;
            }
            // Combine the two rows with smallest |entry|.
            idxs.sort_by_key(|&r| rows[r][col].abs());
            let (a, b) = (idxs[0], idxs[1]);
            let q = rows[b][col].div_floor(&rows[a][col]);
            for c in 0..ncols {
                let t = &rows[a][c] * &q;
                rows[b][c] -= t;
            }
        }
        if rank < rows.len() && !rows[rank][col].is_zero() {
            // Reduce entries above the pivot.
            for r in 0..rank {
                if !rows[r][col].is_zero() {
                    let q = rows[r][col].div_floor(&rows[rank][col]);
                    for c in 0..ncols {
                        let t = &rows[rank][c] * &q;
                        rows[r][c] -= t;
                    }
                }
            }
            rank += 1;
        }
    }
    rows.truncate(rank);
    rows
}

/// Gaussian elimination over F_p. Returns (rank, kernel basis) of the matrix
/// viewed as a linear map on column vectors of length `ncols` (rows are the
/// equations).
pub fn fp_kernel(p: u64, rows: &[Vec<u64>], ncols: usize) -> (usize, Vec<Vec<u64>>) {
    let mulp = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powp = |mut a: u64, mut e: u64| {
        let mut acc = 1u64 % p;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulp(acc, a);
            }
            a = mulp(a, a);
            e >>= 1;
        }
        acc
    };
    let invp = |a: u64| powp(a, p - 2);

    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(sel) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, sel);
        let inv = invp(m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = mulp(*x, inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..ncols {
                    let t = mulp(m[rank][c], f);
                    m[r][c] = (m[r][c] + p - t) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let mut kernel = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // row r: x_pc + sum(m[r][c] x_c) = 0 over free cols
            let coef = m[r][free];
            if coef != 0 {
                v[pc] = (p - coef) % p;
            }
        }
        kernel.push(v);
    }
    (rank, kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rref_and_invert() {
        let (rows, pivots) = rref(vec![vec![q(2), q(4)], vec![q(1), q(2)]]);
        assert_eq!(pivots, vec![0]);
        assert_eq!(rows, vec![vec![q(1), q(2)]]);
        let inv = invert(&[vec![q(2), q(1)], vec![q(1), q(1)]]).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
    }

    #[test]
    fn hnf_canonical() {
        let b = |n: i64| BigInt::from(n);
        let rows = hnf(vec![vec![b(4), b(6)], vec![b(2), b(2)]]);
        // Lattice spanned by (4,6),(2,2): HNF basis (2,0),(0,2).
        assert_eq!(rows, vec![vec![b(2), b(0)], vec![b(0), b(2)]]);
    }

    #[test]
    fn fp_kernel_simple() {
        // x + y = 0 over F5: kernel = span{(4,1)} normalised with free var y=1 -> (-1,1).
        let (rank, ker) = fp_kernel(5, &[vec![1, 1]], 2);
        assert_eq!(rank, 1);
        assert_eq!(ker, vec![vec![4, 1]]);
    }
}
