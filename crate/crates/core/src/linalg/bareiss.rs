//! Bareiss fraction-free elimination for ranks of integer matrices.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Rank of a row-major integer matrix.
pub(crate) fn rank(rows: usize, cols: usize, data: &[BigInt]) -> usize {
    let small: Option<Vec<i64>> = data.iter().map(|x| x.to_i64()).collect();
    if let Some(m) = small {
        if let Some(r) = rank_i64(rows, cols, m) {
            return r;
        }
    }
    rank_big(rows, cols, data.to_vec())
}

fn rank_i64(rows: usize, cols: usize, mut m: Vec<i64>) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = m[r * cols + c] as i128;
        for i in r + 1..rows {
            let lead = m[i * cols + c] as i128;
            for j in c + 1..cols {
                let v = (piv * m[i * cols + j] as i128 - lead * m[r * cols + j] as i128) / prev;
                m[i * cols + j] = i64::try_from(v).ok()?;
            }
            m[i * cols + c] = 0;
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

fn rank_big(rows: usize, cols: usize, mut m: Vec<BigInt>) -> usize {
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = m[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = m[i * cols + c].clone();
            for j in c + 1..cols {
                let v = &piv * &m[i * cols + j] - &lead * &m[r * cols + j];
                m[i * cols + j] = v / &prev;
            }
            m[i * cols + c] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}
