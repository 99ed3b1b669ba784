//! Plain Gauss-Jordan elimination over the rationals.
//!
//! Serves matrices with non-integral entries and doubles as a reference
//! for the fraction-free routines.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduced row echelon form: nonzero rows (pivot entries 1) and their pivot columns.
pub(crate) fn rref(
    cols: usize,
    mut rows: Vec<Vec<BigRational>>,
) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}
