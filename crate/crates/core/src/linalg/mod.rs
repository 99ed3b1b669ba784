//! Exact linear algebra over the rationals.
//!
//! Matrices coming out of Hopf power computations are integral, so the
//! heavy paths work over the integers with `i64` arithmetic first and
//! switch to `BigInt` only when an intermediate value overflows.

mod bareiss;
mod echelon;
mod gauss;
mod matrix;
mod scalar;
mod subspace;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use matrix::{mat_mul, mat_vec, transpose, ExactMatrix};
pub use subspace::{intersect_dim, Subspace};

/// Integer multiple of `v` with coprime entries.
pub(crate) fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        if !x.is_zero() {
            l = l.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &out {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in out.iter_mut() {
            *x = &*x / &g;
        }
    }
    out
}

/// Rank by rational Gauss-Jordan elimination, independent of the integer routines.
pub fn rank_rational(rows: usize, cols: usize, data: &[BigRational]) -> usize {
    let rows_v: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| data[i * cols..(i + 1) * cols].to_vec())
        .collect();
    gauss::rref(cols, rows_v).1.len()
}

/// Reduced row echelon form by rational Gauss-Jordan elimination.
pub fn rref_rational(
    cols: usize,
    rows: Vec<Vec<BigRational>>,
) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    gauss::rref(cols, rows)
}
