use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::clear_denominators;
use super::echelon::{reduce_rows, IntEchelon, Mode};
use crate::error::{Error, Result};

/// A subspace of `Q^d` in canonical form.
///
/// The basis is the reduced row echelon form of any spanning set: pivot
/// entries are 1 and every basis vector is zero in the other vectors' pivot
/// columns. Equal subspaces therefore have identical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
    // primitive integer multiples of `basis`, same order
    int_basis: Vec<Vec<BigInt>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
            int_basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows: Vec<Vec<BigInt>> = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_int_rows(ambient, &rows)
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<BigRational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::Shape(format!(
                "vector of length {} in Q^{ambient}",
                v.len()
            )));
        }
        let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| clear_denominators(v)).collect();
        Ok(Self::from_int_rows(ambient, &rows))
    }

    pub(crate) fn from_int_rows(ambient: usize, rows: &[Vec<BigInt>]) -> Self {
        Self::from_reduced(reduce_rows(ambient, Mode::Reduced, &[], rows))
    }

    fn from_reduced(e: IntEchelon) -> Self {
        let basis = e
            .rows
            .iter()
            .zip(&e.pivots)
            .map(|(row, &p)| {
                let d = &row[p];
                row.iter()
                    .map(|x| BigRational::new(x.clone(), d.clone()))
                    .collect()
            })
            .collect();
        Subspace {
            ambient: e.width,
            basis,
            pivots: e.pivots,
            int_basis: e.rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn seeds(&self) -> Vec<(Vec<BigInt>, usize)> {
        self.int_basis
            .iter()
            .cloned()
            .zip(self.pivots.iter().copied())
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Shape(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// `dim(U + V)`: the rank of both bases stacked together.
    pub fn sum_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_ambient(other)?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(
            reduce_rows(self.ambient, Mode::Echelon, &big.seeds(), &small.int_basis)
                .rows
                .len(),
        )
    }

    /// `dim(U ∩ V) = dim U + dim V - dim(U + V)`.
    pub fn intersect_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum_dim(other)?)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_reduced(reduce_rows(
            self.ambient,
            Mode::Reduced,
            &self.seeds(),
            &other.int_basis,
        )))
    }

    /// `{ w : w · v = 0 for all v in self }` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let n = self.ambient;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(n - self.dim());
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            // x_f = L, x_{p_r} = -row_r[f] * L / row_r[p_r]
            let mut lcm = BigInt::one();
            for (row, &p) in self.int_basis.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    lcm = lcm.lcm(&row[p]);
                }
            }
            let mut v = vec![BigInt::zero(); n];
            v[f] = lcm.clone();
            for (row, &p) in self.int_basis.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = -(&row[f] * &lcm) / &row[p];
                }
            }
            rows.push(v);
        }
        Self::from_int_rows(n, &rows)
    }

    /// Explicit basis of `U ∩ V`, computed as `(U^⊥ + V^⊥)^⊥`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn contains(&self, v: &[BigRational]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::Shape(format!(
                "vector of length {} in Q^{}",
                v.len(),
                self.ambient
            )));
        }
        let row = clear_denominators(v);
        if row.iter().all(|x| x.is_zero()) {
            return Ok(true);
        }
        let e = reduce_rows(
            self.ambient,
            Mode::Echelon,
            &self.seeds(),
            std::slice::from_ref(&row),
        );
        Ok(e.rows.len() == self.dim())
    }
}

/// Free-function form of [`Subspace::intersect_dim`].
pub fn intersect_dim(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.intersect_dim(v)
}
