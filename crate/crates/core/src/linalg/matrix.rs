use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::subspace::Subspace;
use super::{bareiss, gauss};
use crate::error::{Error, Result};

/// Dense matrix of exact rationals, stored row-major.
///
/// Matrices whose entries are all integers are kept in integer form; every
/// constructor normalizes, so two equal matrices always have equal storage.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Entries,
}

#[derive(Clone, PartialEq, Eq)]
enum Entries {
    Int(Vec<BigInt>),
    Rat(Vec<BigRational>),
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: Entries::Int(vec![BigInt::zero(); rows * cols]),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        if let Entries::Int(d) = &mut m.data {
            for i in 0..n {
                d[i * n + i] = BigInt::one();
            }
        }
        m
    }

    pub fn from_int(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            data: Entries::Int(data),
        })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        Self::from_int(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_rational(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().all(|x| x.is_integer()) {
            let ints = data.into_iter().map(|x| x.to_integer()).collect();
            return Ok(ExactMatrix {
                rows,
                cols,
                data: Entries::Int(ints),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            data: Entries::Rat(data),
        })
    }

    /// Builds a square integer matrix from its columns.
    pub fn from_int_columns(n: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        if columns.len() != n || columns.iter().any(|c| c.len() != n) {
            return Err(Error::Shape(format!("expected {n} columns of length {n}")));
        }
        let mut data = vec![BigInt::zero(); n * n];
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    data[i * n + j] = x.clone();
                }
            }
        }
        Ok(ExactMatrix {
            rows: n,
            cols: n,
            data: Entries::Int(data),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_integral(&self) -> bool {
        matches!(self.data, Entries::Int(_))
    }

    /// Row-major integer entries, if the matrix is integral.
    pub fn int_data(&self) -> Option<&[BigInt]> {
        match &self.data {
            Entries::Int(d) => Some(d),
            Entries::Rat(_) => None,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        match &self.data {
            Entries::Int(d) => BigRational::from_integer(d[i * self.cols + j].clone()),
            Entries::Rat(d) => d[i * self.cols + j].clone(),
        }
    }

    fn rational_data(&self) -> Vec<BigRational> {
        match &self.data {
            Entries::Int(d) => d.iter().cloned().map(BigRational::from_integer).collect(),
            Entries::Rat(d) => d.clone(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigRational> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// Rows as integer vectors after clearing each row's denominators.
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        match &self.data {
            Entries::Int(d) => d
                .chunks(self.cols.max(1))
                .take(self.rows)
                .map(|r| r.to_vec())
                .collect(),
            Entries::Rat(_) => (0..self.rows)
                .map(|i| super::clear_denominators(&self.row(i)))
                .collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let (r, c) = (self.rows, self.cols);
        let data = match &self.data {
            Entries::Int(d) => {
                Entries::Int((0..c * r).map(|k| d[(k % r) * c + k / r].clone()).collect())
            }
            Entries::Rat(d) => {
                Entries::Rat((0..c * r).map(|k| d[(k % r) * c + k / r].clone()).collect())
            }
        };
        ExactMatrix {
            rows: c,
            cols: r,
            data,
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        match (&self.data, &other.data) {
            (Entries::Int(a), Entries::Int(b)) => {
                let mut out = vec![BigInt::zero(); n * p];
                for i in 0..n {
                    for k in 0..m {
                        let x = &a[i * m + k];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..p {
                            let y = &b[k * p + j];
                            if !y.is_zero() {
                                out[i * p + j] += x * y;
                            }
                        }
                    }
                }
                ExactMatrix::from_int(n, p, out)
            }
            _ => {
                let (a, b) = (self.rational_data(), other.rational_data());
                let mut out = vec![BigRational::zero(); n * p];
                for i in 0..n {
                    for k in 0..m {
                        let x = &a[i * m + k];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..p {
                            let y = &b[k * p + j];
                            if !y.is_zero() {
                                out[i * p + j] += x * y;
                            }
                        }
                    }
                }
                ExactMatrix::from_rational(n, p, out)
            }
        }
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![BigRational::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                match &self.data {
                    Entries::Int(d) => {
                        let a = &d[i * self.cols + j];
                        if !a.is_zero() {
                            *o += x * BigRational::from_integer(a.clone());
                        }
                    }
                    Entries::Rat(d) => {
                        let a = &d[i * self.cols + j];
                        if !a.is_zero() {
                            *o += x * a;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &ExactMatrix,
        fi: impl Fn(&BigInt, &BigInt) -> BigInt,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<ExactMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("operands differ in shape".into()));
        }
        match (&self.data, &other.data) {
            (Entries::Int(a), Entries::Int(b)) => ExactMatrix::from_int(
                self.rows,
                self.cols,
                a.iter().zip(b).map(|(x, y)| fi(x, y)).collect(),
            ),
            _ => {
                let (a, b) = (self.rational_data(), other.rational_data());
                ExactMatrix::from_rational(
                    self.rows,
                    self.cols,
                    a.iter().zip(&b).map(|(x, y)| fr(x, y)).collect(),
                )
            }
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |x, y| x - y, |x, y| x - y)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip_with(other, |x, y| x + y, |x, y| x + y)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == ExactMatrix::identity(self.rows)
    }

    /// Rank over the rationals.
    ///
    /// Integer matrices go through Bareiss elimination; others through
    /// Gauss-Jordan on rationals.
    pub fn rank(&self) -> usize {
        match &self.data {
            Entries::Int(d) => bareiss::rank(self.rows, self.cols, d),
            Entries::Rat(_) => {
                let rows = (0..self.rows).map(|i| self.row(i)).collect();
                gauss::rref(self.cols, rows).1.len()
            }
        }
    }

    /// Canonical basis of `{ v : self · v = 0 }`.
    pub fn nullspace(&self) -> Subspace {
        self.row_space().annihilator()
    }

    /// Canonical basis of the span of the rows.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_int_rows(self.cols, &self.integer_rows())
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        match &self.data {
            Entries::Int(d) => d.iter().filter(|x| !x.is_zero()).count(),
            Entries::Rat(d) => d.iter().filter(|x| !x.is_zero()).count(),
        }
    }
}

pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    a.mul(b)
}

pub fn mat_vec(a: &ExactMatrix, v: &[BigRational]) -> Result<Vec<BigRational>> {
    a.mul_vec(v)
}

pub fn transpose(a: &ExactMatrix) -> ExactMatrix {
    a.transpose()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn basics() {
        let a = ExactMatrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(a.mul(&ExactMatrix::identity(3)).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(2, 1), q(6, 1));
        assert!(a.mul(&a).is_err());
        assert_eq!(a.rank(), 2);
        assert_eq!(ExactMatrix::zeros(4, 4).rank(), 0);
        assert_eq!(ExactMatrix::identity(6).rank(), 6);
        assert_eq!(ExactMatrix::identity(6).nullspace().dim(), 0);
    }

    #[test]
    fn rational_entries_normalize() {
        let a = ExactMatrix::from_rational(1, 2, vec![q(2, 2), q(4, 1)]).unwrap();
        assert!(a.is_integral());
        let b = ExactMatrix::from_rational(1, 2, vec![q(1, 2), q(4, 1)]).unwrap();
        assert!(!b.is_integral());
        assert_eq!(b.rank(), 1);
        let two = ExactMatrix::from_rational(1, 1, vec![q(2, 1)]).unwrap();
        assert_eq!(b.transpose().mul(&two).unwrap().get(0, 0), q(1, 1));
    }

    #[test]
    fn mul_vec_and_sub() {
        let a = ExactMatrix::from_i64(2, 2, &[1, 1, 0, 2]).unwrap();
        assert_eq!(
            a.mul_vec(&[q(1, 2), q(1, 3)]).unwrap(),
            vec![q(5, 6), q(2, 3)]
        );
        assert!(a.sub(&a).unwrap() == ExactMatrix::zeros(2, 2));
    }
}
