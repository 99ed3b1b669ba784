use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::algebra::{HopfAlgebraData, SparseVec};
use super::cache::MatrixCache;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

pub const DEFAULT_EXPONENT_CAP: usize = 256;

/// The matrices `A_n` of the Hopf power maps `[n]`, computed on demand and memoized.
///
/// `A_1 = I` and column `i` of `A_{n+1}` is `Σ c · (A_n e_j) e_k` over the
/// terms `c · e_j ⊗ e_k` of `Δ(e_i)`.
pub struct PowerMatrixFamily {
    algebra: Arc<HopfAlgebraData>,
    source: Option<Arc<PowerMatrixFamily>>,
    matrices: Mutex<Vec<Arc<ExactMatrix>>>,
    eta_epsilon: Arc<ExactMatrix>,
    exponent: OnceLock<usize>,
    cap: usize,
    cache: Option<MatrixCache>,
    hash: OnceLock<String>,
}

/// `ηε`: column `j` is `ε(e_j)` times the unit.
pub fn eta_epsilon_matrix(h: &HopfAlgebraData) -> ExactMatrix {
    let dim = h.dim();
    let mut data = vec![BigInt::zero(); dim * dim];
    for (i, u) in h.unit().iter().enumerate().filter(|t| !t.1.is_zero()) {
        for (j, e) in h.counit().iter().enumerate().filter(|t| !t.1.is_zero()) {
            data[i * dim + j] = u * e;
        }
    }
    ExactMatrix::from_int(dim, dim, data).expect("square shape")
}

fn sparse_columns(m: &ExactMatrix) -> Vec<SparseVec> {
    let n = m.cols();
    let data = m.int_data().expect("power matrices are integral");
    let mut cols = vec![Vec::new(); n];
    for (idx, x) in data.iter().enumerate() {
        if !x.is_zero() {
            cols[idx % n].push((idx / n, x.clone()));
        }
    }
    cols
}

/// Column `i` of the matrix of `h ↦ Σ h₍₁₎^{[m]} h₍₂₎^{[n]}`, given the columns of `A_m`, `A_n`.
pub(crate) fn convolve_column(
    h: &HopfAlgebraData,
    left: &[SparseVec],
    right: &[SparseVec],
    i: usize,
) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); h.dim()];
    for t in h.comult(i) {
        for (l, a) in &left[t.left] {
            let ca = &t.coeff * a;
            for (r, b) in &right[t.right] {
                let cab = &ca * b;
                for (k, c) in h.mult(*l, *r) {
                    acc[*k] += &cab * c;
                }
            }
        }
    }
    acc
}

/// Matrix of the convolution product of two maps given by their matrices.
pub fn convolve(h: &HopfAlgebraData, a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    let dim = h.dim();
    if a.rows() != dim || a.cols() != dim || b.rows() != dim || b.cols() != dim {
        return Err(Error::Shape(format!(
            "convolution needs {dim}x{dim} matrices"
        )));
    }
    if !a.is_integral() || !b.is_integral() {
        return Err(Error::Argument(
            "convolution is implemented for integer matrices".into(),
        ));
    }
    let (ca, cb) = (sparse_columns(a), sparse_columns(b));
    let cols: Vec<Vec<BigInt>> = (0..dim)
        .into_par_iter()
        .map(|i| convolve_column(h, &ca, &cb, i))
        .collect();
    ExactMatrix::from_int_columns(dim, &cols)
}

fn next_power(h: &HopfAlgebraData, prev: &ExactMatrix, identity_cols: &[SparseVec]) -> ExactMatrix {
    let dim = h.dim();
    let cols = sparse_columns(prev);
    let out: Vec<Vec<BigInt>> = (0..dim)
        .into_par_iter()
        .map(|i| convolve_column(h, &cols, identity_cols, i))
        .collect();
    ExactMatrix::from_int_columns(dim, &out).expect("square shape")
}

impl PowerMatrixFamily {
    pub fn new(algebra: impl Into<Arc<HopfAlgebraData>>) -> Self {
        let algebra = algebra.into();
        let eta_epsilon = Arc::new(eta_epsilon_matrix(&algebra));
        PowerMatrixFamily {
            algebra,
            source: None,
            matrices: Mutex::new(Vec::new()),
            eta_epsilon,
            exponent: OnceLock::new(),
            cap: DEFAULT_EXPONENT_CAP,
            cache: None,
            hash: OnceLock::new(),
        }
    }

    /// Family of the dual algebra whose matrices are the transposes of `source`'s.
    pub fn dual_of(source: Arc<PowerMatrixFamily>) -> Result<Self> {
        let algebra = Arc::new(HopfAlgebraData::dual(&source.algebra)?);
        let mut fam = Self::new(algebra);
        fam.cap = source.cap;
        fam.source = Some(source);
        Ok(fam)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.max(1);
        self
    }

    pub fn with_cache(mut self, cache: Option<MatrixCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn algebra(&self) -> &HopfAlgebraData {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<HopfAlgebraData> {
        self.algebra.clone()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// True when matrices are obtained by transposing another family's.
    pub fn is_transposed(&self) -> bool {
        self.source.is_some()
    }

    pub fn eta_epsilon(&self) -> Arc<ExactMatrix> {
        self.eta_epsilon.clone()
    }

    fn hash(&self) -> &str {
        self.hash.get_or_init(|| self.algebra.structure_hash())
    }

    /// `A_n` for `n ≥ 1`.
    pub fn power(&self, n: usize) -> Result<Arc<ExactMatrix>> {
        if n == 0 {
            return Err(Error::Argument("power matrices are indexed from 1".into()));
        }
        if let Some(src) = &self.source {
            let mut mats = self.matrices.lock().expect("matrix store poisoned");
            while mats.len() < n {
                let k = mats.len() + 1;
                mats.push(Arc::new(src.power(k)?.transpose()));
            }
            return Ok(mats[n - 1].clone());
        }
        let mut mats = self.matrices.lock().expect("matrix store poisoned");
        if mats.len() >= n {
            return Ok(mats[n - 1].clone());
        }
        let dim = self.dim();
        let identity_cols: Vec<SparseVec> = (0..dim).map(|i| vec![(i, BigInt::from(1))]).collect();
        while mats.len() < n {
            let k = mats.len() + 1;
            let cached = self
                .cache
                .as_ref()
                .and_then(|c| c.load(self.hash(), k, dim));
            let m = match cached {
                Some(m) => m,
                None => {
                    let m = match mats.last() {
                        None => ExactMatrix::identity(dim),
                        Some(prev) => next_power(&self.algebra, prev, &identity_cols),
                    };
                    if let Some(c) = &self.cache {
                        c.store(self.hash(), k, &m)?;
                    }
                    m
                }
            };
            mats.push(Arc::new(m));
        }
        Ok(mats[n - 1].clone())
    }

    /// Number of matrices computed so far.
    pub fn computed(&self) -> usize {
        self.matrices.lock().expect("matrix store poisoned").len()
    }

    /// Least `n ≥ 1` with `A_n = ηε`.
    pub fn exponent(&self) -> Result<usize> {
        if let Some(e) = self.exponent.get() {
            return Ok(*e);
        }
        let e = match &self.source {
            Some(src) => src.exponent()?,
            None => {
                let mut found = None;
                for n in 1..=self.cap {
                    if *self.power(n)? == *self.eta_epsilon {
                        found = Some(n);
                        break;
                    }
                }
                found.ok_or(Error::CapExceeded { cap: self.cap })?
            }
        };
        if let Some(b) = self.algebra.bowtie_exponent() {
            if b != e {
                return Err(Error::Consistency(format!(
                    "exponent {e} of {} differs from the group exponent {b}",
                    self.algebra.provenance()
                )));
            }
        }
        let _ = self.exponent.set(e);
        Ok(e)
    }

    /// Maps any integer `n` to the representative in `[1, e]` of its class mod `e`.
    pub fn reduce(&self, n: i64) -> Result<usize> {
        let e = self.exponent()? as i64;
        Ok(((n - 1).rem_euclid(e) + 1) as usize)
    }

    /// `A_n` for any integer `n`, using `[n + e] = [n]`.
    pub fn power_mod(&self, n: i64) -> Result<Arc<ExactMatrix>> {
        let m = self.reduce(n)?;
        self.power(m)
    }

    /// The antipode, `A_{e-1}`.
    pub fn antipode(&self) -> Result<Arc<ExactMatrix>> {
        self.power_mod(-1)
    }

    /// `v^{[n]}` for an element given in coordinates.
    pub fn hopf_power(&self, v: &[BigRational], n: i64) -> Result<Vec<BigRational>> {
        if v.len() != self.dim() {
            return Err(Error::Shape(format!(
                "vector of length {} for dimension {}",
                v.len(),
                self.dim()
            )));
        }
        let m = if n >= 1 && self.exponent.get().is_none() {
            self.power(n as usize)?
        } else {
            self.power_mod(n)?
        };
        m.mul_vec(v)
    }
}

impl std::fmt::Debug for PowerMatrixFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PowerMatrixFamily")
            .field("algebra", &self.algebra.provenance())
            .field("computed", &self.computed())
            .field("exponent", &self.exponent.get())
            .finish()
    }
}
