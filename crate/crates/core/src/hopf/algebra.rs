use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matched_pair::MatchedPair;

use super::axioms::verify_axioms;

/// Largest dimension any constructor will produce.
pub const MAX_DIM: usize = 1024;

/// Sparse vector: `(index, coefficient)` pairs, indices strictly increasing, no zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// One summand `coeff · e_left ⊗ e_right` of a comultiplication.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ComultTerm {
    pub left: usize,
    pub right: usize,
    pub coeff: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    GroupAlgebra,
    DualGroupAlgebra,
    Bismash,
    Tensor,
    Dual,
    Opposite,
}

/// A finite-dimensional Hopf algebra given by structure constants in a fixed basis.
#[derive(Clone)]
pub struct HopfAlgebraData {
    kind: AlgebraKind,
    provenance: String,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    comult: Vec<Vec<ComultTerm>>,
    counit: Vec<BigInt>,
    unit: Vec<BigInt>,
    bowtie_exponent: Option<usize>,
}

fn normalize_sparse(mut v: Vec<(usize, BigInt)>) -> SparseVec {
    v.sort_by_key(|t| t.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

fn normalize_comult(mut v: Vec<ComultTerm>) -> Vec<ComultTerm> {
    v.sort_by_key(|a| (a.left, a.right));
    let mut out: Vec<ComultTerm> = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(u) if (u.left, u.right) == (t.left, t.right) => u.coeff += t.coeff,
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

fn one_hot(dim: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = BigInt::one();
    v
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::Argument("algebra of dimension 0".into()));
    }
    if dim > MAX_DIM {
        return Err(Error::ResourceLimit(format!(
            "dimension {dim} exceeds the cap {MAX_DIM}"
        )));
    }
    Ok(())
}

impl HopfAlgebraData {
    /// Assembles an algebra from raw structure constants without checking the axioms.
    ///
    /// `mult[i * dim + j]` holds the product `e_i e_j`.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts_unchecked(
        kind: AlgebraKind,
        provenance: impl Into<String>,
        labels: Vec<String>,
        mult: Vec<Vec<(usize, BigInt)>>,
        comult: Vec<Vec<ComultTerm>>,
        counit: Vec<BigInt>,
        unit: Vec<BigInt>,
    ) -> Result<Self> {
        let dim = labels.len();
        check_dim(dim)?;
        if mult.len() != dim * dim
            || comult.len() != dim
            || counit.len() != dim
            || unit.len() != dim
        {
            return Err(Error::Shape(format!(
                "structure constants do not match dimension {dim}"
            )));
        }
        let bad_index = mult.iter().flatten().any(|t| t.0 >= dim)
            || comult
                .iter()
                .flatten()
                .any(|t| t.left >= dim || t.right >= dim);
        if bad_index {
            return Err(Error::Shape("basis index out of range".into()));
        }
        Ok(HopfAlgebraData {
            kind,
            provenance: provenance.into(),
            labels,
            mult: mult.into_iter().map(normalize_sparse).collect(),
            comult: comult.into_iter().map(normalize_comult).collect(),
            counit,
            unit,
            bowtie_exponent: None,
        })
    }

    /// Like [`from_parts_unchecked`](Self::from_parts_unchecked), then runs the axiom scan.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        kind: AlgebraKind,
        provenance: impl Into<String>,
        labels: Vec<String>,
        mult: Vec<Vec<(usize, BigInt)>>,
        comult: Vec<Vec<ComultTerm>>,
        counit: Vec<BigInt>,
        unit: Vec<BigInt>,
    ) -> Result<Self> {
        Self::from_parts_unchecked(kind, provenance, labels, mult, comult, counit, unit)?.checked()
    }

    fn checked(self) -> Result<Self> {
        let report = verify_axioms(&self);
        match report.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::Consistency(format!(
                "{}: {} fails ({})",
                self.provenance, c.axiom, c.detail
            ))),
        }
    }

    pub fn group_algebra(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        check_dim(n)?;
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mult.push(vec![(g.mul(a, b), BigInt::one())]);
            }
        }
        let comult = (0..n)
            .map(|a| {
                vec![ComultTerm {
                    left: a,
                    right: a,
                    coeff: BigInt::one(),
                }]
            })
            .collect();
        Self::from_parts(
            AlgebraKind::GroupAlgebra,
            format!("Q{}", g.name()),
            g.labels().to_vec(),
            mult,
            comult,
            vec![BigInt::one(); n],
            one_hot(n, g.identity()),
        )
    }

    pub fn dual_group_algebra(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        check_dim(n)?;
        let mut mult = vec![Vec::new(); n * n];
        for a in 0..n {
            mult[a * n + a] = vec![(a, BigInt::one())];
        }
        let comult = (0..n)
            .map(|x| {
                (0..n)
                    .map(|u| ComultTerm {
                        left: u,
                        right: g.mul(g.inv(u), x),
                        coeff: BigInt::one(),
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(
            AlgebraKind::DualGroupAlgebra,
            format!("Q^{}", g.name()),
            g.labels().iter().map(|l| format!("d[{l}]")).collect(),
            mult,
            comult,
            one_hot(n, g.identity()),
            vec![BigInt::one(); n],
        )
    }

    /// The bismash product `k^G # kF` of a matched pair.
    ///
    /// Basis element `δ_x # a` has index `a·|G| + x`.
    pub fn bismash(mp: &MatchedPair) -> Result<Self> {
        let (f, g) = (mp.f(), mp.g());
        let (nf, ng) = (f.order(), g.order());
        let dim = nf * ng;
        check_dim(dim)?;
        let idx = |x: usize, a: usize| a * ng + x;
        let mut mult = vec![Vec::new(); dim * dim];
        for a in 0..nf {
            for x in 0..ng {
                let y = mp.hitby(x, a);
                for b in 0..nf {
                    mult[idx(x, a) * dim + idx(y, b)] = vec![(idx(x, f.mul(a, b)), BigInt::one())];
                }
            }
        }
        let mut comult = Vec::with_capacity(dim);
        let mut labels = Vec::with_capacity(dim);
        for a in 0..nf {
            for x in 0..ng {
                let terms = (0..ng)
                    .map(|y| ComultTerm {
                        left: idx(g.mul(x, g.inv(y)), mp.hit(y, a)),
                        right: idx(y, a),
                        coeff: BigInt::one(),
                    })
                    .collect();
                comult.push(terms);
                labels.push(format!("d[{}]#{}", g.label(x), f.label(a)));
            }
        }
        let mut counit = vec![BigInt::zero(); dim];
        let mut unit = vec![BigInt::zero(); dim];
        for a in 0..nf {
            counit[idx(g.identity(), a)] = BigInt::one();
        }
        for x in 0..ng {
            unit[idx(x, f.identity())] = BigInt::one();
        }
        let mut h = Self::from_parts(
            AlgebraKind::Bismash,
            if mp.name().starts_with("D(") {
                format!("D(Q{})", g.name())
            } else {
                format!("Q^{}#Q{}", g.name(), f.name())
            },
            labels,
            mult,
            comult,
            counit,
            unit,
        )?;
        h.bowtie_exponent = Some(mp.bowtie_group()?.exponent());
        Ok(h)
    }

    /// `H ⊗ K`, with `e_i ⊗ f_j` at index `i·dim K + j`.
    pub fn tensor(h: &HopfAlgebraData, k: &HopfAlgebraData) -> Result<Self> {
        let (dh, dk) = (h.dim(), k.dim());
        let dim = dh
            .checked_mul(dk)
            .ok_or_else(|| Error::ResourceLimit("tensor dimension overflows".into()))?;
        check_dim(dim)?;
        let idx = |i: usize, j: usize| i * dk + j;
        let mut mult = vec![Vec::new(); dim * dim];
        for i in 0..dh {
            for j in 0..dk {
                for i2 in 0..dh {
                    for j2 in 0..dk {
                        let mut v = Vec::new();
                        for (a, c) in h.mult(i, i2) {
                            for (b, d) in k.mult(j, j2) {
                                v.push((idx(*a, *b), c * d));
                            }
                        }
                        mult[idx(i, j) * dim + idx(i2, j2)] = v;
                    }
                }
            }
        }
        let mut comult = Vec::with_capacity(dim);
        let mut labels = Vec::with_capacity(dim);
        let mut counit = Vec::with_capacity(dim);
        let mut unit = Vec::with_capacity(dim);
        for i in 0..dh {
            for j in 0..dk {
                let mut terms = Vec::new();
                for s in h.comult(i) {
                    for t in k.comult(j) {
                        terms.push(ComultTerm {
                            left: idx(s.left, t.left),
                            right: idx(s.right, t.right),
                            coeff: &s.coeff * &t.coeff,
                        });
                    }
                }
                comult.push(terms);
                labels.push(format!("{} ⊗ {}", h.label(i), k.label(j)));
                counit.push(&h.counit[i] * &k.counit[j]);
                unit.push(&h.unit[i] * &k.unit[j]);
            }
        }
        Self::from_parts(
            AlgebraKind::Tensor,
            format!("{} ⊗ {}", h.provenance, k.provenance),
            labels,
            mult,
            comult,
            counit,
            unit,
        )
    }

    /// The dual Hopf algebra on the dual basis: multiplication and
    /// comultiplication trade places, as do unit and counit.
    pub fn dual(h: &HopfAlgebraData) -> Result<Self> {
        let dim = h.dim();
        let mut mult = vec![Vec::new(); dim * dim];
        for k in 0..dim {
            for t in h.comult(k) {
                mult[t.left * dim + t.right].push((k, t.coeff.clone()));
            }
        }
        let mut comult = vec![Vec::new(); dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in h.mult(i, j) {
                    comult[*k].push(ComultTerm {
                        left: i,
                        right: j,
                        coeff: c.clone(),
                    });
                }
            }
        }
        Self::from_parts(
            AlgebraKind::Dual,
            format!("({})*", h.provenance),
            h.labels.iter().map(|l| format!("f[{l}]")).collect(),
            mult,
            comult,
            h.unit.clone(),
            h.counit.clone(),
        )
    }

    /// Same coalgebra, multiplication with arguments swapped.
    pub fn opposite(h: &HopfAlgebraData) -> Result<Self> {
        let dim = h.dim();
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                mult.push(h.mult(j, i).to_vec());
            }
        }
        Self::from_parts(
            AlgebraKind::Opposite,
            format!("({})^op", h.provenance),
            h.labels.clone(),
            mult,
            h.comult.clone(),
            h.counit.clone(),
            h.unit.clone(),
        )
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn find_label(&self, text: &str) -> Option<usize> {
        let key = squash(text);
        self.labels.iter().position(|l| squash(l) == key)
    }

    /// The product `e_i e_j`.
    pub fn mult(&self, i: usize, j: usize) -> &[(usize, BigInt)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn comult(&self, i: usize) -> &[ComultTerm] {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[BigInt] {
        &self.counit
    }

    pub fn unit(&self) -> &[BigInt] {
        &self.unit
    }

    /// Exponent of the factorized group, for bismash products.
    pub fn bowtie_exponent(&self) -> Option<usize> {
        self.bowtie_exponent
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, u: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (i, a) in u.iter().enumerate().filter(|t| !t.1.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|t| !t.1.is_zero()) {
                let ab = a * b;
                for (k, c) in self.mult(i, j) {
                    out[*k] += &ab * BigRational::from_integer(c.clone());
                }
            }
        }
        out
    }

    /// Product of two integer sparse vectors.
    pub(crate) fn multiply_sparse(
        &self,
        u: &[(usize, BigInt)],
        v: &[(usize, BigInt)],
    ) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in u {
            for (j, b) in v {
                let ab = a * b;
                for (k, c) in self.mult(*i, *j) {
                    acc.push((*k, &ab * c));
                }
            }
        }
        normalize_sparse(acc)
    }

    pub fn counit_of(&self, v: &[BigRational]) -> BigRational {
        v.iter()
            .zip(&self.counit)
            .filter(|t| !t.1.is_zero())
            .map(|(x, c)| x * BigRational::from_integer(c.clone()))
            .sum()
    }

    pub fn unit_vector(&self) -> Vec<BigRational> {
        self.unit
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect()
    }

    /// True when multiplication, comultiplication, unit and counit agree exactly.
    pub fn same_structure(&self, other: &HopfAlgebraData) -> bool {
        self.dim() == other.dim()
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
    }

    /// Hex SHA-256 of the structure constants; stable across runs.
    pub fn structure_hash(&self) -> String {
        let mut h = Sha256::new();
        let dim = self.dim();
        h.update(format!("dim {dim}\n"));
        for (ij, v) in self.mult.iter().enumerate() {
            for (k, c) in v {
                h.update(format!("m {} {} {k} {c}\n", ij / dim, ij % dim));
            }
        }
        for (i, terms) in self.comult.iter().enumerate() {
            for t in terms {
                h.update(format!("d {i} {} {} {}\n", t.left, t.right, t.coeff));
            }
        }
        for (i, c) in self.counit.iter().enumerate() {
            h.update(format!("e {i} {c}\n"));
        }
        for (i, c) in self.unit.iter().enumerate() {
            h.update(format!("u {i} {c}\n"));
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Canonical spelling of a label: commas read as spaces, single spaces, none beside brackets.
fn squash(s: &str) -> String {
    let words: Vec<&str> = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .collect();
    let mut out = String::new();
    for w in words {
        let glue = out.ends_with(['(', '[', '#', '⊗']) || w.starts_with([')', ']', '#', '⊗', '(']);
        if !out.is_empty() && !glue {
            out.push(' ');
        }
        out.push_str(w);
    }
    out
}

impl fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfAlgebraData")
            .field("kind", &self.kind)
            .field("provenance", &self.provenance)
            .field("dim", &self.dim())
            .finish()
    }
}

pub fn group_algebra(g: &FiniteGroup) -> Result<HopfAlgebraData> {
    HopfAlgebraData::group_algebra(g)
}

pub fn dual_group_algebra(g: &FiniteGroup) -> Result<HopfAlgebraData> {
    HopfAlgebraData::dual_group_algebra(g)
}

pub fn bismash(mp: &MatchedPair) -> Result<HopfAlgebraData> {
    HopfAlgebraData::bismash(mp)
}

pub fn tensor(h: &HopfAlgebraData, k: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    HopfAlgebraData::tensor(h, k)
}

pub fn dual(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    HopfAlgebraData::dual(h)
}

pub fn opposite(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    HopfAlgebraData::opposite(h)
}
