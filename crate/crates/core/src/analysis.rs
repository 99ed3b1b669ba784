//! Trivial power spaces, their dimension tables, Hopf orders and the
//! consistency checks built on them.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hopf::{HopfAlgebraData, PowerMatrixFamily};
use crate::linalg::{ExactMatrix, Subspace};

fn shifted(fam: &PowerMatrixFamily, n: usize) -> Result<ExactMatrix> {
    fam.power(n)?.sub(&fam.eta_epsilon())
}

/// `TPS_n = ker(A_n - ηε)` in canonical form.
pub fn tps_basis(fam: &PowerMatrixFamily, n: usize) -> Result<Subspace> {
    Ok(shifted(fam, n)?.nullspace())
}

/// `tpd_n = dim TPS_n`.
pub fn tpd(fam: &PowerMatrixFamily, n: usize) -> Result<usize> {
    Ok(fam.dim() - shifted(fam, n)?.rank())
}

/// `tpd_{m,n} = dim(TPS_m ∩ TPS_n)`.
pub fn tpd_pair(fam: &PowerMatrixFamily, m: usize, n: usize) -> Result<usize> {
    let a = TpsSpace::new(fam, m)?;
    let b = TpsSpace::new(fam, n)?;
    a.meet_dim(&b)
}

/// `TPS_n` held both as a kernel basis and through its annihilator, the row
/// space of `A_n - ηε`.
#[derive(Clone, Debug)]
pub struct TpsSpace {
    pub n: usize,
    pub kernel: Subspace,
    pub annihilator: Subspace,
}

impl TpsSpace {
    pub fn new(fam: &PowerMatrixFamily, n: usize) -> Result<Self> {
        let annihilator = shifted(fam, n)?.row_space();
        let kernel = annihilator.annihilator();
        Ok(TpsSpace {
            n,
            kernel,
            annihilator,
        })
    }

    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    /// `dim(TPS_m ∩ TPS_n)`, through whichever pair of bases is smaller.
    ///
    /// `dim(U ∩ V) = dim U + dim V - dim(U + V)` on kernels, or
    /// `dim(U ∩ V) = d - dim(U^⊥ + V^⊥)` on annihilators.
    pub fn meet_dim(&self, other: &TpsSpace) -> Result<usize> {
        let (k1, k2) = (self.kernel.dim(), other.kernel.dim());
        let (r1, r2) = (self.annihilator.dim(), other.annihilator.dim());
        if k1.min(k2) * k1.max(k2) <= r1.min(r2) * r1.max(r2) {
            self.kernel.intersect_dim(&other.kernel)
        } else {
            Ok(self.kernel.ambient_dim() - self.annihilator.sum_dim(&other.annihilator)?)
        }
    }

    /// Same as [`meet_dim`](Self::meet_dim), always through the kernels.
    pub fn meet_dim_by_kernels(&self, other: &TpsSpace) -> Result<usize> {
        self.kernel.intersect_dim(&other.kernel)
    }

    /// Same as [`meet_dim`](Self::meet_dim), always through the annihilators.
    pub fn meet_dim_by_annihilators(&self, other: &TpsSpace) -> Result<usize> {
        Ok(self.kernel.ambient_dim() - self.annihilator.sum_dim(&other.annihilator)?)
    }
}

/// The upper triangular table `tpd_{i,j}` for `1 ≤ i ≤ j ≤ e-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpdTable {
    pub provenance: String,
    pub dim: usize,
    pub exponent: usize,
    // row-major upper triangle
    cells: Vec<usize>,
    /// `tpn_n` for `n = 1..e-1`, for group algebras.
    pub group_tpn: Option<Vec<usize>>,
}

fn tri_index(size: usize, i: usize, j: usize) -> usize {
    // rows 1..=size, row i holds columns i..=size
    let (i, j) = (i - 1, j - 1);
    i * size + j - i - i * i.saturating_sub(1) / 2
}

impl TpdTable {
    /// Builds a table from a cell function over `1 ≤ i ≤ j ≤ e-1`.
    pub fn from_fn(
        provenance: impl Into<String>,
        dim: usize,
        exponent: usize,
        mut cell: impl FnMut(usize, usize) -> usize,
    ) -> Self {
        let size = exponent.saturating_sub(1);
        let mut cells = Vec::with_capacity(size * (size + 1) / 2);
        for i in 1..=size {
            for j in i..=size {
                cells.push(cell(i, j));
            }
        }
        TpdTable {
            provenance: provenance.into(),
            dim,
            exponent,
            cells,
            group_tpn: None,
        }
    }

    /// Number of rows and columns, `e - 1`.
    pub fn size(&self) -> usize {
        self.exponent.saturating_sub(1)
    }

    /// `tpd_{i,j}` for `1 ≤ i, j ≤ e`; symmetric in its arguments.
    pub fn get(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        assert!(
            i >= 1 && j <= self.exponent,
            "cell ({i},{j}) outside 1..{}",
            self.exponent
        );
        if j == self.exponent {
            return if i == self.exponent {
                self.dim
            } else {
                self.get(i, i)
            };
        }
        self.cells[tri_index(self.size(), i, j)]
    }

    pub fn diagonal(&self) -> Vec<usize> {
        (1..=self.size()).map(|n| self.get(n, n)).collect()
    }

    pub fn with_tpn(mut self, tpn: Vec<usize>) -> Self {
        self.group_tpn = Some(tpn);
        self
    }
}

/// Computes every cell of the table, in parallel over cells.
pub fn tpd_table(fam: &PowerMatrixFamily) -> Result<TpdTable> {
    let e = fam.exponent()?;
    for n in 1..e {
        fam.power(n)?;
    }
    let spaces: Vec<TpsSpace> = (1..e)
        .into_par_iter()
        .map(|n| TpsSpace::new(fam, n))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (1..e).flat_map(|i| (i..e).map(move |j| (i, j))).collect();
    let values: Vec<usize> = pairs
        .par_iter()
        .map(|&(i, j)| {
            if i == j {
                Ok(spaces[i - 1].dim())
            } else {
                spaces[i - 1].meet_dim(&spaces[j - 1])
            }
        })
        .collect::<Result<_>>()?;
    let mut it = values.into_iter();
    Ok(TpdTable::from_fn(
        fam.algebra().provenance(),
        fam.dim(),
        e,
        |_, _| it.next().expect("one value per cell"),
    ))
}

/// `tpn_n = |{g : g^n = 1}|` for `n = 1..e-1`.
pub fn group_tpn_row(g: &FiniteGroup, exponent: usize) -> Vec<usize> {
    (1..exponent).map(|n| g.trivial_power_number(n)).collect()
}

/// Evidence for or against an element of Hopf order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderWitness {
    pub n: usize,
    pub tpd_n: usize,
    /// Largest `tpd_{m,n}` over `m < n`, if any.
    pub max_below: Option<usize>,
    pub realizable: bool,
}

/// An element of Hopf order `n` exists iff `tpd_n > tpd_{m,n}` for all `m < n`.
pub fn has_element_of_order(table: &TpdTable, n: usize) -> Result<OrderWitness> {
    if n == 0 || n > table.exponent {
        return Err(Error::Argument(format!(
            "order {n} outside 1..{}",
            table.exponent
        )));
    }
    let tpd_n = table.get(n, n);
    let max_below = (1..n).map(|m| table.get(m, n)).max();
    let realizable = max_below.is_none_or(|m| tpd_n > m);
    Ok(OrderWitness {
        n,
        tpd_n,
        max_below,
        realizable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub exponent: usize,
    pub realizable: BTreeSet<usize>,
    pub witnesses: Vec<OrderWitness>,
}

pub fn realizable_orders(table: &TpdTable) -> OrderReport {
    let witnesses: Vec<OrderWitness> = (1..=table.exponent)
        .map(|n| has_element_of_order(table, n).expect("n in range"))
        .collect();
    let realizable = witnesses
        .iter()
        .filter(|w| w.realizable)
        .map(|w| w.n)
        .collect();
    OrderReport {
        exponent: table.exponent,
        realizable,
        witnesses,
    }
}

/// Least `n ≥ 1` with `A_n v = ηε v`.
pub fn hopf_order(fam: &PowerMatrixFamily, v: &[BigRational]) -> Result<usize> {
    if v.len() != fam.dim() {
        return Err(Error::Shape(format!(
            "vector of length {} for dimension {}",
            v.len(),
            fam.dim()
        )));
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::Argument("the zero vector has no Hopf order".into()));
    }
    let target = fam.eta_epsilon().mul_vec(v)?;
    let e = fam.exponent()?;
    for n in 1..=e {
        if fam.power(n)?.mul_vec(v)? == target {
            return Ok(n);
        }
    }
    Err(Error::Consistency(format!(
        "no trivial power up to the exponent {e}"
    )))
}

/// `|G| - |{g^n : g ∈ G} \ {1}|`, the dimension of `TPS_n(kG)` read off the group.
pub fn group_algebra_tpd_oracle(g: &FiniteGroup, n: usize) -> usize {
    let powers = g.nth_power_set(n);
    g.order() - powers.iter().filter(|&&x| x != g.identity()).count()
}

/// Hopf order of `δ_g` in `k^G`, read off the group: the least `n` such that
/// `g` is not an `n`-th power, and the exponent when `g` is the identity.
pub fn dual_delta_order_oracle(g: &FiniteGroup, x: usize) -> usize {
    if x == g.identity() {
        return g.exponent();
    }
    (1..)
        .find(|&n| !g.nth_power_set(n).contains(&x))
        .expect("g is not a power at n = exponent")
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerRuleReport {
    pub exponent: usize,
    /// Pairs `(m, n)` with `A_n A_m ≠ A_{mn}`.
    pub failures: Vec<(usize, usize)>,
}

impl PowerRuleReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests `A_n A_m = A_{mn}` for all `1 ≤ m, n ≤ e`.
pub fn check_power_rule(fam: &PowerMatrixFamily) -> Result<PowerRuleReport> {
    let e = fam.exponent()?;
    let mats: Vec<Arc<ExactMatrix>> = (1..=e).map(|n| fam.power(n)).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (1..=e).flat_map(|m| (1..=e).map(move |n| (m, n))).collect();
    let failed: Vec<bool> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let prod = mats[n - 1].mul(&mats[m - 1])?;
            Ok(prod != *mats[(m * n - 1) % e])
        })
        .collect::<Result<_>>()?;
    let failures = pairs
        .into_iter()
        .zip(failed)
        .filter(|t| t.1)
        .map(|t| t.0)
        .collect();
    Ok(PowerRuleReport {
        exponent: e,
        failures,
    })
}

/// Cells `(m, n)` with `tpd_{m,n} ≠ tpd_{e-m,e-n}`.
pub fn check_antidiagonal(table: &TpdTable) -> Vec<(usize, usize)> {
    let e = table.exponent;
    let mut bad = Vec::new();
    for m in 1..e {
        for n in m..e {
            if table.get(m, n) != table.get(e - m, e - n) {
                bad.push((m, n));
            }
        }
    }
    bad
}

/// Cells `(m, n)` with `tpd_{m,n} ≠ tpd_{m,e-n}`.
pub fn check_reflection(table: &TpdTable) -> Vec<(usize, usize)> {
    let e = table.exponent;
    let mut bad = Vec::new();
    for m in 1..e {
        for n in 1..e {
            if table.get(m, n) != table.get(m, e - n) {
                bad.push((m, n));
            }
        }
    }
    bad
}

/// `n` with `TPS_n(H) ≠ TPS_{e-n}(H^op)`.
pub fn check_opposite_tps(fam: &PowerMatrixFamily, op: &PowerMatrixFamily) -> Result<Vec<usize>> {
    let e = fam.exponent()?;
    if op.exponent()? != e {
        return Ok((1..e).collect());
    }
    let bad: Vec<Option<usize>> = (1..e)
        .into_par_iter()
        .map(|n| Ok((tps_basis(fam, n)? != tps_basis(op, e - n)?).then_some(n)))
        .collect::<Result<_>>()?;
    Ok(bad.into_iter().flatten().collect())
}

/// `n < e` with `tpd_n(H) ≠ tpd_n(K)`; meant for `K = H^*`.
pub fn check_dual_tpd(fam: &PowerMatrixFamily, dual: &PowerMatrixFamily) -> Result<Vec<usize>> {
    let e = fam.exponent()?;
    let mut bad = Vec::new();
    for n in 1..e {
        if tpd(fam, n)? != tpd(dual, n)? {
            bad.push(n);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub antidiagonal: Vec<(usize, usize)>,
    pub opposite: Vec<usize>,
    pub dual: Vec<usize>,
    /// Whether the dual's matrices were computed from its own structure constants.
    pub dual_direct: bool,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.antidiagonal.is_empty() && self.opposite.is_empty() && self.dual.is_empty()
    }
}

/// Above this dimension the dual in [`check_symmetries`] reuses transposed matrices.
pub const DIRECT_DUAL_DIM: usize = 144;

/// Anti-diagonal symmetry of the table, `TPS_n(H) = TPS_{e-n}(H^op)`, and `tpd_n(H) = tpd_n(H^*)`.
pub fn check_symmetries(fam: &PowerMatrixFamily, table: &TpdTable) -> Result<SymmetryReport> {
    let h = fam.algebra();
    let op = PowerMatrixFamily::new(HopfAlgebraData::opposite(h)?);
    let dual_direct = h.dim() <= DIRECT_DUAL_DIM;
    let dual = if dual_direct {
        PowerMatrixFamily::new(HopfAlgebraData::dual(h)?)
    } else {
        let src = Arc::new(PowerMatrixFamily::new(fam.algebra_arc()));
        for n in 1..=fam.exponent()? {
            src.power(n)?;
        }
        PowerMatrixFamily::dual_of(src)?
    };
    Ok(SymmetryReport {
        antidiagonal: check_antidiagonal(table),
        opposite: check_opposite_tps(fam, &op)?,
        dual: check_dual_tpd(fam, &dual)?,
        dual_direct,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeReport {
    pub group_order: usize,
    /// `(n, tpd_n)` for every `n ≤ e` prime to `|G|`.
    pub checked: Vec<(usize, usize)>,
}

impl CoprimeReport {
    pub fn holds(&self) -> bool {
        self.checked.iter().all(|t| t.1 == 1)
    }
}

/// `tpd_n` for every `n ≤ e` prime to `group_order`.
pub fn check_coprime(fam: &PowerMatrixFamily, group_order: usize) -> Result<CoprimeReport> {
    let e = fam.exponent()?;
    let checked = (1..=e)
        .filter(|n| n.gcd(&group_order) == 1)
        .map(|n| Ok((n, tpd(fam, n)?)))
        .collect::<Result<_>>()?;
    Ok(CoprimeReport {
        group_order,
        checked,
    })
}

/// Builds `D(kG)` and checks `tpd_n = 1` for `n` prime to `|G|`.
pub fn check_coprime_double(g: &FiniteGroup) -> Result<CoprimeReport> {
    let mp = crate::matched_pair::double_pair(g)?;
    let fam = PowerMatrixFamily::new(HopfAlgebraData::bismash(&mp)?);
    check_coprime(&fam, g.order())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorFormulaReport {
    pub n: usize,
    pub expected: usize,
    pub actual: usize,
}

impl TensorFormulaReport {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

/// Compares `tpd_n(H ⊗ K)` with
/// `(tpd_n(H)-1)·dim K + (tpd_n(K)-1)·dim H + 1 - (tpd_n(H)-1)(tpd_n(K)-1)`.
pub fn check_tensor_formula(
    h: &PowerMatrixFamily,
    k: &PowerMatrixFamily,
    hk: &PowerMatrixFamily,
    n: usize,
) -> Result<TensorFormulaReport> {
    if hk.dim() != h.dim() * k.dim() {
        return Err(Error::Shape(
            "third family is not the tensor product of the first two".into(),
        ));
    }
    let (a, b) = (tpd(h, n)? - 1, tpd(k, n)? - 1);
    let expected = a * k.dim() + b * h.dim() + 1 - a * b;
    Ok(TensorFormulaReport {
        n,
        expected,
        actual: tpd(hk, n)?,
    })
}

impl fmt::Display for TpdTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.size();
        let width = self
            .cells
            .iter()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1)
            .max(size.to_string().len());
        write!(f, "{:>width$}", "")?;
        for j in 1..=size {
            write!(f, " {j:>width$}")?;
        }
        writeln!(f)?;
        for i in 1..=size {
            write!(f, "{i:>width$}")?;
            for j in 1..=size {
                if j < i {
                    write!(f, " {:>width$}", "")?;
                } else {
                    write!(f, " {:>width$}", self.get(i, j))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
