//! Bialgebra axiom scans over structure constants.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{HopfAlgebraData, SparseVec};

/// Dimensions up to this are scanned exhaustively; above it triples and pairs are sampled.
pub const FULL_SCAN_DIM: usize = 144;
pub const SAMPLE_SIZE: usize = 10_000;
const SEED: u64 = 0x5eed_0fab;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    pub sampled: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let how = if c.sampled { "sampled" } else { "full" };
            write!(
                f,
                "{:<14} {} ({} cases, {how})",
                c.axiom,
                if c.passed { "ok" } else { "FAILED" },
                c.cases
            )?;
            if !c.passed {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

type Tensor2 = BTreeMap<(usize, usize), BigInt>;
type Tensor3 = BTreeMap<(usize, usize, usize), BigInt>;

fn add<K: Ord>(m: &mut BTreeMap<K, BigInt>, k: K, c: BigInt) {
    let e = m.entry(k).or_insert_with(BigInt::zero);
    *e += c;
}

fn prune<K: Ord>(mut m: BTreeMap<K, BigInt>) -> BTreeMap<K, BigInt> {
    m.retain(|_, v| !v.is_zero());
    m
}

fn delta(h: &HopfAlgebraData, i: usize) -> Tensor2 {
    let mut out = Tensor2::new();
    for t in h.comult(i) {
        add(&mut out, (t.left, t.right), t.coeff.clone());
    }
    prune(out)
}

fn basis(i: usize) -> SparseVec {
    vec![(i, BigInt::one())]
}

fn pairs(dim: usize, rng: &mut ChaCha8Rng) -> (Vec<(usize, usize)>, bool) {
    if dim <= FULL_SCAN_DIM {
        (
            (0..dim)
                .flat_map(|i| (0..dim).map(move |j| (i, j)))
                .collect(),
            false,
        )
    } else {
        (
            (0..SAMPLE_SIZE)
                .map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim)))
                .collect(),
            true,
        )
    }
}

fn check(axiom: &'static str, cases: usize, sampled: bool, failure: Option<String>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: failure.is_none(),
        cases,
        sampled,
        detail: failure.unwrap_or_default(),
    }
}

/// Runs every axiom check: unit, associativity, coassociativity, counit,
/// and compatibility of the coalgebra maps with multiplication.
pub fn verify_axioms(h: &HopfAlgebraData) -> AxiomReport {
    let dim = h.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let unit: SparseVec = h
        .unit()
        .iter()
        .enumerate()
        .filter(|t| !t.1.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    let lab = |i: usize| h.label(i).to_string();
    let mut checks = Vec::new();

    let fail = (0..dim).find(|&j| {
        let e = basis(j);
        h.multiply_sparse(&unit, &e) != e || h.multiply_sparse(&e, &unit) != e
    });
    checks.push(check(
        "unit",
        dim,
        false,
        fail.map(|j| format!("1·{0} or {0}·1 differs", lab(j))),
    ));

    let sampled = dim > FULL_SCAN_DIM;
    let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if sampled {
        let v: Vec<_> = (0..SAMPLE_SIZE)
            .map(|_| {
                (
                    rng.gen_range(0..dim),
                    rng.gen_range(0..dim),
                    rng.gen_range(0..dim),
                )
            })
            .collect();
        Box::new(v.into_iter())
    } else {
        Box::new((0..dim * dim * dim).map(move |t| (t / (dim * dim), t / dim % dim, t % dim)))
    };
    let cases = if sampled {
        SAMPLE_SIZE
    } else {
        dim * dim * dim
    };
    let fail = triples.into_iter().find(|&(i, j, k)| {
        let left = h.multiply_sparse(h.mult(i, j), &basis(k));
        let right = h.multiply_sparse(&basis(i), h.mult(j, k));
        left != right
    });
    checks.push(check(
        "associativity",
        cases,
        sampled,
        fail.map(|(i, j, k)| format!("({} {}) {}", lab(i), lab(j), lab(k))),
    ));

    let fail = (0..dim).find(|&i| {
        let d = delta(h, i);
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for ((a, b), c) in &d {
            for ((p, q), r) in delta(h, *a) {
                add(&mut left, (p, q, *b), c * r);
            }
            for ((p, q), r) in delta(h, *b) {
                add(&mut right, (*a, p, q), c * r);
            }
        }
        prune(left) != prune(right)
    });
    checks.push(check(
        "coassociativity",
        dim,
        false,
        fail.map(|i| format!("on {}", lab(i))),
    ));

    let fail = (0..dim).find(|&i| {
        let mut left: BTreeMap<usize, BigInt> = BTreeMap::new();
        let mut right: BTreeMap<usize, BigInt> = BTreeMap::new();
        for ((a, b), c) in delta(h, i) {
            add(&mut left, b, &c * &h.counit()[a]);
            add(&mut right, a, &c * &h.counit()[b]);
        }
        let e: BTreeMap<usize, BigInt> = [(i, BigInt::one())].into_iter().collect();
        prune(left) != e || prune(right) != e
    });
    checks.push(check(
        "counit",
        dim,
        false,
        fail.map(|i| format!("on {}", lab(i))),
    ));

    let (ps, sampled) = pairs(dim, &mut rng);
    let fail = ps.iter().find(|&&(i, j)| {
        let prod = h.mult(i, j);
        let mut lhs = Tensor2::new();
        for (k, c) in prod {
            for (key, r) in delta(h, *k) {
                add(&mut lhs, key, c * r);
            }
        }
        let mut rhs = Tensor2::new();
        let (di, dj) = (delta(h, i), delta(h, j));
        for ((a, b), c) in &di {
            for ((p, q), r) in &dj {
                let cr = c * r;
                for (x, s) in h.mult(*a, *p) {
                    for (y, t) in h.mult(*b, *q) {
                        add(&mut rhs, (*x, *y), &cr * s * t);
                    }
                }
            }
        }
        if prune(lhs) != prune(rhs) {
            return true;
        }
        let eps: BigInt = prod.iter().map(|(k, c)| c * &h.counit()[*k]).sum();
        eps != &h.counit()[i] * &h.counit()[j]
    });
    checks.push(check(
        "compatibility",
        ps.len(),
        sampled,
        fail.map(|&(i, j)| format!("Δ or ε of {}·{}", lab(i), lab(j))),
    ));

    // Δ(1) = 1 ⊗ 1 and ε(1) = 1
    let mut d1 = Tensor2::new();
    for (i, c) in &unit {
        for (key, r) in delta(h, *i) {
            add(&mut d1, key, c * r);
        }
    }
    let mut uu = Tensor2::new();
    for (i, c) in &unit {
        for (j, d) in &unit {
            add(&mut uu, (*i, *j), c * d);
        }
    }
    let eps1: BigInt = unit.iter().map(|(i, c)| c * &h.counit()[*i]).sum();
    let ok = prune(d1) == prune(uu) && eps1.is_one();
    checks.push(check(
        "unit-counit",
        1,
        false,
        (!ok).then(|| "Δ(1) ≠ 1⊗1 or ε(1) ≠ 1".to_string()),
    ));

    AxiomReport { checks }
}
