//! Finite groups with fully materialized Cayley tables.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest degree accepted by the symmetric and alternating constructors.
///
/// The Cayley table is quadratic in the group order; S_8 would need
/// 1.6 billion entries.
pub const MAX_SYMMETRIC_DEGREE: usize = 7;
pub const MAX_CYCLIC_ORDER: usize = 64;

/// Groups up to this order get a full associativity scan at construction.
const FULL_SCAN_ORDER: usize = 60;
const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    // empty for groups not given by permutations (e.g. bowtie groups)
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    cayley: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

impl FiniteGroup {
    /// Builds the group from a duplicate-free list of permutations closed under products.
    pub fn from_permutations(name: impl Into<String>, perms: Vec<Permutation>) -> Result<Self> {
        let name = name.into();
        if perms.is_empty() {
            return Err(Error::Argument("a group needs at least one element".into()));
        }
        let index: HashMap<Permutation, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        if index.len() != perms.len() {
            return Err(Error::Argument(format!("{name}: duplicate elements")));
        }
        let n = perms.len();
        let mut cayley = Vec::with_capacity(n * n);
        for x in &perms {
            for y in &perms {
                let xy = x.compose(y);
                let k = *index.get(&xy).ok_or_else(|| {
                    Error::Consistency(format!("{name}: not closed, {x} * {y} = {xy} missing"))
                })?;
                cayley.push(k as u32);
            }
        }
        let labels = perms.iter().map(|p| p.to_string()).collect();
        let g = Self::assemble(name, labels, perms, index, cayley)?;
        Ok(g)
    }

    /// Builds an abstract group from a multiplication table over `labels.len()` elements.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        cayley: Vec<u32>,
    ) -> Result<Self> {
        let name = name.into();
        let n = labels.len();
        if n == 0 || cayley.len() != n * n {
            return Err(Error::Shape(format!("{name}: table is not {n}x{n}")));
        }
        if cayley.iter().any(|&k| k as usize >= n) {
            return Err(Error::Consistency(format!(
                "{name}: table entry out of range"
            )));
        }
        Self::assemble(name, labels, Vec::new(), HashMap::new(), cayley)
    }

    fn assemble(
        name: String,
        labels: Vec<String>,
        perms: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        cayley: Vec<u32>,
    ) -> Result<Self> {
        let n = labels.len();
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|j| cayley[e * n + j] as usize == j && cayley[j * n + e] as usize == j)
            })
            .ok_or_else(|| Error::Consistency(format!("{name}: no identity element")))?;
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| cayley[i * n + j] as usize == identity)
                .ok_or_else(|| Error::Consistency(format!("{name}: element {i} has no inverse")))?;
            if cayley[j * n + i] as usize != identity {
                return Err(Error::Consistency(format!(
                    "{name}: one-sided inverse at {i}"
                )));
            }
            inv[i] = j as u32;
        }
        let g = FiniteGroup {
            name,
            labels,
            perms,
            index,
            cayley,
            inv,
            identity,
        };
        g.check_associative()?;
        Ok(g)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order();
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Consistency(format!(
                    "{}: associativity fails at ({a}, {b}, {c})",
                    self.name
                )));
            }
            Ok(())
        };
        if n <= FULL_SCAN_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9 ^ n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The permutation behind element `a`, when the group was built from permutations.
    pub fn element(&self, a: usize) -> Option<&Permutation> {
        self.perms.get(a)
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Looks an element up by its printed label (cycle notation for permutation groups).
    pub fn find_label(&self, text: &str) -> Option<usize> {
        if let Some(p) = self.perms.first() {
            if let Ok(q) = Permutation::parse(text, p.degree()) {
                return self.index_of(&q);
            }
        }
        self.labels.iter().position(|l| l == text.trim())
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least `n >= 1` with `g^n` trivial for every `g`.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    /// `{ g^n : g in G }`.
    pub fn nth_power_set(&self, n: usize) -> BTreeSet<usize> {
        (0..self.order()).map(|a| self.pow(a, n)).collect()
    }

    /// `TPM_n = { g : g^n = e }`.
    pub fn trivial_power_set(&self, n: usize) -> BTreeSet<usize> {
        (0..self.order())
            .filter(|&a| self.pow(a, n) == self.identity)
            .collect()
    }

    /// `|TPM_n|`.
    pub fn trivial_power_number(&self, n: usize) -> usize {
        self.trivial_power_set(n).len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Free-function form of [`FiniteGroup::exponent`].
pub fn group_exponent(g: &FiniteGroup) -> usize {
    g.exponent()
}

/// All permutations of degree `n` in lexicographic order of their image lists.
fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::from_zero_based(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn check_degree(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::ResourceLimit(format!(
            "{what} needs {min} <= n <= {MAX_SYMMETRIC_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

/// `S_n`, elements in lexicographic order of image lists (identity first).
pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    check_degree(n, 1, "symmetric group")?;
    FiniteGroup::from_permutations(format!("S{n}"), all_permutations(n))
}

/// `A_n`, the even permutations of `S_n` in the same order.
pub fn alternating_group(n: usize) -> Result<FiniteGroup> {
    check_degree(n, 3, "alternating group")?;
    let perms = all_permutations(n)
        .into_iter()
        .filter(|p| p.is_even())
        .collect();
    FiniteGroup::from_permutations(format!("A{n}"), perms)
}

/// Powers `tau^0, tau^1, …` of the standard cycle `tau = (1 2 … n)`.
///
/// Element `k` (zero-based) is `tau^k`, which moves 1 to `k + 1`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > MAX_CYCLIC_ORDER {
        return Err(Error::ResourceLimit(format!(
            "cyclic group needs 1 <= n <= {MAX_CYCLIC_ORDER}, got {n}"
        )));
    }
    FiniteGroup::from_permutations(format!("C{n}"), cyclic_elements(n))
}

pub(crate) fn cyclic_elements(n: usize) -> Vec<Permutation> {
    let tau = standard_cycle(n);
    let mut out = Vec::with_capacity(n);
    let mut cur = Permutation::identity(n);
    for _ in 0..n {
        out.push(cur.clone());
        cur = cur.compose(&tau);
    }
    out
}

/// `(1 2 … n)`.
pub fn standard_cycle(n: usize) -> Permutation {
    let images: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
    Permutation::from_images(&images).expect("cycle is a bijection")
}

/// The copy of `S_{n-1}` inside `S_n` fixing `n`, as degree-`n` permutations.
pub fn point_stabilizer_symmetric(n: usize) -> Result<FiniteGroup> {
    check_degree(n, 2, "point stabilizer")?;
    let perms = all_permutations(n - 1)
        .iter()
        .map(|p| p.extend(n))
        .collect();
    FiniteGroup::from_permutations(format!("S{}", n - 1), perms)
}

/// The copy of `A_{n-1}` inside `A_n` fixing `n`.
pub fn point_stabilizer_alternating(n: usize) -> Result<FiniteGroup> {
    check_degree(n, 4, "point stabilizer")?;
    let perms = all_permutations(n - 1)
        .iter()
        .filter(|p| p.is_even())
        .map(|p| p.extend(n))
        .collect();
    FiniteGroup::from_permutations(format!("A{}", n - 1), perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_exponents() {
        let s1 = symmetric_group(1).unwrap();
        assert_eq!((s1.order(), s1.exponent()), (1, 1));
        let s3 = symmetric_group(3).unwrap();
        assert_eq!((s3.order(), s3.exponent()), (6, 6));
        let s4 = symmetric_group(4).unwrap();
        assert_eq!((s4.order(), s4.exponent()), (24, 12));
        assert_eq!(symmetric_group(5).unwrap().exponent(), 60);
        let a4 = alternating_group(4).unwrap();
        assert_eq!((a4.order(), a4.exponent()), (12, 6));
        let a5 = alternating_group(5).unwrap();
        assert_eq!((a5.order(), a5.exponent()), (60, 30));
        let a3 = alternating_group(3).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.is_abelian());
        let c4 = cyclic_group(4).unwrap();
        assert_eq!((c4.order(), c4.exponent()), (4, 4));
        assert_eq!(cyclic_group(1).unwrap().order(), 1);
    }

    #[test]
    fn range_guards() {
        assert!(matches!(symmetric_group(0), Err(Error::ResourceLimit(_))));
        assert!(matches!(symmetric_group(9), Err(Error::ResourceLimit(_))));
        assert!(matches!(alternating_group(2), Err(Error::ResourceLimit(_))));
        assert!(matches!(cyclic_group(65), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn cyclic_enumeration_follows_powers() {
        let c5 = cyclic_group(5).unwrap();
        assert_eq!(c5.label(2), "(1 3 5 2 4)");
        for k in 0..5 {
            assert_eq!(c5.element(k).unwrap().apply(1), k + 1);
        }
    }

    #[test]
    fn identity_first_and_inverses() {
        let s4 = symmetric_group(4).unwrap();
        assert_eq!(s4.identity(), 0);
        for a in 0..24 {
            assert_eq!(s4.mul(a, s4.inv(a)), 0);
            assert_eq!(s4.mul(s4.inv(a), a), 0);
        }
    }

    #[test]
    fn power_sets() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.nth_power_set(0), BTreeSet::from([s3.identity()]));
        let sq: Vec<String> = s3
            .nth_power_set(2)
            .iter()
            .map(|&i| s3.label(i).to_string())
            .collect();
        assert_eq!(sq, vec!["()", "(1 2 3)", "(1 3 2)"]);
        let s4 = symmetric_group(4).unwrap();
        assert_eq!(s4.nth_power_set(2).len(), 12);
        assert_eq!(s3.trivial_power_number(1), 1);
        assert_eq!(s3.trivial_power_number(2), 4);
        assert_eq!(s4.trivial_power_number(6), 18);
    }

    #[test]
    fn element_orders() {
        let s4 = symmetric_group(4).unwrap();
        let c = s4.find_label("(1 2 3 4)").unwrap();
        assert_eq!(s4.element_order(c), 4);
        assert_eq!(s4.element_order(s4.identity()), 1);
        let s5 = symmetric_group(5).unwrap();
        let g = s5.find_label("(1 2)(3 4 5)").unwrap();
        assert_eq!(s5.element_order(g), 6);
    }

    #[test]
    fn abstract_table_rejects_non_groups() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteGroup::from_table("bad", labels.clone(), vec![0, 0, 0, 0]).is_err());
        let z2 = FiniteGroup::from_table("Z2", labels, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(z2.exponent(), 2);
    }
}
