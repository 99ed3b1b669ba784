//! Matched pairs of groups `(F, G, ▷, ◁)` and their bowtie groups.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{
    cyclic_group, point_stabilizer_alternating, point_stabilizer_symmetric, standard_cycle,
    FiniteGroup, MAX_SYMMETRIC_DEGREE,
};
use crate::perm::Permutation;

/// Two groups acting on each other's underlying sets.
///
/// `hit[x][a]` is the index in `F` of `x ▷ a`; `hitby[x][a]` is the index in
/// `G` of `x ◁ a`. Both tables are `|G| × |F|`, stored row-major.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    name: String,
    f: FiniteGroup,
    g: FiniteGroup,
    hit: Vec<u32>,
    hitby: Vec<u32>,
}

impl MatchedPair {
    /// Builds a pair and verifies every axiom; fails if any axiom fails.
    pub fn new(
        name: impl Into<String>,
        f: FiniteGroup,
        g: FiniteGroup,
        hit: Vec<u32>,
        hitby: Vec<u32>,
    ) -> Result<Self> {
        let mp = Self::new_unchecked(name, f, g, hit, hitby)?;
        let report = mp.verify();
        if let Some(bad) = report.first_failure() {
            return Err(Error::Consistency(format!(
                "{}: axiom '{}' fails: {}",
                mp.name,
                bad.axiom,
                bad.counterexample.as_deref().unwrap_or("?")
            )));
        }
        Ok(mp)
    }

    /// Builds a pair with only a shape check. Use [`MatchedPair::verify`] to inspect it.
    pub fn new_unchecked(
        name: impl Into<String>,
        f: FiniteGroup,
        g: FiniteGroup,
        hit: Vec<u32>,
        hitby: Vec<u32>,
    ) -> Result<Self> {
        let cells = f.order() * g.order();
        if hit.len() != cells || hitby.len() != cells {
            return Err(Error::Shape(format!(
                "action tables must have {cells} entries"
            )));
        }
        if hit.iter().any(|&a| a as usize >= f.order())
            || hitby.iter().any(|&x| x as usize >= g.order())
        {
            return Err(Error::Shape("action table entry out of range".into()));
        }
        Ok(MatchedPair {
            name: name.into(),
            f,
            g,
            hit,
            hitby,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The group acted on by `▷` (the group-algebra factor of the bismash product).
    pub fn f(&self) -> &FiniteGroup {
        &self.f
    }

    /// The group acted on by `◁` (the function-algebra factor of the bismash product).
    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    /// `x ▷ a` for `x ∈ G`, `a ∈ F`.
    #[inline]
    pub fn hit(&self, x: usize, a: usize) -> usize {
        self.hit[x * self.f.order() + a] as usize
    }

    /// `x ◁ a` for `x ∈ G`, `a ∈ F`.
    #[inline]
    pub fn hitby(&self, x: usize, a: usize) -> usize {
        self.hitby[x * self.f.order() + a] as usize
    }

    /// Checks every matched-pair axiom over all elements.
    pub fn verify(&self) -> VerificationReport {
        let (f, g) = (&self.f, &self.g);
        let (nf, ng) = (f.order(), g.order());
        let (ef, eg) = (f.identity(), g.identity());
        let mut report = VerificationReport::default();

        report.record(
            "left action unit: e ▷ a = a",
            (0..nf)
                .find(|&a| self.hit(eg, a) != a)
                .map(|a| format!("a = {}", f.label(a))),
        );
        report.record(
            "left action: (xy) ▷ a = x ▷ (y ▷ a)",
            find3(ng, ng, nf, |x, y, a| {
                self.hit(g.mul(x, y), a) != self.hit(x, self.hit(y, a))
            })
            .map(|(x, y, a)| format!("x = {}, y = {}, a = {}", g.label(x), g.label(y), f.label(a))),
        );
        report.record(
            "right action unit: x ◁ e = x",
            (0..ng)
                .find(|&x| self.hitby(x, ef) != x)
                .map(|x| format!("x = {}", g.label(x))),
        );
        report.record(
            "right action: x ◁ (ab) = (x ◁ a) ◁ b",
            find3(ng, nf, nf, |x, a, b| {
                self.hitby(x, f.mul(a, b)) != self.hitby(self.hitby(x, a), b)
            })
            .map(|(x, a, b)| format!("x = {}, a = {}, b = {}", g.label(x), f.label(a), f.label(b))),
        );
        report.record(
            "x ▷ (ab) = (x ▷ a)((x ◁ a) ▷ b)",
            find3(ng, nf, nf, |x, a, b| {
                self.hit(x, f.mul(a, b)) != f.mul(self.hit(x, a), self.hit(self.hitby(x, a), b))
            })
            .map(|(x, a, b)| format!("x = {}, a = {}, b = {}", g.label(x), f.label(a), f.label(b))),
        );
        report.record(
            "(xy) ◁ a = (x ◁ (y ▷ a))(y ◁ a)",
            find3(ng, ng, nf, |x, y, a| {
                self.hitby(g.mul(x, y), a) != g.mul(self.hitby(x, self.hit(y, a)), self.hitby(y, a))
            })
            .map(|(x, y, a)| format!("x = {}, y = {}, a = {}", g.label(x), g.label(y), f.label(a))),
        );
        report.record(
            "x ▷ e = e",
            (0..ng)
                .find(|&x| self.hit(x, ef) != ef)
                .map(|x| format!("x = {}", g.label(x))),
        );
        report.record(
            "e ◁ a = e",
            (0..nf)
                .find(|&a| self.hitby(eg, a) != eg)
                .map(|a| format!("a = {}", f.label(a))),
        );
        report
    }

    /// The group `F ⋈ G` on pairs `(a, x)` with `(a,x)(b,y) = (a(x ▷ b), (x ◁ b)y)`.
    ///
    /// Element `(a, x)` has index `a·|G| + x`.
    pub fn bowtie_group(&self) -> Result<FiniteGroup> {
        let (f, g) = (&self.f, &self.g);
        let (nf, ng) = (f.order(), g.order());
        let n = nf * ng;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..nf {
            for x in 0..ng {
                for b in 0..nf {
                    for y in 0..ng {
                        let left = f.mul(a, self.hit(x, b));
                        let right = g.mul(self.hitby(x, b), y);
                        table.push((left * ng + right) as u32);
                    }
                }
            }
        }
        let labels = (0..n)
            .map(|k| format!("{} ⋈ {}", f.label(k / ng), g.label(k % ng)))
            .collect();
        FiniteGroup::from_table(format!("{}⋈{}", f.name(), g.name()), labels, table)
    }
}

fn find3(
    n1: usize,
    n2: usize,
    n3: usize,
    bad: impl Fn(usize, usize, usize) -> bool,
) -> Option<(usize, usize, usize)> {
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n3 {
                if bad(i, j, k) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    fn record(&mut self, axiom: &'static str, counterexample: Option<String>) {
        self.checks.push(AxiomCheck {
            axiom,
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "pass  {}", c.axiom)?,
                Some(w) => writeln!(f, "FAIL  {}  [{w}]", c.axiom)?,
            }
        }
        Ok(())
    }
}

/// Splits `sigma ∈ S_n` as `sigma = sigma1 * sigma2` with `sigma2 = tau^k`,
/// `k = n - sigma^{-1}(n)`, and `sigma1` fixing `n`.
pub fn factor_sn(sigma: &Permutation, n: usize) -> Result<(Permutation, Permutation)> {
    if sigma.degree() != n {
        return Err(Error::Argument(format!(
            "permutation of degree {} cannot be factored in S{n}",
            sigma.degree()
        )));
    }
    let k = n - sigma.apply_inverse(n);
    let sigma2 = standard_cycle(n).pow(k);
    let sigma1 = sigma.compose(&sigma2.inverse());
    debug_assert_eq!(sigma1.apply(n), n);
    Ok((sigma1, sigma2))
}

fn factorizable_pair(
    name: String,
    f: FiniteGroup,
    g: FiniteGroup,
    n: usize,
) -> Result<MatchedPair> {
    let (nf, ng) = (f.order(), g.order());
    let mut hit = Vec::with_capacity(nf * ng);
    let mut hitby = Vec::with_capacity(nf * ng);
    for x in g.elements() {
        for a in f.elements() {
            let (s1, s2) = factor_sn(&x.compose(a), n)?;
            let ai = f
                .index_of(&s1)
                .ok_or_else(|| Error::Consistency(format!("{s1} not in {}", f.name())))?;
            let xi = g
                .index_of(&s2)
                .ok_or_else(|| Error::Consistency(format!("{s2} not in {}", g.name())))?;
            hit.push(ai as u32);
            hitby.push(xi as u32);
        }
    }
    MatchedPair::new(name, f, g, hit, hitby)
}

/// The pair from `S_n = S_{n-1} C_n` (`F` fixes `n`, `G` is generated by `(1 2 … n)`).
pub fn from_factorizable_symmetric(n: usize) -> Result<MatchedPair> {
    if !(3..=MAX_SYMMETRIC_DEGREE).contains(&n) {
        return Err(Error::ResourceLimit(format!(
            "factorizable S_n pair needs 3 <= n <= {MAX_SYMMETRIC_DEGREE}, got {n}"
        )));
    }
    factorizable_pair(
        format!("S{n}"),
        point_stabilizer_symmetric(n)?,
        cyclic_group(n)?,
        n,
    )
}

/// The pair from `A_n = A_{n-1} C_n` for odd `n`.
pub fn from_factorizable_alternating(n: usize) -> Result<MatchedPair> {
    if n.is_multiple_of(2) {
        return Err(Error::Argument(format!(
            "A_n factors through C_n only for odd n, got {n}"
        )));
    }
    if !(5..=MAX_SYMMETRIC_DEGREE).contains(&n) {
        return Err(Error::ResourceLimit(format!(
            "factorizable A_n pair needs odd 5 <= n <= {MAX_SYMMETRIC_DEGREE}, got {n}"
        )));
    }
    factorizable_pair(
        format!("A{n}"),
        point_stabilizer_alternating(n)?,
        cyclic_group(n)?,
        n,
    )
}

/// `(G, G)` with trivial `▷` and `x ◁ a = a⁻¹ x a`; its bismash product is the double of `kG`.
pub fn double_pair(g: &FiniteGroup) -> Result<MatchedPair> {
    let n = g.order();
    let mut hit = Vec::with_capacity(n * n);
    let mut hitby = Vec::with_capacity(n * n);
    for x in 0..n {
        for a in 0..n {
            hit.push(a as u32);
            hitby.push(g.mul(g.mul(g.inv(a), x), a) as u32);
        }
    }
    MatchedPair::new(format!("D({})", g.name()), g.clone(), g.clone(), hit, hitby)
}

/// Both actions trivial; the bismash product is `k^G ⊗ kF`.
pub fn trivial_pair(f: &FiniteGroup, g: &FiniteGroup) -> Result<MatchedPair> {
    let (nf, ng) = (f.order(), g.order());
    let mut hit = Vec::with_capacity(nf * ng);
    let mut hitby = Vec::with_capacity(nf * ng);
    for x in 0..ng {
        for a in 0..nf {
            hit.push(a as u32);
            hitby.push(x as u32);
        }
    }
    MatchedPair::new(
        format!("{}x{}", f.name(), g.name()),
        f.clone(),
        g.clone(),
        hit,
        hitby,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric_group;

    #[test]
    fn factor_examples() {
        let id = Permutation::identity(4);
        let (s1, s2) = factor_sn(&id, 4).unwrap();
        assert!(s1.is_identity() && s2.is_identity());

        let c = Permutation::parse("(1 2 3 4)", 4).unwrap();
        let (s1, s2) = factor_sn(&c, 4).unwrap();
        assert!(s1.is_identity());
        assert_eq!(s2.to_string(), "(1 2 3 4)");

        let t = Permutation::parse("(1 2)", 4).unwrap();
        let (s1, s2) = factor_sn(&t, 4).unwrap();
        assert_eq!(s1, t);
        assert!(s2.is_identity());

        assert!(factor_sn(&t, 5).is_err());
    }

    #[test]
    fn factorization_reassembles_every_element() {
        for n in 3..=6 {
            let sn = symmetric_group(n).unwrap();
            for s in sn.elements() {
                let (s1, s2) = factor_sn(s, n).unwrap();
                assert_eq!(s1.apply(n), n);
                assert_eq!(&s1.compose(&s2), s);
            }
        }
    }

    #[test]
    fn symmetric_pairs() {
        let mp = from_factorizable_symmetric(4).unwrap();
        assert_eq!((mp.f().order(), mp.g().order()), (6, 4));
        let l = mp.bowtie_group().unwrap();
        assert_eq!((l.order(), l.exponent()), (24, 12));
        let eg = mp.g().identity();
        assert!((0..6).all(|a| mp.hit(eg, a) == a));

        let mp5 = from_factorizable_symmetric(5).unwrap();
        assert_eq!((mp5.f().order(), mp5.g().order()), (24, 5));
        assert_eq!(mp5.bowtie_group().unwrap().exponent(), 60);
    }

    #[test]
    fn products_split_through_the_actions() {
        let mp = from_factorizable_symmetric(5).unwrap();
        let (f, g) = (mp.f(), mp.g());
        for x in 0..g.order() {
            for a in 0..f.order() {
                let lhs = g.element(x).unwrap().compose(f.element(a).unwrap());
                let rhs = f
                    .element(mp.hit(x, a))
                    .unwrap()
                    .compose(g.element(mp.hitby(x, a)).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn alternating_pair_restricts_symmetric_pair() {
        let a = from_factorizable_alternating(5).unwrap();
        assert_eq!((a.f().order(), a.g().order()), (12, 5));
        assert_eq!(a.bowtie_group().unwrap().exponent(), 30);
        let s = from_factorizable_symmetric(5).unwrap();
        for x in 0..5 {
            for ai in 0..12 {
                let perm = a.f().element(ai).unwrap();
                let si = s.f().index_of(perm).unwrap();
                assert_eq!(a.f().element(a.hit(x, ai)), s.f().element(s.hit(x, si)));
                assert_eq!(a.hitby(x, ai), s.hitby(x, si));
            }
        }
        assert!(matches!(
            from_factorizable_alternating(4),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn double_pair_conjugates() {
        let s3 = symmetric_group(3).unwrap();
        let mp = double_pair(&s3).unwrap();
        let x = s3.find_label("(1 2 3)").unwrap();
        let a = s3.find_label("(1 2)").unwrap();
        assert_eq!(s3.label(mp.hitby(x, a)), "(1 3 2)");
        for x in 0..6 {
            for y in 0..6 {
                for a in 0..6 {
                    assert_eq!(mp.hit(x, a), mp.hit(y, a));
                }
            }
        }
        let l = mp.bowtie_group().unwrap();
        assert_eq!((l.order(), l.exponent()), (36, 6));

        let c4 = cyclic_group(4).unwrap();
        let d = double_pair(&c4).unwrap();
        assert!((0..4).all(|x| (0..4).all(|a| d.hitby(x, a) == x)));
    }

    #[test]
    fn verify_reports() {
        let s3 = symmetric_group(3).unwrap();
        let c4 = cyclic_group(4).unwrap();
        let t = trivial_pair(&s3, &c4).unwrap();
        assert!(t.verify().all_passed());
        let l = t.bowtie_group().unwrap();
        assert_eq!(l.exponent(), 12);

        let s4 = symmetric_group(4).unwrap();
        assert!(double_pair(&s4).unwrap().verify().all_passed());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mp = from_factorizable_symmetric(4).unwrap();
        let mut hit = mp.hit.clone();
        // x = tau, a = (1 2): move the image to some other element of F
        let cell = mp.f().order() + 1;
        hit[cell] = (hit[cell] + 1) % mp.f().order() as u32;
        let bad = MatchedPair::new_unchecked(
            "bad",
            mp.f().clone(),
            mp.g().clone(),
            hit.clone(),
            mp.hitby.clone(),
        )
        .unwrap();
        let report = bad.verify();
        assert!(!report.all_passed());
        assert!(report.first_failure().unwrap().counterexample.is_some());
        assert!(
            MatchedPair::new("bad", mp.f().clone(), mp.g().clone(), hit, mp.hitby.clone()).is_err()
        );
    }
}
