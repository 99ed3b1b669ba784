//! The subcommands, as functions from a built algebra to printable output.

use std::fmt::Write;
use std::sync::Arc;

use hopfpow_core::analysis::{
    check_antidiagonal, check_coprime, check_dual_tpd, check_opposite_tps, check_power_rule,
    check_tensor_formula, dual_delta_order_oracle, group_algebra_tpd_oracle, group_tpn_row,
    hopf_order, realizable_orders, tpd, tps_basis, OrderReport,
};
use hopfpow_core::hopf::{convolve, verify_axioms, HopfAlgebraData, FULL_SCAN_DIM};
use hopfpow_core::{tpd_table, Error, ExactMatrix, PowerMatrixFamily, Result, TpdTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::build::Built;
use crate::element::parse_element;
use crate::emit::{default_half, emit_table, Format, Layout, TableJson};
use crate::spec::AlgebraSpec;

/// Text to print and whether the command succeeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            success: true,
        }
    }
}

/// The full table, with the `tpn` row attached for group algebras.
pub fn compute_table(b: &Built) -> Result<TpdTable> {
    let t = tpd_table(&b.family)?;
    Ok(match (&b.spec, &b.group) {
        (AlgebraSpec::Group(_), Some(g)) => {
            let e = t.exponent;
            t.with_tpn(group_tpn_row(g, e))
        }
        _ => t,
    })
}

pub fn layout(spec: &AlgebraSpec, half: bool) -> Layout {
    let group_title = match spec {
        AlgebraSpec::Group(g) => Some(g.latex()),
        _ => None,
    };
    Layout {
        title: spec.latex(),
        group_title,
        half,
    }
}

pub fn cmd_table(b: &Built, format: Format, half: Option<bool>) -> Result<Outcome> {
    let t = compute_table(b)?;
    let half = half.unwrap_or_else(|| default_half(t.exponent));
    Ok(Outcome::ok(emit_table(
        &t,
        &b.spec.to_string(),
        format,
        &layout(&b.spec, half),
    )))
}

#[derive(Serialize)]
struct OrdersJson {
    algebra: String,
    exponent: usize,
    realizable: Vec<usize>,
    witnesses: Vec<WitnessJson>,
}

#[derive(Serialize)]
struct WitnessJson {
    n: usize,
    tpd_n: usize,
    max_below: Option<usize>,
    realizable: bool,
}

pub fn orders(b: &Built) -> Result<OrderReport> {
    Ok(realizable_orders(&tpd_table(&b.family)?))
}

pub fn cmd_orders(b: &Built, format: Format) -> Result<Outcome> {
    let r = orders(b)?;
    let out = if format == Format::Json {
        let j = OrdersJson {
            algebra: b.spec.to_string(),
            exponent: r.exponent,
            realizable: r.realizable.iter().copied().collect(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    n: w.n,
                    tpd_n: w.tpd_n,
                    max_below: w.max_below,
                    realizable: w.realizable,
                })
                .collect(),
        };
        serde_json::to_string(&j).expect("plain data serializes") + "\n"
    } else {
        let mut s = String::new();
        writeln!(s, "algebra {}", b.spec).unwrap();
        writeln!(s, "exponent {}", r.exponent).unwrap();
        let list: Vec<String> = r.realizable.iter().map(|n| n.to_string()).collect();
        writeln!(s, "realizable {}", list.join(" ")).unwrap();
        let missing: Vec<String> = (1..=r.exponent)
            .filter(|n| !r.realizable.contains(n))
            .map(|n| n.to_string())
            .collect();
        writeln!(s, "not realizable {}", missing.join(" ")).unwrap();
        writeln!(s, "n,tpd_n,max_m<n tpd_m_n,realizable").unwrap();
        for w in &r.witnesses {
            let below = w.max_below.map_or("-".to_string(), |m| m.to_string());
            writeln!(
                s,
                "{},{},{below},{}",
                w.n,
                w.tpd_n,
                if w.realizable { "yes" } else { "no" }
            )
            .unwrap();
        }
        s
    };
    Ok(Outcome::ok(out))
}

/// Hopf order of an element together with every `n ≤ e` at which its power is trivial.
pub fn element_order(b: &Built, text: &str) -> Result<(usize, Vec<usize>)> {
    let v = parse_element(b.algebra(), text)?;
    let order = hopf_order(&b.family, &v)?;
    let target = b.family.eta_epsilon().mul_vec(&v)?;
    let e = b.family.exponent()?;
    let mut trivial = Vec::new();
    for n in 1..=e {
        if b.family.power(n)?.mul_vec(&v)? == target {
            trivial.push(n);
        }
    }
    Ok((order, trivial))
}

pub fn cmd_element_order(b: &Built, text: &str, format: Format) -> Result<Outcome> {
    let (order, trivial) = element_order(b, text)?;
    let out = if format == Format::Json {
        serde_json::json!({ "algebra": b.spec.to_string(), "order": order, "trivial_at": trivial })
            .to_string()
            + "\n"
    } else {
        let list: Vec<String> = trivial.iter().map(|n| n.to_string()).collect();
        format!("hopf order {order}\ntrivial at n = {}\n", list.join(" "))
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_exponent(b: &Built, format: Format) -> Result<Outcome> {
    let e = b.family.exponent()?;
    let group_e = match &b.pair {
        Some(mp) => Some(mp.bowtie_group()?.exponent()),
        None => None,
    };
    let out = if format == Format::Json {
        serde_json::json!({ "algebra": b.spec.to_string(), "exponent": e, "group_exponent": group_e }).to_string()
            + "\n"
    } else {
        match group_e {
            Some(g) => format!(
                "exponent {e}\ngroup exponent {g}\n{e} {} {g}\n",
                if e == g { "=" } else { "!=" }
            ),
            None => format!("exponent {e}\n"),
        }
    };
    Ok(Outcome {
        output: out,
        success: group_e.is_none_or(|g| g == e),
    })
}

pub fn cmd_basis(b: &Built, format: Format) -> Result<Outcome> {
    let labels = b.algebra().labels();
    let out = if format == Format::Json {
        serde_json::to_string(labels).expect("strings serialize") + "\n"
    } else {
        labels.iter().map(|l| format!("{l}\n")).collect()
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_tps(b: &Built, n: usize, format: Format) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Argument("n must be at least 1".into()));
    }
    let space = tps_basis(&b.family, n)?;
    let rows: Vec<Vec<String>> = space
        .basis()
        .iter()
        .map(|v| v.iter().map(|q| q.to_string()).collect())
        .collect();
    let out = if format == Format::Json {
        serde_json::json!({ "algebra": b.spec.to_string(), "n": n, "dim": space.dim(), "basis": rows }).to_string()
            + "\n"
    } else {
        let mut s = format!("dim {}\n", space.dim());
        for r in rows {
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    };
    Ok(Outcome::ok(out))
}

/// Cells where the tables of `H` and `H^*` differ: `(i, j, tpd_{i,j}(H), tpd_{i,j}(H^*))`.
pub fn table_differences(h: &TpdTable, d: &TpdTable) -> Vec<[usize; 4]> {
    let size = h.size().min(d.size());
    let mut out = Vec::new();
    for i in 1..=size {
        for j in i..=size {
            let (a, b) = (h.get(i, j), d.get(i, j));
            if a != b {
                out.push([i, j, a, b]);
            }
        }
    }
    out
}

pub fn cmd_compare_dual(b: &Built, format: Format, half: Option<bool>) -> Result<Outcome> {
    let dual_spec = AlgebraSpec::Dual(Box::new(b.spec.clone()));
    // reuse the matrices already computed for H
    let dual_fam = Arc::new(PowerMatrixFamily::dual_of(b.family.clone())?);
    let th = compute_table(b)?;
    let td = tpd_table(&dual_fam)?;
    let diffs = table_differences(&th, &td);
    let out = if format == Format::Json {
        serde_json::json!({
            "algebra": TableJson::from_table(&b.spec.to_string(), &th),
            "dual": TableJson::from_table(&dual_spec.to_string(), &td),
            "differences": diffs,
        })
        .to_string()
            + "\n"
    } else {
        let half = half.unwrap_or_else(|| default_half(th.exponent));
        let mut s = emit_table(&th, &b.spec.to_string(), format, &layout(&b.spec, half));
        s.push('\n');
        s.push_str(&emit_table(
            &td,
            &dual_spec.to_string(),
            format,
            &layout(&dual_spec, half),
        ));
        s.push('\n');
        if diffs.is_empty() {
            s.push_str("no differences\n");
        } else {
            s.push_str("i,j,H,H*\n");
            for [i, j, a, d] in &diffs {
                writeln!(s, "{i},{j},{a},{d}").unwrap();
            }
        }
        s
    };
    Ok(Outcome::ok(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Axioms,
    Powers,
    Symmetry,
    Duality,
    Oracle,
    Coprime,
    Tensor,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::Powers,
        Suite::Symmetry,
        Suite::Duality,
        Suite::Oracle,
        Suite::Coprime,
        Suite::Tensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Powers => "powers",
            Suite::Symmetry => "symmetry",
            Suite::Duality => "duality",
            Suite::Oracle => "oracle",
            Suite::Coprime => "coprime",
            Suite::Tensor => "tensor",
        }
    }

    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for (k, name) in text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .enumerate()
        {
            if name == "all" {
                out.extend(Suite::ALL);
                continue;
            }
            let s = Suite::ALL
                .into_iter()
                .find(|s| s.name() == name)
                .ok_or_else(|| Error::Parse {
                    pos: k,
                    msg: format!("unknown suite `{name}`"),
                })?;
            out.push(s);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    /// The suite does not apply to this algebra.
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub status: SuiteStatus,
    pub lines: Vec<String>,
}

struct Lines {
    lines: Vec<String>,
    ok: bool,
}

impl Lines {
    fn new() -> Self {
        Lines {
            lines: Vec::new(),
            ok: true,
        }
    }

    fn check(&mut self, passed: bool, what: impl Into<String>) {
        let what = what.into();
        self.lines
            .push(format!("{} {what}", if passed { "ok  " } else { "FAIL" }));
        self.ok &= passed;
    }

    fn note(&mut self, what: impl Into<String>) {
        self.lines.push(format!("    {}", what.into()));
    }

    fn finish(self, suite: Suite) -> SuiteResult {
        let status = if self.ok {
            SuiteStatus::Pass
        } else {
            SuiteStatus::Fail
        };
        SuiteResult {
            suite,
            status,
            lines: self.lines,
        }
    }
}

fn skip(suite: Suite, why: &str) -> SuiteResult {
    SuiteResult {
        suite,
        status: SuiteStatus::Skip,
        lines: vec![format!("    {why}")],
    }
}

fn permutation_matrix(n: usize, f: impl Fn(usize) -> usize) -> Result<ExactMatrix> {
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut c = vec![BigInt::zero(); n];
            c[f(i)] = BigInt::one();
            c
        })
        .collect();
    ExactMatrix::from_int_columns(n, &cols)
}

fn suite_axioms(b: &Built) -> SuiteResult {
    let mut l = Lines::new();
    let r = verify_axioms(b.algebra());
    for c in &r.checks {
        let how = if c.sampled { "sampled" } else { "full" };
        let detail = if c.passed {
            String::new()
        } else {
            format!(": {}", c.detail)
        };
        l.check(
            c.passed,
            format!("{} ({} cases, {how}){detail}", c.axiom, c.cases),
        );
    }
    if let Some(mp) = &b.pair {
        let r = mp.verify();
        for c in &r.checks {
            let detail = c
                .counterexample
                .as_deref()
                .map(|w| format!(" [{w}]"))
                .unwrap_or_default();
            l.check(c.passed, format!("matched pair: {}{detail}", c.axiom));
        }
    }
    l.finish(Suite::Axioms)
}

fn suite_powers(b: &Built) -> Result<SuiteResult> {
    let mut l = Lines::new();
    let fam = &b.family;
    let h = b.algebra();
    let e = fam.exponent()?;
    l.check(
        *fam.power(e)? == *fam.eta_epsilon(),
        format!("A_e = ηε with e = {e}"),
    );
    let mut early = Vec::new();
    for n in 1..e {
        if *fam.power(n)? == *fam.eta_epsilon() {
            early.push(n);
        }
    }
    l.check(early.is_empty(), "A_n ≠ ηε for n < e");
    let unit = h.unit_vector();
    let counit: Vec<BigRational> = h
        .counit()
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    let eps = ExactMatrix::from_rational(1, h.dim(), counit)?;
    let mut unit_ok = true;
    for n in 1..=e {
        let a = fam.power(n)?;
        unit_ok &= a.mul_vec(&unit)? == unit && eps.mul(&a)? == eps;
    }
    l.check(unit_ok, "A_n fixes the unit and ε ∘ A_n = ε");
    let s = fam.antipode()?;
    l.check(s.mul(&s)?.is_identity(), "antipode squared is the identity");
    let top = if h.dim() <= FULL_SCAN_DIM {
        e.min(6)
    } else {
        2.min(e)
    };
    let mut conv_ok = true;
    for m in 1..top {
        for n in 1..=top - m {
            conv_ok &= convolve(h, &*fam.power(m)?, &*fam.power(n)?)? == *fam.power(m + n)?;
        }
    }
    l.check(conv_ok, format!("A_m ⋆ A_n = A_(m+n) for m + n ≤ {top}"));
    if let Some(mp) = &b.pair {
        let g = mp.bowtie_group()?.exponent();
        l.check(
            g == e,
            format!("exponent {e} equals the group exponent {g}"),
        );
    }
    let rule = check_power_rule(fam)?;
    match rule.failures.first() {
        None => l.note("A_n A_m = A_(mn) for all m, n"),
        Some((m, n)) => l.note(format!(
            "A_n A_m ≠ A_(mn) at m = {m}, n = {n} ({} pairs)",
            rule.failures.len()
        )),
    }
    Ok(l.finish(Suite::Powers))
}

fn suite_symmetry(b: &Built, table: &TpdTable) -> Result<SuiteResult> {
    let mut l = Lines::new();
    let bad = check_antidiagonal(table);
    l.check(
        bad.is_empty(),
        format!("tpd_(m,n) = tpd_(e-m,e-n) ({} cells off)", bad.len()),
    );
    let op = PowerMatrixFamily::new(HopfAlgebraData::opposite(b.algebra())?);
    let bad = check_opposite_tps(&b.family, &op)?;
    l.check(
        bad.is_empty(),
        format!("TPS_n(H) = TPS_(e-n)(H^op) ({} n off)", bad.len()),
    );
    Ok(l.finish(Suite::Symmetry))
}

fn suite_duality(b: &Built) -> Result<SuiteResult> {
    let mut l = Lines::new();
    let fam = &b.family;
    let e = fam.exponent()?;
    let mut rank_ok = true;
    for n in 1..e {
        rank_ok &= tpd(fam, n)? == fam.dim() + 1 - fam.power(n)?.rank();
    }
    l.check(rank_ok, "tpd_n = dim + 1 - rank A_n for n < e");
    let dual = PowerMatrixFamily::dual_of(fam.clone())?;
    let bad = check_dual_tpd(fam, &dual)?;
    l.check(bad.is_empty(), "tpd_n(H) = tpd_n(H^*) for n < e");
    if fam.dim() <= FULL_SCAN_DIM {
        let direct = PowerMatrixFamily::new(HopfAlgebraData::dual(b.algebra())?);
        let mut ok = direct.exponent()? == e;
        for n in 1..=e {
            ok = ok && *direct.power(n)? == fam.power(n)?.transpose();
        }
        l.check(ok, "powers of H^* are the transposes of those of H");
    }
    Ok(l.finish(Suite::Duality))
}

fn suite_oracle(b: &Built) -> Result<SuiteResult> {
    let Some(g) = &b.group else {
        return Ok(skip(Suite::Oracle, "no group oracle for this algebra"));
    };
    let fam = &b.family;
    let mut l = Lines::new();
    match &b.spec {
        AlgebraSpec::Group(_) | AlgebraSpec::DualGroup(_) => {
            let e = fam.exponent()?;
            l.check(
                e == g.exponent(),
                format!("exponent {e} equals exp(G) = {}", g.exponent()),
            );
            let mut bad = Vec::new();
            for n in 1..=e {
                if tpd(fam, n)? != group_algebra_tpd_oracle(g, n) {
                    bad.push(n);
                }
            }
            l.check(
                bad.is_empty(),
                format!("tpd_n matches the group count for n = 1..{e}"),
            );
            let inv = permutation_matrix(g.order(), |x| g.inv(x))?;
            l.check(
                *fam.antipode()? == inv,
                "antipode is inversion on the group basis",
            );
        }
        _ => return Ok(skip(Suite::Oracle, "no group oracle for this algebra")),
    }
    if let AlgebraSpec::DualGroup(_) = b.spec {
        let mut bad = 0;
        for x in 0..g.order() {
            let mut v = vec![BigRational::zero(); g.order()];
            v[x] = BigRational::one();
            if hopf_order(fam, &v)? != dual_delta_order_oracle(g, x) {
                bad += 1;
            }
        }
        l.check(bad == 0, "Hopf order of each δ_g matches the group");
    }
    Ok(l.finish(Suite::Oracle))
}

fn suite_coprime(b: &Built) -> Result<SuiteResult> {
    let Some(g) = &b.group else {
        return Ok(skip(
            Suite::Coprime,
            "needs a group, its double or its dual",
        ));
    };
    let r = check_coprime(&b.family, g.order())?;
    let mut l = Lines::new();
    for (n, t) in &r.checked {
        l.check(*t == 1, format!("tpd_{n} = {t}"));
    }
    Ok(l.finish(Suite::Coprime))
}

fn suite_tensor(b: &Built) -> Result<SuiteResult> {
    let Some((x, y)) = &b.factors else {
        return Ok(skip(Suite::Tensor, "not a tensor product"));
    };
    let mut l = Lines::new();
    let e = b.family.exponent()?;
    for n in 1..e {
        let r = check_tensor_formula(&x.family, &y.family, &b.family, n)?;
        l.check(
            r.holds(),
            format!("n = {n}: formula {} actual {}", r.expected, r.actual),
        );
    }
    Ok(l.finish(Suite::Tensor))
}

pub fn run_suite(b: &Built, suite: Suite, table: Option<&TpdTable>) -> Result<SuiteResult> {
    match suite {
        Suite::Axioms => Ok(suite_axioms(b)),
        Suite::Powers => suite_powers(b),
        Suite::Symmetry => match table {
            Some(t) => suite_symmetry(b, t),
            None => suite_symmetry(b, &tpd_table(&b.family)?),
        },
        Suite::Duality => suite_duality(b),
        Suite::Oracle => suite_oracle(b),
        Suite::Coprime => suite_coprime(b),
        Suite::Tensor => suite_tensor(b),
    }
}

pub fn cmd_verify(b: &Built, suites: &[Suite]) -> Result<Outcome> {
    let mut out = format!("algebra {}\n", b.spec);
    let mut success = true;
    for &s in suites {
        let r = run_suite(b, s, None)?;
        let tag = match r.status {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Fail => "FAIL",
            SuiteStatus::Skip => "SKIP",
        };
        success &= r.status != SuiteStatus::Fail;
        writeln!(out, "{tag} {}", s.name()).unwrap();
        for line in &r.lines {
            writeln!(out, "  {line}").unwrap();
        }
    }
    Ok(Outcome {
        output: out,
        success,
    })
}
