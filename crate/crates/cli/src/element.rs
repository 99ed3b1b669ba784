//! Element input: a coordinate vector or a signed sum of basis labels.

use hopfpow_core::hopf::HopfAlgebraData;
use hopfpow_core::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const NEAREST: usize = 5;

/// Parses a decimal rational such as `3`, `-2/5` or `0.25`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let int = int.trim_start_matches(['+', '-']);
        let whole: BigInt = if int.is_empty() {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let num = whole * &scale + frac.parse::<BigInt>().ok()?;
        let q = BigRational::new(num, scale);
        return Some(if neg { -q } else { q });
    }
    t.parse::<BigInt>().ok().map(BigRational::from_integer)
}

fn looks_like_vector(text: &str) -> bool {
    text.chars()
        .all(|c| c.is_ascii_digit() || "+-./,; \t\r\n".contains(c))
}

/// Parses `text` into a coordinate vector of `h`.
pub fn parse_element(h: &HopfAlgebraData, text: &str) -> Result<Vec<BigRational>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Argument("empty element".into()));
    }
    if looks_like_vector(text) {
        parse_vector(h.dim(), text)
    } else {
        parse_sum(h, text)
    }
}

fn parse_vector(dim: usize, text: &str) -> Result<Vec<BigRational>> {
    let mut v = Vec::with_capacity(dim);
    for tok in text
        .split([',', ';', '\n'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
    {
        let q = parse_rational(tok)
            .ok_or_else(|| Error::Argument(format!("`{tok}` is not a rational number")))?;
        v.push(q);
    }
    if v.len() != dim {
        return Err(Error::Shape(format!(
            "coordinate vector has {} entries, the algebra has dimension {dim}",
            v.len()
        )));
    }
    Ok(v)
}

/// Splits at `+`/`-` outside brackets, keeping each term's sign.
fn split_terms(text: &str) -> Result<Vec<(bool, usize, &str)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut neg = false;
    let mut start = 0;
    for (pos, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse {
                        pos,
                        msg: "unbalanced bracket".into(),
                    });
                }
            }
            '+' | '-' if depth == 0 => {
                let term = text[start..pos].trim();
                if !term.is_empty() {
                    terms.push((neg, start, term));
                    neg = false;
                } else if start != 0 {
                    return Err(Error::Parse {
                        pos,
                        msg: "two signs in a row".into(),
                    });
                }
                neg ^= c == '-';
                start = pos + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse {
            pos: text.len(),
            msg: "unbalanced bracket".into(),
        });
    }
    let term = text[start..].trim();
    if term.is_empty() {
        return Err(Error::Parse {
            pos: text.len(),
            msg: "missing term after sign".into(),
        });
    }
    terms.push((neg, start, term));
    Ok(terms)
}

/// Splits an optional leading coefficient off a term: `2 x`, `1/2*x`, `3(1 2)`.
fn split_coefficient(term: &str) -> (BigRational, &str) {
    let n = term
        .find(|c: char| !(c.is_ascii_digit() || c == '/' || c == '.'))
        .unwrap_or(term.len());
    if n == 0 {
        return (BigRational::one(), term);
    }
    let rest = &term[n..];
    // `1#a` is a label, not a coefficient
    if rest.is_empty() || rest.starts_with('#') {
        return (BigRational::one(), term);
    }
    match parse_rational(&term[..n]) {
        Some(q) => (q, rest.trim_start().trim_start_matches('*').trim_start()),
        None => (BigRational::one(), term),
    }
}

/// Indices of `d[x]#a` over all `x`, for `1#a` with `1 = Σ_x δ_x`.
fn expand_unit_prefix(h: &HopfAlgebraData, label: &str) -> Option<Vec<usize>> {
    let a = label.strip_prefix('1')?.trim_start().strip_prefix('#')?;
    let mut found = Vec::new();
    for (i, l) in h.labels().iter().enumerate() {
        let Some(x) = l
            .strip_prefix("d[")
            .and_then(|r| r.split_once("]#"))
            .map(|t| t.0)
        else {
            continue;
        };
        if h.find_label(&format!("d[{x}]#{a}")) == Some(i) {
            found.push(i);
        }
    }
    (!found.is_empty()).then_some(found)
}

/// The basis labels closest to `label` in edit distance.
pub fn nearest_labels(h: &HopfAlgebraData, label: &str) -> Vec<String> {
    let mut scored: Vec<(usize, &String)> = h
        .labels()
        .iter()
        .map(|l| (strsim::levenshtein(l, label), l))
        .collect();
    scored.sort();
    scored
        .into_iter()
        .take(NEAREST)
        .map(|t| t.1.clone())
        .collect()
}

fn parse_sum(h: &HopfAlgebraData, text: &str) -> Result<Vec<BigRational>> {
    let mut v = vec![BigRational::zero(); h.dim()];
    for (neg, pos, term) in split_terms(text)? {
        let (coeff, label) = split_coefficient(term);
        let coeff = if neg { -coeff } else { coeff };
        let indices = match h.find_label(label) {
            Some(i) => vec![i],
            None => expand_unit_prefix(h, label).ok_or_else(|| Error::Parse {
                pos,
                msg: format!(
                    "`{label}` is not a basis label; nearest: {}",
                    nearest_labels(h, label).join(", ")
                ),
            })?,
        };
        for i in indices {
            v[i] += &coeff;
        }
    }
    Ok(v)
}
