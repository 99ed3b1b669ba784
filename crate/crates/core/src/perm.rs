//! Permutations of `{1, …, n}` in image-list form.
//!
//! Products compose like functions: `(x * y)(p) = x(y(p))`, so `y` acts
//! first. Every group, matched pair and factorization in this crate uses
//! that convention.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree a permutation may have.
pub const MAX_DEGREE: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] is the (zero-based) image of i + 1
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(
            (1..=MAX_DEGREE).contains(&degree),
            "degree {degree} out of range"
        );
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from one-based images: position `i` holds the image of `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::Argument(format!(
                "degree {n} out of range 1..={MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(Error::Argument(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[im - 1] = true;
            out.push((im - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles (one-based points).
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::Argument(format!("degree {degree} out of range")));
        }
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::Argument(format!("point {p} outside 1..={degree}")));
                }
                if touched[p - 1] {
                    return Err(Error::Argument(format!(
                        "point {p} repeated in cycle notation"
                    )));
                }
                touched[p - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(1 3)(2 4)`, `(1,3,2)` or `()`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1] as usize + 1
    }

    /// Preimage of the one-based point `p`.
    pub fn apply_inverse(&self, p: usize) -> usize {
        let target = (p - 1) as u8;
        self.images
            .iter()
            .position(|&v| v == target)
            .expect("bijection")
            + 1
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `self * other`, i.e. apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation {
            images: other
                .images
                .iter()
                .map(|&p| self.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i)
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least positive `k` with `self^k` the identity: lcm of cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1usize, |acc, c| num_integer::lcm(acc, c.len()))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Same permutation on a larger point set, fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits cycle notation into its cycles without checking disjointness.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty permutation".into(),
        });
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(Error::Parse {
                pos: i,
                msg: format!("expected '(' in {text:?}"),
            });
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i] == b',' || (bytes[i] as char).is_whitespace()) {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(Error::Parse {
                    pos: i,
                    msg: "unterminated cycle".into(),
                });
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected {:?}", bytes[i] as char),
                });
            }
            let p: usize = text[start..i].parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "bad point".into(),
            })?;
            cycle.push(p);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_applies_right_factor_first() {
        let x = Permutation::parse("(1 2)", 3).unwrap();
        let y = Permutation::parse("(2 3)", 3).unwrap();
        // x(y(1)) = x(1) = 2, x(y(2)) = x(3) = 3, x(y(3)) = x(2) = 1
        assert_eq!(x.compose(&y).to_string(), "(1 2 3)");
        assert_eq!(y.compose(&x).to_string(), "(1 3 2)");
    }

    #[test]
    fn display_and_parse() {
        let p = Permutation::parse("(2,4)(3 1)", 4).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(Permutation::identity(5).to_string(), "()");
        assert_eq!(
            Permutation::parse("(4 1 3 2)", 4).unwrap().to_string(),
            "(1 3 2 4)"
        );
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(1 5)", 3).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(Permutation::parse("(1 2 3 4)", 4).unwrap().order(), 4);
        assert_eq!(Permutation::parse("(1 2)(3 4 5)", 5).unwrap().order(), 6);
    }

    #[test]
    fn inverse_and_apply() {
        let p = Permutation::parse("(1 2 3 4 5)", 5).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.apply(5), 1);
        assert_eq!(p.apply_inverse(1), 5);
        assert_eq!(p.pow(2).to_string(), "(1 3 5 2 4)");
    }
}
