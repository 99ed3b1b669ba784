//! The algebra-spec grammar.
//!
//! ```text
//! spec  := "group:" gname | "dualgroup:" gname | "double:" gname | "bismash:" fname
//!        | "tensor(" spec "," spec ")" | "dual(" spec ")" | "op(" spec ")"
//! gname := "S" k | "A" k | "C" k
//! fname := "S" k | "A" k        (k odd for A)
//! ```

use std::fmt;

use hopfpow_core::group::{MAX_CYCLIC_ORDER, MAX_SYMMETRIC_DEGREE};
use hopfpow_core::hopf::MAX_DIM;
use hopfpow_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Symmetric,
    Alternating,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupName {
    pub family: GroupFamily,
    pub k: usize,
}

impl GroupName {
    pub fn order(&self) -> usize {
        let fact = || (1..=self.k).product::<usize>();
        match self.family {
            GroupFamily::Symmetric => fact(),
            GroupFamily::Alternating => fact() / 2,
            GroupFamily::Cyclic => self.k,
        }
    }

    pub fn latex(&self) -> String {
        let letter = match self.family {
            GroupFamily::Symmetric => 'S',
            GroupFamily::Alternating => 'A',
            GroupFamily::Cyclic => 'C',
        };
        format!("{letter}_{{{}}}", self.k)
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            GroupFamily::Symmetric => 'S',
            GroupFamily::Alternating => 'A',
            GroupFamily::Cyclic => 'C',
        };
        write!(f, "{letter}{}", self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    Group(GroupName),
    DualGroup(GroupName),
    Double(GroupName),
    /// `Q^{C_k} # Q S_{k-1}` or `Q^{C_k} # Q A_{k-1}`.
    Bismash(GroupName),
    Tensor(Box<AlgebraSpec>, Box<AlgebraSpec>),
    Dual(Box<AlgebraSpec>),
    Op(Box<AlgebraSpec>),
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text, pos: 0 };
        p.skip_ws();
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("unexpected trailing input"));
        }
        let dim = spec.dim();
        if dim > MAX_DIM {
            return Err(Error::ResourceLimit(format!(
                "{spec} has dimension {dim}, above the cap {MAX_DIM}"
            )));
        }
        Ok(spec)
    }

    /// Dimension of the algebra, without building it.
    pub fn dim(&self) -> usize {
        match self {
            AlgebraSpec::Group(g) | AlgebraSpec::DualGroup(g) => g.order(),
            AlgebraSpec::Double(g) => g.order().saturating_mul(g.order()),
            AlgebraSpec::Bismash(g) => g.order(),
            AlgebraSpec::Tensor(a, b) => a.dim().saturating_mul(b.dim()),
            AlgebraSpec::Dual(a) | AlgebraSpec::Op(a) => a.dim(),
        }
    }

    /// Name in LaTeX notation.
    pub fn latex(&self) -> String {
        match self {
            AlgebraSpec::Group(g) => format!("\\QQ {}", g.latex()),
            AlgebraSpec::DualGroup(g) => format!("\\QQ^{{{}}}", g.latex()),
            AlgebraSpec::Double(g) => format!("D(\\QQ {})", g.latex()),
            AlgebraSpec::Bismash(g) => {
                let f = GroupName {
                    family: g.family,
                    k: g.k - 1,
                };
                format!("\\QQ^{{C_{{{}}}}}\\#\\QQ {}", g.k, f.latex())
            }
            AlgebraSpec::Tensor(a, b) => format!("{}\\o {}", a.latex(), b.latex()),
            AlgebraSpec::Dual(a) => format!("({})^*", a.latex()),
            AlgebraSpec::Op(a) => format!("({})^{{\\op}}", a.latex()),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Group(g) => write!(f, "group:{g}"),
            AlgebraSpec::DualGroup(g) => write!(f, "dualgroup:{g}"),
            AlgebraSpec::Double(g) => write!(f, "double:{g}"),
            AlgebraSpec::Bismash(g) => write!(f, "bismash:{g}"),
            AlgebraSpec::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            AlgebraSpec::Dual(a) => write!(f, "dual({a})"),
            AlgebraSpec::Op(a) => write!(f, "op({a})"),
        }
    }
}

impl std::str::FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraSpec::parse(s)
    }
}

pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    AlgebraSpec::parse(text)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn spec(&mut self) -> Result<AlgebraSpec> {
        self.skip_ws();
        if self.eat("group:") {
            return Ok(AlgebraSpec::Group(self.group_name()?));
        }
        if self.eat("dualgroup:") {
            return Ok(AlgebraSpec::DualGroup(self.group_name()?));
        }
        if self.eat("double:") {
            return Ok(AlgebraSpec::Double(self.group_name()?));
        }
        if self.eat("bismash:") {
            return self.bismash_name();
        }
        if self.eat("tensor(") {
            let a = self.spec()?;
            self.expect(",")?;
            let b = self.spec()?;
            self.expect(")")?;
            return Ok(AlgebraSpec::Tensor(Box::new(a), Box::new(b)));
        }
        if self.eat("dual(") {
            let a = self.spec()?;
            self.expect(")")?;
            return Ok(AlgebraSpec::Dual(Box::new(a)));
        }
        if self.eat("op(") {
            let a = self.spec()?;
            self.expect(")")?;
            return Ok(AlgebraSpec::Op(Box::new(a)));
        }
        Err(self.error("expected group:, dualgroup:, double:, bismash:, tensor(, dual( or op("))
    }

    fn raw_name(&mut self) -> Result<(GroupFamily, usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        let family = match self.rest().chars().next() {
            Some('S') => GroupFamily::Symmetric,
            Some('A') => GroupFamily::Alternating,
            Some('C') => GroupFamily::Cyclic,
            _ => return Err(self.error("expected a group name S<k>, A<k> or C<k>")),
        };
        self.pos += 1;
        let digits = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected a number after the group letter"));
        }
        let k: usize = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok((family, k, start))
    }

    fn group_name(&mut self) -> Result<GroupName> {
        let (family, k, start) = self.raw_name()?;
        let ok = match family {
            GroupFamily::Symmetric => (1..=MAX_SYMMETRIC_DEGREE).contains(&k),
            GroupFamily::Alternating => (3..=MAX_SYMMETRIC_DEGREE).contains(&k),
            GroupFamily::Cyclic => (1..=MAX_CYCLIC_ORDER).contains(&k),
        };
        if !ok {
            return Err(Error::Parse {
                pos: start,
                msg: format!("group degree {k} out of the supported range"),
            });
        }
        Ok(GroupName { family, k })
    }

    fn bismash_name(&mut self) -> Result<AlgebraSpec> {
        let (family, k, start) = self.raw_name()?;
        let ok = match family {
            GroupFamily::Symmetric => (3..=MAX_SYMMETRIC_DEGREE).contains(&k),
            GroupFamily::Alternating => k % 2 == 1 && (5..=MAX_SYMMETRIC_DEGREE).contains(&k),
            GroupFamily::Cyclic => false,
        };
        if !ok {
            return Err(Error::Parse {
                pos: start,
                msg: "bismash takes S<k> with k >= 3 or A<k> with k odd and >= 5".into(),
            });
        }
        Ok(AlgebraSpec::Bismash(GroupName { family, k }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(parse_spec("double:S3").unwrap().dim(), 36);
        assert_eq!(parse_spec("bismash:S5").unwrap().dim(), 120);
        assert_eq!(parse_spec("bismash:A5").unwrap().dim(), 60);
        assert_eq!(
            parse_spec("tensor(dualgroup:S3,group:S3)").unwrap().dim(),
            36
        );
        assert_eq!(parse_spec(" dual( op(group:C7) ) ").unwrap().dim(), 7);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_spec("grp:S3"),
            Err(Error::Parse { pos: 0, .. })
        ));
        match parse_spec("tensor(group:S3 group:S3)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 16),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_spec("bismash:A4"),
            Err(Error::Parse { pos: 8, .. })
        ));
        assert!(matches!(
            parse_spec("double:S7"),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(parse_spec("group:S8"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_spec("group:S3 x"),
            Err(Error::Parse { pos: 9, .. })
        ));
    }
}
