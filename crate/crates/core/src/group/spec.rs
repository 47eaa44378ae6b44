//! Group-specification AST and its parser.
//!
//! Grammar (ASCII, case-sensitive, whitespace allowed between tokens):
//!
//! ```text
//! spec := "free(" INT ")" | "zpow(" INT ")" | "z(" INT ("," INT)* ")"
//!       | "cyclic(" INT ")" | "prod(" spec "," spec ")" | "fprod(" spec "," spec ")"
//! ```

use std::fmt;

use super::GroupError;

/// AST of a marked-group description.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Free group on `rank` letters with the standard basis.
    Free(u32),
    /// `Z^rank` with the standard basis.
    ZPow(u32),
    /// `Z` with the symmetric closure of the listed integers.
    ZGens(Vec<i64>),
    /// `Z/m` generated by all non-identity residues.
    CyclicFull(u64),
    /// Direct product, generators `S_l x {1} u {1} x S_r`.
    Prod(Box<GroupSpec>, Box<GroupSpec>),
    /// Free product, generators `S_l u S_r`.
    FProd(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn depth(&self) -> usize {
        match self {
            GroupSpec::Prod(l, r) | GroupSpec::FProd(l, r) => 1 + l.depth().max(r.depth()),
            _ => 1,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Free(n) => write!(f, "free({n})"),
            GroupSpec::ZPow(n) => write!(f, "zpow({n})"),
            GroupSpec::ZGens(gens) => {
                let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "z({})", parts.join(","))
            }
            GroupSpec::CyclicFull(m) => write!(f, "cyclic({m})"),
            GroupSpec::Prod(l, r) => write!(f, "prod({l},{r})"),
            GroupSpec::FProd(l, r) => write!(f, "fprod({l},{r})"),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_spec(s)
    }
}

/// Parses a group specification.
///
/// Semantic checks (positive ranks, modulus at least 2, nonzero `z`
/// generators with gcd 1) are applied here so that every returned spec can
/// be built.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, GroupError> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    parser.skip_ws();
    if parser.pos == parser.src.len() {
        return Err(GroupError::Syntax { position: 0, expected: "group constructor".into() });
    }
    let spec = parser.spec()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(GroupError::Syntax { position: parser.pos, expected: "end of input".into() });
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn syntax<T>(&self, expected: &str) -> Result<T, GroupError> {
        Err(GroupError::Syntax { position: self.pos, expected: expected.to_string() })
    }

    fn expect(&mut self, byte: u8) -> Result<(), GroupError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.syntax(&format!("'{}'", byte as char))
        }
    }

    fn keyword(&mut self) -> Result<(usize, &str), GroupError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        Ok((start, word))
    }

    fn int(&mut self) -> Result<(usize, i64), GroupError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.syntax("integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match text.parse::<i64>() {
            Ok(v) => Ok((start, v)),
            Err(_) => Err(GroupError::Semantic {
                position: start,
                message: format!("integer {text} out of range"),
            }),
        }
    }

    fn positive(&mut self, what: &str) -> Result<u32, GroupError> {
        let (at, v) = self.int()?;
        if v <= 0 || v > u32::MAX as i64 {
            return Err(GroupError::Semantic {
                position: at,
                message: format!("{what} must be a positive integer, got {v}"),
            });
        }
        Ok(v as u32)
    }

    fn spec(&mut self) -> Result<GroupSpec, GroupError> {
        let (at, word) = self.keyword()?;
        let word = word.to_string();
        self.expect(b'(')?;
        let spec = match word.as_str() {
            "free" => GroupSpec::Free(self.positive("rank")?),
            "zpow" => GroupSpec::ZPow(self.positive("rank")?),
            "cyclic" => {
                let (mat, m) = self.int()?;
                if m < 2 {
                    return Err(GroupError::Semantic {
                        position: mat,
                        message: format!("modulus must be at least 2, got {m}"),
                    });
                }
                GroupSpec::CyclicFull(m as u64)
            }
            "z" => {
                let mut gens = Vec::new();
                loop {
                    let (gat, g) = self.int()?;
                    if g == 0 {
                        return Err(GroupError::Semantic {
                            position: gat,
                            message: "z generators must be nonzero".into(),
                        });
                    }
                    if g == i64::MIN {
                        return Err(GroupError::Semantic {
                            position: gat,
                            message: "z generator out of range".into(),
                        });
                    }
                    gens.push(g);
                    self.skip_ws();
                    if self.src.get(self.pos) == Some(&b',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let g = gens.iter().fold(0u64, |acc, &x| gcd(acc, x.unsigned_abs()));
                if g != 1 {
                    return Err(GroupError::Semantic {
                        position: at,
                        message: format!("z generators have gcd {g}; they must generate Z (gcd 1)"),
                    });
                }
                GroupSpec::ZGens(gens)
            }
            "prod" | "fprod" => {
                let left = self.spec()?;
                self.expect(b',')?;
                let right = self.spec()?;
                if word == "prod" {
                    GroupSpec::Prod(Box::new(left), Box::new(right))
                } else {
                    GroupSpec::FProd(Box::new(left), Box::new(right))
                }
            }
            _ => {
                self.pos = at;
                return self.syntax("one of free, zpow, z, cyclic, prod, fprod");
            }
        };
        self.expect(b')')?;
        Ok(spec)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_constructors() {
        assert_eq!(parse_group_spec("free(2)").unwrap(), GroupSpec::Free(2));
        assert_eq!(parse_group_spec("z(1,2,3)").unwrap(), GroupSpec::ZGens(vec![1, 2, 3]));
        assert_eq!(
            parse_group_spec("fprod(z(1),z(2,3))").unwrap(),
            GroupSpec::FProd(
                Box::new(GroupSpec::ZGens(vec![1])),
                Box::new(GroupSpec::ZGens(vec![2, 3]))
            )
        );
        assert_eq!(
            parse_group_spec(" prod ( free( 1 ) ,\n cyclic(5) ) ").unwrap(),
            GroupSpec::Prod(Box::new(GroupSpec::Free(1)), Box::new(GroupSpec::CyclicFull(5)))
        );
    }

    #[test]
    fn display_round_trips() {
        for text in ["free(3)", "z(-2,3)", "prod(fprod(z(1),cyclic(2)),zpow(2))"] {
            let spec = parse_group_spec(text).unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_group_spec("free(2") {
            Err(GroupError::Syntax { position, expected }) => {
                assert_eq!(position, 6);
                assert!(expected.contains(')'));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_group_spec(""), Err(GroupError::Syntax { .. })));
        assert!(matches!(parse_group_spec("Free(2)"), Err(GroupError::Syntax { position: 0, .. })));
        assert!(matches!(parse_group_spec("free(a)"), Err(GroupError::Syntax { position: 5, .. })));
        assert!(matches!(parse_group_spec("free(2) x"), Err(GroupError::Syntax { position: 8, .. })));
        assert!(matches!(parse_group_spec("z()"), Err(GroupError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse_group_spec("free(0)"), Err(GroupError::Semantic { .. })));
        assert!(matches!(parse_group_spec("zpow(-1)"), Err(GroupError::Semantic { .. })));
        assert!(matches!(parse_group_spec("cyclic(1)"), Err(GroupError::Semantic { .. })));
        assert!(matches!(parse_group_spec("z(2,4)"), Err(GroupError::Semantic { .. })));
        assert!(matches!(parse_group_spec("z(0,1)"), Err(GroupError::Semantic { .. })));
        assert!(parse_group_spec("z(2,3)").is_ok());
    }
}
